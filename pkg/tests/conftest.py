"""Shared fixtures and independent dense-matrix oracles.

The oracle helpers here build matrices straight from the single-qubit
Pauli matrices with numpy.kron, independently of the bit-mask algebra in
avnlab.pauli, so they can certify it.
"""

import numpy as np
import pytest

from avnlab.states import build_psi

I2 = np.eye(2, dtype=complex)
SX = np.array([[0, 1], [1, 0]], dtype=complex)
SY = np.array([[0, -1j], [1j, 0]], dtype=complex)
SZ = np.array([[1, 0], [0, -1]], dtype=complex)

LETTER_MATRIX = {"i": I2, "x": SX, "y": SY, "z": SZ}


def kron_letters(letters):
    """Tensor product of single-qubit matrices, qubit 1 leftmost.

    `letters` is a string like 'zixi' with one letter per qubit.
    """
    out = np.eye(1, dtype=complex)
    for letter in letters:
        out = np.kron(out, LETTER_MATRIX[letter])
    return out


def dense_observable(label, n_qubits):
    """Dense matrix for a product like 'z1x2' or '-y1y2y3y4' on n qubits,
    built by plain matrix multiplication of elementary factors."""
    sign = 1.0
    if label.startswith("-"):
        sign, label = -1.0, label[1:]
    dim = 1 << n_qubits
    out = sign * np.eye(dim, dtype=complex)
    for i in range(0, len(label), 2):
        letter, qubit = label[i], int(label[i + 1])
        letters = ["i"] * n_qubits
        letters[qubit - 1] = letter
        out = out @ kron_letters("".join(letters))
    return out


@pytest.fixture(scope="session")
def psi():
    return build_psi()
