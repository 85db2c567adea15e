"""State-independent contextuality proof on the 17-operator table,
plus the sweep over all 16 joint eigenstates of the four seed operators.

The table is a 5x5 grid with 17 populated cells.  Every row and column is
mutually commuting; each row multiplies to +I, each column to +I except
the last, which multiplies to -I.  Assigning noncontextual ±1 values is
impossible: each operator sits in exactly one row and one column, so the
product of all ten line constraints squares every value away, yet the
targets multiply to -1.  Both the parity argument and the exhaustive
search over 2^17 assignments are run and must agree.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import kernels, lhv, states
from .functional import BellFunctional, verify_nine_identities
from .pauli import PauliString, parse

_CANONICAL_CELLS = (
    ("z1z3", "z2z4", "x1x3", "x2x4", "y1y2y3y4"),
    ("z1", "z2", None, None, "z1z2"),
    (None, None, "x1", "x2", "x1x2"),
    ("z3", None, None, "x4", "z3x4"),
    (None, "z4", "x3", None, "x3z4"),
)


@dataclass(frozen=True)
class KsTable:
    """5x5 grid of optional Pauli strings with per-line product targets."""

    grid: tuple  # 5 rows of 5 cells, each PauliString or None
    row_targets: tuple
    column_targets: tuple

    @classmethod
    def canonical(cls) -> "KsTable":
        grid = tuple(
            tuple(None if cell is None else parse(cell, 4) for cell in row)
            for row in _CANONICAL_CELLS
        )
        return cls(grid, (+1,) * 5, (+1, +1, +1, +1, -1))

    def cells(self):
        """Populated cells in (row, column) scan order."""
        return [
            (r, c, op)
            for r, row in enumerate(self.grid)
            for c, op in enumerate(row)
            if op is not None
        ]

    def lines(self):
        """All ten (kind, index, operators, target) line records."""
        out = []
        for r, target in enumerate(self.row_targets):
            ops = [op for op in self.grid[r] if op is not None]
            out.append(("row", r, ops, target))
        for c, target in enumerate(self.column_targets):
            ops = [row[c] for row in self.grid if row[c] is not None]
            out.append(("column", c, ops, target))
        return out


def verify_table_structure(table: KsTable) -> dict:
    """Commutativity and exact line products, phase included."""
    lines = []
    for kind, index, ops, target in table.lines():
        commuting = all(
            a.commutes(b) for i, a in enumerate(ops) for b in ops[i + 1:]
        )
        product = ops[0]
        for op in ops[1:]:
            product = product * op
        is_target_identity = (
            product.x_mask == 0
            and product.z_mask == 0
            and product.sign == target
        )
        lines.append(
            {
                "line": f"{kind} {index + 1}",
                "operators": [op.label for op in ops],
                "commuting": commuting,
                "product": product.label,
                "target": "+I" if target == +1 else "-I",
                "ok": commuting and is_target_identity,
            }
        )
    return {"lines": lines, "all_ok": all(line["ok"] for line in lines)}


def prove_ks_contradiction(table: KsTable) -> dict:
    """Noncontextuality impossibility certificate for the table."""
    structure = verify_table_structure(table)
    if not structure["all_ok"]:
        raise ValueError("table structure check failed")

    cells = table.cells()
    index = {(r, c): i for i, (r, c, _) in enumerate(cells)}

    masks, parities, parity_product = [], [], 1
    for kind, line_index, _, target in table.lines():
        mask = 0
        for (r, c), i in index.items():
            if (kind == "row" and r == line_index) or (
                kind == "column" and c == line_index
            ):
                mask |= 1 << i
        masks.append(mask)
        parities.append(0 if target == +1 else 1)
        parity_product *= target

    hist = kernels.satisfaction_histogram(masks, parities, len(cells))
    satisfying = hist[len(masks)]
    near_misses = hist[len(masks) - 1]

    each_twice = all(
        sum(mask >> i & 1 for mask in masks) == 2 for i in range(len(cells))
    )
    parity_says_impossible = each_twice and parity_product == -1
    if parity_says_impossible and satisfying != 0:
        raise AssertionError("parity and exhaustive methods disagree")

    return {
        "n_operators": len(cells),
        "parity_product": parity_product,
        "each_operator_in_two_lines": each_twice,
        "parity_says_impossible": parity_says_impossible,
        "exhaustive_count_satisfying_all": satisfying,
        "count_satisfying_nine_of_ten": near_misses,
        "assignments_checked": 1 << len(cells),
    }


def render_table(table: KsTable, structure: dict = None) -> str:
    """Plaintext layout with per-line pass/fail annotations."""
    if structure is None:
        structure = verify_table_structure(table)
    status = {line["line"]: "ok" if line["ok"] else "FAIL" for line in structure["lines"]}
    width = 10
    rows = []
    for r, row in enumerate(table.grid):
        cells = "".join(
            (op.label if op is not None else "").ljust(width) for op in row
        )
        rows.append(f"{cells}| row {r + 1}: {status[f'row {r + 1}']}")
    footer = "  ".join(
        f"col {c + 1}: {status[f'column {c + 1}']}" for c in range(5)
    )
    return "\n".join(rows) + "\n" + footer


# -- eigenstate family -------------------------------------------------------

_PAIR_STATES = {
    "phi+": (states.bell_phi(+1), +1, +1),
    "phi-": (states.bell_phi(-1), +1, -1),
    "psi+": (states.bell_psi(+1), -1, +1),
    "psi-": (states.bell_psi(-1), -1, -1),
}


def two_pair_state(pair13: str, pair24: str) -> states.StateVector:
    """4-qubit state with a Bell state on qubits (1,3) and one on (2,4)."""
    s13 = _PAIR_STATES[pair13][0].amplitudes
    s24 = _PAIR_STATES[pair24][0].amplitudes
    amps = np.zeros(16, dtype=complex)
    for a in range(2):
        for b in range(2):
            for c in range(2):
                for d in range(2):
                    # q1=a, q3=b carry the (1,3) pair; q2=c, q4=d the (2,4) pair
                    amps[a << 3 | c << 2 | b << 1 | d] = s13[a << 1 | b] * s24[c << 1 | d]
    return states.StateVector(4, amps)


def eigenfamily_sweep() -> list:
    """All 16 joint eigenstates of z1z3, z2z4, x1x3 and x2x4.

    Each is a product of two Bell states.  Every one is a joint eigenstate
    of all nine term observables with definite signs multiplying to -1,
    and the sign-adapted functional keeps quantum value 9 against local
    bound 7.
    """
    records = []
    for pair13 in ("phi+", "phi-", "psi+", "psi-"):
        for pair24 in ("phi+", "phi-", "psi+", "psi-"):
            state = two_pair_state(pair13, pair24)
            signs = verify_nine_identities(state)
            if any(s is None for s in signs):
                raise AssertionError(
                    f"{pair13} x {pair24} is not a joint eigenstate of all terms"
                )
            product = 1
            for s in signs:
                product *= s
            adapted = BellFunctional.canonical().with_signs(signs)
            quantum_value = adapted.value(state)
            bound, _ = lhv.local_bound(adapted)
            _, z13, x13 = _PAIR_STATES[pair13]
            _, z24, x24 = _PAIR_STATES[pair24]
            records.append(
                {
                    "pair13": pair13,
                    "pair24": pair24,
                    "seed_eigenvalues": {
                        "z1z3": z13,
                        "z2z4": z24,
                        "x1x3": x13,
                        "x2x4": x24,
                    },
                    "signs": list(signs),
                    "sign_product": product,
                    "quantum_value": quantum_value,
                    "local_bound": bound,
                }
            )
    return records


def certificate() -> dict:
    """JSON-ready report: structure, contradiction, eigenfamily sweep."""
    table = KsTable.canonical()
    structure = verify_table_structure(table)
    contradiction = prove_ks_contradiction(table)
    sweep = eigenfamily_sweep()
    return {
        "table": [
            [None if op is None else op.label for op in row] for row in table.grid
        ],
        "structure": structure,
        "contradiction": contradiction,
        "eigenfamily": sweep,
        "all_ok": (
            structure["all_ok"]
            and contradiction["exhaustive_count_satisfying_all"] == 0
            and all(rec["sign_product"] == -1 for rec in sweep)
            and all(abs(rec["quantum_value"] - 9.0) < 1e-12 for rec in sweep)
            and all(rec["local_bound"] == 7 for rec in sweep)
        ),
    }
