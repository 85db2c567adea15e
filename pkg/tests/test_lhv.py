"""Hidden-variable side: constraint impossibility and the local bound."""

import itertools
from fractions import Fraction

import numpy as np
import pytest

from avnlab import lhv
from avnlab.functional import BellFunctional, nine_terms
from avnlab.pauli import parse
from avnlab.states import build_psi

from conftest import dense_observable


def make_functional(specs):
    """Tiny functionals for toy cases: specs of (sign, alice, bob) labels."""
    from avnlab.functional import ExperimentTerm

    return BellFunctional(
        tuple(
            ExperimentTerm(
                sign,
                tuple(parse(s, 4) for s in alice),
                tuple(parse(s, 4) for s in bob),
            )
            for sign, alice, bob in specs
        )
    )


def brute_force_bound(functional):
    """Independent enumerator over all ±1 assignments (no kernels)."""
    ids = sorted({name for t in functional.terms for name in lhv.term_ids(t)})
    best = None
    for values in itertools.product((+1, -1), repeat=len(ids)):
        point = dict(zip(ids, values))
        total = 0
        for term in functional.terms:
            product = term.sign
            for name in lhv.term_ids(term):
                product *= point[name]
            total += product
        best = total if best is None else max(best, total)
    return best


class TestConstraintSystem:
    def test_nine_constraints_with_expected_products(self):
        cs = lhv.ConstraintSystem.canonical()
        assert [c.required_product for c in cs.constraints] == [
            -1, -1, -1, -1, +1, +1, +1, +1, -1,
        ]

    def test_every_id_appears_exactly_twice(self):
        cs = lhv.ConstraintSystem.canonical()
        occurrences = {name: 0 for name in lhv.ID_ORDER}
        for c in cs.constraints:
            for name in c.ids:
                occurrences[name] += 1
        assert occurrences == {name: 2 for name in lhv.ID_ORDER}

    def test_constraint_ids_match_term_factors(self):
        cs = lhv.ConstraintSystem.canonical()
        for c, term in zip(cs.constraints, nine_terms()):
            assert sorted(c.ids) == sorted(f.label for f in term.factors)

    def test_rejects_unknown_id(self):
        with pytest.raises(ValueError):
            lhv.Constraint(("z9",), +1)


class TestCheckAssignment:
    def test_all_plus_one_satisfies_four(self):
        cs = lhv.ConstraintSystem.canonical()
        values = {name: +1 for name in lhv.ID_ORDER}
        assert lhv.check_assignment(values, cs) == 4

    def test_no_assignment_satisfies_all_nine(self):
        cs = lhv.ConstraintSystem.canonical()
        best = max(
            lhv.check_assignment(lhv.assignment_from_int(x), cs)
            for x in range(4096)
        )
        assert best == 8

    def test_partial_assignment_rejected(self):
        cs = lhv.ConstraintSystem.canonical()
        with pytest.raises(ValueError):
            lhv.check_assignment({"z1": 1}, cs)


class TestImpossibilityProof:
    def test_canonical_certificate(self):
        proof = lhv.prove_no_valid_assignment(lhv.ConstraintSystem.canonical())
        assert proof["parity_product"] == -1
        assert proof["all_ids_even_multiplicity"]
        assert proof["parity_says_impossible"]
        assert proof["exhaustive_count_satisfying_all"] == 0
        assert proof["max_simultaneously_satisfiable"] == 8
        assert proof["assignments_checked"] == 4096

    def test_flipping_ninth_sign_makes_it_satisfiable(self):
        cs = lhv.ConstraintSystem.canonical()
        mutated = lhv.ConstraintSystem(
            cs.constraints[:8] + (lhv.Constraint(cs.constraints[8].ids, +1),)
        )
        proof = lhv.prove_no_valid_assignment(mutated)
        assert proof["parity_product"] == +1
        assert not proof["parity_says_impossible"]
        assert proof["exhaustive_count_satisfying_all"] > 0
        # all-plus-one fails (the four -1 constraints), but some vertex works
        assert lhv.check_assignment({n: 1 for n in lhv.ID_ORDER}, mutated) == 5

    @pytest.mark.parametrize("flip", range(9))
    def test_parity_and_exhaustion_agree_on_mutations(self, flip):
        cs = lhv.ConstraintSystem.canonical()
        constraints = list(cs.constraints)
        constraints[flip] = lhv.Constraint(
            constraints[flip].ids, -constraints[flip].required_product
        )
        proof = lhv.prove_no_valid_assignment(lhv.ConstraintSystem(tuple(constraints)))
        assert proof["parity_product"] == +1
        assert proof["exhaustive_count_satisfying_all"] > 0

    def test_single_constraint_leaves_half(self):
        cs = lhv.ConstraintSystem((lhv.Constraint(("z1", "z3"), -1),))
        proof = lhv.prove_no_valid_assignment(cs)
        assert proof["exhaustive_count_satisfying_all"] == 2048


class TestLocalBound:
    def test_paper_functional_bound_is_seven(self):
        bound, witness = lhv.local_bound(BellFunctional.canonical())
        assert bound == 7
        assert lhv.functional_at_point(BellFunctional.canonical(), witness) == 7

    def test_witness_is_lexicographically_first(self):
        functional = BellFunctional.canonical()
        bound, witness = lhv.local_bound(functional)
        for x in range(4096):
            values = lhv.assignment_from_int(x)
            if lhv.functional_at_point(functional, values) == bound:
                assert values == witness
                break

    def test_single_term_bound_is_one(self):
        functional = make_functional([(-1, ["z1"], ["z3"])])
        bound, _ = lhv.local_bound(functional)
        assert bound == 1

    def test_chsh_style_toy_matches_brute_force(self):
        functional = make_functional(
            [
                (+1, ["z1"], ["z3"]),
                (+1, ["x1"], ["x3"]),
                (+1, ["z1"], ["x3"]),
                (-1, ["x1"], ["z3"]),
            ]
        )
        bound, _ = lhv.local_bound(functional)
        assert bound == brute_force_bound(functional) == 2

    def test_nine_term_bound_matches_brute_force(self):
        assert brute_force_bound(BellFunctional.canonical()) == 7

    def test_vertex_values_are_odd_integers_in_range(self):
        functional = BellFunctional.canonical()
        for x in range(4096):
            value = lhv.functional_at_point(functional, lhv.assignment_from_int(x))
            assert value == int(value)
            assert int(value) % 2 == 1
            assert -9 <= value <= 9

    def test_invariant_under_observer_internal_relabeling(self):
        # swap qubits 1<->2 and 3<->4 in every factor label
        table = str.maketrans("1234", "2143")
        permuted = make_functional(
            [
                (
                    t.sign,
                    [f.label.translate(table) for f in t.alice_factors],
                    [f.label.translate(table) for f in t.bob_factors],
                )
                for t in nine_terms()
            ]
        )
        bound, _ = lhv.local_bound(permuted)
        assert bound == 7

    def test_factorizing_vertices_cannot_beat_seven(self):
        singles = ("z1", "z2", "x1", "x2", "z3", "z4", "x3", "x4")
        best = -99
        functional = BellFunctional.canonical()
        for values in itertools.product((+1, -1), repeat=8):
            point = dict(zip(singles, values))
            point["z1z2"] = point["z1"] * point["z2"]
            point["x1x2"] = point["x1"] * point["x2"]
            point["z3x4"] = point["z3"] * point["x4"]
            point["x3z4"] = point["x3"] * point["z4"]
            best = max(best, lhv.functional_at_point(functional, point))
        assert best <= 7


class TestMultilinearity:
    def test_interior_sampling_never_exceeds_bound(self):
        assert lhv.bound_is_attained_at_vertices(
            BellFunctional.canonical(), trials=100_000, seed=0
        )

    def test_zero_point_is_zero(self):
        value = lhv.functional_at_point(
            BellFunctional.canonical(), {name: 0.0 for name in lhv.ID_ORDER}
        )
        assert value == 0.0 <= 7

    def test_rejects_nonpositive_trials(self):
        with pytest.raises(ValueError):
            lhv.bound_is_attained_at_vertices(BellFunctional.canonical(), 0, 0)


class TestVisibilityThreshold:
    def test_threshold_is_seven_ninths(self):
        threshold = lhv.visibility_threshold(BellFunctional.canonical(), 9)
        assert threshold == Fraction(7, 9)
        assert float(threshold) == pytest.approx(7 / 9, abs=1e-15)

    def test_rejects_zero_quantum_value(self):
        with pytest.raises(ZeroDivisionError):
            lhv.visibility_threshold(BellFunctional.canonical(), 0)

    def test_every_term_observable_is_traceless(self):
        for t in nine_terms():
            assert abs(np.trace(t.observable.to_matrix())) < 1e-12

    @pytest.mark.parametrize("visibility", [0.0, 0.5, 7 / 9, 1.0])
    def test_werner_scaling_by_density_matrix_oracle(self, visibility):
        psi = build_psi().amplitudes
        rho = visibility * np.outer(psi, psi.conj()) + (1 - visibility) * np.eye(16) / 16
        value = sum(
            t.sign * np.trace(rho @ t.observable.to_matrix()).real
            for t in nine_terms()
        )
        assert value == pytest.approx(9 * visibility, abs=1e-12)

    def test_violation_only_above_threshold(self):
        assert 9 * 1.0 > 7
        assert 9 * 0.0 < 7
        assert 9 * (7 / 9) == pytest.approx(7, abs=1e-12)


class TestCertificate:
    def test_json_ready(self):
        import json

        report = lhv.certificate()
        json.dumps(report)
        assert report["local_bound"] == 7
        assert report["satisfying_count"] == 0
        assert report["visibility_threshold_exact"] == "7/9"
