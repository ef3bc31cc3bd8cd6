"""Exact identity checks and the fuzz harness."""

import json
import random
from fractions import Fraction

import pytest

from hecke3.errors import SingularBasis
from hecke3.fields import GF, QQ
from hecke3.linalg import Matrix
from hecke3.multilinear import std_basis, wedge2
from hecke3.heckecore import (
    HeckeData,
    build_R,
    build_Y,
    flip_matrix,
    flip_symmetry,
    skewsymmetrizer_matrix,
    symmetric_form,
    t_operator,
)
from hecke3.classify import canonical
from hecke3.verifier import (
    check_braid,
    check_component_identity,
    check_containments,
    check_cyclic_shift_identity,
    check_hecke,
    check_image_and_eigen,
    check_pairing_identities,
    fuzz,
    run_suite,
    sample_adversarial,
    sample_strategy_a,
    sample_strategy_b,
)

Fr = Fraction
E1, E2, E3 = std_basis(QQ)


def family_sym(q):
    s = (QQ.of(q) - 1) / 2
    g = symmetric_form(QQ, [[0, s, 0], [s, 0, 0], [0, 0, 1]])
    return build_R(HeckeData(QQ.of(q), E1, E2, g))


def broken_gram(q):
    """First-family matrix with one entry bumped off the q constraint."""
    s = (QQ.of(q) - 1) / 2
    return symmetric_form(QQ, [[0, s + 1, 0], [s + 1, 0, 0], [0, 0, 1]])


class TestBraid:
    def test_flip_passes(self):
        assert check_braid(flip_matrix(QQ)).passed

    def test_family_passes(self):
        assert check_braid(family_sym(Fr(2)).R).passed

    def test_broken_constraint_fails_with_witness(self):
        q = QQ.of(2)
        Y = skewsymmetrizer_matrix(q, E1, E2, broken_gram(q))
        R = Matrix.identity(QQ, 9).scale(q) - Y
        rep = check_braid(R)
        assert not rep.passed
        assert rep.witness is not None
        assert rep.witness["lhs"] != rep.witness["rhs"]
        assert len(rep.witness["input"]["basis_tensor"]) == 3


class TestHecke:
    def test_flip_at_one(self):
        assert check_hecke(flip_matrix(QQ), QQ.one()).passed

    def test_third_type_at_one(self):
        assert check_hecke(build_R(canonical("Type3")).R, QQ.one()).passed

    def test_flip_at_two_fails_on_first_monomial(self):
        rep = check_hecke(flip_matrix(QQ), QQ.of(2))
        assert not rep.passed
        assert rep.witness["input"]["basis_tensor"] == [1, 1]


class TestImageAndEigen:
    def test_classical_skewsymmetrizer(self):
        d = HeckeData(QQ.one(), E1, E2, Matrix.zeros(QQ, 3))
        assert check_image_and_eigen(build_Y(d), QQ.one()).passed

    def test_built_operator(self):
        sym = family_sym(Fr(1, 2))
        assert check_image_and_eigen(sym.Y, sym.q).passed

    def test_zero_operator_fails_rank(self):
        rep = check_image_and_eigen(Matrix.zeros(QQ, 9), QQ.one())
        assert not rep.passed
        assert rep.witness["input"] == {"rank": 0}


class TestContainments:
    def test_built_operator(self):
        sym = family_sym(Fr(3))
        assert check_containments(sym.Y, sym.q).passed

    def test_classical(self):
        d = HeckeData(QQ.one(), E1, E2, Matrix.zeros(QQ, 3))
        assert check_containments(build_Y(d), QQ.one()).passed

    def test_scaled_operator_fails(self):
        sym = family_sym(Fr(2))
        rep = check_containments(sym.Y.scale(QQ.of(2)), sym.q)
        assert not rep.passed and rep.witness is not None


class TestComponentIdentity:
    def test_standard_basis(self):
        sym = family_sym(Fr(2))
        assert check_component_identity(sym.Y, sym.q).passed

    def test_random_bases(self):
        rng = random.Random(71)
        sym = build_R(canonical("Type4"))
        for _ in range(10):
            from hecke3.multilinear import random_invertible

            rep = check_component_identity(sym.Y, sym.q, random_invertible(QQ, rng))
            assert rep.passed

    def test_broken_constraint_fails_with_tuple(self):
        q = QQ.of(2)
        Y = skewsymmetrizer_matrix(q, E1, E2, broken_gram(q))
        rep = check_component_identity(Y, q)
        assert not rep.passed
        assert len(rep.witness["input"]["indices"]) == 5

    def test_singular_basis_rejected(self):
        sym = family_sym(Fr(2))
        with pytest.raises(SingularBasis):
            check_component_identity(sym.Y, sym.q, Matrix.zeros(QQ, 3))


class TestPairingIdentities:
    def test_built_operator(self):
        sym = family_sym(Fr(3))
        assert check_pairing_identities(sym.Y, sym.q).passed

    def test_classical_at_one(self):
        d = HeckeData(QQ.one(), E1, E2, Matrix.zeros(QQ, 3))
        assert check_pairing_identities(build_Y(d), QQ.one()).passed

    def test_asymmetric_form_fails(self):
        g = Matrix.from_rows(QQ, [[0, 1, 0], [0, 0, 0], [0, 0, 1]])
        Y = skewsymmetrizer_matrix(QQ.one(), E1, E2, g)
        rep = check_pairing_identities(Y, QQ.one())
        assert not rep.passed


class TestCyclicShiftIdentity:
    def test_zero_traceless_operator(self):
        sym = flip_symmetry(QQ)
        T = Matrix.zeros(QQ, 3)
        assert check_cyclic_shift_identity(sym.Y, T, sym.q).passed

    def test_third_type(self):
        d = canonical("Type3")
        sym = build_R(d)
        T = t_operator(d.a, d.b, d.g)
        assert check_cyclic_shift_identity(sym.Y, T, sym.q).passed

    def test_first_family_annihilated_direction(self):
        # T kills e3, so the right side vanishes for x = e3, t = e1^e2
        d = canonical("Type1", Fr(2))
        T = t_operator(d.a, d.b, d.g)
        assert T.apply(E3) == [QQ.zero()] * 3
        sym = build_R(d)
        assert check_cyclic_shift_identity(sym.Y, T, sym.q).passed

    def test_wrong_factor_detected(self):
        d = canonical("Type3")
        sym = build_R(d)
        T = t_operator(d.a, d.b, d.g)
        rep = check_cyclic_shift_identity(sym.Y, T.scale(QQ.of(2)), sym.q)
        assert not rep.passed


class TestFormulationAgreement:
    """The three reformulations decide the same way on these families."""

    def _verdicts(self, Y, q):
        rng = random.Random(5)
        from hecke3.multilinear import random_invertible

        coords = check_component_identity(Y, q).passed and all(
            check_component_identity(Y, q, random_invertible(QQ, rng)).passed
            for _ in range(10)
        )
        return (
            coords,
            check_pairing_identities(Y, q).passed,
            check_containments(Y, q).passed,
        )

    def test_valid_samples_agree_on_pass(self):
        rng = random.Random(61)
        for _ in range(5):
            sym = build_R(sample_strategy_a(QQ, rng))
            assert self._verdicts(sym.Y, sym.q) == (True, True, True)

    def test_adversarial_samples_agree_on_fail(self):
        rng = random.Random(67)
        for _ in range(5):
            q, a, b, g = sample_adversarial(QQ, rng)
            Y = skewsymmetrizer_matrix(q, a, b, g)
            assert self._verdicts(Y, q) == (False, False, False)


class TestRunSuite:
    def test_all_pass_on_built_symmetry(self):
        reports = run_suite(family_sym(Fr(2)), random_bases=3)
        assert all(r.passed for r in reports)
        names = [r.name for r in reports]
        assert names[0] == "braid" and "pairing_identities" in names

    def test_works_without_data(self):
        from hecke3.heckecore import HeckeSymmetry

        sym = family_sym(Fr(2))
        raw = HeckeSymmetry.from_matrix(sym.R)  # no quadruple attached
        assert raw.data is None
        assert all(r.passed for r in run_suite(raw))

    def test_reports_serialize(self):
        for rep in run_suite(flip_symmetry(QQ)):
            doc = rep.to_json()
            json.dumps(doc)
            assert (doc["witness"] is None) == doc["passed"]


class TestSamplers:
    def test_strategy_a_always_valid(self):
        for field in (QQ, GF(11)):
            rng = random.Random(3)
            for _ in range(20):
                d = sample_strategy_a(field, rng)  # constructor validates
                assert d.q != 0

    def test_strategy_b_always_valid(self):
        for field in (QQ, GF(7)):
            rng = random.Random(4)
            for _ in range(20):
                d = sample_strategy_b(field, rng)
                assert d.q != 0

    def test_adversarial_breaks_constraint(self):
        rng = random.Random(6)
        from hecke3.heckecore import discriminant

        for _ in range(10):
            q, a, b, g = sample_adversarial(QQ, rng)
            assert (q - 1) ** 2 != -4 * discriminant(a, b, g)


class TestFuzz:
    def test_rationals_strategy_a(self):
        rep = fuzz(QQ, 20, 42, "A")
        assert rep.passed, rep.witness

    def test_prime_field_strategy_b(self):
        rep = fuzz(GF(11), 20, 7, "B")
        assert rep.passed, rep.witness

    def test_adversarial_mode_all_fail_as_expected(self):
        rep = fuzz(QQ, 10, 3, "A", adversarial=True)
        assert rep.passed  # pass means every broken trial was caught

    def test_deterministic_given_seed(self):
        a = fuzz(QQ, 5, 99, "B")
        b = fuzz(QQ, 5, 99, "B")
        da, db = a.to_json(), b.to_json()
        da.pop("elapsed_ms"), db.pop("elapsed_ms")
        assert da == db

    def test_trials_validation(self):
        with pytest.raises(ValueError):
            fuzz(QQ, 0, 1, "A")
        with pytest.raises(ValueError):
            fuzz(QQ, 1, 1, "C")


def test_necessity_spot_check():
    """Deliberately broken quadruples never survive the braid/quadratic pair."""
    rng = random.Random(8)
    for _ in range(10):
        q, a, b, g = sample_adversarial(QQ, rng)
        Y = skewsymmetrizer_matrix(q, a, b, g)
        R = Matrix.identity(QQ, 9).scale(q) - Y
        braid = check_braid(R)
        hecke = check_hecke(R, q)
        assert not (braid.passed and hecke.passed)
        failing = braid if not braid.passed else hecke
        assert failing.witness is not None
