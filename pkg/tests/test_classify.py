"""Type determination, canonical fixtures, value tables, invariance."""

import random
from fractions import Fraction

import pytest

from hecke3.errors import InvalidQ
from hecke3.fields import GF, QQ
from hecke3.linalg import Matrix
from hecke3.multilinear import idx2, random_invertible
from hecke3.heckecore import build_R, conjugate, flip_symmetry
from hecke3.classify import (
    TYPE_LABELS,
    canonical,
    canonical_gram,
    check_value_tables,
    classify,
    invariance_suite,
    reference_r_matrix,
)

Fr = Fraction

EXPECTED_INVARIANTS = {
    # label: (rank_g, rank_restricted)
    "Type1": (3, 2),
    "Type2": (2, 2),
    "Type3": (3, 1),
    "Type4": (2, 1),
    "Type5": (1, 1),
    "Type6": (2, 0),
    "Type7": (1, 0),
    "Type8": (0, None),
}


class TestCanonical:
    def test_first_family_gram(self):
        g = canonical_gram("Type1", Fr(2))
        assert g.rows == Matrix.from_rows(QQ, [[0, "1/2", 0], ["1/2", 0, 0], [0, 0, 1]]).rows

    def test_sixth_gram(self):
        g = canonical_gram("Type6")
        assert g == Matrix.from_rows(QQ, [[0, 0, 0], [0, 0, 1], [0, 1, 0]])

    def test_eighth_gram_is_zero(self):
        assert canonical_gram("Type8").is_zero()

    def test_q_validation(self):
        with pytest.raises(InvalidQ):
            canonical("Type1", Fr(1))
        with pytest.raises(InvalidQ):
            canonical("Type2", Fr(0))
        with pytest.raises(InvalidQ):
            canonical("Type1")
        with pytest.raises(InvalidQ):
            canonical("Type3", Fr(2))

    def test_all_canonical_data_valid(self):
        for label in TYPE_LABELS:
            q = Fr(3) if label in ("Type1", "Type2") else None
            d = canonical(label, q)  # constructor validates the constraint
            assert d.a == [QQ.one(), QQ.zero(), QQ.zero()]


class TestClassify:
    def test_flip_is_type8(self):
        assert classify(flip_symmetry(QQ)).label == "Type8"

    @pytest.mark.parametrize("label", TYPE_LABELS)
    def test_canonical_types(self, label):
        q = Fr(2) if label in ("Type1", "Type2") else None
        rep = classify(build_R(canonical(label, q)))
        assert rep.label == label
        assert (rep.rank_g, rep.rank_restricted) == EXPECTED_INVARIANTS[label]

    @pytest.mark.parametrize("q", [Fr(2), Fr(3), Fr(-1), Fr(1, 2)])
    def test_first_families_across_q(self, q):
        assert classify(build_R(canonical("Type1", q))).label == "Type1"
        assert classify(build_R(canonical("Type2", q))).label == "Type2"

    def test_conjugated_third_type(self):
        rng = random.Random(19)
        sym = build_R(canonical("Type3"))
        for _ in range(5):
            rep = classify(conjugate(sym, random_invertible(QQ, rng)))
            assert rep.label == "Type3"

    def test_diagonal_rescaling_keeps_type(self):
        P = Matrix.from_rows(QQ, [[1, 0, 0], [0, 1, 0], [0, 0, 2]])
        sym = build_R(canonical("Type1", Fr(2)))
        assert classify(conjugate(sym, P)).label == "Type1"

    def test_rank_inequality(self):
        for label in TYPE_LABELS:
            q = Fr(3) if label in ("Type1", "Type2") else None
            rep = classify(build_R(canonical(label, q)))
            if rep.rank_restricted is not None:
                assert rep.rank_restricted <= rep.rank_g <= 2 + rep.rank_restricted

    def test_report_json(self):
        rep = classify(build_R(canonical("Type3")))
        doc = rep.to_json()
        assert doc["type"] == "Type3" and doc["q"] == "1"
        assert doc["rank_g"] == 3 and doc["rank_restricted"] == 1

    def test_over_prime_field(self):
        f7 = GF(7)
        for label in TYPE_LABELS:
            q = f7.of(3) if label in ("Type1", "Type2") else None
            assert classify(build_R(canonical(label, q, f7))).label == label


class TestValueTables:
    @pytest.mark.parametrize("q", [Fr(2), Fr(3), Fr(-1), Fr(1, 2)])
    def test_tables_match(self, q):
        rep = check_value_tables(q)
        assert rep.passed, rep.witness

    def test_second_type_square_entry(self):
        q = Fr(3)
        m = reference_r_matrix("Type2", q)
        col = m.col(idx2(2, 2))
        assert col[idx2(2, 2)] == q and sum(1 for c in col if c != 0) == 1

    def test_third_type_first_square(self):
        m = reference_r_matrix("Type3", None)
        col = m.col(idx2(0, 0))
        assert col[idx2(0, 0)] == 1
        assert col[idx2(0, 1)] == 1
        assert col[idx2(1, 0)] == -1

    def test_sixth_type_mixed_entry(self):
        m = reference_r_matrix("Type6", None)
        col = m.col(idx2(0, 2))
        assert col[idx2(2, 0)] == 1 and sum(1 for c in col if c != 0) == 1

    def test_tables_match_over_prime_field(self):
        f11 = GF(11)
        rep = check_value_tables(f11.of(2), f11)
        assert rep.passed, rep.witness


class TestInvariance:
    def test_small_run(self):
        rep = invariance_suite(3, 2024)
        assert rep.passed, rep.witness

    def test_first_two_families_never_confused(self):
        rng = random.Random(29)
        for q in (Fr(2), Fr(-1)):
            s1 = build_R(canonical("Type1", q))
            s2 = build_R(canonical("Type2", q))
            for _ in range(5):
                P = random_invertible(QQ, rng)
                assert classify(conjugate(s1, P)).label == "Type1"
                assert classify(conjugate(s2, P)).label == "Type2"
