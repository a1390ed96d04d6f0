import itertools
import random

import pytest

from conftest import naive_distance_set, naive_is_oa, naive_strength
from oaqec.arrays import (
    MixedLevelArray,
    attach_index_column,
    certify,
    delete_columns,
    derive_subarray,
    distance_profile,
    ensure_checked,
    expansive_replacement,
    from_text,
    is_orthogonal_array,
    kronecker_sum,
    multiply_oa,
    saturated_hd_formula,
    saturation_check,
    strength,
    to_text,
)
from oaqec.errors import (
    AlphabetMismatch,
    EmptyResult,
    NotDivisible,
    RowCountMismatch,
    ShapeMismatch,
    SymbolOutOfRange,
    TooFewRows,
)


def full_factorial(alphabets):
    return MixedLevelArray(itertools.product(*(range(s) for s in alphabets)),
                           alphabets)


EVEN_WEIGHT = [(0, 0, 0), (0, 1, 1), (1, 0, 1), (1, 1, 0)]


def test_is_oa_full_factorial():
    ok, witness = is_orthogonal_array(full_factorial((2, 2, 2)), 3)
    assert ok and witness is None


def test_is_oa_even_weight_rows():
    A = MixedLevelArray(EVEN_WEIGHT, (2, 2, 2))
    assert is_orthogonal_array(A, 2)[0]
    ok, witness = is_orthogonal_array(A, 3)
    assert not ok
    assert witness.columns == (0, 1, 2)


def test_is_oa_witness_contents():
    A = MixedLevelArray([(0, 0), (1, 1)], (2, 2))
    ok, witness = is_orthogonal_array(A, 2)
    assert not ok
    assert witness.levels == (0, 0)  # fractional index: first tuple is named
    assert witness.observed == 1


def test_is_oa_missing_tuple_witness():
    A = MixedLevelArray([(0, 0), (1, 1), (0, 1), (0, 1)], (2, 2))
    ok, witness = is_orthogonal_array(A, 2)
    assert not ok
    assert witness.levels == (1, 0) and witness.observed == 0


def test_is_oa_non_integer_index():
    A = MixedLevelArray([(0, 0), (1, 1), (0, 1)], (2, 2))
    ok, witness = is_orthogonal_array(A, 2)
    assert not ok and "integer" in witness.reason


def test_strength_values():
    assert strength(MixedLevelArray(EVEN_WEIGHT, (2, 2, 2))) == 2
    assert strength(MixedLevelArray([(0, 0)], (2, 2))) == 0
    assert strength(full_factorial((3, 2))) == 2


def test_distance_profile_cases():
    prof = distance_profile(MixedLevelArray(EVEN_WEIGHT, (2, 2, 2)))
    assert prof.md == 2 and prof.hd == {2}
    assert distance_profile(full_factorial((2, 2, 2))).md == 1
    dup = MixedLevelArray([(0, 1), (0, 1)], (2, 2))
    assert distance_profile(dup).md == 0
    with pytest.raises(TooFewRows):
        distance_profile(MixedLevelArray([(0, 0)], (2, 2)))


def test_distance_profile_matches_naive_oracle():
    rng = random.Random(7)
    for _ in range(25):
        n = rng.randint(1, 5)
        alphabets = [rng.randint(2, 4) for _ in range(n)]
        rows = [tuple(rng.randrange(s) for s in alphabets)
                for _ in range(rng.randint(2, 12))]
        A = MixedLevelArray(rows, alphabets)
        prof = distance_profile(A)
        oracle = naive_distance_set(rows)
        assert set(prof.hd) == oracle
        assert prof.md == min(oracle)


def test_is_oa_matches_naive_oracle():
    rng = random.Random(11)
    for _ in range(40):
        n = rng.randint(2, 4)
        alphabets = [rng.randint(2, 3) for _ in range(n)]
        r = rng.choice([4, 6, 8, 9, 12])
        rows = [tuple(rng.randrange(s) for s in alphabets) for _ in range(r)]
        A = MixedLevelArray(rows, alphabets)
        for t in range(1, n + 1):
            assert is_orthogonal_array(A, t)[0] == naive_is_oa(rows, alphabets, t)


def test_kronecker_sum_rows_pinned():
    D = MixedLevelArray([(0, 0), (0, 1)], (2, 2))
    col = MixedLevelArray([(0,), (1,)], (2,))
    out = kronecker_sum(D, col)
    assert out.rows == ((0, 0), (1, 1), (0, 1), (1, 0))
    assert is_orthogonal_array(out, 2)[0]


def test_kronecker_sum_zero_row():
    zero = MixedLevelArray([(0, 0, 0)], (3, 3, 3))
    col = MixedLevelArray([(v,) for v in range(3)], (3,))
    out = kronecker_sum(zero, col)
    assert out.rows == tuple((v, v, v) for v in range(3))


def test_kronecker_sum_alphabet_mismatch():
    with pytest.raises(AlphabetMismatch):
        kronecker_sum(full_factorial((2, 3)), full_factorial((2,)))


def test_multiply_oa():
    A = certify(MixedLevelArray(EVEN_WEIGHT, (2, 2, 2)), 2)
    B = certify(MixedLevelArray([(a, b, (a + b) % 3)
                                 for a in range(3) for b in range(3)], (3, 3, 3)), 2)
    out = multiply_oa(A, B)
    assert out.alphabets == (6, 6, 6)
    assert out.r == 36
    assert naive_is_oa(out.rows, out.alphabets, 2)
    assert distance_profile(out).md == 2
    assert min(distance_profile(A).md, distance_profile(B).md) == 2


def test_multiply_oa_shape_mismatch():
    with pytest.raises(ShapeMismatch):
        multiply_oa(full_factorial((2, 2)), full_factorial((3, 3, 3)))


def test_expansive_replacement_identity_relabel():
    A = certify(MixedLevelArray(EVEN_WEIGHT, (2, 2, 2)), 2)
    B = certify(MixedLevelArray([(0,), (1,)], (2,)), 1)
    out = expansive_replacement(A, 1, B)
    assert out.rows == A.rows
    assert out.strength == 2


def test_expansive_replacement_row_count_mismatch():
    A = certify(full_factorial((4, 2)), 2)
    B = certify(MixedLevelArray([(0,), (1,)], (2,)), 1)
    with pytest.raises(RowCountMismatch):
        expansive_replacement(A, 0, B)


def test_expansive_replacement_needs_balanced_replacement():
    A = certify(full_factorial((4, 4)), 2)
    lopsided = MixedLevelArray([(0, 0), (0, 1), (1, 0), (1, 1)], (2, 2))
    with pytest.raises(ShapeMismatch):
        expansive_replacement(A, 0, lopsided)  # strength claim is 0


def test_expansive_replacement_strength_preserved():
    A = certify(full_factorial((4, 4)), 2)
    B = certify(full_factorial((2, 2)), 2)
    out = expansive_replacement(A, 0, B)
    assert out.alphabets == (2, 2, 4)
    assert naive_is_oa(out.rows, out.alphabets, 2)


def test_delete_columns():
    A = certify(full_factorial((2, 3, 2)), 3)
    out = delete_columns(A, [1])
    assert out.alphabets == (2, 2)
    assert out.strength == 2
    same = delete_columns(A, [])
    assert same.rows == A.rows
    with pytest.raises(EmptyResult):
        delete_columns(A, [0, 1, 2])


def test_derive_subarray():
    A = certify(full_factorial((2, 2, 2)), 3)
    out = derive_subarray(A, 0, 0)
    assert out.rows == tuple(itertools.product(range(2), range(2)))
    assert naive_strength(out.rows, out.alphabets) == 2
    with pytest.raises(SymbolOutOfRange):
        derive_subarray(A, 0, 5)


def test_attach_index_column():
    A = full_factorial((2, 2))
    out = attach_index_column(A, 2)
    assert [row[0] for row in out.rows] == [0, 0, 1, 1]
    assert out.alphabets == (2, 2, 2)
    with pytest.raises(NotDivisible):
        attach_index_column(MixedLevelArray([(0,)] * 5, (2,)), 2)


def test_saturation_check():
    assert saturation_check(MixedLevelArray(EVEN_WEIGHT, (2, 2, 2)))
    assert not saturation_check(full_factorial((2, 2)))


def test_saturated_hd_formula():
    assert saturated_hd_formula(8, 1, 4, 4, 2) == {3, 4}
    assert saturated_hd_formula(4, 1, 2, 4, 2) == {1, 2}
    assert saturated_hd_formula(7, 3, 3, 2, 2) == set()


def test_text_roundtrip():
    A = certify(MixedLevelArray(EVEN_WEIGHT, (2, 2, 2)), 2)
    out = from_text(to_text(A))
    assert out.rows == A.rows
    assert out.alphabets == A.alphabets
    assert out.strength == 2 and not out.strength_checked


def test_ensure_checked_budget_and_failure():
    A = MixedLevelArray(EVEN_WEIGHT, (2, 2, 2))
    A._strength = 3  # false claim
    with pytest.raises(AssertionError):
        ensure_checked(A, budget=10**6)
    B = MixedLevelArray(EVEN_WEIGHT, (2, 2, 2))
    B._strength = 3
    ensure_checked(B, budget=1)  # too small to check anything
    assert not B.strength_checked
    assert B.status() == "constructed, unverified"
