"""Admissible two- and three-part splittings of a discriminant."""

from itertools import permutations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from quatext import (
    D4Factorization,
    FactorizationRejected,
    H8Factorization,
    InvalidDiscriminant,
    NotFundamental,
    at_most_one_negative,
    check_d4_split,
    check_h8_split,
    disc_sort_key,
    enumerate_d4,
    enumerate_h8,
    is_d4_split,
    is_fundamental,
    is_h8_split,
)
from oracles import d4_pairs_ref, fundamental_ref, h8_splits_ref

FUNDAMENTAL_SMALL = [d for d in range(-600, 601) if fundamental_ref(d)]


class TestCheckH8Split:
    def test_known_good_triples(self):
        check_h8_split(520, (5, 8, 13))
        check_h8_split(-255, (-3, 5, 17))
        check_h8_split(-420, (-4, 5, 21))
        check_h8_split(-1380, (-3, 5, 92))
        check_h8_split(-1380, (-4, 5, 69))

    def test_symbol_failure_carries_context(self):
        with pytest.raises(FactorizationRejected, match=r"\(85/2\) != 1 for prime 2 of part -4") as exc:
            check_h8_split(-340, (-4, 5, 17))
        assert exc.value.prime == 2
        assert exc.value.numerator == 85
        assert exc.value.value == -1

    def test_structure_failures(self):
        with pytest.raises(InvalidDiscriminant, match="part 14 is not a fundamental"):
            check_h8_split(520, (5, 8, 14))
        with pytest.raises(InvalidDiscriminant, match="do not multiply"):
            check_h8_split(520, (5, 8, 17))
        with pytest.raises(InvalidDiscriminant, match="share a factor"):
            check_h8_split(1600, (5, 8, 40))
        with pytest.raises(InvalidDiscriminant, match="nontrivial"):
            check_h8_split(40, (5, 8, 1))

    def test_permutation_invariance(self):
        for parts in [(5, 8, 13), (-3, 5, 17), (-4, 5, 21)]:
            d = parts[0] * parts[1] * parts[2]
            verdicts = {is_h8_split(d, p) for p in permutations(parts)}
            assert verdicts == {True}
        for parts in [(-4, 5, 17), (5, 8, 21), (-3, -7, 5)]:
            d = parts[0] * parts[1] * parts[2]
            verdicts = {is_h8_split(d, p) for p in permutations(parts)}
            assert verdicts == {False}


class TestEnumerateH8:
    def test_frozen_small_cases(self):
        assert [f.parts for f in enumerate_h8(520)] == [(5, 8, 13)]
        assert [f.parts for f in enumerate_h8(-1380)] == [(-3, 5, 92), (-4, 5, 69)]
        assert enumerate_h8(40) == []
        assert enumerate_h8(-255) == [H8Factorization(d=-255, parts=(-3, 5, 17))]

    def test_matches_brute_force_colouring(self):
        for d in FUNDAMENTAL_SMALL:
            mine = [f.parts for f in enumerate_h8(d)]
            assert mine == h8_splits_ref(d), d

    def test_every_split_validates_and_is_canonical(self):
        for d in FUNDAMENTAL_SMALL:
            for f in enumerate_h8(d):
                check_h8_split(d, f.parts)
                assert f.d == d
                assert list(f.parts) == sorted(f.parts, key=disc_sort_key)
                assert at_most_one_negative(f.parts)

    def test_rejects_non_fundamental(self):
        for d in (0, 1, 4, 300):
            with pytest.raises(NotFundamental):
                enumerate_h8(d)

    def test_str_form(self):
        f = enumerate_h8(520)[0]
        assert str(f) == "520 = 5 * 8 * 13"


class TestCheckD4Split:
    def test_known_good_pairs_both_orders(self):
        check_d4_split(680, 8, 17)
        check_d4_split(680, 17, 8)
        check_d4_split(136, 8, 17)
        check_d4_split(205, 5, 41)

    def test_symbol_failure(self):
        with pytest.raises(FactorizationRejected, match=r"\(8/5\) != 1 for prime 5"):
            check_d4_split(520, 5, 8)

    def test_both_negative_rejected(self):
        with pytest.raises(FactorizationRejected, match="both -3 and -7 negative"):
            check_d4_split(105, -3, -7)

    def test_structure_failures(self):
        with pytest.raises(InvalidDiscriminant):
            check_d4_split(680, 8, 34)
        with pytest.raises(InvalidDiscriminant):
            check_d4_split(680, 8, 13)   # 8*13 does not divide 680
        with pytest.raises(InvalidDiscriminant):
            check_d4_split(680, 1, 680)


class TestEnumerateD4:
    def test_frozen_small_cases(self):
        assert [(f.d1, f.d2, f.d3) for f in enumerate_d4(680)] == [(8, 17, 5)]
        assert [(f.d1, f.d2, f.d3) for f in enumerate_d4(136)] == [(8, 17, 1)]
        assert enumerate_d4(520) == []
        assert enumerate_d4(40) == []

    def test_matches_brute_force_pairing(self):
        for d in FUNDAMENTAL_SMALL:
            mine = sorted((f.d1, f.d2, f.d3) for f in enumerate_d4(d))
            assert mine == sorted(d4_pairs_ref(d)), d

    def test_every_pair_validates(self):
        for d in FUNDAMENTAL_SMALL:
            for f in enumerate_d4(d):
                check_d4_split(d, f.d1, f.d2)
                assert isinstance(f, D4Factorization)
                assert f.d1 * f.d2 * f.d3 == d
                assert not (f.d1 < 0 and f.d2 < 0)

    def test_swap_gives_same_verdict(self):
        for d in FUNDAMENTAL_SMALL:
            for f in enumerate_d4(d):
                assert is_d4_split(d, f.d2, f.d1)


class TestAtMostOneNegative:
    @settings(max_examples=200)
    @given(st.tuples(st.integers(-50, 50), st.integers(-50, 50), st.integers(-50, 50)))
    def test_counts_negatives(self, parts):
        assert at_most_one_negative(parts) == (sum(1 for v in parts if v < 0) <= 1)
