from math import comb

import pytest
from hypothesis import given, strategies as st

from fdlopt import (
    DomainError,
    PatternError,
    Profile,
    TransformContext,
    compositions,
    design_profile,
    enumerate_profiles,
    left_imbedded,
    left_presequence,
    right_imbedded,
    right_presequence,
)


def ctx(big, small):
    return TransformContext.of(big, small)


class TestProfileType:
    def test_normalizes_to_tuple(self):
        assert Profile([2, 1], 3).parts == (2, 1)

    def test_rejects_bad_parts(self):
        with pytest.raises(DomainError):
            Profile((), 0)
        with pytest.raises(DomainError):
            Profile((2, 0), 2)
        with pytest.raises(DomainError):
            Profile((2, 1), 4)  # wrong total

    def test_first_part_floor(self):
        with pytest.raises(DomainError):
            Profile((1, 2), 3, first_part_floor=2)
        assert Profile((1, 2), 3).parts == (1, 2)

    def test_design_profile_checks_length(self):
        with pytest.raises(DomainError):
            design_profile((2, 1), 3, 3)
        assert design_profile((2, 1), 3, 2).first_part_floor == 2

    def test_text(self):
        assert design_profile((3, 3, 2, 3, 2), 13, 5).text() == "3,3,2,3,2"


class TestContext:
    def test_of_computes_division(self):
        c = ctx(13, 5)
        assert (c.quotient, c.remainder) == (2, 3)

    def test_rejects_exact_division(self):
        with pytest.raises(DomainError):
            ctx(12, 4)

    def test_rejects_inconsistent_fields(self):
        with pytest.raises(DomainError):
            TransformContext(13, 5, 2, 2)


class TestLeftTransforms:
    def test_imbedded_13_5(self):
        out = left_imbedded(Profile((3, 3, 2, 3, 2), 13), ctx(13, 5))
        assert out.parts == (1, 2, 2)
        assert out.context_total == 5

    def test_imbedded_single_high_part(self):
        assert left_imbedded(Profile((2, 1), 3), ctx(3, 2)).parts == (2,)

    def test_imbedded_16_6(self):
        out = left_imbedded(Profile((3, 3, 2, 3, 3, 2), 16), ctx(16, 6))
        assert out.parts == (1, 2, 1, 2)

    def test_presequence_13_5(self):
        out = left_presequence(Profile((1, 2, 2), 5), ctx(13, 5))
        assert out.parts == (3, 3, 2, 3, 2)
        assert out.context_total == 13

    def test_presequence_single_run(self):
        assert left_presequence(Profile((2,), 2), ctx(3, 2)).parts == (2, 1)

    def test_presequence_16_6(self):
        out = left_presequence(Profile((1, 2, 1, 2), 6), ctx(16, 6))
        assert out.parts == (3, 3, 2, 3, 3, 2)

    def test_imbedded_requires_leading_high_part(self):
        with pytest.raises(PatternError):
            left_imbedded(Profile((2, 3, 2, 3, 3), 13), ctx(13, 5))

    def test_imbedded_rejects_off_pattern_values(self):
        with pytest.raises(PatternError):
            left_imbedded(Profile((4, 2, 2, 3, 2), 13), ctx(13, 5))
        with pytest.raises(PatternError):
            left_imbedded(Profile((3, 3, 3, 3, 2), 14), ctx(13, 5))  # wrong high count

    def test_presequence_rejects_bad_shape(self):
        with pytest.raises(PatternError):
            left_presequence(Profile((1, 2), 3), ctx(13, 5))  # wrong length
        with pytest.raises(PatternError):
            left_presequence(Profile((1, 2, 3), 6), ctx(13, 5))  # wrong sum


class TestRightTransforms:
    def test_imbedded_13_5(self):
        out = right_imbedded(Profile((2, 3, 2, 3, 3), 13), ctx(13, 5))
        assert out.parts == (2, 2, 1)

    def test_imbedded_single_high_part(self):
        assert right_imbedded(Profile((1, 2), 3), ctx(3, 2)).parts == (2,)

    def test_imbedded_10_6(self):
        out = right_imbedded(Profile((1, 2, 1, 2, 2, 2), 10), ctx(10, 6))
        assert out.parts == (2, 2, 1, 1)

    def test_presequence_13_5(self):
        out = right_presequence(Profile((2, 2, 1), 5), ctx(13, 5))
        assert out.parts == (2, 3, 2, 3, 3)

    def test_presequence_single_run(self):
        assert right_presequence(Profile((2,), 2), ctx(3, 2)).parts == (1, 2)

    def test_presequence_6_4(self):
        assert right_presequence(Profile((2, 2), 4), ctx(6, 4)).parts == (1, 2, 1, 2)

    def test_imbedded_requires_trailing_high_part(self):
        with pytest.raises(PatternError):
            right_imbedded(Profile((3, 3, 2, 3, 2), 13), ctx(13, 5))


def _patterned(positions, ctx_):
    posset = set(positions)
    return tuple(
        ctx_.quotient + 1 if i in posset else ctx_.quotient
        for i in range(1, ctx_.small + 1)
    )


@st.composite
def _anchored_case(draw, anchor_first: bool):
    small = draw(st.integers(2, 18))
    big = draw(st.integers(small + 1, 4 * small - 1).filter(lambda b: b % small != 0))
    c = TransformContext.of(big, small)
    free = range(2, small + 1) if anchor_first else range(1, small)
    interior = draw(
        st.sets(
            st.sampled_from(list(free)),
            min_size=c.remainder - 1,
            max_size=c.remainder - 1,
        )
    )
    anchor = 1 if anchor_first else small
    return c, _patterned({anchor} | interior, c)


@given(_anchored_case(anchor_first=True))
def test_left_round_trip(case):
    c, parts = case
    runs = left_imbedded(Profile(parts, c.big), c)
    assert sum(runs.parts) == c.small
    back = left_presequence(runs, c)
    assert back.parts == parts
    assert sum(back.parts) == c.big
    assert left_imbedded(back, c).parts == runs.parts


@given(_anchored_case(anchor_first=False))
def test_right_round_trip(case):
    c, parts = case
    runs = right_imbedded(Profile(parts, c.big), c)
    assert sum(runs.parts) == c.small
    back = right_presequence(runs, c)
    assert back.parts == parts
    assert right_imbedded(back, c).parts == runs.parts


class TestEnumeration:
    def test_smallest_space(self):
        assert [p.parts for p in enumerate_profiles(3, 2)] == [(2, 1)]

    def test_hand_enumeration_5_2(self):
        assert [p.parts for p in enumerate_profiles(5, 2)] == [(2, 3), (3, 2), (4, 1)]

    def test_space_size_16_6(self):
        assert sum(1 for _ in enumerate_profiles(16, 6)) == comb(14, 5) == 2002

    def test_counts_match_binomial(self):
        for m in range(2, 21):
            for k in range(1, m):
                assert sum(1 for _ in enumerate_profiles(m, k)) == comb(m - 2, k - 1)

    def test_lexicographic_and_unique(self):
        seen = [p.parts for p in enumerate_profiles(9, 3)]
        assert seen == sorted(seen)
        assert len(seen) == len(set(seen))

    def test_membership(self):
        for p in enumerate_profiles(8, 3):
            assert p.parts[0] >= 2
            assert all(x >= 1 for x in p.parts)
            assert sum(p.parts) == 8 and len(p.parts) == 3

    def test_domain_error(self):
        with pytest.raises(DomainError):
            list(enumerate_profiles(2, 2))


def test_compositions_min_first():
    assert list(compositions(4, 2)) == [(1, 3), (2, 2), (3, 1)]
    assert list(compositions(4, 2, min_first=2)) == [(2, 2), (3, 1)]
    assert list(compositions(3, 4)) == []
