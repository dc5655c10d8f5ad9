"""Optimal profile search driven by the Euclid ladder.

The best coverage bound over all admissible profiles is attained by at most
two explicitly constructible candidates.  Both start from a flat (or almost
flat) seed at the deepest ladder level and are lowered to level 1 by
alternating the two pre-sequence transforms: a left lift into every odd
level, a right lift into every even one.  How many optima exist is read off
gcd(m, k): one when it is 1, exactly two when it is 2, and at most two
otherwise.
"""

import enum
from collections.abc import Sequence
from dataclasses import dataclass

from .construction import max_representable
from .errors import DomainError
from .euclid import EuclidTrace, euclid_trace
from .profiles import Profile, TransformContext, _left_pre, _right_pre


class Classification(str, enum.Enum):
    """How many optimal profiles a (m, k) instance admits."""

    EXACTLY_ONE = "ExactlyOne"
    EXACTLY_TWO = "ExactlyTwo"
    AT_MOST_TWO = "AtMostTwo"


class Ordering(str, enum.Enum):
    LESS = "Less"
    EQUAL = "Equal"
    GREATER = "Greater"


@dataclass(frozen=True)
class DesignResult:
    """Candidate optimal profile(s) for one (m, k) instance.

    ``levels_n``/``levels_m`` record every intermediate sequence of the lift,
    keyed by level (depth N down to 1); level 1 equals the candidate parts.
    ``candidate_m`` is absent exactly when gcd(m, k) == 1.
    """

    trace: EuclidTrace
    candidate_n: Profile
    candidate_m: Profile | None
    classification: Classification
    b_value: int
    b_value_m: int | None
    levels_n: dict[int, tuple[int, ...]]
    levels_m: dict[int, tuple[int, ...]] | None

    def candidates(self) -> tuple[Profile, ...]:
        if self.candidate_m is None:
            return (self.candidate_n,)
        return (self.candidate_n, self.candidate_m)


def predicted_count(m: int, k: int) -> Classification:
    """Classification of the optimum count straight from gcd(m, k)."""
    g = euclid_trace(m, k).gcd
    if g == 1:
        return Classification.EXACTLY_ONE
    if g == 2:
        return Classification.EXACTLY_TWO
    return Classification.AT_MOST_TWO


def compare_profiles(a: Profile, b: Profile) -> Ordering:
    """Exact ordering of two profiles by their coverage bound."""
    if a.context_total != b.context_total or len(a.parts) != len(b.parts):
        raise DomainError(
            f"profiles live in different spaces: "
            f"({a.context_total}, {len(a.parts)}) vs ({b.context_total}, {len(b.parts)})"
        )
    ba, bb = max_representable(a), max_representable(b)
    if ba < bb:
        return Ordering.LESS
    if ba > bb:
        return Ordering.GREATER
    return Ordering.EQUAL


def lift_sequence(
    trace: EuclidTrace, parts: Sequence[int], from_level: int
) -> dict[int, tuple[int, ...]]:
    """Lower a level-``from_level`` sequence to level 1, one level at a time.

    Each step inverts a run-length encoding against the ladder's division
    context for that level: left-anchored into odd levels, right-anchored
    into even ones.  Returns every intermediate, keyed by level.
    """
    if not 1 <= from_level <= trace.depth:
        raise DomainError(f"level {from_level} outside [1, {trace.depth}]")
    seq = tuple(parts)
    levels = {from_level: seq}
    for h in range(from_level - 1, 0, -1):
        ctx = TransformContext.of(trace.r(h - 2), trace.r(h - 1))
        seq = _left_pre(seq, ctx) if h % 2 == 1 else _right_pre(seq, ctx)
        levels[h] = seq
    return levels


def _seed_pair(trace: EuclidTrace) -> tuple[tuple[int, ...], tuple[int, ...] | None]:
    """Deepest-level seeds: the flat sequence plus, when gcd >= 2, the tilted
    one (high end first at odd depth, last at even depth)."""
    g = trace.gcd
    q = trace.quotients[-1]
    flat = (q,) * g
    if g < 2:
        return flat, None
    # q >= 2 here: the level above is a proper multiple of this one.
    middle = (q,) * (g - 2)
    if trace.depth % 2 == 1:
        return flat, (q + 1,) + middle + (q - 1,)
    return flat, (q - 1,) + middle + (q + 1,)


def design(m: int, k: int) -> DesignResult:
    """Compute the candidate optimal profile(s) for (m, k).

    >>> design(11, 3).candidate_n.parts
    (4, 4, 3)
    """
    trace = euclid_trace(m, k)
    seed_n, seed_m = _seed_pair(trace)
    levels_n = lift_sequence(trace, seed_n, trace.depth)
    candidate_n = Profile(levels_n[1], m, first_part_floor=2)
    b_value = max_representable(candidate_n)

    candidate_m = None
    b_value_m = None
    levels_m = None
    if seed_m is not None:
        levels_m = lift_sequence(trace, seed_m, trace.depth)
        candidate_m = Profile(levels_m[1], m, first_part_floor=2)
        b_value_m = max_representable(candidate_m)

    if trace.gcd == 1:
        classification = Classification.EXACTLY_ONE
    elif trace.gcd == 2:
        classification = Classification.EXACTLY_TWO
    else:
        classification = Classification.AT_MOST_TWO

    return DesignResult(
        trace=trace,
        candidate_n=candidate_n,
        candidate_m=candidate_m,
        classification=classification,
        b_value=b_value,
        b_value_m=b_value_m,
        levels_n=levels_n,
        levels_m=levels_m,
    )
