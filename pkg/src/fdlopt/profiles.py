"""Block-size profiles and the four run-length transforms between levels.

A profile splits the fibers into consecutive blocks, one block per allowed
recirculation.  The optimizer moves between "levels" of such profiles: a
two-valued profile (all parts equal to some q or q+1) is encoded by the run
lengths between its high parts, anchored either at the first position (left
transforms, which require the profile to open with a high part) or at the
last position (right transforms, which require it to close with one).  The
pre-sequence transforms invert these encodings, planting high parts at the
positions the run lengths prescribe.
"""

from collections.abc import Iterator, Sequence
from dataclasses import dataclass

from .errors import DomainError, PatternError
from .euclid import check_domain


@dataclass(frozen=True)
class Profile:
    """A validated composition: positive parts summing to ``context_total``.

    ``first_part_floor`` is 2 for top-level design profiles (the first fiber
    block must hold at least two fibers) and 1 for intermediate levels.
    """

    parts: tuple[int, ...]
    context_total: int
    first_part_floor: int = 1

    def __post_init__(self):
        object.__setattr__(self, "parts", tuple(self.parts))
        if not self.parts:
            raise DomainError("a profile needs at least one part")
        if any(not isinstance(p, int) or p < 1 for p in self.parts):
            raise DomainError(f"profile parts must be positive integers: {self.parts}")
        if self.first_part_floor not in (1, 2):
            raise DomainError(f"first_part_floor must be 1 or 2, got {self.first_part_floor}")
        if self.parts[0] < self.first_part_floor:
            raise DomainError(
                f"first part {self.parts[0]} is below the floor {self.first_part_floor}"
            )
        total = sum(self.parts)
        if total != self.context_total:
            raise DomainError(
                f"parts sum to {total}, context requires {self.context_total}"
            )

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def text(self) -> str:
        """Comma-separated form used by the CLI, e.g. '3,3,2,3,2'."""
        return ",".join(str(p) for p in self.parts)


def design_profile(parts: Sequence[int], m: int, k: int) -> Profile:
    """Wrap ``parts`` as a top-level profile for (m, k), validating membership."""
    check_domain(m, k)
    if len(parts) != k:
        raise DomainError(f"profile has {len(parts)} blocks, expected k={k}")
    return Profile(tuple(parts), m, first_part_floor=2)


@dataclass(frozen=True)
class TransformContext:
    """Division context big = quotient * small + remainder, remainder nonzero."""

    big: int
    small: int
    quotient: int
    remainder: int

    def __post_init__(self):
        if self.small < 1 or self.big <= self.small:
            raise DomainError(f"need big > small >= 1, got ({self.big}, {self.small})")
        q, r = divmod(self.big, self.small)
        if (q, r) != (self.quotient, self.remainder):
            raise DomainError(
                f"{self.big} = {q}*{self.small} + {r}, not "
                f"{self.quotient}*{self.small} + {self.remainder}"
            )
        if r == 0:
            raise DomainError(f"{self.small} divides {self.big}; transforms are undefined")

    @classmethod
    def of(cls, big: int, small: int) -> "TransformContext":
        if small < 1 or big <= small:
            raise DomainError(f"need big > small >= 1, got ({big}, {small})")
        q, r = divmod(big, small)
        if r == 0:
            raise DomainError(f"{small} divides {big}; transforms are undefined")
        return cls(big, small, q, r)


def _high_positions(parts: tuple[int, ...], ctx: TransformContext) -> list[int]:
    """1-based positions of the (quotient+1)-valued parts of a two-valued profile."""
    if len(parts) != ctx.small:
        raise PatternError(f"expected {ctx.small} parts, got {len(parts)}")
    q = ctx.quotient
    high = []
    for i, v in enumerate(parts, start=1):
        if v == q + 1:
            high.append(i)
        elif v != q:
            raise PatternError(f"part {i} is {v}; the pattern allows only {q} or {q + 1}")
    if len(high) != ctx.remainder:
        raise PatternError(
            f"{len(high)} parts equal {q + 1}; the pattern needs exactly {ctx.remainder}"
        )
    return high


# Lean tuple-level transforms.  The Profile wrappers below are the public
# surface; lifting loops and sweeps call these directly.


def _left_runs(parts: tuple[int, ...], ctx: TransformContext) -> tuple[int, ...]:
    high = _high_positions(parts, ctx)
    if high[0] != 1:
        raise PatternError("a left-anchored pattern must open with a high part")
    runs = [high[j + 1] - high[j] for j in range(len(high) - 1)]
    runs.append(ctx.small - high[-1] + 1)
    return tuple(runs)


def _right_runs(parts: tuple[int, ...], ctx: TransformContext) -> tuple[int, ...]:
    high = _high_positions(parts, ctx)
    if high[-1] != ctx.small:
        raise PatternError("a right-anchored pattern must close with a high part")
    runs = [high[0]]
    runs.extend(high[j] - high[j - 1] for j in range(1, len(high)))
    return tuple(runs)


def _check_runs(runs: tuple[int, ...], ctx: TransformContext) -> None:
    if len(runs) != ctx.remainder:
        raise PatternError(f"expected {ctx.remainder} run lengths, got {len(runs)}")
    if any(g < 1 for g in runs):
        raise PatternError(f"run lengths must be positive: {runs}")
    if sum(runs) != ctx.small:
        raise PatternError(f"run lengths sum to {sum(runs)}, expected {ctx.small}")


def _left_pre(runs: tuple[int, ...], ctx: TransformContext) -> tuple[int, ...]:
    _check_runs(runs, ctx)
    out = [ctx.quotient] * ctx.small
    position = 1
    for g in runs:
        out[position - 1] = ctx.quotient + 1
        position += g
    return tuple(out)


def _right_pre(runs: tuple[int, ...], ctx: TransformContext) -> tuple[int, ...]:
    _check_runs(runs, ctx)
    out = [ctx.quotient] * ctx.small
    position = 0
    for g in runs:
        position += g
        out[position - 1] = ctx.quotient + 1
    return tuple(out)


def left_imbedded(n: Profile, ctx: TransformContext) -> Profile:
    """Run-length encoding of a two-valued profile anchored at its first part.

    The j-th output is the distance from the j-th high part to the next one
    (measured to the end of the profile for the last).  Inverse of
    :func:`left_presequence`.
    """
    return Profile(_left_runs(n.parts, ctx), ctx.small)


def left_presequence(m: Profile, ctx: TransformContext) -> Profile:
    """Plant high parts at 1 + (partial sums of the run lengths).

    Produces the unique left-anchored two-valued profile whose
    :func:`left_imbedded` encoding is ``m``.
    """
    return Profile(_left_pre(m.parts, ctx), ctx.big)


def right_imbedded(n: Profile, ctx: TransformContext) -> Profile:
    """Run-length encoding anchored at the last part: the j-th output is the
    length of the run ending at the j-th high part."""
    return Profile(_right_runs(n.parts, ctx), ctx.small)


def right_presequence(m: Profile, ctx: TransformContext) -> Profile:
    """Plant high parts at the inclusive partial sums of the run lengths;
    inverse of :func:`right_imbedded`."""
    return Profile(_right_pre(m.parts, ctx), ctx.big)


def compositions(total: int, count: int, min_first: int = 1) -> Iterator[tuple[int, ...]]:
    """All compositions of ``total`` into ``count`` positive parts with the
    first part at least ``min_first``, in lexicographically ascending order."""
    if count < 1 or total < count - 1 + min_first:
        return
    if count == 1:
        yield (total,)
        return
    for first in range(min_first, total - (count - 1) + 1):
        for rest in compositions(total - first, count - 1):
            yield (first,) + rest


def enumerate_profiles(m: int, k: int) -> Iterator[Profile]:
    """Every admissible block-size profile for (m, k), exactly once.

    Lexicographically ascending; the space has C(m-2, k-1) members.
    """
    check_domain(m, k)
    for parts in compositions(m, k, min_first=2):
        yield Profile(parts, m, first_part_floor=2)
