"""Greedy delay sequences and exact coverage arithmetic.

A profile expands into fiber delays block by block: the first block is
1, 2, ..., n1, and each later block grows linearly from twice the previous
block's closing delay, with slope one more than the running sum of closing
delays.  That running sum is exactly the largest D such that every delay in
0..D is realizable from the prefix with the stated recirculation budget, so
the closing-delay sums double as the coverage bound B.

All arithmetic is plain Python ints: the delays grow geometrically (seven
digits already at 26 fibers) and exact comparisons are the whole point.
"""

from collections.abc import Sequence
from dataclasses import dataclass

from .errors import DomainError
from .profiles import Profile


@dataclass(frozen=True)
class Construction:
    """A profile together with its expanded delays and per-block bounds.

    ``block_bounds`` holds the cumulative block ends s0=0, s1, ..., sk;
    ``block_B`` holds the coverage bound after each block, i.e. the sum of
    the closing delays of blocks 1..i.
    """

    profile: Profile
    delays: tuple[int, ...]
    block_bounds: tuple[int, ...]
    block_B: tuple[int, ...]


def _require_design(profile: Profile) -> tuple[int, ...]:
    parts = profile.parts
    if parts[0] < 2:
        raise DomainError(f"first block must hold at least two fibers, got {parts[0]}")
    return parts


def _closed_form_B(parts: Sequence[int]) -> int:
    """Coverage bound of the greedy expansion of ``parts``, without
    materializing the delay list."""
    closing = parts[0]
    total = parts[0]
    for count in parts[1:]:
        closing = 2 * closing + (count - 1) * (total + 1)
        total += closing
    return total


def build_construction(profile: Profile) -> Construction:
    """Expand a profile into its greedy delay sequence.

    >>> build_construction(Profile((2, 1), 3, 2)).delays
    (1, 2, 4)
    """
    parts = _require_design(profile)
    delays = list(range(1, parts[0] + 1))
    bounds = [0, parts[0]]
    block_b = [parts[0]]
    for count in parts[1:]:
        base = 2 * delays[-1]
        step = block_b[-1] + 1
        delays.extend(base + j * step for j in range(count))
        bounds.append(bounds[-1] + count)
        block_b.append(block_b[-1] + delays[-1])
    return Construction(
        profile=profile,
        delays=tuple(delays),
        block_bounds=tuple(bounds),
        block_B=tuple(block_b),
    )


def max_representable(profile: Profile) -> int:
    """Largest D such that every delay in 0..D is realizable from the greedy
    expansion of ``profile`` within its recirculation budget."""
    return _closed_form_B(_require_design(profile))


def prefix_B(profile: Profile, i: int, j: int) -> int:
    """Coverage bound of the prefix ending j fibers into block i+1.

    ``i`` counts completed blocks (0 <= i <= k-1) and ``j`` indexes into the
    next block (1 <= j <= its size).  For i = 0 the bound is simply j.
    """
    parts = _require_design(profile)
    k = len(parts)
    if not 0 <= i <= k - 1:
        raise IndexError(f"block index {i} outside [0, {k - 1}]")
    if not 1 <= j <= parts[i]:
        raise IndexError(f"offset {j} outside [1, {parts[i]}] for block {i + 1}")
    if i == 0:
        return j
    built = build_construction(profile)
    s_i = built.block_bounds[i]
    return built.delays[s_i + j - 1] + built.block_B[i - 1]


def subset_sum_B(delays: Sequence[int], k: int) -> int:
    """Largest B such that every integer in 0..B is a sum of at most ``k``
    distinct entries of ``delays``.

    Independent of the greedy closed forms: a bitset dynamic program collects
    all reachable subset sums by cardinality and then measures the unbroken
    run upward from zero.  Returns 0 when even 1 is unreachable.
    """
    if k < 1:
        raise DomainError(f"recirculation budget must be at least 1, got {k}")
    entries = list(delays)
    if not entries:
        raise DomainError("delays must be non-empty")
    if any(not isinstance(d, int) or d < 1 for d in entries):
        raise DomainError(f"delays must be positive integers: {entries}")
    if len(set(entries)) != len(entries):
        raise DomainError("delays must be distinct")
    reach = [0] * (min(k, len(entries)) + 1)
    reach[0] = 1  # bit t set <=> t is a sum of exactly that many entries
    for d in entries:
        for size in range(len(reach) - 1, 0, -1):
            reach[size] |= reach[size - 1] << d
    union = 0
    for mask in reach:
        union |= mask
    lowest_gap = ((union + 1) & ~union).bit_length() - 1
    return lowest_gap - 1
