"""Independent verification machinery.

Everything here checks the optimizer from the outside: a brute force that
enumerates the whole profile space, per-block delta ladders between two
constructions, and executable forms of the pairwise-comparison rules that
drive the optimality argument.  Sweep generators replay those checks across
whole parameter ranges, yielding one record per case so callers can stream
reports or just count violations.
"""

import random
from collections.abc import Iterator
from dataclasses import dataclass
from typing import NamedTuple

from .construction import _closed_form_B, build_construction, max_representable
from .errors import CapExceededError, DomainError
from .euclid import check_domain, euclid_trace
from .optimizer import DesignResult, Ordering, design, lift_sequence
from .profiles import (
    Profile,
    TransformContext,
    _left_pre,
    _left_runs,
    _right_pre,
    _right_runs,
    compositions,
    enumerate_profiles,
)

DEFAULT_BRUTE_CAP = 22


@dataclass(frozen=True)
class OptimalSet:
    """Exhaustive argmax of the coverage bound over one profile space."""

    m: int
    k: int
    best_B: int
    argmax: tuple[Profile, ...]  # lexicographic order
    space_size: int


@dataclass(frozen=True)
class StageDiff:
    """Per-block deltas between two constructions over the same space.

    ``alpha[i-1]`` is the difference of the closing delays of block i;
    ``beta[i]`` the difference of the coverage bounds after block i, with
    beta[0] = 0.  The chain beta[i] = alpha[i-1] + beta[i-1] holds block by
    block, so beta[-1] is the total coverage difference.
    """

    alpha: tuple[int, ...]
    beta: tuple[int, ...]


class RuleCheck(NamedTuple):
    """One replay of a unit-swap comparison rule.

    ``predicted`` is the ordering of the sequence against its swapped variant
    that the rule demands; ``observed`` is what exact arithmetic says.
    """

    rule: str  # "A" (odd level) or "B" (even level)
    m: int
    k: int
    level: int
    parts: tuple[int, ...]
    index: int  # 1-based position of the descending-by-one pair
    case: str  # boundary | inner_mirror_less | inner_mirror_greater | full_mirror
    predicted: Ordering
    observed: Ordering

    @property
    def ok(self) -> bool:
        return self.predicted is self.observed

    @property
    def verdict(self) -> str | None:
        """Confirms<ordering> when the rule's prediction held, else None."""
        return f"Confirms{self.observed.value}" if self.ok else None

    def line(self) -> str:
        parts = ",".join(str(p) for p in self.parts)
        status = "OK" if self.ok else "FAIL"
        return (
            f"({self.m},{self.k}) h={self.level} n={parts} a={self.index} "
            f"case={self.case} predicted={self.predicted.value} "
            f"observed={self.observed.value} {status}"
        )


class CheckResult(NamedTuple):
    """One case of a non-rule sweep (gap lemmas, growth, round-trips, ...)."""

    suite: str
    m: int
    k: int
    level: int
    subject: str
    predicted: str
    observed: str

    @property
    def ok(self) -> bool:
        return self.predicted == self.observed

    def line(self) -> str:
        status = "OK" if self.ok else "FAIL"
        return (
            f"({self.m},{self.k}) h={self.level} {self.subject} "
            f"predicted={self.predicted} observed={self.observed} {status}"
        )


def brute_force_optimal(m: int, k: int, cap: int = DEFAULT_BRUTE_CAP) -> OptimalSet:
    """Exhaustive argmax over every admissible profile for (m, k).

    Refuses m above ``cap``: the space has C(m-2, k-1) members and the point
    of this oracle is to stay honestly exhaustive, not fast.
    """
    check_domain(m, k)
    if m > cap:
        raise CapExceededError(m, cap)
    best = -1
    argmax: list[Profile] = []
    count = 0
    for profile in enumerate_profiles(m, k):
        count += 1
        b = _closed_form_B(profile.parts)
        if b > best:
            best = b
            argmax = [profile]
        elif b == best:
            argmax.append(profile)
    return OptimalSet(m=m, k=k, best_B=best, argmax=tuple(argmax), space_size=count)


def agrees_with_design(result: DesignResult, optimum: OptimalSet) -> bool:
    """Whether the exhaustive argmax matches the candidate set: exact equality
    when gcd is 1 or 2, a non-empty subset of the two candidates otherwise."""
    argmax = {p.parts for p in optimum.argmax}
    candidates = {p.parts for p in result.candidates()}
    if result.trace.gcd <= 2:
        return argmax == candidates
    return bool(argmax) and argmax <= candidates


def verify_design(m: int, k: int, cap: int = DEFAULT_BRUTE_CAP) -> tuple[DesignResult, OptimalSet, bool]:
    """Run both the constructive search and the brute force, and compare."""
    result = design(m, k)
    optimum = brute_force_optimal(m, k, cap=cap)
    return result, optimum, agrees_with_design(result, optimum)


def stagewise_diff(a: Profile, b: Profile) -> StageDiff:
    """Per-block closing-delay and coverage deltas between two profiles."""
    if a.context_total != b.context_total or len(a.parts) != len(b.parts):
        raise DomainError(
            f"profiles live in different spaces: "
            f"({a.context_total}, {len(a.parts)}) vs ({b.context_total}, {len(b.parts)})"
        )
    ca, cb = build_construction(a), build_construction(b)
    k = len(a.parts)
    alpha = tuple(
        ca.delays[ca.block_bounds[i] - 1] - cb.delays[cb.block_bounds[i] - 1]
        for i in range(1, k + 1)
    )
    beta = (0,) + tuple(ca.block_B[i] - cb.block_B[i] for i in range(k))
    return StageDiff(alpha=alpha, beta=beta)


def _unit_swap(parts: tuple[int, ...], a: int) -> tuple[int, ...]:
    """Move one unit from position a to position a+1 (1-based)."""
    return parts[: a - 1] + (parts[a - 1] - 1, parts[a] + 1) + parts[a + 1 :]


def _classify_unit_swap(parts: tuple[int, ...], a: int, rule: str) -> tuple[str, Ordering]:
    """Case tag and predicted ordering of ``parts`` against its unit swap.

    The scan mirrors outward around the descending pair; the first unequal
    mirror pair decides the case.  Rule A predictions apply at odd levels,
    rule B swaps every direction at even levels.
    """
    r = len(parts)
    win, lose = (Ordering.GREATER, Ordering.LESS) if rule == "A" else (Ordering.LESS, Ordering.GREATER)
    if a == 1 or a == r - 1:
        return "boundary", win
    for j in range(1, min(a - 1, r - a - 1) + 1):
        left, right = parts[a - j - 1], parts[a + j]
        if left == right:
            continue
        spans_all = a - j == 1 and a + 1 + j == r
        if left < right:
            if rule == "A":
                return "inner_mirror_less", win
            equal = spans_all and parts[0] == parts[-1] - 1
            return "inner_mirror_less", Ordering.EQUAL if equal else lose
        if rule == "A":
            equal = spans_all and parts[0] == parts[-1] + 1
            return "inner_mirror_greater", Ordering.EQUAL if equal else lose
        return "inner_mirror_greater", win
    return "full_mirror", win


def _ordering_of(b_left: int, b_right: int) -> Ordering:
    if b_left < b_right:
        return Ordering.LESS
    if b_left > b_right:
        return Ordering.GREATER
    return Ordering.EQUAL


def _check_pair_index(parts: tuple[int, ...], a: int) -> None:
    if not 1 <= a <= len(parts) - 1:
        raise DomainError(f"index a={a} outside [1, {len(parts) - 1}]")
    if parts[a - 1] - parts[a] != 1:
        raise DomainError(
            f"rule applies only to an adjacent descending-by-one pair; "
            f"parts {a},{a + 1} are {parts[a - 1]},{parts[a]}"
        )


def check_comparison_rule_A(n: Profile, a: int) -> RuleCheck:
    """Replay the odd-level unit-swap rule on a top-level profile.

    Requires parts a, a+1 to descend by exactly one, and the first part to be
    at least 3 when a == 1 (the swap must stay inside the profile space).
    """
    parts = n.parts
    if parts[0] < 2:
        raise DomainError("rule A at level 1 needs a profile with first part >= 2")
    _check_pair_index(parts, a)
    if a == 1 and parts[0] < 3:
        raise DomainError("a swap at the first block needs a first part >= 3")
    case, predicted = _classify_unit_swap(parts, a, "A")
    observed = _ordering_of(_closed_form_B(parts), _closed_form_B(_unit_swap(parts, a)))
    return RuleCheck("A", n.context_total, len(parts), 1, parts, a, case, predicted, observed)


def check_comparison_rule_B(n: Profile, a: int, m: int, k: int) -> RuleCheck:
    """Replay the even-level unit-swap rule on a level-2 sequence for (m, k).

    The sequence and its swap are both lifted to level 1 before comparing,
    since the ordering at every level is defined through the lift.
    """
    trace = euclid_trace(m, k)
    if trace.depth < 2:
        raise DomainError(f"({m}, {k}) has no level-2 sequences: k divides m")
    parts = n.parts
    if len(parts) != trace.r(1) or n.context_total != trace.r(0):
        raise DomainError(
            f"level-2 sequences for ({m}, {k}) have {trace.r(1)} parts summing "
            f"to {trace.r(0)}, got {len(parts)} summing to {n.context_total}"
        )
    _check_pair_index(parts, a)
    case, predicted = _classify_unit_swap(parts, a, "B")
    ctx = TransformContext.of(m, k)
    observed = _ordering_of(
        _closed_form_B(_left_pre(parts, ctx)),
        _closed_form_B(_left_pre(_unit_swap(parts, a), ctx)),
    )
    return RuleCheck("B", m, k, 2, parts, a, case, predicted, observed)


# ---------------------------------------------------------------------------
# Sweeps.  Each yields one record per checked case.


def sweep_comparison_rule_A(max_m: int) -> Iterator[RuleCheck]:
    """Every applicable (profile, index) pair for every (m, k) with m <= max_m."""
    for m in range(2, max_m + 1):
        for k in range(2, m):
            cache: dict[tuple[int, ...], int] = {}

            def b_of(t: tuple[int, ...]) -> int:
                b = cache.get(t)
                if b is None:
                    b = cache[t] = _closed_form_B(t)
                return b

            for parts in compositions(m, k, min_first=2):
                for a in range(1, k):
                    if parts[a - 1] - parts[a] != 1:
                        continue
                    if a == 1 and parts[0] < 3:
                        continue
                    case, predicted = _classify_unit_swap(parts, a, "A")
                    observed = _ordering_of(b_of(parts), b_of(_unit_swap(parts, a)))
                    yield RuleCheck("A", m, k, 1, parts, a, case, predicted, observed)


def sweep_comparison_rule_B(max_m: int) -> Iterator[RuleCheck]:
    """Every applicable level-2 (sequence, index) pair for every (m, k) with
    m <= max_m.  Coverage bounds of the lifted sequences are cached per space;
    a swapped sequence always lives in the same space."""
    for m in range(5, max_m + 1):
        for k in range(3, m):
            r1 = m % k
            if r1 < 2:
                continue
            ctx = TransformContext.of(m, k)
            cache: dict[tuple[int, ...], int] = {}

            def b_of(t: tuple[int, ...]) -> int:
                b = cache.get(t)
                if b is None:
                    b = cache[t] = _closed_form_B(_left_pre(t, ctx))
                return b

            for parts in compositions(k, r1):
                for a in range(1, r1):
                    if parts[a - 1] - parts[a] != 1:
                        continue
                    case, predicted = _classify_unit_swap(parts, a, "B")
                    observed = _ordering_of(b_of(parts), b_of(_unit_swap(parts, a)))
                    yield RuleCheck("B", m, k, 2, parts, a, case, predicted, observed)


def _random_composition(rng: random.Random, total: int, count: int) -> tuple[int, ...]:
    """Uniform composition of ``total`` into ``count`` positive parts."""
    if count == 1:
        return (total,)
    cuts = sorted(rng.sample(range(1, total), count - 1))
    previous = 0
    parts = []
    for c in cuts + [total]:
        parts.append(c - previous)
        previous = c
    return tuple(parts)


def _gap_eligible(max_m: int, level: int) -> list[tuple[int, ...]]:
    """(m, k, total, count) instances whose level-``level`` space has at least
    two parts, so an adjacent gap can exist."""
    eligible = []
    for m in range(4, max_m + 1):
        for k in range(2, m):
            trace = euclid_trace(m, k)
            if trace.depth < level or trace.r(level - 1) < 2:
                continue
            eligible.append((m, k, trace.r(level - 2), trace.r(level - 1)))
    return eligible


def sweep_adjacent_gap(
    max_m: int, level: int = 1, samples: int = 1000, seed: int = 0
) -> Iterator[CheckResult]:
    """Seeded random replay of the adjacent-gap smoothing lemmas.

    Wherever two adjacent parts differ by at least two, moving one unit
    across the gap never lowers the coverage bound; it strictly raises it in
    one direction, and in the other it ties only for a two-part sequence
    whose gap is exactly two.  Odd levels and even levels trade directions.
    """
    eligible = _gap_eligible(max_m, level)
    if not eligible:
        return
    rng = random.Random(seed)
    suite = f"gap-{'I' if level % 2 == 1 else 'II'}"
    produced = 0
    while produced < samples:
        m, k, total, count = rng.choice(eligible)
        if level == 1:
            parts = _random_composition(rng, total - 1, count)
            parts = (parts[0] + 1,) + parts[1:]
        else:
            parts = _random_composition(rng, total, count)
        spots = [a for a in range(1, count) if abs(parts[a - 1] - parts[a]) >= 2]
        if not spots:
            continue
        a = rng.choice(spots)
        diff = parts[a - 1] - parts[a]
        trace = euclid_trace(m, k)
        # Smooth towards the smaller side.  The tie can only happen on a
        # two-part sequence whose gap is exactly two, and only in the weak
        # direction for the level's parity.
        if diff >= 2:
            swapped = _unit_swap(parts, a)
            ties = level % 2 == 1 and diff == 2 and count == 2
        else:
            swapped = parts[: a - 1] + (parts[a - 1] + 1, parts[a] - 1) + parts[a + 1 :]
            ties = level % 2 == 0 and diff == -2 and count == 2
        predicted = "B'=B" if ties else "B'>B"
        b = _closed_form_B(lift_sequence(trace, parts, level)[1])
        b_swapped = _closed_form_B(lift_sequence(trace, swapped, level)[1])
        if b_swapped > b:
            observed = "B'>B"
        elif b_swapped == b:
            observed = "B'=B"
        else:
            observed = "B'<B"
        subject = f"n={','.join(map(str, parts))} a={a}"
        yield CheckResult(suite, m, k, level, subject, predicted, observed)
        produced += 1


def sweep_growth(max_m: int) -> Iterator[CheckResult]:
    """Every block's opening growth bound, for every profile with m <= max_m:
    the closing delay of block i+1 exceeds the block-i coverage bound plus one."""
    for m in range(2, max_m + 1):
        for k in range(1, m):
            for profile in enumerate_profiles(m, k):
                built = build_construction(profile)
                observed = "holds"
                for i in range(k):
                    closing = built.delays[built.block_bounds[i + 1] - 1]
                    bound = built.block_B[i - 1] if i >= 1 else 0
                    if closing <= bound + 1:
                        observed = f"fails at block {i + 1}"
                        break
                yield CheckResult(
                    "growth", m, k, 1, f"n={profile.text()}", "holds", observed
                )


def sweep_roundtrip(max_m: int) -> Iterator[CheckResult]:
    """Both run-length encodings inverted over every patterned sequence for
    every (m, k) with a nonzero remainder, m <= max_m."""
    for m in range(3, max_m + 1):
        for k in range(2, m):
            if m % k == 0:
                continue
            ctx = TransformContext.of(m, k)
            for runs in compositions(k, ctx.remainder):
                left = _left_pre(runs, ctx)
                observed = "inverts" if _left_runs(left, ctx) == runs else "broken"
                yield CheckResult(
                    "roundtrip", m, k, 1,
                    f"L runs={','.join(map(str, runs))}", "inverts", observed,
                )
                right = _right_pre(runs, ctx)
                observed = "inverts" if _right_runs(right, ctx) == runs else "broken"
                yield CheckResult(
                    "roundtrip", m, k, 1,
                    f"R runs={','.join(map(str, runs))}", "inverts", observed,
                )


def sweep_optima_structure(max_m: int, cap: int = DEFAULT_BRUTE_CAP) -> Iterator[CheckResult]:
    """Structural facts about every exhaustive optimum with m <= max_m.

    When k does not divide m, each optimum must be two-valued with the high
    part leading, and (when a nontrivial level 2 exists) its run-length
    encoding must again be two-valued with the high part trailing.
    """
    for m in range(2, max_m + 1):
        for k in range(2, m):
            trace = euclid_trace(m, k)
            if trace.r(1) == 0:
                continue
            q1 = trace.quotients[0]
            ctx = TransformContext.of(m, k)
            optimum = brute_force_optimal(m, k, cap=max(cap, max_m))
            for profile in optimum.argmax:
                parts = profile.parts
                highs = [i for i, v in enumerate(parts, 1) if v == q1 + 1]
                level1_ok = (
                    all(v in (q1, q1 + 1) for v in parts)
                    and len(highs) == trace.r(1)
                    and parts[0] == q1 + 1
                )
                yield CheckResult(
                    "structure", m, k, 1,
                    f"n={profile.text()} two-valued, high part first",
                    "holds", "holds" if level1_ok else "violated",
                )
                if not level1_ok or trace.depth < 2 or trace.r(1) < 2 or trace.r(2) == 0:
                    continue
                runs = _left_runs(parts, ctx)
                q2 = trace.quotients[1]
                high2 = [g for g in runs if g == q2 + 1]
                level2_ok = (
                    all(g in (q2, q2 + 1) for g in runs)
                    and len(high2) == trace.r(2)
                    and runs[-1] == q2 + 1
                )
                yield CheckResult(
                    "structure", m, k, 2,
                    f"runs={','.join(map(str, runs))} two-valued, high part last",
                    "holds", "holds" if level2_ok else "violated",
                )


def sweep_stage_chain(
    max_m: int, samples: int = 1000, seed: int = 0
) -> Iterator[CheckResult]:
    """Seeded random pairs: the block-delta chain telescopes to the total
    coverage difference, and each beta step equals alpha plus the previous."""
    rng = random.Random(seed)
    for _ in range(samples):
        m = rng.randint(4, max_m)
        k = rng.randint(2, m - 1)
        pa = _random_composition(rng, m - 1, k)
        pa = (pa[0] + 1,) + pa[1:]
        pb = _random_composition(rng, m - 1, k)
        pb = (pb[0] + 1,) + pb[1:]
        a = Profile(pa, m, first_part_floor=2)
        b = Profile(pb, m, first_part_floor=2)
        diff = stagewise_diff(a, b)
        chain_ok = all(
            diff.beta[i] == diff.alpha[i - 1] + diff.beta[i - 1]
            for i in range(1, len(diff.beta))
        )
        total_ok = diff.beta[-1] == max_representable(a) - max_representable(b)
        observed = "holds" if chain_ok and total_ok else "violated"
        yield CheckResult(
            "stage-chain", m, k, 1, f"a={a.text()} b={b.text()}", "holds", observed
        )


def lemma_suites(
    max_m: int = 10,
    seed: int = 0,
    samples: int = 1000,
    brute_cap: int = DEFAULT_BRUTE_CAP,
) -> list[tuple[str, Iterator]]:
    """The standard verification bundle, as (name, record generator) pairs."""
    return [
        ("rule-A", sweep_comparison_rule_A(max_m)),
        ("rule-B", sweep_comparison_rule_B(max_m)),
        ("gap-I", sweep_adjacent_gap(max_m, level=1, samples=samples, seed=seed)),
        ("gap-II", sweep_adjacent_gap(max_m, level=2, samples=samples, seed=seed)),
        ("growth", sweep_growth(max_m)),
        ("roundtrip", sweep_roundtrip(max_m)),
        ("structure", sweep_optima_structure(max_m, cap=brute_cap)),
        ("stage-chain", sweep_stage_chain(max_m, samples=samples, seed=seed)),
    ]
