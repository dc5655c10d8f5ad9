"""Remainder/quotient ladder of Euclid's algorithm.

Every other module keys its indexing off this ladder, so the trace keeps the
whole chain r[-1]=m, r[0]=k, ..., r[N]=0 instead of just the gcd.
"""

from dataclasses import dataclass

from .errors import DomainError


@dataclass(frozen=True)
class EuclidTrace:
    """Division ladder for (m, k): r[i-2] = q[i] * r[i-1] + r[i]."""

    m: int
    k: int
    remainders: tuple[int, ...]  # r[-1], r[0], ..., r[N]; r[N] == 0
    quotients: tuple[int, ...]  # q[1], ..., q[N]
    depth: int  # N
    gcd: int  # r[N-1]

    def r(self, i: int) -> int:
        """Remainder r[i], valid for i in -1..depth."""
        return self.remainders[i + 1]


def check_domain(m: int, k: int) -> None:
    """Reject (m, k) outside m >= 2, 1 <= k <= m - 1."""
    if not isinstance(m, int) or not isinstance(k, int):
        raise DomainError(f"m and k must be integers, got m={m!r}, k={k!r}")
    if m < 2:
        raise DomainError(f"need at least 2 fibers, got m={m}")
    if not 1 <= k <= m - 1:
        raise DomainError(f"recirculation bound k={k} outside [1, {m - 1}] for m={m}")


def euclid_trace(m: int, k: int) -> EuclidTrace:
    """Run Euclid's algorithm on (m, k) and keep the full ladder.

    >>> euclid_trace(11, 3).remainders
    (11, 3, 2, 1, 0)
    """
    check_domain(m, k)
    remainders = [m, k]
    quotients: list[int] = []
    while remainders[-1] != 0:
        q, r = divmod(remainders[-2], remainders[-1])
        quotients.append(q)
        remainders.append(r)
    return EuclidTrace(
        m=m,
        k=k,
        remainders=tuple(remainders),
        quotients=tuple(quotients),
        depth=len(quotients),
        gcd=remainders[-2],
    )
