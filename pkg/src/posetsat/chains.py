"""Internally disjoint complete chains and the upper/lower lanterns built from them."""
from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass
from functools import cached_property

from .errors import InfeasibleError, UsageError
from .sets import fmt, from_elements, interval, sort_key

UPPER = "upper"
LOWER = "lower"


@dataclass(frozen=True)
class Chain:
    sets: tuple[int, ...]

    def __post_init__(self):
        if not self.sets:
            raise UsageError("a chain needs at least one set")
        for a, b in zip(self.sets, self.sets[1:]):
            if a & b != a or a == b:
                raise UsageError(f"{fmt(a)} is not a proper subset of {fmt(b)}")

    @property
    def base(self) -> int:
        return self.sets[0]

    @property
    def top(self) -> int:
        return self.sets[-1]

    @property
    def internal(self) -> tuple[int, ...]:
        return self.sets[1:-1]

    def is_complete(self) -> bool:
        gap = (self.top & ~self.base).bit_count()
        return len(self.sets) == gap + 1

    def __len__(self):
        return len(self.sets)


def disjoint_chains(A: int, B: int, order: Sequence[int]) -> list[Chain]:
    """The k = |B \\ A| cyclic chains from A to B.

    ``order`` lists the elements x_1..x_k of B \\ A; chain i adds
    x_i, x_{i+1}, ..., x_{i-1} (indices mod k). Any two chains meet only in A and B.
    With A == B the single one-set chain (A,) is returned.
    """
    if A & B != A:
        raise UsageError(f"{fmt(A)} is not a subset of {fmt(B)}")
    diff = B & ~A
    if from_elements(order) != diff or len(order) != diff.bit_count():
        raise UsageError("order must be a permutation of B \\ A")
    k = len(order)
    if k == 0:
        return [Chain((A,))]
    bits = [1 << (x - 1) for x in order]
    chains = []
    for i in range(k):
        cur = A
        sets = [cur]
        for d in range(k):
            cur |= bits[(i + d) % k]
            sets.append(cur)
        chains.append(Chain(tuple(sets)))
    return chains


def increment_sets(chains: Sequence[Chain]) -> tuple[int, int]:
    """(first, last) increment sets of a bundle of complete chains from a common A to B."""
    if not chains:
        raise UsageError("need at least one chain")
    A, B = chains[0].base, chains[0].top
    for c in chains:
        if c.base != A or c.top != B:
            raise UsageError("chains must share both endpoints")
        if not c.is_complete():
            raise UsageError("chains must be complete")
    if (B & ~A).bit_count() < len(chains) or len(chains[0]) < 2:
        raise UsageError("|B \\ A| must be at least the number of chains")
    first = 0
    last_common = B
    for c in chains:
        first |= c.sets[1]
        last_common &= c.sets[-2]
    return first & ~A, B & ~last_common


@dataclass(frozen=True)
class Lantern:
    """A bundle of internally disjoint complete chains from ``base`` to ``top``."""

    base: int
    top: int
    chains: tuple[Chain, ...]
    kind: str
    first_increment: int
    last_increment: int

    def __post_init__(self):
        seen = {}
        for ci, c in enumerate(self.chains):
            if c.base != self.base or c.top != self.top or not c.is_complete():
                raise UsageError("lantern chains must be complete and share the lantern's endpoints")
            for a in c.internal:
                if a in seen:
                    raise UsageError(f"chains {seen[a]} and {ci} share the internal set {fmt(a)}")
                seen[a] = ci

    @cached_property
    def members(self) -> tuple[int, ...]:
        out = {self.base, self.top}
        for c in self.chains:
            out.update(c.internal)
        return tuple(sorted(out, key=sort_key))

    def level(self, size: int) -> list[int]:
        """Internal sets of the given cardinality, one per chain."""
        d = size - self.base.bit_count()
        return [c.sets[d] for c in self.chains if 0 < d < len(c) - 1]

    def meets_increment_rule(self, s: int, t: int) -> bool:
        if self.kind == UPPER:
            return self.last_increment == interval(s + t + 1, 2 * s + t - 1)
        return self.first_increment == interval(s + t + 1, s + 2 * t - 1)


def _check_lantern_args(A: int, s: int, t: int, n: int) -> None:
    if not s >= t >= 2:
        raise UsageError(f"lanterns need s >= t >= 2, got s={s}, t={t}")
    if n < 2 * s + t - 1:
        raise InfeasibleError(f"n={n} < 2s+t-1={2 * s + t - 1}: not enough room for the chains")
    if A & ~interval(1, s + t):
        raise UsageError(f"base {fmt(A)} must lie in [{s + t}]")


def _lantern(A, s, t, n, kind, picks, order):
    tail = list(range(s + t + 1, n + 1)) if order is None else list(order)
    if sorted(tail) != list(range(s + t + 1, n + 1)):
        raise UsageError(f"order must be a permutation of [{s + t + 1}, {n}]")
    B = A | interval(s + t + 1, n)
    bundle = disjoint_chains(A, B, tail)
    k = len(bundle)
    chosen = tuple(bundle[(i - 1) % k] for i in picks)
    first, last = increment_sets(chosen)
    return Lantern(A, B, chosen, kind, first, last)


def upper_lantern(A: int, s: int, t: int, n: int, order: Sequence[int] | None = None) -> Lantern:
    """Upper s-lantern: s-1 chains from A to A ∪ [s+t+1, n] ending with [s+t+1, 2s+t-1].

    With the natural order x_j = s+t+j, chain C_i adds x_{i-1} last, so chains
    C_2..C_s (indices mod k) have last increments x_1..x_{s-1}. Passing a
    different ``order`` permutes the x_j and generally breaks that property.
    """
    _check_lantern_args(A, s, t, n)
    return _lantern(A, s, t, n, UPPER, range(2, s + 1), order)


def lower_lantern(A: int, s: int, t: int, n: int, order: Sequence[int] | None = None) -> Lantern:
    """Lower t-lantern: t-1 chains from A to A ∪ [s+t+1, n] starting with [s+t+1, s+2t-1]."""
    _check_lantern_args(A, s, t, n)
    return _lantern(A, s, t, n, LOWER, range(1, t), order)
