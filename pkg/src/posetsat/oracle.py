"""Exact induced saturation numbers for tiny n by exhaustive search.

Families are bitmasks over the 2^n subsets of [n] (the index of a set is its
own mask value), so adding or removing a set is one bit operation and the
generic detector runs directly on a precomputed comparability table of the
whole cube.

A family is induced P-saturated iff it is a maximal induced P-free family.
The search adds sets in colex order, only ever keeping free families, and
tests maximality at the leaves. Iterative deepening on the family size makes
the first size with a saturated leaf the exact minimum.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from .errors import UsageError
from .poset import Poset, embed
from .sets import Family, comparability_masks

MAX_ORACLE_N = 5
DEFAULT_WITNESS_CAP = 1000
DEFAULT_BUDGET = 5_000_000


@dataclass
class ExactResult:
    n: int
    poset: Poset
    value: int | None
    exact: bool
    lower_bound: int
    witnesses: list[Family] = field(default_factory=list)
    witness_cap: int = DEFAULT_WITNESS_CAP
    truncated: bool = False
    nodes: int = 0

    @property
    def exhausted(self) -> bool:
        return not self.exact


class _BudgetExhausted(Exception):
    pass


@lru_cache(maxsize=8)
def _cube(n: int):
    sets = list(range(1 << n))
    return sets, comparability_masks(sets)


class _Cube:
    def __init__(self, n: int, p: Poset):
        self.n = n
        self.p = p
        self.sets, self.masks = _cube(n)
        self.size = len(self.sets)

    def copy_through(self, fam: int, a: int):
        allowed = fam | (1 << a)
        for v in range(self.p.size):
            images = embed(self.p, self.sets, self.masks, self.n, allowed=allowed, fixed={v: a})
            if images is not None:
                return images
        return None

    def can_add(self, fam: int, a: int) -> bool:
        return self.copy_through(fam, a) is None

    def is_maximal(self, fam: int) -> bool:
        for a in range(self.size):
            if not (fam >> a) & 1 and self.copy_through(fam, a) is None:
                return False
        return True

    def forced(self) -> int:
        """Sets lying in no copy of P anywhere in the cube: every saturated family contains them."""
        every = (1 << self.size) - 1
        out = 0
        for a in range(self.size):
            if self.copy_through(every & ~(1 << a), a) is None:
                out |= 1 << a
        return out

    def to_family(self, fam: int) -> Family:
        return Family.of(self.n, (a for a in range(self.size) if (fam >> a) & 1))

    def greedy(self, start: int) -> int:
        fam = start
        for a in range(self.size):
            if not (fam >> a) & 1 and self.can_add(fam, a):
                fam |= 1 << a
        return fam


def _check_n(n: int, cap: int) -> None:
    if not isinstance(n, int) or not 1 <= n <= cap:
        raise UsageError(f"exact search supports 1 <= n <= {cap}, got {n!r}")


def exact_sat_star(
    n: int, p: Poset, budget: int = DEFAULT_BUDGET, witness_cap: int = DEFAULT_WITNESS_CAP
) -> ExactResult:
    """Smallest induced ``p``-saturated family in 2^[n], with the minimizers found.

    ``budget`` bounds the number of search nodes; when it runs out the result
    carries ``exact=False``, the best size found (at worst a greedy maximal
    family) and the size up to which the search was complete.
    """
    _check_n(n, MAX_ORACLE_N)
    cube = _Cube(n, p)
    forced = cube.forced()
    rest = [a for a in range(cube.size) if not (forced >> a) & 1]
    base = forced.bit_count()
    nodes = 0
    found: list[int] = []
    truncated = False

    def dfs(start: int, fam: int, need: int) -> None:
        nonlocal nodes, truncated
        nodes += 1
        if nodes > budget:
            raise _BudgetExhausted
        if need == 0:
            if cube.is_maximal(fam):
                if len(found) < witness_cap:
                    found.append(fam)
                else:
                    truncated = True
            return
        for j in range(start, len(rest) - need + 1):
            a = rest[j]
            if cube.can_add(fam, a):
                dfs(j + 1, fam | (1 << a), need - 1)

    k = base
    try:
        while k <= cube.size:
            dfs(0, forced, k - base)
            if found:
                break
            k += 1
    except _BudgetExhausted:
        best = cube.greedy(forced).bit_count()
        if found:
            best = min(best, k)
        return ExactResult(
            n, p, best, False, k,
            [cube.to_family(f) for f in found], witness_cap, True, nodes,
        )
    return ExactResult(
        n, p, k, True, k, [cube.to_family(f) for f in found], witness_cap, truncated, nodes
    )


def enumerate_saturated(n: int, p: Poset, size_cap: int, budget: int = DEFAULT_BUDGET) -> list[Family]:
    """All induced ``p``-saturated families of 2^[n] with at most ``size_cap`` members.

    Sorted by size, then lexicographically by canonical member order.
    """
    _check_n(n, 4)
    cube = _Cube(n, p)
    forced = cube.forced()
    rest = [a for a in range(cube.size) if not (forced >> a) & 1]
    out: list[int] = []
    nodes = 0

    def dfs(start: int, fam: int, count: int) -> None:
        nonlocal nodes
        nodes += 1
        if nodes > budget:
            raise UsageError(f"enumeration exceeded the node budget ({budget})")
        if cube.is_maximal(fam):
            out.append(fam)
            return
        if count == size_cap:
            return
        for j in range(start, len(rest)):
            a = rest[j]
            if cube.can_add(fam, a):
                dfs(j + 1, fam | (1 << a), count + 1)

    if forced.bit_count() <= size_cap:
        dfs(0, forced, forced.bit_count())
    fams = [cube.to_family(f) for f in out]
    fams.sort(key=lambda f: (len(f), [(a.bit_count(), a) for a in f.members]))
    return fams
