"""The lantern construction of an induced K_{s,t}-saturated family.

For s >= t >= 2 and n >= 2s+t-1, with m = s+t-1:

* F1: [n] and the co-singletons {x}^c, x in [m];
* F2: upper s-lanterns over every t-subset A of [m];
* F3: lower t-lanterns over A ∪ {s+t} for every (t-1)-subset A of [m];
* F4: the empty set and the singletons {x}, x in [m];
* F5: a greedy maximal subset of G1 ∪ G2 keeping the union K_{s,t}-free, where
  G1 = complements of 2..s-subsets of [2s+t-1] and G2 = 2..t-subsets of [s+2t-1].

The first four parts have at most ``coefficient * n`` members in total and F5
does not depend on n beyond complementation, which gives the linear bound.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from math import comb

from .chains import lower_lantern, upper_lantern
from .errors import InfeasibleError, UnsupportedError, UsageError
from .kst import KstIndex
from .sets import Family, from_elements, full, sort_key


def coefficient(s: int, t: int) -> int:
    return comb(s + t - 1, t) * (s - 1) + comb(s + t - 1, t - 1) * (t - 1)


def check_params(n: int, s: int, t: int) -> None:
    if not s >= t >= 2:
        raise UsageError(f"the construction needs s >= t >= 2, got s={s}, t={t}")
    if n < 2 * s + t - 1:
        raise InfeasibleError(f"n={n} is below 2s+t-1={2 * s + t - 1}")
    if n > 64:
        raise UsageError("n is limited to 64")


def _subsets(ground: int, k: int):
    """k-subsets of [ground] as masks, in colex order."""
    return sorted((from_elements(c) for c in combinations(range(1, ground + 1), k)))


def build_lanterns(n: int, s: int, t: int, rng: random.Random | None = None):
    """Upper lanterns keyed by base A ∈ C([m], t); lower lanterns keyed by A ∪ {s+t}.

    With ``rng`` each lantern uses a random order of [s+t+1, n], which drops the
    increment-set rule (useful only for mutation tests).
    """
    check_params(n, s, t)
    m = s + t - 1
    tail = list(range(s + t + 1, n + 1))

    def order():
        if rng is None:
            return None
        perm = tail[:]
        rng.shuffle(perm)
        return perm

    uppers = {A: upper_lantern(A, s, t, n, order()) for A in _subsets(m, t)}
    extra = 1 << (s + t - 1)
    lowers = {}
    for A in _subsets(m, t - 1):
        lowers[A | extra] = lower_lantern(A | extra, s, t, n, order())
    return uppers, lowers


def build_parts(n: int, s: int, t: int, lanterns=None) -> tuple[Family, Family, Family, Family]:
    check_params(n, s, t)
    m = s + t - 1
    top = full(n)
    uppers, lowers = lanterns if lanterns is not None else build_lanterns(n, s, t)
    f1 = Family.of(n, [top] + [top & ~(1 << (x - 1)) for x in range(1, m + 1)])
    f2 = Family.of(n, (a for lan in uppers.values() for a in lan.members))
    f3 = Family.of(n, (a for lan in lowers.values() for a in lan.members))
    f4 = Family.of(n, [0] + [1 << (x - 1) for x in range(1, m + 1)])
    return f1, f2, f3, f4


def g_candidates(n: int, s: int, t: int) -> tuple[list[int], list[int]]:
    """G1 and G2 in greedy order: by size of the defining subset, then colex of it."""
    top = full(n)
    g1 = [top & ~A for i in range(2, s + 1) for A in _subsets(2 * s + t - 1, i)]
    g2 = [A for i in range(2, t + 1) for A in _subsets(s + 2 * t - 1, i)]
    return g1, g2


def build_f5(parts, n: int, s: int, t: int, rng: random.Random | None = None) -> Family:
    """Greedy maximal subset of G1 ∪ G2 that keeps F1..F5 induced K_{s,t}-free.

    Candidates are tried G1 first, then G2, each by (size, colex) of the defining
    subset; ``rng`` shuffles that order instead.
    """
    index = KstIndex(a for part in parts for a in part)
    g1, g2 = g_candidates(n, s, t)
    cands = g1 + g2
    if rng is not None:
        rng.shuffle(cands)
    chosen = []
    for g in cands:
        if g in index:
            continue
        if index.find_through(g, s, t) is None:
            index.add(g)
            chosen.append(g)
    return Family.of(n, chosen)


@dataclass(frozen=True)
class Construction:
    n: int
    s: int
    t: int
    parts: tuple[Family, Family, Family, Family, Family]
    family: Family
    upper_lanterns: dict = field(repr=False, compare=False)
    lower_lanterns: dict = field(repr=False, compare=False)
    g1_size: int
    g2_size: int
    coefficient: int
    # |F| - (|F1|+...+|F4|): the additive constant this instance needs on top of coefficient * n
    constant_observed: int
    # True when built for (t, s) and complemented; parts and lanterns then describe the (t, s) build
    swapped: bool = False
    base: Construction | None = field(default=None, repr=False, compare=False)

    @cached_property
    def index(self) -> KstIndex:
        return KstIndex(self.family.members)

    @property
    def f5_size(self) -> int:
        return len(self.parts[4])

    @property
    def linear_part(self) -> int:
        return sum(len(p) for p in self.parts[:4])

    @property
    def bound(self) -> int:
        return self.coefficient * self.n + self.f5_size

    def report_rows(self) -> list[tuple[str, int]]:
        rows = [(f"|F{i + 1}|", len(p)) for i, p in enumerate(self.parts)]
        rows += [
            ("|F1|+..+|F4|", self.linear_part),
            ("|F|", len(self.family)),
            ("coefficient", self.coefficient),
            ("coefficient*n", self.coefficient * self.n),
            ("bound coefficient*n+|F5|", self.bound),
            ("observed constant", self.constant_observed),
            ("|G1|", self.g1_size),
            ("|G2|", self.g2_size),
        ]
        return rows

    def report(self) -> str:
        head = f"n={self.n} s={self.s} t={self.t}" + (" (built as K_{t,s}, complemented)" if self.swapped else "")
        width = max(len(k) for k, _ in self.report_rows())
        return "\n".join([head] + [f"  {k:<{width}}  {v}" for k, v in self.report_rows()])


def build_saturated_family(
    n: int, s: int, t: int, f5_rng: random.Random | None = None, lantern_rng: random.Random | None = None
) -> Construction:
    """Assemble F = F1 ∪ ... ∪ F5 for K_{s,t} on [n].

    For s < t the (t, s) family is built and complemented. K_{1,1} and t = 1 are
    not handled.
    """
    if (s, t) == (1, 1):
        raise UnsupportedError("K_{1,1} is trivial (its induced saturation number is 1)")
    if min(s, t) < 2:
        raise UnsupportedError(f"the lantern construction needs s, t >= 2, got s={s}, t={t}")
    if s < t:
        base = build_saturated_family(n, t, s, f5_rng, lantern_rng)
        return Construction(
            n, s, t, base.parts, base.family.complemented(), base.upper_lanterns,
            base.lower_lanterns, base.g1_size, base.g2_size, coefficient(t, s),
            base.constant_observed, swapped=True, base=base,
        )
    check_params(n, s, t)
    uppers, lowers = build_lanterns(n, s, t, lantern_rng)
    parts4 = build_parts(n, s, t, (uppers, lowers))
    f5 = build_f5(parts4, n, s, t, f5_rng)
    family = Family.of(n, (a for p in parts4 + (f5,) for a in p))
    g1, g2 = g_candidates(n, s, t)
    linear = sum(len(p) for p in parts4)
    return Construction(
        n, s, t, parts4 + (f5,), family, uppers, lowers, len(g1), len(g2),
        coefficient(s, t), len(family) - linear,
    )


def f5_rejections(con: Construction) -> list[int]:
    """Candidates of G1 ∪ G2 left out of F; each must create an induced copy when added."""
    con = con.base or con
    g1, g2 = g_candidates(con.n, con.s, con.t)
    return sorted((g for g in g1 + g2 if g not in con.family), key=sort_key)


def f5_maximality_violations(con: Construction) -> list[int]:
    """Rejected candidates that could be added without creating an induced K_{s,t}. Empty when maximal."""
    con = con.base or con
    return [g for g in f5_rejections(con) if con.index.find_through(g, con.s, con.t) is None]
