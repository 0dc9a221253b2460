"""Finite abstract posets and a generic induced-subposet detector.

A :class:`Poset` on elements ``0..size-1`` is stored as its full relation
matrix (numpy bool array, ``leq[i, j]`` iff ``i <= j``). Posets here have at
most a dozen elements, so the matrix form costs nothing and makes every
comparability query O(1).

The detector embeds a poset into a family of sets by backtracking. Families
are represented by index bitsets (``up``/``down``/``inc`` from
:func:`posetsat.sets.comparability_masks`), so the candidate set for the next
poset element is an AND of a few Python ints.
"""
from __future__ import annotations

import enum
import json
from collections.abc import Iterable, Mapping
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations

import numpy as np

from .errors import InvalidPosetError, UsageError
from .sets import SCHEMA_VERSION, Family, comparability_masks, fmt


@dataclass(frozen=True, eq=False)
class Poset:
    leq: np.ndarray

    def __post_init__(self):
        leq = np.array(self.leq, dtype=bool)
        if leq.ndim != 2 or leq.shape[0] != leq.shape[1] or leq.shape[0] < 1:
            raise InvalidPosetError("relation must be a non-empty square matrix")
        if not leq.diagonal().all():
            raise InvalidPosetError("relation is not reflexive")
        off = leq & leq.T & ~np.eye(len(leq), dtype=bool)
        if off.any():
            i, j = map(int, np.argwhere(off)[0])
            raise InvalidPosetError(f"relation is not antisymmetric ({i} and {j} are mutually below)")
        li = leq.astype(np.int64)
        if ((li @ li > 0) & ~leq).any():
            raise InvalidPosetError("relation is not transitive")
        leq.setflags(write=False)
        object.__setattr__(self, "leq", leq)

    @property
    def size(self) -> int:
        return len(self.leq)

    def __eq__(self, other):
        return isinstance(other, Poset) and np.array_equal(self.leq, other.leq)

    def __hash__(self):
        return hash(self.leq.tobytes())

    def __repr__(self):
        return f"Poset(size={self.size}, covers={self.covers()})"

    def lt(self, i: int, j: int) -> bool:
        return i != j and bool(self.leq[i, j])

    def comparable(self, i: int, j: int) -> bool:
        return bool(self.leq[i, j] or self.leq[j, i])

    @cached_property
    def below(self) -> tuple[int, ...]:
        """``below[v]``: bitmask of elements strictly below ``v``."""
        k = self.size
        return tuple(
            sum(1 << u for u in range(k) if u != v and self.leq[u, v]) for v in range(k)
        )

    @cached_property
    def above(self) -> tuple[int, ...]:
        k = self.size
        return tuple(
            sum(1 << u for u in range(k) if u != v and self.leq[v, u]) for v in range(k)
        )

    def covers(self) -> list[tuple[int, int]]:
        out = []
        for u in range(self.size):
            for v in range(self.size):
                if self.lt(u, v) and not any(
                    self.lt(u, w) and self.lt(w, v) for w in range(self.size)
                ):
                    out.append((u, v))
        return out

    @cached_property
    def depth(self) -> tuple[int, ...]:
        """Number of elements on a longest chain strictly below each element."""
        d = [0] * self.size
        for v in sorted(range(self.size), key=lambda v: self.below[v].bit_count()):
            d[v] = max((d[u] + 1 for u in range(self.size) if self.lt(u, v)), default=0)
        return tuple(d)

    @cached_property
    def height(self) -> tuple[int, ...]:
        """Number of elements on a longest chain strictly above each element."""
        h = [0] * self.size
        for v in sorted(range(self.size), key=lambda v: self.above[v].bit_count()):
            h[v] = max((h[u] + 1 for u in range(self.size) if self.lt(v, u)), default=0)
        return tuple(h)

    def dual(self) -> Poset:
        return Poset(self.leq.T.copy())

    def strict_relations(self) -> int:
        return int(self.leq.sum()) - self.size

    def to_json(self) -> dict:
        return {"v": SCHEMA_VERSION, "size": self.size, "covers": [list(c) for c in self.covers()]}

    @classmethod
    def from_json(cls, data: dict) -> Poset:
        if not isinstance(data, dict) or "size" not in data or "covers" not in data:
            raise UsageError('poset JSON needs "size" and "covers"')
        v = data.get("v", SCHEMA_VERSION)
        if v != SCHEMA_VERSION:
            raise UsageError(f"unsupported poset schema version {v}")
        return poset_from_covers(data["size"], [tuple(c) for c in data["covers"]])

    def to_dot(self, name: str = "P") -> str:
        lines = [f"digraph {name} {{", "  rankdir=BT;", "  node [shape=point];"]
        for level in sorted(set(self.depth)):
            same = " ".join(str(v) for v in range(self.size) if self.depth[v] == level)
            lines.append(f"  {{ rank=same; {same} }}")
        for u, v in self.covers():
            lines.append(f"  {u} -> {v} [arrowhead=none];")
        lines.append("}")
        return "\n".join(lines) + "\n"


def poset_from_covers(size: int, covers: Iterable[tuple[int, int]]) -> Poset:
    """Reflexive-transitive closure of the cover pairs ``(lower, upper)``."""
    if not isinstance(size, int) or size < 1:
        raise UsageError(f"poset size must be a positive integer, got {size!r}")
    leq = np.eye(size, dtype=bool)
    for c in covers:
        if len(c) != 2:
            raise UsageError(f"cover must be a pair, got {c!r}")
        lo, hi = c
        if not (0 <= lo < size and 0 <= hi < size):
            raise UsageError(f"cover {c!r} out of range for size {size}")
        leq[lo, hi] = True
    for k in range(size):
        leq |= leq[:, k : k + 1] & leq[k : k + 1, :]
    cyc = leq & leq.T & ~np.eye(size, dtype=bool)
    if cyc.any():
        raise InvalidPosetError("covers contain a cycle")
    return Poset(leq)


def chain(k: int) -> Poset:
    return poset_from_covers(k, [(i, i + 1) for i in range(k - 1)])


def antichain(k: int) -> Poset:
    return poset_from_covers(k, [])


def complete_bipartite(s: int, t: int) -> Poset:
    """K_{s,t}: lower layer ``0..t-1``, upper layer ``t..t+s-1``."""
    if s < 1 or t < 1:
        raise UsageError(f"K_{{s,t}} needs s, t >= 1, got s={s}, t={t}")
    return poset_from_covers(s + t, [(lo, t + up) for lo in range(t) for up in range(s)])


def load_poset(path) -> Poset:
    with open(path) as fh:
        return Poset.from_json(json.load(fh))


class LegsKind(enum.IntEnum):
    NO_LEGS = 0
    LEGS = 1
    LEGS_WITH_HIP = 2


@dataclass(frozen=True)
class LegsProfile:
    kind: LegsKind
    legs: tuple[int, int] | None = None
    hip: int | None = None


def classify_legs(p: Poset) -> LegsProfile:
    """Find two incomparable elements below everything else (legs), and a hip above them."""
    k = p.size
    everyone = (1 << k) - 1
    found = None
    for a, b in combinations(range(k), 2):
        if p.comparable(a, b):
            continue
        rest = everyone & ~(1 << a) & ~(1 << b)
        if p.above[a] & rest != rest or p.above[b] & rest != rest:
            continue
        for c in range(k):
            if c in (a, b) or not (rest >> c) & 1:
                continue
            others = rest & ~(1 << c)
            if p.above[c] & others == others:
                return LegsProfile(LegsKind.LEGS_WITH_HIP, (a, b), c)
        if found is None:
            found = (a, b)
    if found is not None:
        return LegsProfile(LegsKind.LEGS, found)
    return LegsProfile(LegsKind.NO_LEGS)


@dataclass(frozen=True)
class Embedding:
    """``indices[v]`` is the family index of the image of poset element ``v``."""

    indices: tuple[int, ...]
    sets: tuple[int, ...]

    def __str__(self):
        return ", ".join(f"{v}->{fmt(a)}" for v, a in enumerate(self.sets))


def _search_order(p: Poset, first: Iterable[int]) -> list[int]:
    first = list(first)
    deg = [(p.below[v] | p.above[v]).bit_count() for v in range(p.size)]
    rest = sorted(
        (v for v in range(p.size) if v not in first), key=lambda v: (p.depth[v], -deg[v], v)
    )
    return first + rest


def embed(
    p: Poset,
    sets: list[int],
    masks: tuple[list[int], list[int], list[int]],
    n: int,
    allowed: int | None = None,
    fixed: Mapping[int, int] | None = None,
) -> list[int] | None:
    """Backtracking core: map poset elements to indices of ``sets``.

    ``allowed`` restricts the usable indices (bitmask); ``fixed`` pins poset
    elements to indices. Returns ``images`` with ``images[v]`` an index, or
    None when no induced embedding exists.
    """
    up, down, inc = masks
    m = len(sets)
    if allowed is None:
        allowed = (1 << m) - 1
    fixed = dict(fixed or {})
    k = p.size
    if k > m:
        return None

    by_card = [0] * (n + 1)
    for i, a in enumerate(sets):
        if (allowed >> i) & 1:
            by_card[a.bit_count()] |= 1 << i
    level_ok = []
    for v in range(k):
        lo, hi = p.depth[v], n - p.height[v]
        mask = 0
        for c in range(lo, hi + 1):
            mask |= by_card[c]
        level_ok.append(mask)

    order = _search_order(p, fixed)
    # per step: list of (earlier step position, relation code) 0: earlier<v, 1: v<earlier, 2: incomparable
    constraints = []
    for pos, v in enumerate(order):
        cons = []
        for q in range(pos):
            u = order[q]
            code = 0 if p.lt(u, v) else 1 if p.lt(v, u) else 2
            cons.append((q, code))
        constraints.append(cons)

    placed = [0] * k
    images = [0] * k

    def candidates(pos: int, used: int) -> int:
        v = order[pos]
        cand = level_ok[v] & ~used
        for q, code in constraints[pos]:
            j = placed[q]
            cand &= up[j] if code == 0 else down[j] if code == 1 else inc[j]
            if not cand:
                return 0
        return cand

    def rec(pos: int, used: int) -> bool:
        if pos == k:
            return True
        v = order[pos]
        cand = candidates(pos, used)
        if v in fixed:
            cand &= 1 << fixed[v]
        while cand:
            low = cand & -cand
            cand ^= low
            j = low.bit_length() - 1
            placed[pos] = j
            images[v] = j
            if rec(pos + 1, used | low):
                return True
        return False

    return list(images) if rec(0, 0) else None


def find_induced_copy(
    fam: Family, p: Poset, fixed: Mapping[int, int] | None = None
) -> Embedding | None:
    """Induced copy of ``p`` in ``(fam, ⊆)``, optionally with some elements pinned to given sets."""
    sets = list(fam.members)
    pins = None
    if fixed:
        pins = {}
        for v, a in fixed.items():
            if a not in fam:
                raise UsageError(f"pinned set {fmt(a)} is not in the family")
            pins[v] = fam.index[a]
    images = embed(p, sets, fam.masks, fam.n, fixed=pins)
    if images is None:
        return None
    return Embedding(tuple(images), tuple(sets[i] for i in images))


def _extend_masks(sets, masks, a):
    """Masks for ``sets + [a]`` (``a`` not already present) without recomputing the rest."""
    up, down, inc = (list(x) for x in masks)
    m = len(sets)
    bit = 1 << m
    ua = da = ia = 0
    for j, b in enumerate(sets):
        c = a & b
        if c == a:
            ua |= 1 << j
            down[j] |= bit
        elif c == b:
            da |= 1 << j
            up[j] |= bit
        else:
            ia |= 1 << j
            inc[j] |= bit
    up.append(ua)
    down.append(da)
    inc.append(ia)
    return up, down, inc


def copy_through(fam: Family, p: Poset, a: int) -> Embedding | None:
    """Induced copy of ``p`` in ``fam ∪ {a}`` that uses ``a`` (``a`` must be missing from ``fam``)."""
    if a in fam:
        raise UsageError(f"{fmt(a)} is already in the family")
    sets = list(fam.members) + [a]
    masks = _extend_masks(fam.members, fam.masks, a)
    idx = len(sets) - 1
    for v in range(p.size):
        images = embed(p, sets, masks, fam.n, fixed={v: idx})
        if images is not None:
            return Embedding(tuple(images), tuple(sets[i] for i in images))
    return None


def is_induced_saturated(fam: Family, p: Poset) -> bool:
    if find_induced_copy(fam, p) is not None:
        return False
    return all(copy_through(fam, p, a) is not None for a in fam.missing())
