"""Specialized induced K_{s,t} search over index bitsets.

A copy of K_{s,t} in a set family is an antichain of t lowers and an
antichain of s uppers with every lower strictly inside every upper. The
search enumerates lower antichains first (members are in canonical order, so
smaller sets come first), keeps the running AND of their strict-superset
masks, and then looks for an s-antichain inside that AND.

:class:`KstIndex` keeps the comparability masks of a growing family so the
greedy F5 step and the saturation scan can add or probe one set in O(|family|).
"""
from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass

from .errors import UsageError
from .sets import Family, fmt, sort_key, to_elements


@dataclass(frozen=True)
class InducedKstCopy:
    uppers: tuple[int, ...]
    lowers: tuple[int, ...]

    @property
    def sets(self) -> tuple[int, ...]:
        return self.uppers + self.lowers

    def problems(self) -> list[str]:
        """Violated invariants, empty when this really is an induced K_{s,t}."""
        out = []
        if len(set(self.sets)) != len(self.sets):
            out.append("sets are not distinct")
        for layer, name in ((self.uppers, "upper"), (self.lowers, "lower")):
            for i, a in enumerate(layer):
                for b in layer[i + 1 :]:
                    c = a & b
                    if c == a or c == b:
                        out.append(f"{name} sets {fmt(a)} and {fmt(b)} are comparable")
        for lo in self.lowers:
            for hi in self.uppers:
                if lo & hi != lo or lo == hi:
                    out.append(f"lower {fmt(lo)} is not strictly inside upper {fmt(hi)}")
        return out

    def is_valid(self, s: int | None = None, t: int | None = None) -> bool:
        if s is not None and len(self.uppers) != s:
            return False
        if t is not None and len(self.lowers) != t:
            return False
        return not self.problems()

    def to_json(self) -> dict:
        return {
            "uppers": [to_elements(a) for a in self.uppers],
            "lowers": [to_elements(a) for a in self.lowers],
        }

    def __str__(self):
        up = " ".join(fmt(a) for a in self.uppers)
        lo = " ".join(fmt(a) for a in self.lowers)
        return f"uppers {up} | lowers {lo}"


def _antichain(cand: int, k: int, inc: list[int]) -> list[int] | None:
    if k == 0:
        return []
    while cand:
        if cand.bit_count() < k:
            return None
        low = cand & -cand
        cand ^= low
        i = low.bit_length() - 1
        rest = _antichain(cand & inc[i], k - 1, inc)
        if rest is not None:
            return [i] + rest
    return None


def _lowers_then_uppers(cand, k, common_up, s_need, up, inc):
    """Pick k more pairwise-incomparable lowers from ``cand``, then s_need uppers."""
    if k == 0:
        ups = _antichain(common_up, s_need, inc)
        return None if ups is None else ([], ups)
    while cand:
        low = cand & -cand
        cand ^= low
        i = low.bit_length() - 1
        cu = common_up & up[i]
        if cu.bit_count() < s_need:
            continue
        r = _lowers_then_uppers(cand & inc[i], k - 1, cu, s_need, up, inc)
        if r is not None:
            return [i] + r[0], r[1]
    return None


class KstIndex:
    """Comparability masks of a set family, supporting cheap appends and K_{s,t} queries."""

    def __init__(self, sets: Iterable[int] = ()):
        self.sets: list[int] = []
        self.up: list[int] = []
        self.down: list[int] = []
        self.inc: list[int] = []
        self.pos: dict[int, int] = {}
        for a in sets:
            self.add(a)

    def __len__(self):
        return len(self.sets)

    def __contains__(self, a):
        return a in self.pos

    def relations_of(self, a: int) -> tuple[int, int, int]:
        """Masks of members strictly above, strictly below, and incomparable to ``a``."""
        ua = da = ia = 0
        for j, b in enumerate(self.sets):
            c = a & b
            if c == a:
                if b != a:
                    ua |= 1 << j
            elif c == b:
                da |= 1 << j
            else:
                ia |= 1 << j
        return ua, da, ia

    def add(self, a: int) -> None:
        if a in self.pos:
            return
        ua, da, ia = self.relations_of(a)
        bit = 1 << len(self.sets)
        for j in _bits(ua):
            self.down[j] |= bit
        for j in _bits(da):
            self.up[j] |= bit
        for j in _bits(ia):
            self.inc[j] |= bit
        self.pos[a] = len(self.sets)
        self.sets.append(a)
        self.up.append(ua)
        self.down.append(da)
        self.inc.append(ia)

    def _copy(self, lowers, uppers, extra=None):
        lo = [self.sets[i] for i in lowers]
        hi = [self.sets[i] for i in uppers]
        if extra is not None:
            (lo if extra[1] == "lower" else hi).append(extra[0])
        return InducedKstCopy(tuple(sorted(hi, key=sort_key)), tuple(sorted(lo, key=sort_key)))

    def find(self, s: int, t: int) -> InducedKstCopy | None:
        """Any induced K_{s,t} among the members."""
        _check_st(s, t)
        every = (1 << len(self.sets)) - 1
        r = _lowers_then_uppers(every, t, every, s, self.up, self.inc)
        return None if r is None else self._copy(*r)

    def find_through(self, a: int, s: int, t: int) -> InducedKstCopy | None:
        """An induced K_{s,t} in members ∪ {a} that uses ``a`` (``a`` must not be a member)."""
        _check_st(s, t)
        if a in self.pos:
            raise UsageError(f"{fmt(a)} is already a member")
        ua, da, ia = self.relations_of(a)
        # a as a lower: the other lowers are incomparable to a, uppers lie strictly above a
        if ua.bit_count() >= s:
            r = _lowers_then_uppers(ia, t - 1, ua, s, self.up, self.inc)
            if r is not None:
                return self._copy(*r, extra=(a, "lower"))
        # a as an upper: lowers strictly inside a, the other uppers incomparable to a
        if da.bit_count() >= t:
            r = _lowers_then_uppers(da, t, ia, s - 1, self.up, self.inc)
            if r is not None:
                return self._copy(*r, extra=(a, "upper"))
        return None


def _bits(mask: int):
    while mask:
        low = mask & -mask
        mask ^= low
        yield low.bit_length() - 1


def _check_st(s, t):
    if s < 1 or t < 1:
        raise UsageError(f"K_{{s,t}} needs s, t >= 1, got s={s}, t={t}")


def find_induced_kst(fam: Family, s: int, t: int) -> InducedKstCopy | None:
    """Induced copy of K_{s,t} in ``(fam, ⊆)``, or None."""
    _check_st(s, t)
    up, _, inc = fam.masks
    every = (1 << len(fam)) - 1
    r = _lowers_then_uppers(every, t, every, s, up, inc)
    if r is None:
        return None
    lowers, uppers = r
    return InducedKstCopy(
        tuple(fam.members[i] for i in uppers), tuple(fam.members[i] for i in lowers)
    )


def find_kst_through(fam: Family, a: int, s: int, t: int) -> InducedKstCopy | None:
    """Induced K_{s,t} in ``fam ∪ {a}`` containing ``a``."""
    return KstIndex(fam.members).find_through(a, s, t)
