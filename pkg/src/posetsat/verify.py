"""Saturation checks, constructive witnesses, layer-bound checks and legs certificates."""
from __future__ import annotations

from collections.abc import Iterable
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import islice

from .construction import Construction, g_candidates
from .errors import CertificateInvalid, DefectError, UsageError
from .kst import InducedKstCopy, KstIndex
from .poset import LegsKind, LegsProfile, Poset, classify_legs, find_induced_copy, is_induced_saturated
from .sets import Family, fmt, full, sort_key, to_elements


# ---------------------------------------------------------------- saturation


@dataclass
class SaturationReport:
    n: int
    s: int
    t: int
    inside_copy: InducedKstCopy | None = None
    unsaturated: list[int] = field(default_factory=list)
    witnesses: dict[int, InducedKstCopy] = field(default_factory=dict)

    @property
    def free(self) -> bool:
        return self.inside_copy is None

    @property
    def saturated(self) -> bool:
        return self.free and not self.unsaturated

    @property
    def violations(self) -> list:
        out = [] if self.inside_copy is None else [self.inside_copy]
        return out + list(self.unsaturated)

    def merge(self, other: SaturationReport) -> SaturationReport:
        """Combine reports over disjoint chunks of missing sets."""
        return SaturationReport(
            self.n, self.s, self.t,
            self.inside_copy or other.inside_copy,
            sorted(self.unsaturated + other.unsaturated),
            {**self.witnesses, **other.witnesses},
        )

    def summary(self) -> str:
        lines = [
            f"n={self.n} K_{{{self.s},{self.t}}}: free={self.free} saturated={self.saturated}",
            f"  missing sets checked: {len(self.witnesses) + len(self.unsaturated)}",
        ]
        if self.inside_copy is not None:
            lines.append(f"  family already contains: {self.inside_copy}")
        for a in self.unsaturated[:10]:
            lines.append(f"  adding {fmt(a)} creates no induced copy")
        return "\n".join(lines)

    def witnesses_json(self) -> dict:
        return {
            "v": 1,
            "n": self.n,
            "s": self.s,
            "t": self.t,
            "witnesses": [
                {"missing": to_elements(a), **w.to_json()}
                for a, w in sorted(self.witnesses.items(), key=lambda kv: sort_key(kv[0]))
            ],
        }


def _scan(members: list[int], n: int, s: int, t: int, missing: list[int]) -> SaturationReport:
    index = KstIndex(members)
    rep = SaturationReport(n, s, t)
    for a in missing:
        w = index.find_through(a, s, t)
        if w is None:
            rep.unsaturated.append(a)
        else:
            rep.witnesses[a] = w
    return rep


def _chunks(it: Iterable[int], size: int):
    it = iter(it)
    while chunk := list(islice(it, size)):
        yield chunk


def check_saturated(fam: Family, s: int, t: int, workers: int | None = None) -> SaturationReport:
    """Exhaustively check that ``fam`` is induced K_{s,t}-saturated.

    Every missing set gets a witness copy through it, or is listed in
    ``unsaturated``. With ``workers`` > 1 the missing sets are split across
    processes; chunk reports are merged.
    """
    if fam.n > 24:
        raise UsageError(f"n={fam.n} is too large for an exhaustive scan")
    members = list(fam.members)
    inside = KstIndex(members).find(s, t)
    missing = fam.missing()
    if workers and workers > 1:
        with ProcessPoolExecutor(workers) as ex:
            futures = [ex.submit(_scan, members, fam.n, s, t, c) for c in _chunks(missing, 256)]
            parts = [f.result() for f in futures]
        rep = SaturationReport(fam.n, s, t)
        for p in parts:
            rep = rep.merge(p)
    else:
        rep = _scan(members, fam.n, s, t, list(missing))
    rep.inside_copy = inside
    return rep


# ----------------------------------------------------------------- witnesses


@lru_cache(maxsize=64)
def _g_set(n: int, s: int, t: int) -> frozenset[int]:
    g1, g2 = g_candidates(n, s, t)
    return frozenset(g1 + g2)


def _co(x: int, n: int) -> int:
    return full(n) & ~(1 << (x - 1))


def _case_copy(a: int, con: Construction) -> tuple[str, InducedKstCopy]:
    n, s, t = con.n, con.s, con.t
    m = s + t - 1
    core = a & full(m)
    c = core.bit_count()
    k = a.bit_count()

    if a in _g_set(n, s, t):
        w = con.index.find_through(a, s, t)
        if w is None:
            raise DefectError(f"{fmt(a)} is an unused F5 candidate but creates no copy")
        return "F5 maximality", w

    if c == 0:
        lowers = [a] + [1 << (j - 1) for j in range(1, t)]
        uppers = [_co(x, n) for x in range(t, s + t)]
        return "empty core", InducedKstCopy(tuple(uppers), tuple(lowers))

    if c == m:
        uppers = [a] + [_co(x, n) for x in range(1, s)]
        lowers = [1 << (x - 1) for x in range(s, s + t)]
        return "full core", InducedKstCopy(tuple(uppers), tuple(lowers))

    if c <= t - 1:
        A = core
        for x in range(1, m + 1):
            if A.bit_count() == t - 1:
                break
            A |= 1 << (x - 1)
        lantern = con.lower_lanterns[A | 1 << (s + t - 1)]
        uppers = [_co(x, n) for x in range(1, m + 1) if not (A >> (x - 1)) & 1]
        if k <= t:
            label, others = "small core, small set", lantern.level(t + 1)
        elif k < n - s:
            label, others = "small core, middle set", lantern.level(k)
        else:
            raise DefectError(f"{fmt(a)}: large set with small core should lie in a lower lantern")
        return label, InducedKstCopy(tuple(uppers), tuple([a] + others))

    # t <= c < m
    A = 0
    for x in to_elements(core)[:t]:
        A |= 1 << (x - 1)
    lantern = con.upper_lanterns[A]
    lowers = [1 << (x - 1) for x in to_elements(A)]
    if k == t:
        raise DefectError(f"{fmt(a)} equals a lantern base")
    if k < n - s:
        return "large core, middle set", InducedKstCopy(tuple([a] + lantern.level(k)), tuple(lowers))
    outside = [x for x in range(2 * s + t, n + 1) if not (a >> (x - 1)) & 1]
    if not outside:
        raise DefectError(f"{fmt(a)}: no element of [2s+t, n] is missing")
    return "large core, large set", InducedKstCopy(tuple([a] + lantern.level(n - s - 1)), tuple(lowers))


def witness_with_case(a: int, con: Construction) -> tuple[str, InducedKstCopy]:
    """Like :func:`witness_for_missing` but also names the case that produced the copy."""
    if a in con.family:
        raise UsageError(f"{fmt(a)} is already in the family")
    if con.base is not None:
        label, w = witness_with_case(full(con.n) & ~a, con.base)
        n = con.n
        dual = InducedKstCopy(
            tuple(full(n) & ~x for x in w.lowers), tuple(full(n) & ~x for x in w.uppers)
        )
        return label, dual
    label, w = _case_copy(a, con)
    probs = w.problems()
    if len(w.uppers) != con.s or len(w.lowers) != con.t:
        probs.append("wrong layer sizes")
    if a not in w.sets:
        probs.append("copy does not use the new set")
    probs += [f"{fmt(x)} is not in F ∪ {{{fmt(a)}}}" for x in w.sets if x != a and x not in con.family]
    if probs:
        raise DefectError(f"{label} witness for {fmt(a)} is invalid: " + "; ".join(probs))
    return label, w


def witness_for_missing(a: int, con: Construction) -> InducedKstCopy:
    """Explicit induced K_{s,t} in F ∪ {a} built from the construction's own parts.

    The copy is assembled by cases on |a ∩ [s+t-1]| and |a|, using co-singletons,
    singletons and lantern levels; unused F5 candidates fall back to a search.
    Raises DefectError if the copy is not a valid induced K_{s,t}.
    """
    return witness_with_case(a, con)[1]


# -------------------------------------------------------------- layer bounds


@dataclass
class LayerBoundsReport:
    intersection_ok: bool
    union_ok: bool
    intersection_counterexample: tuple[int, ...] | None = None
    union_counterexample: tuple[int, ...] | None = None
    nodes: int = 0

    @property
    def ok(self) -> bool:
        return self.intersection_ok and self.union_ok


def check_layer_bounds(parts, s: int, t: int) -> LayerBoundsReport:
    """Check both layer bounds on F' = F1 ∪ .. ∪ F4 by branch and bound.

    * every s pairwise-incomparable members meet [s+t-1] in fewer than t common elements;
    * every t pairwise-incomparable members cover at least t elements of [s+t-1].

    Branches are cut only when no extension can be a counterexample, so the scan
    is exhaustive.
    """
    fam = Family.of(parts[0].n, (a for p in parts[:4] for a in p))
    sets = list(fam.members)
    _, _, inc = fam.masks
    core = full(s + t - 1)
    cores = [a & core for a in sets]
    nodes = 0

    def meet(cand, k, acc, chosen):
        nonlocal nodes
        nodes += 1
        if acc.bit_count() < t:
            return None
        if k == 0:
            return tuple(chosen)
        while cand:
            low = cand & -cand
            cand ^= low
            i = low.bit_length() - 1
            r = meet(cand & inc[i], k - 1, acc & cores[i], chosen + [sets[i]])
            if r:
                return r
        return None

    def join(cand, k, acc, chosen):
        nonlocal nodes
        nodes += 1
        if acc.bit_count() >= t:
            return None
        if k == 0:
            return tuple(chosen)
        while cand:
            low = cand & -cand
            cand ^= low
            i = low.bit_length() - 1
            r = join(cand & inc[i], k - 1, acc | cores[i], chosen + [sets[i]])
            if r:
                return r
        return None

    every = (1 << len(sets)) - 1
    bad1 = meet(every, s, core, [])
    bad2 = join(every, t, 0, [])
    return LayerBoundsReport(bad1 is None, bad2 is None, bad1, bad2, nodes)


# ------------------------------------------------------------ legs certificate


@dataclass(frozen=True)
class LegsCertificate:
    poset: Poset
    profile: LegsProfile
    n: int
    family_size: int
    partners: dict[int, int]
    f_map: dict[int, int]
    valid: bool
    problems: tuple[str, ...] = ()
    dualized: bool = False
    avoid_top: bool = False

    @property
    def lower_bound(self) -> int:
        """The size bound the certificate proves (n+1, or min(2^n, n+2) with ``avoid_top``)."""
        return min(2**self.n, self.n + 2) if self.avoid_top else self.n + 1


def legs_certificate(
    fam: Family, p: Poset, avoid_top: bool = False, strict: bool = True, check: bool = True
) -> LegsCertificate:
    """Build the injection x -> f(x) into F \\ {∅} for a saturated family of a poset with legs.

    f(x) = {x} if the singleton is in F, otherwise C_x ∪ {x} with C_x the
    largest partner of x (by cardinality, then colex). A partner is a member C
    such that {x} and C are the two legs of an induced copy of ``p`` in
    F ∪ {{x}}. Injectivity of f gives |F \\ {∅}| >= n.

    If ``p`` has no legs but its dual does, the complemented family is
    certified against the dual instead (``dualized``). ``avoid_top`` also
    requires f(x) != [n]; it needs a nonempty body and no maximum element.
    Raises CertificateInvalid on any failed assertion unless ``strict`` is off.
    """
    profile = classify_legs(p)
    if profile.kind < LegsKind.LEGS:
        if classify_legs(p.dual()).kind >= LegsKind.LEGS:
            cert = legs_certificate(fam.complemented(), p.dual(), avoid_top, strict, check)
            return LegsCertificate(**{**cert.__dict__, "dualized": True})
        raise UsageError("poset has no legs (neither it nor its dual)")
    a_leg, b_leg = profile.legs
    if avoid_top:
        body = p.size - 2
        has_max = any(p.above[v] == 0 and p.below[v].bit_count() == p.size - 1 for v in range(p.size))
        if body == 0 or has_max:
            raise UsageError("avoid_top needs a nonempty body and no maximum element")
    if check and not is_induced_saturated(fam, p):
        raise UsageError("family is not induced saturated for this poset")

    n = fam.n
    problems = []
    partners: dict[int, int] = {}
    f_map: dict[int, int] = {}
    for x in range(1, n + 1):
        sx = 1 << (x - 1)
        if sx in fam:
            f_map[x] = sx
            continue
        aug = fam.insert(sx)
        found = [
            c for c in fam.members
            if c & sx == 0 and c != 0
            and find_induced_copy(aug, p, fixed={a_leg: sx, b_leg: c}) is not None
        ]
        if not found:
            problems.append(f"{{{x}}} has no partner")
            continue
        cx = max(found, key=sort_key)
        partners[x] = cx
        fx = cx | sx
        f_map[x] = fx
        if fx not in fam or fx == 0:
            problems.append(f"C_{x} ∪ {{{x}}} = {fmt(fx)} is not in F \\ {{∅}}")
        if avoid_top and fx == full(n):
            problems.append(f"f({x}) = [n]")
    images = list(f_map.values())
    if len(set(images)) != len(images):
        problems.append("f is not injective")
    if check and 0 not in fam:
        problems.append("∅ is not in the family")

    cert = LegsCertificate(
        p, profile, n, len(fam), partners, f_map, not problems, tuple(problems), False, avoid_top
    )
    if strict and problems:
        raise CertificateInvalid("; ".join(problems))
    return cert
