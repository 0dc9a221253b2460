"""Subsets of [n] as integer bitmasks, and canonical families of them.

Element ``i`` of the ground set ``[n] = {1, ..., n}`` lives in bit ``i - 1``.
Plain ``int`` is the set type throughout the package; conversion to and from
element lists happens only at I/O boundaries (:func:`from_elements`,
:func:`to_elements`, JSON).

Canonical order on sets is (cardinality, colex). For bitmasks colex order
coincides with numeric order, so the sort key is simply ``(popcount, mask)``.
"""
from __future__ import annotations

import enum
import json
from collections.abc import Iterable, Iterator
from dataclasses import dataclass
from functools import cached_property

from .errors import UsageError

MAX_N = 64
SCHEMA_VERSION = 1


class Relation(enum.Enum):
    EQUAL = "equal"
    SUBSET = "strict-subset"
    SUPERSET = "strict-superset"
    INCOMPARABLE = "incomparable"


def check_ground(n: int) -> int:
    if not isinstance(n, int) or isinstance(n, bool) or not 1 <= n <= MAX_N:
        raise UsageError(f"ground set size must be an integer in [1, {MAX_N}], got {n!r}")
    return n


def full(n: int) -> int:
    return (1 << n) - 1


def check_set(a: int, n: int) -> int:
    if a < 0 or a >> n:
        raise UsageError(f"set {a:#x} does not live in [{n}]")
    return a


def from_elements(elements: Iterable[int]) -> int:
    mask = 0
    for x in elements:
        if x < 1:
            raise UsageError(f"elements are 1-indexed, got {x}")
        mask |= 1 << (x - 1)
    return mask


def to_elements(mask: int) -> list[int]:
    out = []
    i = 1
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


def interval(lo: int, hi: int) -> int:
    """The set [lo, hi]; empty when hi < lo."""
    if hi < lo:
        return 0
    return full(hi) & ~full(lo - 1)


def size(a: int) -> int:
    return a.bit_count()


def sort_key(a: int) -> tuple[int, int]:
    return (a.bit_count(), a)


def fmt(a: int) -> str:
    return "{" + ",".join(map(str, to_elements(a))) + "}"


def relation(a: int, b: int, n: int | None = None) -> Relation:
    """Containment relation between ``a`` and ``b``.

    If ``n`` is given both sets are checked to live in ``[n]``.
    """
    if n is not None:
        check_set(a, n)
        check_set(b, n)
    if a == b:
        return Relation.EQUAL
    if a & b == a:
        return Relation.SUBSET
    if a & b == b:
        return Relation.SUPERSET
    return Relation.INCOMPARABLE


def comparable(a: int, b: int) -> bool:
    c = a & b
    return c == a or c == b


def complement(a: int, n: int) -> int:
    return full(n) & ~check_set(a, n)


def comparability_masks(sets: list[int]) -> tuple[list[int], list[int], list[int]]:
    """Index bitsets over ``sets``: strict supersets, strict subsets, incomparables.

    ``up[i]`` has bit ``j`` set iff ``sets[i] < sets[j]`` (strict containment);
    ``down`` is the transpose, ``inc`` the incomparable pairs. ``sets`` must be
    pairwise distinct.
    """
    m = len(sets)
    up = [0] * m
    down = [0] * m
    inc = [0] * m
    for i in range(m):
        a = sets[i]
        for j in range(i + 1, m):
            b = sets[j]
            c = a & b
            if c == a:
                up[i] |= 1 << j
                down[j] |= 1 << i
            elif c == b:
                down[i] |= 1 << j
                up[j] |= 1 << i
            else:
                inc[i] |= 1 << j
                inc[j] |= 1 << i
    return up, down, inc


@dataclass(frozen=True)
class Family:
    """A deduplicated family of subsets of [n] in canonical (cardinality, colex) order.

    Build with :meth:`of`, which normalizes; the raw constructor only validates.
    """

    n: int
    members: tuple[int, ...]

    def __post_init__(self):
        check_ground(self.n)
        prev = None
        for a in self.members:
            check_set(a, self.n)
            key = sort_key(a)
            if prev is not None and key <= prev:
                raise UsageError("family members must be distinct and canonically ordered; use Family.of")
            prev = key

    @classmethod
    def of(cls, n: int, sets: Iterable[int] = ()) -> Family:
        return cls(n, tuple(sorted(set(sets), key=sort_key)))

    @classmethod
    def from_lists(cls, n: int, sets: Iterable[Iterable[int]]) -> Family:
        fam = [from_elements(s) for s in sets]
        for a in fam:
            if a >> n:
                raise UsageError(f"set {to_elements(a)} has elements outside [{n}]")
        return cls.of(n, fam)

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[int]:
        return iter(self.members)

    def __contains__(self, a: object) -> bool:
        return a in self.index

    @cached_property
    def index(self) -> dict[int, int]:
        return {a: i for i, a in enumerate(self.members)}

    @cached_property
    def masks(self) -> tuple[list[int], list[int], list[int]]:
        return comparability_masks(list(self.members))

    def insert(self, a: int) -> Family:
        check_set(a, self.n)
        if a in self:
            return self
        return Family.of(self.n, self.members + (a,))

    def union(self, other: Iterable[int]) -> Family:
        return Family.of(self.n, self.members + tuple(other))

    def without(self, a: int) -> Family:
        return Family(self.n, tuple(x for x in self.members if x != a))

    def complemented(self) -> Family:
        f = full(self.n)
        return Family.of(self.n, (f & ~a for a in self.members))

    def missing(self) -> Iterator[int]:
        """Sets of 2^[n] absent from the family, in colex (numeric) order."""
        present = self.index
        for a in range(1 << self.n):
            if a not in present:
                yield a

    def as_lists(self) -> list[list[int]]:
        return [to_elements(a) for a in self.members]

    def to_json(self) -> dict:
        return {"v": SCHEMA_VERSION, "n": self.n, "sets": self.as_lists()}

    @classmethod
    def from_json(cls, data: dict) -> Family:
        if not isinstance(data, dict) or "n" not in data or "sets" not in data:
            raise UsageError('family JSON needs "n" and "sets"')
        v = data.get("v", SCHEMA_VERSION)
        if v != SCHEMA_VERSION:
            raise UsageError(f"unsupported family schema version {v}")
        return cls.from_lists(data["n"], data["sets"])

    def dumps(self) -> str:
        return json.dumps(self.to_json(), separators=(",", ":")) + "\n"

    def __str__(self) -> str:
        return "[" + ", ".join(fmt(a) for a in self.members) + "]"


def family_insert(fam: Family, a: int) -> Family:
    return fam.insert(a)


def missing_sets(fam: Family) -> Iterator[int]:
    return fam.missing()


def load_family(path) -> Family:
    with open(path) as fh:
        return Family.from_json(json.load(fh))


def save_family(fam: Family, path) -> None:
    with open(path, "w") as fh:
        fh.write(fam.dumps())


def family_dot(fam: Family, name: str = "F") -> str:
    """Hasse diagram of ``(fam, ⊆)`` in DOT, one rank per cardinality."""
    members = list(fam.members)
    up, down, _ = fam.masks
    lines = [f"digraph {name} {{", "  rankdir=BT;", "  node [shape=plaintext];"]
    for i, a in enumerate(members):
        lines.append(f'  s{i} [label="{fmt(a)}"];')
    for c in sorted({a.bit_count() for a in members}):
        same = " ".join(f"s{i}" for i, a in enumerate(members) if a.bit_count() == c)
        lines.append(f"  {{ rank=same; {same} }}")
    for i in range(len(members)):
        for j in _iter_bits(up[i]):
            if not up[i] & down[j]:
                lines.append(f"  s{i} -> s{j} [arrowhead=none];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def _iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        mask ^= low
        yield low.bit_length() - 1
