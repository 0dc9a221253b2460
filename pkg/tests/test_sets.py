import json

import pytest
from hypothesis import given, settings, strategies as st

from posetsat.errors import UsageError
from posetsat.sets import (
    Family,
    Relation,
    complement,
    family_dot,
    family_insert,
    from_elements,
    interval,
    missing_sets,
    relation,
    to_elements,
)

S = from_elements


def test_relation_examples():
    assert relation(S([1, 2]), S([1, 2, 3])) is Relation.SUBSET
    assert relation(S([1]), S([2])) is Relation.INCOMPARABLE
    assert relation(S([1, 3]), S([1, 3])) is Relation.EQUAL
    assert relation(S([1, 2, 3]), S([2])) is Relation.SUPERSET


def test_relation_rejects_sets_outside_ground():
    with pytest.raises(UsageError):
        relation(S([1]), S([5]), n=4)


@pytest.mark.parametrize(
    "n, a, expected",
    [(5, [1], [2, 3, 4, 5]), (5, [], [1, 2, 3, 4, 5]), (7, [1, 2], [3, 4, 5, 6, 7])],
)
def test_complement_examples(n, a, expected):
    assert to_elements(complement(S(a), n)) == expected


def test_interval():
    assert to_elements(interval(5, 7)) == [5, 6, 7]
    assert interval(6, 5) == 0


def test_insert_is_idempotent():
    fam = Family.of(3)
    fam = family_insert(family_insert(fam, S([1])), S([1]))
    assert fam.members == (S([1]),)
    assert len(family_insert(Family.of(3), 0)) == 1


def test_canonical_order_puts_empty_first():
    fam = family_insert(family_insert(Family.of(4), 0b1111), 0)
    assert fam.members == (0, 0b1111)


def test_raw_constructor_rejects_unsorted():
    with pytest.raises(UsageError):
        Family(3, (S([1, 2]), S([1])))
    with pytest.raises(UsageError):
        Family(3, (S([1]), S([1])))


def test_missing_examples():
    assert list(missing_sets(Family.of(2, [0, 1, 2, 3]))) == []
    assert list(missing_sets(Family.of(1, [0]))) == [1]
    assert len(list(missing_sets(Family.of(3, [0, 7])))) == 6


def test_missing_is_colex():
    out = list(Family.of(3, [0]).missing())
    assert out == sorted(out)


def test_json_roundtrip_recanonicalizes():
    data = {"n": 3, "sets": [[2, 3], [1], [], [1]]}
    fam = Family.from_json(data)
    assert fam.as_lists() == [[], [1], [2, 3]]
    again = Family.from_json(json.loads(fam.dumps()))
    assert again == fam
    assert json.loads(fam.dumps())["v"] == 1


def test_json_rejects_out_of_range():
    with pytest.raises(UsageError):
        Family.from_json({"n": 2, "sets": [[3]]})
    with pytest.raises(UsageError):
        Family.from_json({"n": 2, "sets": [[1]], "v": 7})


def test_ground_capacity():
    Family.of(64, [1 << 63])
    with pytest.raises(UsageError):
        Family.of(65)
    with pytest.raises(UsageError):
        Family.of(0)


def test_family_dot_has_covers_only():
    fam = Family.of(2, [0, 1, 3])
    dot = family_dot(fam)
    assert dot.count("->") == 2


sets8 = st.integers(min_value=0, max_value=255)


@given(sets8, sets8)
def test_relation_antisymmetric(a, b):
    r, back = relation(a, b), relation(b, a)
    assert (r is Relation.SUBSET) == (back is Relation.SUPERSET)
    assert (r is Relation.INCOMPARABLE) == (back is Relation.INCOMPARABLE)


@given(sets8)
def test_complement_involution(a):
    assert complement(complement(a, 8), 8) == a


@given(sets8, sets8)
def test_complement_preserves_incomparability(a, b):
    inc = relation(a, b) is Relation.INCOMPARABLE
    assert inc == (relation(complement(a, 8), complement(b, 8)) is Relation.INCOMPARABLE)


@settings(max_examples=30)
@given(st.integers(1, 16).flatmap(
    lambda n: st.tuples(st.just(n), st.lists(st.integers(0, (1 << n) - 1), max_size=40))
))
def test_missing_count(args):
    n, sets = args
    fam = Family.of(n, sets)
    assert len(fam) + sum(1 for _ in fam.missing()) == 2**n
