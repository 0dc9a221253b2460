from itertools import combinations

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from oracles import naive_induced_copy
from posetsat.errors import InvalidPosetError, UsageError
from posetsat.poset import (
    LegsKind,
    Poset,
    antichain,
    chain,
    classify_legs,
    complete_bipartite,
    copy_through,
    find_induced_copy,
    is_induced_saturated,
    poset_from_covers,
)
from posetsat.sets import Family, from_elements as S


def test_from_covers_examples():
    c = poset_from_covers(2, [(0, 1)])
    assert c.lt(0, 1) and not c.lt(1, 0)
    a = poset_from_covers(2, [])
    assert not a.comparable(0, 1)
    with pytest.raises(InvalidPosetError):
        poset_from_covers(2, [(0, 1), (1, 0)])


def test_from_covers_transitive_closure():
    p = chain(4)
    assert p.lt(0, 3)
    assert p.covers() == [(0, 1), (1, 2), (2, 3)]
    assert p.strict_relations() == 6


def test_from_covers_rejects_bad_input():
    with pytest.raises(UsageError):
        poset_from_covers(0, [])
    with pytest.raises(UsageError):
        poset_from_covers(2, [(0, 2)])
    with pytest.raises(InvalidPosetError):
        poset_from_covers(3, [(0, 1), (1, 2), (2, 0)])


def test_matrix_validation():
    with pytest.raises(InvalidPosetError):
        Poset(np.array([[True, False], [False, False]]))
    with pytest.raises(InvalidPosetError):
        Poset(np.array([[1, 1, 0], [0, 1, 1], [0, 0, 1]], dtype=bool))


def test_complete_bipartite_small_cases():
    k22 = complete_bipartite(2, 2)
    assert k22.size == 4 and len(k22.covers()) == 4
    k11 = complete_bipartite(1, 1)
    assert k11 == chain(2)
    k31 = complete_bipartite(3, 1)
    assert k31.size == 4 and len(k31.covers()) == 3
    minima = [v for v in range(4) if k31.below[v] == 0]
    assert len(minima) == 1
    with pytest.raises(UsageError):
        complete_bipartite(0, 2)


@pytest.mark.parametrize("s,t", [(1, 1), (2, 1), (2, 2), (3, 2), (4, 3)])
def test_complete_bipartite_structure(s, t):
    p = complete_bipartite(s, t)
    assert p.strict_relations() == s * t
    lowers, uppers = range(t), range(t, s + t)
    assert not any(p.comparable(a, b) for a, b in combinations(lowers, 2))
    assert not any(p.comparable(a, b) for a, b in combinations(uppers, 2))
    assert all(p.lt(a, b) for a in lowers for b in uppers)


def test_classify_legs_examples():
    prof = classify_legs(complete_bipartite(2, 2))
    assert prof.kind is LegsKind.LEGS and prof.legs == (0, 1) and prof.hip is None
    assert classify_legs(chain(3)).kind is LegsKind.NO_LEGS
    # a, b < c < d
    p = poset_from_covers(4, [(0, 2), (1, 2), (2, 3)])
    prof = classify_legs(p)
    assert prof.kind is LegsKind.LEGS_WITH_HIP and prof.hip == 2 and prof.legs == (0, 1)


def test_classify_legs_more():
    assert classify_legs(antichain(2)).kind >= LegsKind.LEGS
    assert classify_legs(complete_bipartite(2, 1)).kind is LegsKind.NO_LEGS
    assert classify_legs(complete_bipartite(1, 2)).kind is LegsKind.LEGS_WITH_HIP
    assert classify_legs(antichain(3)).kind is LegsKind.NO_LEGS


def test_find_induced_copy_examples():
    fam = Family.of(2, [0, S([1]), S([1, 2])])
    emb = find_induced_copy(fam, chain(3))
    assert emb is not None and list(emb.sets) == [0, S([1]), S([1, 2])]
    assert find_induced_copy(Family.of(2, [S([1]), S([2])]), chain(2)) is None


def test_k22_example_against_enumeration():
    fam = Family.of(3, [S([1]), S([2]), S([1, 3]), S([2, 3])])
    k22 = complete_bipartite(2, 2)
    assert naive_induced_copy(list(fam.members), k22.leq.tolist()) is None
    assert find_induced_copy(fam, k22) is None


def test_fixed_pins():
    fam = Family.of(3, [0, S([1]), S([2]), S([1, 2])])
    emb = find_induced_copy(fam, chain(2), fixed={0: S([2])})
    assert emb.sets[0] == S([2]) and emb.sets[1] == S([1, 2])
    assert find_induced_copy(fam, chain(2), fixed={1: 0}) is None
    with pytest.raises(UsageError):
        find_induced_copy(fam, chain(2), fixed={0: S([3])})


def test_copy_through_and_saturation():
    fam = Family.of(2, [0, S([1]), S([1, 2])])
    # antichain-2 saturated iff maximal chain
    assert is_induced_saturated(fam, antichain(2))
    assert copy_through(fam, antichain(2), S([2])) is not None
    assert not is_induced_saturated(Family.of(2, [0, S([1, 2])]), antichain(2))


def test_dual_and_json():
    p = complete_bipartite(3, 1)
    assert p.dual().dual() == p
    assert Poset.from_json(p.to_json()) == p
    dot = p.to_dot()
    assert dot.count("->") == 3 and "rank=same" in dot


SMALL_POSETS = [
    chain(2), chain(3), antichain(2), antichain(3),
    complete_bipartite(2, 1), complete_bipartite(1, 2), complete_bipartite(2, 2),
    poset_from_covers(4, [(0, 2), (1, 2), (2, 3)]),
    poset_from_covers(5, [(0, 2), (1, 2), (2, 3), (2, 4)]),
    poset_from_covers(5, [(0, 1), (2, 3)]),
]


@pytest.mark.parametrize("p", SMALL_POSETS, ids=repr)
def test_detector_matches_naive_exhaustive_n2(p):
    universe = range(4)
    for k in range(0, 5):
        for sets in combinations(universe, k):
            fam = Family.of(2, sets)
            got = find_induced_copy(fam, p) is not None
            want = naive_induced_copy(list(fam.members), p.leq.tolist()) is not None
            assert got == want, (fam, p)


@settings(max_examples=300, deadline=None)
@given(
    st.sampled_from(SMALL_POSETS),
    st.integers(3, 5).flatmap(
        lambda n: st.tuples(st.just(n), st.sets(st.integers(0, (1 << n) - 1), max_size=8))
    ),
)
def test_detector_matches_naive_random(p, args):
    n, sets = args
    fam = Family.of(n, sets)
    got = find_induced_copy(fam, p)
    want = naive_induced_copy(list(fam.members), p.leq.tolist())
    assert (got is None) == (want is None)
    if got is not None:
        # returned map really is induced
        for u in range(p.size):
            for v in range(p.size):
                a, b = got.sets[u], got.sets[v]
                assert bool(p.leq[u, v]) == (a & b == a)


@settings(max_examples=200, deadline=None)
@given(
    st.integers(1, 3), st.integers(1, 3),
    st.integers(2, 6).flatmap(
        lambda n: st.tuples(st.just(n), st.sets(st.integers(0, (1 << n) - 1), max_size=12))
    ),
)
def test_duality_generic(s, t, args):
    n, sets = args
    fam = Family.of(n, sets)
    here = find_induced_copy(fam, complete_bipartite(s, t)) is not None
    there = find_induced_copy(fam.complemented(), complete_bipartite(t, s)) is not None
    assert here == there
