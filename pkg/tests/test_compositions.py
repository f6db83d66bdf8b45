import itertools
import math

import pytest

from qschur.compositions import (
    Composition,
    Partition,
    WeakComposition,
    coarsens,
    collapse,
    composition_of,
    compositions_of_partition,
    enumerate_compositions,
    expand_to_weak,
    format_composition,
    foundation,
    parse_composition,
    parse_weak_composition,
    refinements,
    reversal,
    subset_of,
    to_partition,
    triangle_cmp,
    triangle_key,
)


def test_collapse():
    assert collapse((3, 2, 0, 4, 2, 0)) == (3, 2, 4, 2)
    assert collapse((0, 0, 0)) == ()
    assert collapse((1, 0, 2)) == (1, 2)


def test_to_partition():
    assert to_partition((3, 2, 0, 4, 2, 0)) == (4, 3, 2, 2)
    assert to_partition(()) == ()
    assert to_partition((1, 3)) == (3, 1)


def test_foundation():
    assert foundation((3, 2, 0, 4, 2, 0)) == {1, 2, 4, 5}
    assert foundation((0, 0)) == frozenset()
    assert foundation((1, 1)) == {1, 2}


def test_reversal():
    assert reversal((1, 3, 2)) == (2, 3, 1)
    assert reversal(()) == ()
    assert reversal((2, 2)) == (2, 2)


def test_subset_of():
    assert subset_of((1, 3, 2), 6) == {1, 4}
    assert subset_of((6,), 6) == frozenset()
    assert subset_of((1, 1, 1), 3) == {1, 2}
    with pytest.raises(ValueError):
        subset_of((1, 2), 4)


def test_composition_of():
    assert composition_of({1, 4}, 6) == (1, 3, 2)
    assert composition_of(set(), 5) == (5,)
    assert composition_of({2}, 3) == (2, 1)
    with pytest.raises(ValueError):
        composition_of({5}, 4)


def test_subset_composition_round_trips():
    for n in range(1, 11):
        for b in enumerate_compositions(n):
            assert composition_of(subset_of(b, n), n) == b
    for n in range(1, 9):
        for r in range(n):
            for s in itertools.combinations(range(1, n), r):
                assert subset_of(composition_of(s, n), n) == frozenset(s)


def test_coarsens():
    assert coarsens((3, 2, 4, 2), (3, 1, 1, 1, 2, 1, 2))
    assert coarsens((2, 1), (2, 1))
    assert not coarsens((1, 2), (2, 1))


def test_coarsens_partial_order():
    for n in range(1, 7):
        comps = enumerate_compositions(n)
        for a in comps:
            assert coarsens(a, a)
        for a, b in itertools.permutations(comps, 2):
            if coarsens(a, b) and coarsens(b, a):
                assert a == b
        for a, b, c in itertools.permutations(comps, 3):
            if coarsens(a, b) and coarsens(b, c):
                assert coarsens(a, c)


def test_triangle_order_chain():
    chain = [(4,), (3, 1), (1, 3), (2, 2), (2, 1, 1), (1, 2, 1), (1, 1, 2), (1, 1, 1, 1)]
    assert [tuple(c) for c in enumerate_compositions(4)] == chain
    assert triangle_cmp((1, 3), (2, 2)) == 1
    assert triangle_cmp((2, 2), (1, 3)) == -1
    assert triangle_cmp((2, 2), (2, 2)) == 0


def test_triangle_order_total():
    for n in range(1, 7):
        comps = enumerate_compositions(n)
        for a, b in itertools.combinations(comps, 2):
            assert triangle_cmp(a, b) == -triangle_cmp(b, a) != 0
        for a, b, c in itertools.permutations(comps, 3):
            if triangle_cmp(a, b) > 0 and triangle_cmp(b, c) > 0:
                assert triangle_cmp(a, c) > 0


def test_enumerate_compositions_counts():
    assert enumerate_compositions(0) == [()]
    assert len(enumerate_compositions(5)) == 16


def test_expand_to_weak():
    assert set(expand_to_weak((1, 2), 3)) == {(1, 2, 0), (1, 0, 2), (0, 1, 2)}
    assert expand_to_weak((7,), 1) == [(7,)]
    assert len(expand_to_weak((1, 1), 3)) == 3
    for m in range(1, 7):
        for a in enumerate_compositions(m):
            for n in range(len(a), 9):
                assert len(expand_to_weak(a, n)) == math.comb(n, len(a))
    with pytest.raises(ValueError):
        expand_to_weak((1, 1), 1)


def test_refinements():
    assert set(map(tuple, refinements((2, 1)))) == {(2, 1), (1, 1, 1)}
    assert refinements(()) == [()]


def test_validation():
    with pytest.raises(ValueError):
        Composition((1, 0, 2))
    with pytest.raises(ValueError):
        WeakComposition((1, -1))
    with pytest.raises(ValueError):
        Partition((1, 2))
    assert Partition((3, 1, 1)).size == 5


def test_parsing_and_formatting():
    assert parse_composition("(1,2,3)") == (1, 2, 3)
    assert parse_composition("1,2,3") == (1, 2, 3)
    assert parse_composition("()") == ()
    assert parse_weak_composition("(1,0,2)") == (1, 0, 2)
    assert format_composition((1, 3)) == "(1,3)"
    assert format_composition(()) == "()"
    with pytest.raises(ValueError):
        parse_composition("(1,x)")


def test_compositions_of_partition():
    assert [tuple(c) for c in compositions_of_partition((2, 1))] == [(2, 1), (1, 2)]
    assert compositions_of_partition((2, 2)) == [(2, 2)]
