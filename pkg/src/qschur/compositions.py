"""Compositions, weak compositions, partitions, and the orders on them.

Values are immutable tuples, so they hash and compare like plain tuples and
can index sparse coefficient maps directly.
"""
from __future__ import annotations

import itertools
from typing import Iterable, Iterator


class WeakComposition(tuple):
    """A finite sequence of nonnegative integers.

    Trailing zeros are significant: ``(1, 2, 0)`` and ``(1, 2)`` are
    different weak compositions (the number of parts is data).
    """

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()):
        parts = tuple(int(p) for p in parts)
        for p in parts:
            if p < 0:
                raise ValueError(f"negative part in weak composition: {parts}")
        return super().__new__(cls, parts)

    @property
    def size(self) -> int:
        return sum(self)

    def __repr__(self) -> str:
        return f"{type(self).__name__}({tuple(self)})"


class Composition(WeakComposition):
    """A finite sequence of strictly positive integers."""

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()):
        self = super().__new__(cls, parts)
        for p in self:
            if p == 0:
                raise ValueError(f"zero part in composition: {tuple(self)}")
        return self

    @property
    def length(self) -> int:
        return len(self)


class Partition(Composition):
    """A weakly decreasing composition."""

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()):
        self = super().__new__(cls, parts)
        for a, b in zip(self, self[1:]):
            if a < b:
                raise ValueError(f"parts not weakly decreasing: {tuple(self)}")
        return self


def collapse(g: Iterable[int]) -> Composition:
    """Drop all zero parts, preserving the order of the rest."""
    return Composition(p for p in g if p != 0)


def to_partition(g: Iterable[int]) -> Partition:
    """Sort the positive parts weakly decreasing."""
    return Partition(sorted((p for p in g if p != 0), reverse=True))


def foundation(g: Iterable[int]) -> frozenset[int]:
    """Positions (1-based) of the nonzero parts."""
    return frozenset(i + 1 for i, p in enumerate(g) if p != 0)


def reversal(a: Iterable[int]) -> Composition:
    return Composition(reversed(tuple(a)))


def subset_of(b: Iterable[int], n: int) -> frozenset[int]:
    """The partial-sum subset of [n-1] encoding a composition of n."""
    b = Composition(b)
    if b.size != n:
        raise ValueError(f"composition {tuple(b)} does not have size {n}")
    sums = itertools.accumulate(b[:-1])
    return frozenset(sums)


def composition_of(s: Iterable[int], n: int) -> Composition:
    """Inverse of :func:`subset_of`: successive differences padded to n."""
    elems = sorted(set(s))
    if any(e < 1 or e > n - 1 for e in elems):
        raise ValueError(f"subset {elems} not contained in [{n - 1}]")
    parts = []
    prev = 0
    for e in elems:
        parts.append(e - prev)
        prev = e
    parts.append(n - prev)
    return Composition(parts)


def coarsens(a: Iterable[int], b: Iterable[int]) -> bool:
    """True iff ``a`` can be obtained by summing adjacent parts of ``b``."""
    a, b = Composition(a), Composition(b)
    if a.size != b.size:
        return False
    n = a.size
    if n == 0:
        return True
    return subset_of(a, n) <= subset_of(b, n)


def refinements(a: Iterable[int]) -> list[Composition]:
    """All compositions obtained by splitting parts of ``a``."""
    a = Composition(a)
    n = a.size
    if n == 0:
        return [a]
    forced = subset_of(a, n)
    free = [i for i in range(1, n) if i not in forced]
    out = []
    for extra in _subsets(free):
        out.append(composition_of(forced | set(extra), n))
    return out


def _subsets(items: list[int]) -> Iterator[tuple[int, ...]]:
    for r in range(len(items) + 1):
        yield from itertools.combinations(items, r)


def triangle_key(a: Iterable[int]) -> tuple:
    """Sort key whose descending order is the triangle order.

    Compositions of equal size are compared first by the lexicographic
    order of their sorted partitions, then lexicographically.
    """
    a = Composition(a)
    return (tuple(to_partition(a)), tuple(a))


def triangle_cmp(a: Iterable[int], b: Iterable[int]) -> int:
    """Return +1, 0, -1 as ``a`` is above, equal to, or below ``b``."""
    a, b = Composition(a), Composition(b)
    if a.size != b.size:
        raise ValueError("triangle order only compares compositions of equal size")
    ka, kb = triangle_key(a), triangle_key(b)
    if ka > kb:
        return 1
    if ka < kb:
        return -1
    return 0


def enumerate_compositions(n: int) -> list[Composition]:
    """All 2^(n-1) compositions of n, largest first in the triangle order."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        return [Composition()]
    comps = [composition_of(s, n) for s in _subsets(list(range(1, n)))]
    comps.sort(key=triangle_key, reverse=True)
    return comps


def compositions_of_partition(l: Iterable[int]) -> list[Composition]:
    """All distinct rearrangements of the parts of ``l``."""
    l = tuple(p for p in l if p != 0)
    return sorted(
        (Composition(p) for p in set(itertools.permutations(l))),
        key=triangle_key,
        reverse=True,
    )


def expand_to_weak(a: Iterable[int], n: int) -> list[WeakComposition]:
    """All weak compositions with n parts that collapse to ``a``."""
    a = Composition(a)
    if n < len(a):
        raise ValueError(f"cannot place {len(a)} parts into {n} slots")
    out = []
    for positions in itertools.combinations(range(n), len(a)):
        parts = [0] * n
        for pos, val in zip(positions, a):
            parts[pos] = val
        out.append(WeakComposition(parts))
    return out


def parse_composition(text: str) -> Composition:
    """Parse ``"(1,2,3)"`` or ``"1,2,3"`` (empty composition: ``"()"``)."""
    body = text.strip()
    if body.startswith("(") and body.endswith(")"):
        body = body[1:-1]
    body = body.strip().rstrip(",")
    if not body:
        return Composition()
    try:
        parts = [int(tok) for tok in body.split(",")]
    except ValueError:
        raise ValueError(f"malformed composition: {text!r}") from None
    return Composition(parts)


def parse_weak_composition(text: str) -> WeakComposition:
    """Like :func:`parse_composition` but zero parts are allowed."""
    body = text.strip()
    if body.startswith("(") and body.endswith(")"):
        body = body[1:-1]
    body = body.strip().rstrip(",")
    if not body:
        return WeakComposition()
    try:
        parts = [int(tok) for tok in body.split(",")]
    except ValueError:
        raise ValueError(f"malformed weak composition: {text!r}") from None
    return WeakComposition(parts)


def format_composition(a: Iterable[int]) -> str:
    return "(" + ",".join(str(p) for p in a) + ")"
