"""Reverse tableaux, composition tableaux, and the maps between them.

A reverse tableau fills a partition (or skew) diagram with rows weakly
decreasing and columns strictly decreasing.  A composition tableau
fills a composition diagram with weakly decreasing rows, a strictly
increasing first column, and a triple condition on the zero-padded
rectangle.  Composition tableaux correspond to augmented fillings with
identity basement by deleting the basement and the empty rows.
"""
from __future__ import annotations

import itertools
from typing import Iterable, Iterator

from .compositions import (
    Composition,
    Partition,
    WeakComposition,
    collapse,
    foundation,
)
from .fillings import AugmentedFilling, is_ssaf_filling

Rows = tuple[tuple[int, ...], ...]


def _freeze(rows: Iterable[Iterable[int]]) -> Rows:
    return tuple(tuple(int(v) for v in r) for r in rows)


class SkewShape:
    """An outer partition with an inner partition removed."""

    __slots__ = ("outer", "inner")

    def __init__(self, outer, inner=()):
        self.outer = Partition(outer)
        self.inner = Partition(inner)
        if len(self.inner) > len(self.outer) or any(
            m > l for m, l in zip(self.inner, self.outer)
        ):
            raise ValueError(f"{tuple(self.inner)} not contained in {tuple(self.outer)}")

    def cells(self) -> list[tuple[int, int]]:
        out = []
        for i, l in enumerate(self.outer):
            m = self.inner[i] if i < len(self.inner) else 0
            out.extend((i, j) for j in range(m, l))
        return out

    @property
    def size(self) -> int:
        return len(self.cells())

    def __eq__(self, other):
        if not isinstance(other, SkewShape):
            return NotImplemented
        return self.outer == other.outer and self.inner == other.inner

    def __repr__(self):
        return f"SkewShape({tuple(self.outer)}, {tuple(self.inner)})"


def horizontal_strip(s: SkewShape) -> bool:
    """No two cells of the skew diagram share a column."""
    cols = [j for _, j in s.cells()]
    return len(cols) == len(set(cols))


def vertical_strip(s: SkewShape) -> bool:
    """No two cells of the skew diagram share a row."""
    rows = [i for i, _ in s.cells()]
    return len(rows) == len(set(rows))


class ReverseTableau:
    """Rows weakly decreasing, columns strictly decreasing.

    ``inner`` gives a skew inner shape; row i holds the entries of
    columns inner[i]..inner[i]+len(rows[i])-1 (0-based).
    """

    __slots__ = ("rows", "inner")

    def __init__(self, rows: Iterable[Iterable[int]] = (), inner: Iterable[int] = ()):
        self.rows = _freeze(rows)
        self.inner = tuple(int(v) for v in inner)

    def shape(self) -> Partition:
        if self.inner:
            raise ValueError("skew tableau has no straight shape")
        return Partition(len(r) for r in self.rows)

    def outer_shape(self) -> tuple[int, ...]:
        inner = self.inner + (0,) * (len(self.rows) - len(self.inner))
        return tuple(m + len(r) for m, r in zip(inner, self.rows))

    @property
    def size(self) -> int:
        return sum(len(r) for r in self.rows)

    def entries(self) -> list[int]:
        return [v for r in self.rows for v in r]

    def is_standard(self) -> bool:
        e = sorted(self.entries())
        return e == list(range(1, len(e) + 1))

    def weight(self) -> WeakComposition:
        counts: dict[int, int] = {}
        for v in self.entries():
            counts[v] = counts.get(v, 0) + 1
        m = max(counts, default=0)
        return WeakComposition(counts.get(i, 0) for i in range(1, m + 1))

    def __eq__(self, other):
        if not isinstance(other, ReverseTableau):
            return NotImplemented
        return self.rows == other.rows and self.inner == other.inner

    def __hash__(self):
        return hash((self.rows, self.inner))

    def __str__(self):
        inner = self.inner + (0,) * (len(self.rows) - len(self.inner))
        return "\n".join(
            ". " * m + " ".join(str(v) for v in r) for m, r in zip(inner, self.rows)
        )

    def __repr__(self):
        return f"ReverseTableau({list(map(list, self.rows))})"

    def to_json(self) -> dict:
        d = {"shape": list(self.outer_shape()), "rows": [list(r) for r in self.rows]}
        if self.inner:
            d["inner"] = list(self.inner)
        return d


def is_reversetableau(t: ReverseTableau) -> bool:
    """Check the two defining conditions (rows weak, columns strict)."""
    inner = t.inner + (0,) * (len(t.rows) - len(t.inner))
    outer = t.outer_shape()
    for i in range(1, len(outer)):
        if outer[i] > outer[i - 1] or inner[i] > inner[i - 1]:
            return False
        if i < len(t.inner) and t.inner[i] > outer[i]:
            return False
    for r in t.rows:
        if any(a < b for a, b in zip(r, r[1:])):
            return False
    grid: dict[tuple[int, int], int] = {}
    for i, (m, row) in enumerate(zip(inner, t.rows)):
        for off, v in enumerate(row):
            if v < 1:
                return False
            grid[(i, m + off)] = v
    for (i, j), v in grid.items():
        if (i + 1, j) in grid and grid[(i + 1, j)] >= v:
            return False
    return True


def rt_descents(t: ReverseTableau) -> frozenset[int]:
    """Values i such that i+1 is not strictly left of i (standard input)."""
    if not t.is_standard():
        raise ValueError("descent set requires a standard tableau")
    col = {}
    for i, row in enumerate(t.rows):
        off = t.inner[i] if i < len(t.inner) else 0
        for j, v in enumerate(row):
            col[v] = off + j
    n = t.size
    return frozenset(i for i in range(1, n) if not col[i + 1] < col[i])


def standardize(t: ReverseTableau) -> ReverseTableau:
    """Relabel with 1..n, breaking equal entries by reading order.

    Reading order is right to left within rows, top row first; the
    entry read first in its value class receives the smaller label.
    """
    if t.inner:
        raise ValueError("standardize expects a straight shape")
    cells = [
        (v, i, -j, (i, j))
        for i, row in enumerate(t.rows)
        for j, v in enumerate(row)
    ]
    cells.sort()
    labels = {cell: k + 1 for k, (_, _, _, cell) in enumerate(cells)}
    rows = [
        [labels[(i, j)] for j in range(len(row))] for i, row in enumerate(t.rows)
    ]
    return ReverseTableau(rows)


# -- composition tableaux ----------------------------------------------


class CompositionTableau:
    """Filling of a composition diagram by rows."""

    __slots__ = ("rows",)

    def __init__(self, rows: Iterable[Iterable[int]] = ()):
        self.rows = _freeze(rows)
        if any(len(r) == 0 for r in self.rows):
            raise ValueError("composition tableau rows must be nonempty")

    def shape(self) -> Composition:
        return Composition(len(r) for r in self.rows)

    @property
    def size(self) -> int:
        return sum(len(r) for r in self.rows)

    def entries(self) -> list[int]:
        return [v for r in self.rows for v in r]

    def is_standard(self) -> bool:
        e = sorted(self.entries())
        return e == list(range(1, len(e) + 1))

    def weight(self) -> WeakComposition:
        counts: dict[int, int] = {}
        for v in self.entries():
            counts[v] = counts.get(v, 0) + 1
        m = max(counts, default=0)
        return WeakComposition(counts.get(i, 0) for i in range(1, m + 1))

    def __eq__(self, other):
        if not isinstance(other, CompositionTableau):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __str__(self):
        return "\n".join(" ".join(str(v) for v in r) for r in self.rows)

    def __repr__(self):
        return f"CompositionTableau({list(map(list, self.rows))})"

    def to_json(self) -> dict:
        return {"shape": list(self.shape()), "rows": [list(r) for r in self.rows]}


def is_comt(t: CompositionTableau) -> bool:
    """Weakly decreasing rows, strict first column, triple condition."""
    rows = t.rows
    if not rows:
        return True
    for r in rows:
        if any(v < 1 for v in r):
            return False
        if any(a < b for a, b in zip(r, r[1:])):
            return False
    first = [r[0] for r in rows]
    if any(a >= b for a, b in zip(first, first[1:])):
        return False
    m = max(len(r) for r in rows)

    def padded(i: int, k: int) -> int:
        # 1-based row/column on the zero-padded rectangle
        row = rows[i - 1]
        return row[k - 1] if k <= len(row) else 0

    l = len(rows)
    for i in range(1, l + 1):
        for j in range(i + 1, l + 1):
            for k in range(2, m + 1):
                vjk = padded(j, k)
                if vjk != 0 and vjk >= padded(i, k) and vjk <= padded(i, k - 1):
                    return False
    return True


def comt_descents(t: CompositionTableau) -> frozenset[int]:
    """Values i such that i+1 is not strictly left of i (standard input)."""
    if not t.is_standard():
        raise ValueError("descent set requires a standard tableau")
    col = {}
    for row in t.rows:
        for j, v in enumerate(row):
            col[v] = j
    n = t.size
    return frozenset(i for i in range(1, n) if not col[i + 1] < col[i])


# -- correspondence with augmented fillings -----------------------------


def comt_to_ssaf(t: CompositionTableau, n: int | None = None) -> AugmentedFilling:
    """Place each row beside the basement entry matching its first entry."""
    if t.rows:
        tallest = max(r[0] for r in t.rows)
    else:
        tallest = 0
    if n is None:
        n = tallest
    if n < tallest:
        raise ValueError(f"basement of {n} rows cannot hold first column {tallest}")
    rows: list[tuple[int, ...]] = [()] * n
    for r in t.rows:
        if rows[r[0] - 1]:
            raise ValueError("two rows share a first entry")
        rows[r[0] - 1] = r
    shape = WeakComposition(len(r) for r in rows)
    return AugmentedFilling(shape, rows, rule="id", nvars=n)


def ssaf_to_comt(f: AugmentedFilling) -> CompositionTableau:
    """Delete the basement and the empty rows."""
    return CompositionTableau([r for r in f.rows if r])


def is_ssaf(f: AugmentedFilling) -> bool:
    return is_ssaf_filling(f)


# -- the column-filling bijection with reverse tableaux ------------------


def rt_to_ssaf(t: ReverseTableau, n: int | None = None) -> AugmentedFilling:
    """Refill the columns of a reverse tableau against a basement.

    Entries of column k are taken top to bottom and placed in column k,
    each in the highest row whose previous column is filled and where
    the placement keeps the row weakly decreasing.  Column multisets
    are preserved.
    """
    if t.inner:
        raise ValueError("expects a straight shape")
    if n is None:
        n = max(t.entries(), default=0)
    width = len(t.rows[0]) if t.rows else 0
    rows: list[list[int]] = [[] for _ in range(n)]
    for k in range(width):
        column = [row[k] for row in t.rows if len(row) > k]
        for v in column:
            placed = False
            for i in range(n):
                if len(rows[i]) != k:
                    continue
                left = i + 1 if k == 0 else rows[i][k - 1]
                if v <= left:
                    rows[i].append(v)
                    placed = True
                    break
            if not placed:
                raise ValueError(f"no admissible row for entry {v} in column {k + 1}")
    shape = WeakComposition(len(r) for r in rows)
    return AugmentedFilling(shape, rows, rule="id", nvars=n)


def rt_to_comt(t: ReverseTableau) -> CompositionTableau:
    return ssaf_to_comt(rt_to_ssaf(t))


def ssaf_to_rt(f: AugmentedFilling) -> ReverseTableau:
    """Sort each column decreasingly and top-justify."""
    width = max((len(r) for r in f.rows), default=0)
    cols = []
    for k in range(width):
        col = sorted((r[k] for r in f.rows if len(r) > k), reverse=True)
        cols.append(col)
    depth = max((len(c) for c in cols), default=0)
    rows = []
    for i in range(depth):
        rows.append([c[i] for c in cols if len(c) > i])
    return ReverseTableau(rows)


def comt_to_rt(t: CompositionTableau) -> ReverseTableau:
    return ssaf_to_rt(comt_to_ssaf(t))


# -- enumeration ---------------------------------------------------------


def enumerate_comts(
    a: Iterable[int],
    max_entry: int,
    first_column: Iterable[int] | None = None,
) -> Iterator[CompositionTableau]:
    """All composition tableaux of shape ``a`` with entries in [max_entry].

    ``first_column`` pins the (strictly increasing) first-column values.
    Cells are filled column by column with incremental triple checks,
    so invalid prefixes are pruned early.
    """
    shape = Composition(a)
    if not shape:
        if max_entry >= 0:
            yield CompositionTableau()
        return
    l = len(shape)
    m = max(shape)
    pinned = None if first_column is None else sorted(first_column)
    if pinned is not None and len(pinned) != l:
        return
    grid: list[list[int]] = [[0] * g for g in shape]

    def cell_value(i: int, k: int) -> int:
        # zero-padded access, 0-based indices
        return grid[i][k] if shape[i] > k else 0

    def fill(positions: list[tuple[int, int]], pos: int) -> Iterator[CompositionTableau]:
        if pos == len(positions):
            yield CompositionTableau([tuple(r) for r in grid])
            return
        i, k = positions[pos]
        if k == 0:
            lo = grid[i - 1][0] + 1 if i > 0 else 1
            if pinned is not None:
                v = pinned[i]
                if v < lo or v > max_entry:
                    return
                candidates = range(v, v + 1)
            else:
                candidates = range(lo, max_entry + 1)
        else:
            candidates = range(1, grid[i][k - 1] + 1)
        for v in candidates:
            if k >= 1:
                # triple condition against every higher row; lower rows in
                # this column are not placed yet (column-major order), so
                # their checks run when they are placed
                ok = True
                for ii in range(i):
                    if v >= cell_value(ii, k) and v <= cell_value(ii, k - 1):
                        ok = False
                        break
                if not ok:
                    continue
            grid[i][k] = v
            yield from fill(positions, pos + 1)
        grid[i][k] = 0

    positions = [(i, k) for k in range(m) for i in range(l) if shape[i] > k]
    yield from fill(positions, 0)


def enumerate_standard_comts(a: Iterable[int]) -> Iterator[CompositionTableau]:
    """All composition tableaux of shape ``a`` using 1..n exactly once."""
    shape = Composition(a)
    n = shape.size
    for t in enumerate_comts(shape, n):
        if t.is_standard():
            yield t


def enumerate_ssafs(g: Iterable[int]) -> Iterator[AugmentedFilling]:
    """All valid augmented fillings of the given weak shape."""
    g = WeakComposition(g)
    n = len(g)
    base = sorted(foundation(g))
    if not base:
        yield AugmentedFilling(g, [()] * n, rule="id", nvars=n)
        return
    for t in enumerate_comts(collapse(g), n, first_column=base):
        f = comt_to_ssaf(t, n=n)
        if f.shape == g:
            yield f


def enumerate_reverse_tableaux(
    shape: Iterable[int], max_entry: int
) -> Iterator[ReverseTableau]:
    """All reverse tableaux of a partition shape with entries in [max_entry]."""
    shape = Partition(shape)
    rows: list[list[int]] = [[0] * g for g in shape]
    cells = [(i, j) for i, g in enumerate(shape) for j in range(g)]

    def fill(pos: int) -> Iterator[ReverseTableau]:
        if pos == len(cells):
            yield ReverseTableau([tuple(r) for r in rows])
            return
        i, j = cells[pos]
        hi = max_entry
        if j > 0:
            hi = min(hi, rows[i][j - 1])
        if i > 0:
            hi = min(hi, rows[i - 1][j] - 1)
        for v in range(hi, 0, -1):
            rows[i][j] = v
            yield from fill(pos + 1)
        rows[i][j] = 0

    yield from fill(0)


def enumerate_standard_reverse_tableaux(
    shape: Iterable[int],
) -> Iterator[ReverseTableau]:
    shape = Partition(shape)
    n = shape.size
    for t in enumerate_reverse_tableaux(shape, n):
        if t.is_standard():
            yield t


def weight(obj) -> WeakComposition:
    """Entry multiplicities of a tableau or filling (basement excluded)."""
    return obj.weight()
