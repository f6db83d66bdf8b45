import pytest

from qschur.compositions import (
    Partition,
    compositions_of_partition,
    enumerate_compositions,
    to_partition,
)
from qschur.pieri import (
    col_op,
    cover_relation,
    horizontal_strips_over,
    pieri_col,
    pieri_row,
    product_qschur,
    rem,
    row_op,
    strip_column_multiset,
    strip_column_set,
    vertical_strips_over,
)
from qschur.polynomial import QtPoly
from qschur.qsym import QSymExpr, qsym_unit, schur_in_qschur


def test_rem():
    assert rem((1, 1, 3), 1) == (1, 3)
    assert rem((1, 2, 3), 3) == (1, 2, 2)
    assert rem((1, 2, 3), 5) is None
    assert rem((1,), 1) == ()
    assert rem((2, 1, 2), 2) == (2, 1, 1)


def test_row_and_col_ops():
    assert row_op((1, 2, 3), {2, 3}) == (1, 2, 1)
    assert col_op((1, 2, 3), (2, 3)) == (1, 1, 2)
    assert row_op((1, 4), {4}) == (1, 3)
    assert row_op((2, 2), set()) == (2, 2)
    assert col_op((1, 1), (1, 1)) == ()
    assert col_op((1, 1), (1, 1)) is not None
    assert row_op((1, 2), {3}) is None


def test_rem_size_property():
    for n in range(1, 6):
        for a in enumerate_compositions(n):
            for s in range(1, n + 1):
                r = rem(a, s)
                if r is not None:
                    assert r.size == a.size - 1


def test_strips():
    assert sorted(map(tuple, horizontal_strips_over((3, 1), 1))) == [
        (3, 1, 1),
        (3, 2),
        (4, 1),
    ]
    assert sorted(map(tuple, vertical_strips_over((1,), 2))) == [(1, 1, 1), (2, 1)]
    assert sorted(map(tuple, horizontal_strips_over((), 3))) == [(3,)]
    assert strip_column_set((4, 1), (3, 1)) == {4}
    assert strip_column_multiset((2, 1, 1), (1,)) == (1, 1, 2)


def test_pieri_row_worked_example():
    assert pieri_row((1, 3), 1) == QSymExpr(
        "S", {(1, 4): 1, (2, 3): 1, (1, 3, 1): 1, (1, 1, 3): 1}
    )


def test_pieri_trivial():
    assert pieri_row((), 3) == qsym_unit("S", (3,))
    assert pieri_col((), 3) == qsym_unit("S", (1, 1, 1))
    for n in range(0, 4):
        for a in enumerate_compositions(n):
            assert pieri_row(a, 1) == pieri_col(a, 1)


def test_pieri_against_products():
    for m in range(0, 6):
        for a in enumerate_compositions(m):
            for n in (1, 2, 3):
                assert pieri_row(a, n) == product_qschur((n,), a)
                assert pieri_col(a, n) == product_qschur((1,) * n, a)


def test_pieri_coefficients_are_one():
    for m in range(0, 6):
        for a in enumerate_compositions(m):
            for n in (1, 2, 3):
                for c in pieri_row(a, n).terms.values():
                    assert c == QtPoly.one()
                for c in pieri_col(a, n).terms.values():
                    assert c == QtPoly.one()


def test_signed_product():
    p = product_qschur((2, 1), (2, 1))
    expected = QSymExpr(
        "S",
        {
            (4, 2): 1,
            (4, 1, 1): 1,
            (3, 2, 1): 2,
            (3, 1, 2): 1,
            (2, 3, 1): 2,
            (1, 3, 2): 1,
            (3, 1, 1, 1): 1,
            (2, 2, 2): 1,
            (2, 2, 1, 1): 1,
            (2, 1, 2, 1): 1,
            (1, 4, 1): -1,
            (1, 3, 1, 1): -1,
            (1, 1, 3, 1): -1,
            (1, 2, 2, 1): -1,
        },
    )
    assert p == expected


def test_product_identity():
    assert product_qschur((), (2, 1)) == qsym_unit("S", (2, 1))
    assert product_qschur((3,), ()) == qsym_unit("S", (3,))
    assert product_qschur((), ()) == qsym_unit("S", ())


def test_classical_collapse():
    # summing the refined row rule over all rearrangements gives the
    # partition-level horizontal strip expansion
    def partitions_upto(m):
        out = []

        def rec(rest, mx, cur):
            if rest == 0:
                out.append(tuple(cur))
                return
            for p in range(min(rest, mx), 0, -1):
                cur.append(p)
                rec(rest - p, p, cur)
                cur.pop()

        for k in range(1, m + 1):
            rec(k, k, [])
        return out

    for lam in partitions_upto(4):
        for n in (1, 2):
            total = QSymExpr("S")
            for a in compositions_of_partition(lam):
                total = total + pieri_row(a, n)
            expected = QSymExpr("S")
            for mu in horizontal_strips_over(lam, n):
                expected = expected + schur_in_qschur(mu)
            assert total == expected


def test_cover_relations():
    covers = {b for b in pieri_row((1, 3), 1).terms}
    assert covers == {(1, 4), (2, 3), (1, 3, 1), (1, 1, 3)}
    assert cover_relation((), (1,))
    assert not cover_relation((), (2,))


def test_partition_covers_match_cell_additions():
    def partitions_upto(m):
        out = []

        def rec(rest, mx, cur):
            if rest == 0:
                out.append(tuple(cur))
                return
            for p in range(min(rest, mx), 0, -1):
                cur.append(p)
                rec(rest - p, p, cur)
                cur.pop()

        for k in range(0, m + 1):
            if k == 0:
                out.append(())
            else:
                rec(k, k, [])
        return out

    for lam in partitions_upto(5):
        covered = {
            b for b in pieri_row(lam, 1).terms if tuple(to_partition(b)) == tuple(b)
        }
        classical = {tuple(mu) for mu in horizontal_strips_over(lam, 1)}
        assert {tuple(b) for b in covered} == classical
