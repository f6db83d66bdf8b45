import pytest

from qschur.compositions import composition_of, enumerate_compositions, foundation
from qschur.fillings import AugmentedFilling
from qschur.tableaux import (
    comt_to_rt,
    CompositionTableau,
    ReverseTableau,
    SkewShape,
    comt_descents,
    comt_to_ssaf,
    enumerate_comts,
    enumerate_reverse_tableaux,
    enumerate_ssafs,
    enumerate_standard_comts,
    enumerate_standard_reverse_tableaux,
    horizontal_strip,
    is_comt,
    is_reversetableau,
    is_ssaf,
    rt_descents,
    rt_to_ssaf,
    ssaf_to_comt,
    ssaf_to_rt,
    standardize,
    vertical_strip,
)


def test_is_reversetableau():
    assert is_reversetableau(ReverseTableau([[3, 1], [2]]))
    assert not is_reversetableau(ReverseTableau([[1, 2]]))
    assert not is_reversetableau(ReverseTableau([[2, 2], [2]]))


def test_is_reversetableau_skew():
    # outer (3,2), inner (1,): row 0 fills columns 1..2, row 1 fills 0..1
    assert is_reversetableau(ReverseTableau([[2, 1], [3, 1]], inner=(1,)))
    assert not is_reversetableau(ReverseTableau([[2, 1], [3, 2]], inner=(1,)))


def test_json_round_trip_fields():
    t = CompositionTableau([[1], [3, 2]])
    assert t.to_json() == {"shape": [1, 2], "rows": [[1], [3, 2]]}
    rt = ReverseTableau([[3, 1], [2]])
    assert rt.to_json() == {"shape": [2, 1], "rows": [[3, 1], [2]]}
    skew = ReverseTableau([[2, 1]], inner=(1,))
    assert skew.to_json()["inner"] == [1]


def test_rt_descents():
    assert rt_descents(ReverseTableau([[3, 1], [2]])) == {2}
    for n in range(1, 7):
        row = ReverseTableau([list(range(n, 0, -1))])
        assert rt_descents(row) == frozenset()
    t = ReverseTableau([[6, 5, 2], [4, 3], [1]])
    assert rt_descents(t) == {1, 4}
    assert composition_of(rt_descents(t), 6) == (1, 3, 2)


def test_strips():
    lam = (4, 3, 2, 2)
    assert horizontal_strip(SkewShape(lam, (3, 2, 2)))
    assert vertical_strip(SkewShape(lam, (4, 2, 1, 1)))
    assert horizontal_strip(SkewShape(lam, lam))
    assert vertical_strip(SkewShape(lam, lam))
    assert not horizontal_strip(SkewShape((2, 2), (1,)))
    with pytest.raises(ValueError):
        SkewShape((2,), (3,))


def test_is_comt():
    assert is_comt(CompositionTableau([[5, 4, 3, 1], [6], [8, 7, 2]]))
    assert is_comt(CompositionTableau([[1], [3, 2]]))
    assert is_comt(CompositionTableau([[1], [3, 3]]))
    assert not is_comt(CompositionTableau([[2], [1]]))
    # the triple condition on the padded rectangle
    assert not is_comt(CompositionTableau([[2], [3, 2]]))


def test_comt_descents():
    assert comt_descents(CompositionTableau([[5, 4, 3, 1], [6], [8, 7, 2]])) == {2, 5, 6}
    t = CompositionTableau([[1], [3, 2]])
    assert comt_descents(t) == {1}
    assert composition_of(comt_descents(t), 3) == (1, 2)
    assert comt_descents(CompositionTableau([[2, 1]])) == frozenset()


def test_is_ssaf():
    assert is_ssaf(AugmentedFilling((1, 0, 2), [[1], [], [3, 2]]))
    assert is_ssaf(AugmentedFilling((1, 0, 2), [[1], [], [3, 3]]))
    assert not is_ssaf(AugmentedFilling((0, 2), [[], [1, 2]]))


def test_comt_ssaf_bijection_example():
    t = CompositionTableau([[5, 4, 3, 1], [6], [8, 7, 2]])
    f = comt_to_ssaf(t)
    assert tuple(f.shape) == (0, 0, 0, 0, 4, 1, 0, 3)
    assert is_ssaf(f)
    assert ssaf_to_comt(f) == t
    assert ssaf_to_comt(comt_to_ssaf(CompositionTableau())) == CompositionTableau()
    small = CompositionTableau([[1], [3, 2]])
    assert tuple(comt_to_ssaf(small).shape) == (1, 0, 2)


def test_column_refill_example():
    t = ReverseTableau([[8, 7, 3, 1], [6, 4, 2], [5]])
    f = rt_to_ssaf(t)
    assert ssaf_to_comt(f) == CompositionTableau([[5, 4, 3, 1], [6], [8, 7, 2]])
    assert ssaf_to_rt(f) == t
    lone = rt_to_ssaf(ReverseTableau([[4]]))
    assert lone.rows[3] == (4,)


def test_descent_tableau_image():
    from qschur.insertion import canonical_descent_tableau

    t = canonical_descent_tableau((1, 3, 2))
    f = rt_to_ssaf(t)
    assert ssaf_to_comt(f) == CompositionTableau([[1], [4, 3, 2], [6, 5]])


def test_enumerate_comts():
    comts = {t.rows for t in enumerate_comts((1, 2), 3)}
    assert comts == {
        ((1,), (2, 2)),
        ((1,), (3, 2)),
        ((1,), (3, 3)),
        ((2,), (3, 3)),
    }
    assert len(list(enumerate_comts((1,), 1))) == 1
    assert len(list(enumerate_comts((1, 2), 2))) == 1


def test_enumerate_standard_comts():
    std = list(enumerate_standard_comts((1, 2)))
    assert [t.rows for t in std] == [((1,), (3, 2))]
    for n in range(1, 6):
        only = list(enumerate_standard_comts((n,)))
        assert [t.rows for t in only] == [(tuple(range(n, 0, -1)),)]
    assert len(list(enumerate_standard_comts((2, 1)))) == 1


def test_weights():
    assert tuple(AugmentedFilling((1, 0, 2), [[1], [], [3, 3]]).weight()) == (1, 0, 2)
    assert tuple(CompositionTableau([[1], [2, 2]]).weight()) == (1, 2)
    t = CompositionTableau([[1], [3, 2]])
    assert tuple(t.weight()) == (1, 1, 1)


def test_standardize():
    assert standardize(ReverseTableau([[2, 2], [1]])) == ReverseTableau([[3, 2], [1]])
    std = ReverseTableau([[3, 1], [2]])
    assert standardize(std) == std
    seen = set()
    for t in enumerate_reverse_tableaux((2, 1), 3):
        if tuple(t.weight()) == (1, 1, 1):
            seen.add(standardize(t).rows)
    assert seen == {((3, 2), (1,)), ((3, 1), (2,))}


def test_enumerated_objects_are_valid_and_biject():
    for n in range(1, 7):
        for a in enumerate_compositions(n):
            for t in enumerate_comts(a, 6):
                assert is_comt(t)
                f = comt_to_ssaf(t)
                assert is_ssaf(f)
                assert ssaf_to_comt(f) == t
                assert tuple(f.weight()) == tuple(t.weight())
                for i, row in enumerate(f.rows, start=1):
                    if row:
                        assert row[0] == i
                cols = {}
                for r in f.rows:
                    for j, v in enumerate(r):
                        cols.setdefault(j, []).append(v)
                for col in cols.values():
                    assert len(col) == len(set(col))


def test_ssaf_enumeration_matches_shape():
    for g in [(1, 0, 2), (0, 2), (2, 0, 1), (0, 0, 3)]:
        for f in enumerate_ssafs(g):
            assert tuple(f.shape) == g
            assert is_ssaf(f)
    assert len(list(enumerate_ssafs((1, 0, 2)))) == 2


def _partitions_upto(m):
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


def test_column_refill_round_trip_exhaustive():
    for lam in _partitions_upto(6):
        for t in enumerate_standard_reverse_tableaux(lam):
            f = rt_to_ssaf(t)
            assert ssaf_to_rt(f) == t
            for k in range(max(lam)):
                col_t = sorted(row[k] for row in t.rows if len(row) > k)
                col_f = sorted(r[k] for r in f.rows if len(r) > k)
                assert col_t == col_f


def test_standardization_fibers_are_fundamental():
    # the tie-breaking convention of standardize is pinned by the
    # requirement that each fiber's monomial sum is a fundamental
    # quasisymmetric polynomial indexed by the descent composition
    from qschur.polynomial import XPoly
    from qschur.qsym import fundamental_qsym_poly

    N = 4
    for lam in _partitions_upto(5):
        n_cells = sum(lam)
        classes = {}
        for t in enumerate_reverse_tableaux(lam, N):
            s = standardize(t)
            assert is_reversetableau(s) and s.is_standard()
            assert standardize(s) == s
            classes.setdefault(s, []).append(t)
        for s, members in classes.items():
            beta = composition_of(rt_descents(s), n_cells)
            total = XPoly.zero(N)
            for t in members:
                w = tuple(t.weight())
                total += XPoly.monomial(N, w + (0,) * (N - len(w)))
            assert total == fundamental_qsym_poly(beta, N)


def test_standardization_preserves_refilled_shape():
    # a tableau and its standardization land on fillings of the same
    # collapsed shape, which is what makes descent-grouping well defined
    from qschur.compositions import collapse

    for lam in _partitions_upto(5):
        for t in enumerate_reverse_tableaux(lam, 5):
            f1 = rt_to_ssaf(t)
            f2 = rt_to_ssaf(standardize(t))
            assert collapse(f1.shape) == collapse(f2.shape)
