"""Named property suites with bounded exhaustive checks.

Each suite function returns a list of failure descriptions (empty means
the suite passed) so the command line can print minimal
counterexamples and exit accordingly.  The same suites back the test
suite.
"""
from __future__ import annotations

import itertools
from typing import Callable

from .compositions import (
    Composition,
    composition_of,
    compositions_of_partition,
    enumerate_compositions,
    expand_to_weak,
    subset_of,
    to_partition,
    triangle_cmp,
)
from .fillings import AugmentedFilling, enumerate_fillings, is_ssaf_filling
from .insertion import (
    augmented_row_uniqueness_check,
    commutation_check,
    row_bumping_check,
    schensted_insert,
    skyline_insert,
    skyline_uninsert,
)
from .pieri import pieri_col, pieri_row, product_qschur, rem
from .polynomial import QtPoly, XPoly
from .qsym import (
    demazure_atom,
    equals_fundamental_shape,
    equals_monomial_shape,
    f_to_m,
    monomial_qsym_poly,
    qschur_in_fundamental,
    qschur_in_monomial,
    qschur_polynomial,
    qsym_to_poly,
    qsym_unit,
    schur_in_monomial_oracle,
    transition_matrix,
)
from .macdonald import (
    hall_littlewood_p,
    hall_littlewood_p_oracle,
    hall_littlewood_qsym,
    macdonald_integral_form,
    macdonald_j_fundamental,
    ns_hall_littlewood,
)
from .tableaux import (
    comt_to_ssaf,
    enumerate_comts,
    enumerate_reverse_tableaux,
    enumerate_ssafs,
    enumerate_standard_reverse_tableaux,
    is_comt,
    is_reversetableau,
    is_ssaf,
    rt_to_ssaf,
    ssaf_to_comt,
    ssaf_to_rt,
)


def _partitions_upto(m: int):
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


def _weak_comps(total: int, parts: int):
    if parts == 0:
        if total == 0:
            yield ()
        return
    for p in range(total + 1):
        for rest in _weak_comps(total - p, parts - 1):
            yield (p,) + rest


def suite_core(max_size: int = 6) -> list[str]:
    fails = []
    for n in range(0, max_size + 1):
        comps = enumerate_compositions(n)
        if len(comps) != (1 if n == 0 else 2 ** (n - 1)):
            fails.append(f"composition count wrong for n={n}")
        for b in comps:
            if n and composition_of(subset_of(b, n), n) != b:
                fails.append(f"subset round trip fails for {tuple(b)}")
        for a, b in itertools.combinations(comps, 2):
            if triangle_cmp(a, b) != -triangle_cmp(b, a) or triangle_cmp(a, b) == 0:
                fails.append(f"triangle order not antisymmetric on {a},{b}")
        for a in comps:
            for nn in range(len(a), max_size + 2):
                import math

                if len(expand_to_weak(a, nn)) != math.comb(nn, len(a)):
                    fails.append(f"weak expansion count wrong for {tuple(a)},{nn}")
    return fails


def suite_tableaux(max_size: int = 5) -> list[str]:
    fails = []
    for n in range(1, max_size + 1):
        for a in enumerate_compositions(n):
            for t in enumerate_comts(a, max_size + 1):
                if not is_comt(t):
                    fails.append(f"enumerated non-tableau {t.rows}")
                    continue
                f = comt_to_ssaf(t)
                if not is_ssaf(f):
                    fails.append(f"flattened tableau fails filling checks {t.rows}")
                if ssaf_to_comt(f) != t:
                    fails.append(f"round trip broken for {t.rows}")
                if tuple(f.weight()) != tuple(t.weight()):
                    fails.append(f"weight not preserved for {t.rows}")
                for i, row in enumerate(f.rows, start=1):
                    if row and row[0] != i:
                        fails.append(f"first column of row {i} is {row[0]} in {f.rows}")
    for lam in _partitions_upto(max_size):
        for t in enumerate_standard_reverse_tableaux(lam):
            f = rt_to_ssaf(t)
            back = ssaf_to_rt(f)
            if back != t:
                fails.append(f"column refill round trip broken for {t.rows}")
            for k in range(max(lam)):
                col_t = sorted(row[k] for row in t.rows if len(row) > k)
                col_f = sorted(r[k] for r in f.rows if len(r) > k)
                if col_t != col_f:
                    fails.append(f"column multiset changed for {t.rows}")
    return fails


def suite_insertion(max_size: int = 5) -> list[str]:
    fails = []
    kmax = max_size + 1
    for n in range(1, max_size + 1):
        for a in enumerate_compositions(n):
            for t in enumerate_comts(a, max_size):
                for k in range(1, kmax + 1):
                    res = skyline_insert(t, k)
                    if not is_comt(res.result):
                        fails.append(f"insertion broke {t.rows} <- {k}")
                    if not commutation_check(t, k):
                        fails.append(f"commutation fails for {t.rows} <- {k}")
                    if not augmented_row_uniqueness_check(t, k):
                        fails.append(f"augmented row not unique for {t.rows} <- {k}")
                    length = len(res.result.rows[res.augmented_row])
                    try:
                        s, kk = skyline_uninsert(res.result, length)
                    except Exception as e:  # pragma: no cover
                        fails.append(f"uninsert raised on {t.rows} <- {k}: {e}")
                        continue
                    if s != t or kk != k:
                        fails.append(f"uninsert mismatch for {t.rows} <- {k}")
    for lam in _partitions_upto(min(max_size, 5)):
        for t in enumerate_reverse_tableaux(lam, max_size):
            for x in range(1, kmax + 1):
                for xp in range(1, kmax + 1):
                    if not row_bumping_check(t, x, xp):
                        fails.append(f"row bumping fails on {t.rows}, {x}, {xp}")
    return fails


def suite_bases(max_size: int = 6) -> list[str]:
    fails = []
    for n in range(1, max_size + 1):
        for a in enumerate_compositions(n):
            if f_to_m(qschur_in_fundamental(a)) != qschur_in_monomial(a):
                fails.append(f"monomial/fundamental expansions disagree at {tuple(a)}")
            s_is_m = qschur_in_monomial(a) == qsym_unit("M", a)
            if s_is_m != equals_monomial_shape(a):
                fails.append(f"monomial coincidence misclassified at {tuple(a)}")
            s_is_f = qschur_in_fundamental(a) == qsym_unit("F", a)
            if s_is_f != equals_fundamental_shape(a):
                fails.append(f"fundamental coincidence misclassified at {tuple(a)}")
        comps = enumerate_compositions(n)
        for basis in ("M", "F"):
            mat = transition_matrix(basis, n)
            for i in range(len(comps)):
                if mat[i][i] != 1:
                    fails.append(f"diagonal not 1 at {tuple(comps[i])} ({basis})")
                for j in range(i):
                    if mat[i][j] != 0:
                        fails.append(
                            f"matrix not triangular at {tuple(comps[i])},{tuple(comps[j])}"
                        )
    for lam in _partitions_upto(min(max_size, 6)):
        total = None
        for a in compositions_of_partition(lam):
            e = qschur_in_monomial(a)
            total = e if total is None else total + e
        if total != schur_in_monomial_oracle(lam):
            fails.append(f"oracle mismatch for shape {lam}")
    for n in range(1, min(max_size, 5) + 1):
        for a in enumerate_compositions(n):
            direct = qschur_polynomial(a, 5)
            via_m = qsym_to_poly(qschur_in_monomial(a), 5)
            if direct != via_m:
                fails.append(f"polynomial/abstract disagreement at {tuple(a)}")
    return fails


def suite_pieri(max_size: int = 5, max_strip: int = 3) -> list[str]:
    fails = []
    for m in range(0, max_size + 1):
        for a in enumerate_compositions(m):
            for n in range(1, max_strip + 1):
                row = pieri_row(a, n)
                if row != product_qschur((n,), a):
                    fails.append(f"row rule disagrees with product at {tuple(a)},{n}")
                col = pieri_col(a, n)
                if col != product_qschur((1,) * n, a):
                    fails.append(f"column rule disagrees with product at {tuple(a)},{n}")
                for c in itertools.chain(row.terms.values(), col.terms.values()):
                    if c != QtPoly.one():
                        fails.append(f"coefficient above 1 at {tuple(a)},{n}")
            for s in range(1, m + 1):
                r = rem(a, s)
                if r is not None:
                    if r.size != a.size - 1:
                        fails.append(f"rem changed size oddly on {tuple(a)},{s}")
    return fails


def suite_macdonald(max_cells: int = 4, max_vars: int = 4) -> list[str]:
    fails = []
    for n in range(1, max_vars + 1):
        for total in range(1, max_cells + 1):
            for g in _weak_comps(total, n):
                E = macdonald_integral_form(g, "id", n)
                if E.specialize(q=0, t=0) != demazure_atom(g, n):
                    fails.append(f"identity basement specialization fails at {g}")
                if ns_hall_littlewood(g, n) != E.specialize(q=0):
                    fails.append(f"descentless form disagrees at {g}")
                ssafs = {f.rows for f in enumerate_ssafs(g)}
                described = {
                    f.rows
                    for f in enumerate_fillings(g, "id", n, descentless=True)
                    if is_ssaf_filling(f)
                }
                if ssafs != described:
                    fails.append(f"filling sets disagree at {g}")
    return fails


def suite_hall_littlewood(max_size: int = 4, max_vars: int = 3) -> list[str]:
    fails = []
    for lam in _partitions_upto(max_size):
        for n in range(1, max_vars + 1):
            if hall_littlewood_p(lam, n) != hall_littlewood_p_oracle(lam, n):
                fails.append(f"oracle mismatch at {lam}, n={n}")
    for m in range(1, max_size + 1):
        for a in enumerate_compositions(m):
            n = m + 1
            L = hall_littlewood_qsym(a, n)
            if L.specialize(t=0) != qschur_polynomial(a, n):
                fails.append(f"t=0 specialization fails at {tuple(a)}")
            if L.specialize(t=1) != monomial_qsym_poly(a, n):
                fails.append(f"t=1 specialization fails at {tuple(a)}")
    for lam in _partitions_upto(min(max_size, 3)):
        m = sum(lam)
        J = macdonald_integral_form(lam, "const", m)
        if qsym_to_poly(macdonald_j_fundamental(lam), m) != J:
            fails.append(f"fundamental expansion disagrees at {lam}")
    return fails


SUITES: dict[str, Callable[..., list[str]]] = {
    "core": suite_core,
    "tableaux": suite_tableaux,
    "insertion": suite_insertion,
    "bases": suite_bases,
    "pieri": suite_pieri,
    "macdonald": suite_macdonald,
    "hall-littlewood": suite_hall_littlewood,
}


def run_suite(name: str, max_size: int | None = None) -> list[str]:
    if name == "all":
        fails = []
        for key, fn in SUITES.items():
            fails.extend(f"[{key}] {msg}" for msg in (fn() if max_size is None else fn(max_size)))
        return fails
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}; choose from {sorted(SUITES)} or 'all'")
    fn = SUITES[name]
    return fn() if max_size is None else fn(max_size)
