"""Combinatorial formulas with q and t: integral forms over general
basements, nonsymmetric Hall-Littlewood polynomials, their
quasisymmetric sums, the Hall-Littlewood decomposition, and the
fundamental-basis expansion of the symmetric integral form.

Everything is a weighted sum over non-attacking fillings of an
augmented diagram.  The basement rule selects the family: identity
gives the integral nonsymmetric form, reversed (applied to the
reversed shape) its mirror variant, and a constant basement gives the
symmetric integral form of the sorted shape.
"""
from __future__ import annotations

import itertools
from functools import lru_cache
from typing import Iterable

from .compositions import (
    Composition,
    Partition,
    WeakComposition,
    collapse,
    compositions_of_partition,
    composition_of,
    expand_to_weak,
    to_partition,
)
from .fillings import (
    AugmentedFilling,
    arm,
    attack_pairs,
    coinv,
    descent_cells,
    enumerate_fillings,
    is_inversion_triple,
    is_ssaf_filling,
    leg,
    maj,
    triples,
)
from .polynomial import QtPoly, XPoly
from .qsym import QSymExpr, qsym_to_poly


def macdonald_integral_form(shape, basement: str = "id", nvars: int | None = None) -> XPoly:
    """Weighted sum over all non-attacking fillings of the shape.

    Each filling contributes its monomial times q^maj t^coinv, times
    (1 - q^(leg+1) t^(arm+1)) for every cell repeating its left
    neighbour and (1 - t) for every other cell.  With the identity
    basement and q = t = 0 only the valid augmented fillings survive,
    so the sum collapses to the Demazure atom; with a constant basement
    and q = t = 0 it collapses to the Schur polynomial of the sorted
    shape.
    """
    shape = WeakComposition(shape)
    n = len(shape)
    nv = n if nvars is None else int(nvars)
    if basement in ("id", "rev") and nv != n:
        raise ValueError("identity/reversed basements need one variable per row")
    out = XPoly.zero(nv)
    for f in enumerate_fillings(shape, rule=basement, nvars=nv):
        term = QtPoly.q(maj(f)) * QtPoly.t(coinv(f)) if maj(f) or coinv(f) else QtPoly.one()
        weight = term
        for s in f.cells():
            if f.entry(*s) == f.entry(s[0], s[1] - 1):
                weight = weight * (
                    QtPoly.one() - QtPoly.q(leg(shape, s) + 1) * QtPoly.t(arm(shape, s) + 1)
                )
            else:
                weight = weight * (QtPoly.one() - QtPoly.t())
        out += XPoly.monomial(nv, f.exponents(), weight)
    return out


def ns_hall_littlewood(shape, nvars: int | None = None) -> XPoly:
    """Descentless specialization: one t parameter.

    Sums x^f t^coinv over descent-free non-attacking fillings with the
    identity basement, times (1 - t) for every cell differing from its
    left neighbour.  At t = 0 this is the Demazure atom.
    """
    shape = WeakComposition(shape)
    n = len(shape)
    nv = n if nvars is None else int(nvars)
    if nv != n:
        raise ValueError("identity basement needs one variable per row")
    out = XPoly.zero(nv)
    for f in enumerate_fillings(shape, rule="id", nvars=nv, descentless=True):
        weight = QtPoly.t(coinv(f)) if coinv(f) else QtPoly.one()
        for s in f.cells():
            if f.entry(*s) != f.entry(s[0], s[1] - 1):
                weight = weight * (QtPoly.one() - QtPoly.t())
        out += XPoly.monomial(nv, f.exponents(), weight)
    return out


def hall_littlewood_qsym(a, n: int) -> XPoly:
    """Sum of the descentless forms over all shapes collapsing to ``a``."""
    a = Composition(a)
    if n < len(a):
        raise ValueError("need at least one variable per part")
    out = XPoly.zero(n)
    for g in expand_to_weak(a, n):
        out += ns_hall_littlewood(g, n)
    return out


def hall_littlewood_qsym_m(a, n: int | None = None) -> QSymExpr:
    """Monomial expansion of the quasisymmetric Hall-Littlewood form.

    Reading the polynomial off the monomial basis requires n >= |a|;
    the quasisymmetry check performed during extraction is itself a
    nontrivial structural property of these sums.
    """
    from .qsym import xpoly_to_monomial

    a = Composition(a)
    if n is None:
        n = max(a.size, len(a))
    if n < a.size:
        raise ValueError("need at least |a| variables for faithful extraction")
    return xpoly_to_monomial(hall_littlewood_qsym(a, n))


def hall_littlewood_p(l, n: int) -> XPoly:
    """Hall-Littlewood polynomial as a sum of quasisymmetric pieces."""
    l = Partition(l)
    if n < len(l):
        return XPoly.zero(n)
    out = XPoly.zero(n)
    for a in compositions_of_partition(l):
        out += hall_littlewood_qsym(a, n)
    return out


def hall_littlewood_p_oracle(l, n: int) -> XPoly:
    """Hall-Littlewood polynomial by antisymmetrized division.

    Computes sum over permutations w of sign(w) w(x^l prod_{i<j}
    (x_i - t x_j)), divides exactly by the Vandermonde determinant and
    by the multiplicity factor, all in exact arithmetic.  Independent
    of every filling-based path.
    """
    l = Partition(l)
    if n < len(l):
        return XPoly.zero(n)
    exps = tuple(l) + (0,) * (n - len(l))
    num = XPoly.zero(n)
    for w in itertools.permutations(range(n)):
        term = XPoly.monomial(n, _permute(exps, w))
        for i in range(n):
            for j in range(i + 1, n):
                xi = XPoly.variable(n, w[i] + 1)
                xj = XPoly.variable(n, w[j] + 1)
                term = term * (xi - xj * QtPoly.t())
        num += term * _sign(w)
    vandermonde = XPoly.one(n)
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            vandermonde = vandermonde * (XPoly.variable(n, i) - XPoly.variable(n, j))
    quotient = num.div_exact(vandermonde)
    mult: dict[int, int] = {0: n - len(l)}
    for p in l:
        mult[p] = mult.get(p, 0) + 1
    v = QtPoly.one()
    for m in mult.values():
        for k in range(1, m + 1):
            v = v * QtPoly({(0, e): 1 for e in range(k)})
    return quotient.div_scalar_exact(v)


def _permute(exps: tuple[int, ...], w) -> tuple[int, ...]:
    out = [0] * len(exps)
    for i, e in enumerate(exps):
        out[w[i]] = e
    return tuple(out)


def _sign(w) -> int:
    inv = sum(1 for i in range(len(w)) for j in range(i + 1, len(w)) if w[i] > w[j])
    return -1 if inv % 2 else 1


# -- fundamental expansion of the symmetric integral form -------------------


def standard_filling_reading_word(mu, rows) -> tuple[int, ...]:
    """Entries read column by column, rightmost column first, top to
    bottom within a column."""
    mu = tuple(mu)
    width = mu[0] if mu else 0
    word = []
    for k in range(width, 0, -1):
        for i, g in enumerate(mu, start=1):
            if g >= k:
                word.append(rows[i - 1][k - 1])
    return tuple(word)


def triple_base(f: "AugmentedFilling", a, b, c):
    """Base square of a triple: the cell holding the middle entry, or
    the smallest entry when a basement square participates."""
    named = [(f.entry(*s), s) for s in (a, b, c)]
    named.sort()
    if a[1] == 0 or b[1] == 0 or c[1] == 0:
        choice = named[0][1]
    else:
        choice = named[1][1]
    if choice[1] == 0:
        raise ValueError("base square fell on the basement")
    return choice


def j_fundamental_classes(mu):
    """Per-permutation pieces of the fundamental expansion.

    Every filling with a constant basement standardizes (relabelling
    equal entries in reading order) to a standard filling; grouping the
    full weighted sum by that standard filling is exact because the
    tie-broken entry comparisons, and hence all triple orientations,
    are constant on each group.  A group is indexed by the merge sets
    of adjacent labels that sit in reading order at mutually
    non-attacking cells; each merge set contributes a monomial term
    whose cells repeating their left neighbour carry
    (1 - q^(leg+1) t^(arm+1)) and all others (1 - t), with q^maj
    counting only the surviving strict descents.

    Yields (reading word, standard rows, M-expansion of the group).
    """
    mu = Partition(mu)
    m = mu.size
    cells = [(i, k) for i, g in enumerate(mu, start=1) for k in range(1, g + 1)]
    rank = {c: (-c[1], c[0]) for c in cells}
    attacks = set()
    for a, b in attack_pairs(mu):
        if a[1] != 0 and b[1] != 0:
            attacks.add(frozenset((a, b)))
    trips = triples(mu)
    for values in itertools.permutations(range(1, m + 1)):
        f = dict(zip(cells, values))
        rows = tuple(
            tuple(f[(i, k)] for k in range(1, g + 1))
            for i, g in enumerate(mu, start=1)
        )
        filling = AugmentedFilling(mu, rows, rule="const", nvars=m)
        coinv_f = sum(
            0 if is_inversion_triple(filling, a, b, c) else 1 for a, b, c in trips
        )
        cell_of = {v: c for c, v in f.items()}
        mergeable = [
            i
            for i in range(1, m)
            if rank[cell_of[i]] < rank[cell_of[i + 1]]
            and frozenset((cell_of[i], cell_of[i + 1])) not in attacks
        ]
        desc_cells = [
            (i, k) for (i, k) in cells if k >= 2 and f[(i, k)] > f[(i, k - 1)]
        ]
        terms: dict[Composition, QtPoly] = {}
        for r in range(len(mergeable) + 1):
            for chosen in itertools.combinations(mergeable, r):
                s_set = set(chosen)
                if not _runs_non_attacking(s_set, m, cell_of, attacks):
                    continue
                equal_cells = set()
                for (i, k) in cells:
                    if k < 2:
                        continue
                    a, b = f[(i, k - 1)], f[(i, k)]
                    lo, hi = min(a, b), max(a, b)
                    if all(j in s_set for j in range(lo, hi)):
                        equal_cells.add((i, k))
                majv = sum(leg(mu, s) + 1 for s in desc_cells if s not in equal_cells)
                w = QtPoly.q(majv) * QtPoly.t(coinv_f)
                for s in cells:
                    if s in equal_cells:
                        w = w * (
                            QtPoly.one()
                            - QtPoly.q(leg(mu, s) + 1) * QtPoly.t(arm(mu, s) + 1)
                        )
                    else:
                        w = w * (QtPoly.one() - QtPoly.t())
                beta = composition_of(frozenset(range(1, m)) - s_set, m)
                prev = terms.get(beta)
                terms[beta] = prev + w if prev is not None else w
        word = standard_filling_reading_word(mu, rows)
        yield word, rows, QSymExpr("M", terms)


def _runs_non_attacking(s_set, m, cell_of, attacks) -> bool:
    # cells of a merged label run share one value, so they must be
    # pairwise non-attacking, not just consecutively
    run: list[int] = []
    for i in range(1, m):
        if i in s_set:
            if not run:
                run = [i, i + 1]
            else:
                run.append(i + 1)
        else:
            if len(run) > 2:
                for x, y in itertools.combinations(run, 2):
                    if frozenset((cell_of[x], cell_of[y])) in attacks:
                        return False
            run = []
    if len(run) > 2:
        for x, y in itertools.combinations(run, 2):
            if frozenset((cell_of[x], cell_of[y])) in attacks:
                return False
    return True


def macdonald_j_fundamental(mu) -> QSymExpr:
    """Fundamental-basis expansion of the symmetric integral form.

    Sums the per-permutation groups of :func:`j_fundamental_classes`
    and rewrites the total over the fundamental basis.  Exact in
    Z[q,t]; evaluating the result in ``size`` variables agrees with the
    constant-basement weighted filling sum.
    """
    from .qsym import m_to_f

    total: dict[Composition, QtPoly] = {}
    for _, _, expr in j_fundamental_classes(mu):
        for comp, c in expr.terms.items():
            prev = total.get(comp)
            total[comp] = prev + c if prev is not None else c
    return m_to_f(QSymExpr("M", total))


# -- fixture ----------------------------------------------------------------

# Printed comparison values for the alternative one-parameter family
# defined through difference operators (kept only as a fixture; the
# parameter is read as t).  Indexed by composition, coefficients in t.
HIVERT_G13_PRINTED = {
    (1, 3): QtPoly.one(),
    (1, 2, 1): QtPoly.one() - QtPoly.t(2),
    (1, 1, 2): QtPoly.one() - QtPoly.t(2),
    (1, 1, 1, 1): QtPoly.one() - QtPoly.const(2) * QtPoly.t(2) + QtPoly.t(4),
}
