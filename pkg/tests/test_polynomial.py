import pytest

from qschur.polynomial import QtPoly, XPoly


def test_qtpoly_ring_ops():
    q, t = QtPoly.q(), QtPoly.t()
    p = (1 - q * t) * (1 - t)
    assert p.coefficient(0, 0) == 1
    assert p.coefficient(1, 1) == -1
    assert p.coefficient(1, 2) == 1
    assert p.coefficient(0, 1) == -1
    assert p - p == QtPoly.zero()
    assert not (p - p)
    assert (q + 1) ** 2 == q * q + 2 * q + 1


def test_qtpoly_specialize():
    q, t = QtPoly.q(), QtPoly.t()
    p = 1 - q * t ** 2
    assert p.specialize(q=0) == QtPoly.one()
    assert p.specialize(q=1, t=1) == QtPoly.zero()
    assert p.specialize(t=2) == 1 - 4 * q


def test_qtpoly_div_exact():
    q, t = QtPoly.q(), QtPoly.t()
    a = (1 - t) * (1 - q * t) * (1 + t + t ** 2)
    assert a.div_exact(1 - t) == (1 - q * t) * (1 + t + t ** 2)
    with pytest.raises(ValueError):
        (1 - t ** 2).div_exact(1 - q)


def test_qtpoly_str():
    assert str(QtPoly.zero()) == "0"
    assert str(1 - QtPoly.t()) == "1 - t"
    assert str(QtPoly.q(2) * QtPoly.t() * 3) == "3*q^2*t"


def test_xpoly_ring_ops():
    x1, x2 = XPoly.variable(2, 1), XPoly.variable(2, 2)
    p = (x1 + x2) ** 2
    assert p == x1 ** 2 + 2 * x1 * x2 + x2 ** 2
    assert p.coefficient((1, 1)) == QtPoly.const(2)
    assert p.total_degree() == 2
    assert (p - p) == XPoly.zero(2)


def test_xpoly_mixed_scalars():
    x1 = XPoly.variable(2, 1)
    t = QtPoly.t()
    p = x1 * (1 - t)
    assert p.coefficient((1, 0)) == 1 - t
    assert p.specialize(t=1) == XPoly.zero(2)


def test_xpoly_variable_count_mismatch():
    with pytest.raises(ValueError):
        XPoly.variable(2, 1) + XPoly.variable(3, 1)


def test_xpoly_swap_variables():
    x1, x2, x3 = (XPoly.variable(3, i) for i in (1, 2, 3))
    p = x1 ** 2 * x2 + x3
    assert p.swap_variables(1, 2) == x2 ** 2 * x1 + x3
    sym = x1 * x2 + x1 * x3 + x2 * x3
    assert sym.swap_variables(1, 2) == sym


def test_xpoly_div_exact():
    x1, x2 = XPoly.variable(2, 1), XPoly.variable(2, 2)
    vdm = x1 - x2
    p = (x1 ** 2 - x2 ** 2) * (x1 + 2 * x2)
    assert p.div_exact(vdm) == (x1 + x2) * (x1 + 2 * x2)
    with pytest.raises(ValueError):
        (x1 * x2).div_exact(x1 + x2)


def test_xpoly_div_scalar_exact():
    x1 = XPoly.variable(1, 1)
    t = QtPoly.t()
    p = x1 * ((1 - t) * (1 + t))
    assert p.div_scalar_exact(1 - t) == x1 * (1 + t)
