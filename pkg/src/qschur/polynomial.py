"""Exact sparse polynomial arithmetic over Z[q,t].

``QtPoly`` is a two-parameter integer polynomial; ``XPoly`` is a sparse
polynomial in x_1..x_n whose coefficients are ``QtPoly`` values.  All
arithmetic is exact; division is supported only when it is exact and
raises otherwise.
"""
from __future__ import annotations

from typing import Iterable, Mapping


class QtPoly:
    """Sparse polynomial in q and t with integer coefficients."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[tuple[int, int], int] | None = None):
        clean: dict[tuple[int, int], int] = {}
        if terms:
            for (qe, te), c in terms.items():
                if c:
                    clean[(int(qe), int(te))] = clean.get((qe, te), 0) + int(c)
        self._terms = {k: v for k, v in clean.items() if v}

    # -- constructors ------------------------------------------------

    @classmethod
    def zero(cls) -> "QtPoly":
        return cls()

    @classmethod
    def one(cls) -> "QtPoly":
        return cls({(0, 0): 1})

    @classmethod
    def const(cls, c: int) -> "QtPoly":
        return cls({(0, 0): int(c)})

    @classmethod
    def q(cls, k: int = 1) -> "QtPoly":
        return cls({(k, 0): 1})

    @classmethod
    def t(cls, k: int = 1) -> "QtPoly":
        return cls({(0, k): 1})

    @classmethod
    def coerce(cls, value) -> "QtPoly":
        if isinstance(value, QtPoly):
            return value
        if isinstance(value, int):
            return cls.const(value)
        raise TypeError(f"cannot coerce {value!r} to QtPoly")

    # -- inspection --------------------------------------------------

    def items(self):
        return self._terms.items()

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_constant(self) -> bool:
        return all(k == (0, 0) for k in self._terms)

    def constant(self) -> int:
        """The constant term."""
        return self._terms.get((0, 0), 0)

    def coefficient(self, qe: int, te: int) -> int:
        return self._terms.get((qe, te), 0)

    # -- ring operations ----------------------------------------------

    def __add__(self, other) -> "QtPoly":
        other = QtPoly.coerce(other)
        terms = dict(self._terms)
        for k, c in other._terms.items():
            terms[k] = terms.get(k, 0) + c
        return QtPoly(terms)

    __radd__ = __add__

    def __neg__(self) -> "QtPoly":
        return QtPoly({k: -c for k, c in self._terms.items()})

    def __sub__(self, other) -> "QtPoly":
        return self + (-QtPoly.coerce(other))

    def __rsub__(self, other) -> "QtPoly":
        return QtPoly.coerce(other) + (-self)

    def __mul__(self, other) -> "QtPoly":
        other = QtPoly.coerce(other)
        terms: dict[tuple[int, int], int] = {}
        for (q1, t1), c1 in self._terms.items():
            for (q2, t2), c2 in other._terms.items():
                k = (q1 + q2, t1 + t2)
                terms[k] = terms.get(k, 0) + c1 * c2
        return QtPoly(terms)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "QtPoly":
        if e < 0:
            raise ValueError("negative power")
        out = QtPoly.one()
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = QtPoly.const(other)
        if not isinstance(other, QtPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    # -- specialization and division -----------------------------------

    def specialize(self, q: int | None = None, t: int | None = None) -> "QtPoly":
        """Substitute integer values for q and/or t."""
        terms: dict[tuple[int, int], int] = {}
        for (qe, te), c in self._terms.items():
            if q is not None:
                c *= q ** qe
                qe = 0
            if t is not None:
                c *= t ** te
                te = 0
            k = (qe, te)
            terms[k] = terms.get(k, 0) + c
        return QtPoly(terms)

    def _leading(self) -> tuple[tuple[int, int], int]:
        k = max(self._terms)
        return k, self._terms[k]

    def div_exact(self, other) -> "QtPoly":
        """Exact division; raises ValueError if the division is not exact."""
        other = QtPoly.coerce(other)
        if not other:
            raise ZeroDivisionError("division by zero polynomial")
        rem = self
        quot: dict[tuple[int, int], int] = {}
        (dq, dt), dc = other._leading()
        while rem:
            (rq, rt), rc = rem._leading()
            if rq < dq or rt < dt or rc % dc:
                raise ValueError("polynomial division is not exact")
            k = (rq - dq, rt - dt)
            c = rc // dc
            quot[k] = quot.get(k, 0) + c
            rem = rem - QtPoly({k: c}) * other
        return QtPoly(quot)

    # -- rendering -----------------------------------------------------

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for (qe, te) in sorted(self._terms, key=lambda k: (k[0] + k[1], k[0], k[1])):
            c = self._terms[(qe, te)]
            mono = "*".join(
                s
                for s in (
                    _power("q", qe),
                    _power("t", te),
                )
                if s
            )
            if mono:
                if c == 1:
                    body = mono
                elif c == -1:
                    body = f"-{mono}"
                else:
                    body = f"{c}*{mono}"
            else:
                body = str(c)
            parts.append(body)
        out = parts[0]
        for p in parts[1:]:
            out += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
        return out

    def __repr__(self) -> str:
        return f"QtPoly({self})"


def _power(name: str, e: int) -> str:
    if e == 0:
        return ""
    if e == 1:
        return name
    return f"{name}^{e}"


class XPoly:
    """Sparse polynomial in x_1..x_n with QtPoly coefficients."""

    __slots__ = ("n", "_terms")

    def __init__(self, n: int, terms: Mapping[tuple[int, ...], QtPoly] | None = None):
        self.n = int(n)
        clean: dict[tuple[int, ...], QtPoly] = {}
        if terms:
            for exps, c in terms.items():
                exps = tuple(int(e) for e in exps)
                if len(exps) != self.n:
                    raise ValueError(f"exponent vector {exps} has wrong length")
                if any(e < 0 for e in exps):
                    raise ValueError(f"negative exponent in {exps}")
                c = QtPoly.coerce(c)
                if c:
                    prev = clean.get(exps)
                    clean[exps] = prev + c if prev is not None else c
        self._terms = {k: v for k, v in clean.items() if v}

    # -- constructors ------------------------------------------------

    @classmethod
    def zero(cls, n: int) -> "XPoly":
        return cls(n)

    @classmethod
    def one(cls, n: int) -> "XPoly":
        return cls(n, {(0,) * n: QtPoly.one()})

    @classmethod
    def variable(cls, n: int, i: int) -> "XPoly":
        """The variable x_i (1-based)."""
        exps = [0] * n
        exps[i - 1] = 1
        return cls(n, {tuple(exps): QtPoly.one()})

    @classmethod
    def monomial(cls, n: int, exps: Iterable[int], coeff=1) -> "XPoly":
        return cls(n, {tuple(exps): QtPoly.coerce(coeff)})

    # -- inspection --------------------------------------------------

    def items(self):
        return self._terms.items()

    def __bool__(self) -> bool:
        return bool(self._terms)

    def coefficient(self, exps: Iterable[int]) -> QtPoly:
        return self._terms.get(tuple(exps), QtPoly.zero())

    def total_degree(self) -> int:
        return max((sum(e) for e in self._terms), default=0)

    # -- ring operations ----------------------------------------------

    def _check(self, other: "XPoly"):
        if self.n != other.n:
            raise ValueError(f"variable counts differ: {self.n} vs {other.n}")

    def __add__(self, other) -> "XPoly":
        if isinstance(other, (int, QtPoly)):
            other = XPoly(self.n, {(0,) * self.n: QtPoly.coerce(other)})
        self._check(other)
        terms = dict(self._terms)
        for k, c in other._terms.items():
            prev = terms.get(k)
            terms[k] = prev + c if prev is not None else c
        return XPoly(self.n, terms)

    __radd__ = __add__

    def __neg__(self) -> "XPoly":
        return XPoly(self.n, {k: -c for k, c in self._terms.items()})

    def __sub__(self, other) -> "XPoly":
        if isinstance(other, (int, QtPoly)):
            other = XPoly(self.n, {(0,) * self.n: QtPoly.coerce(other)})
        return self + (-other)

    def __mul__(self, other) -> "XPoly":
        if isinstance(other, (int, QtPoly)):
            c = QtPoly.coerce(other)
            return XPoly(self.n, {k: v * c for k, v in self._terms.items()})
        self._check(other)
        terms: dict[tuple[int, ...], QtPoly] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                k = tuple(a + b for a, b in zip(e1, e2))
                prod = c1 * c2
                prev = terms.get(k)
                terms[k] = prev + prod if prev is not None else prod
        return XPoly(self.n, terms)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "XPoly":
        if e < 0:
            raise ValueError("negative power")
        out = XPoly.one(self.n)
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, QtPoly)):
            other = XPoly(self.n, {(0,) * self.n: QtPoly.coerce(other)})
        if not isinstance(other, XPoly):
            return NotImplemented
        return self.n == other.n and self._terms == other._terms

    def __hash__(self):
        return hash((self.n, frozenset((k, hash(v)) for k, v in self._terms.items())))

    # -- specialization, symmetry, division ----------------------------

    def specialize(self, q: int | None = None, t: int | None = None) -> "XPoly":
        return XPoly(
            self.n, {k: c.specialize(q=q, t=t) for k, c in self._terms.items()}
        )

    def swap_variables(self, i: int, j: int) -> "XPoly":
        """Exchange x_i and x_j (1-based)."""
        terms = {}
        for exps, c in self._terms.items():
            e = list(exps)
            e[i - 1], e[j - 1] = e[j - 1], e[i - 1]
            k = tuple(e)
            prev = terms.get(k)
            terms[k] = prev + c if prev is not None else c
        return XPoly(self.n, terms)

    def div_scalar_exact(self, d) -> "XPoly":
        d = QtPoly.coerce(d)
        return XPoly(self.n, {k: c.div_exact(d) for k, c in self._terms.items()})

    def div_exact(self, other: "XPoly") -> "XPoly":
        """Exact division by another XPoly (lex leading-term elimination)."""
        self._check(other)
        if not other:
            raise ZeroDivisionError("division by zero polynomial")
        dk = max(other._terms)
        dc = other._terms[dk]
        rem = self
        quot: dict[tuple[int, ...], QtPoly] = {}
        while rem:
            rk = max(rem._terms)
            if any(a < b for a, b in zip(rk, dk)):
                raise ValueError("polynomial division is not exact")
            k = tuple(a - b for a, b in zip(rk, dk))
            c = rem._terms[rk].div_exact(dc)
            prev = quot.get(k)
            quot[k] = prev + c if prev is not None else c
            rem = rem - XPoly(self.n, {k: c}) * other
        return XPoly(self.n, quot)

    # -- rendering -----------------------------------------------------

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for exps in sorted(self._terms, reverse=True):
            c = self._terms[exps]
            mono = "*".join(
                _power(f"x{i + 1}", e) for i, e in enumerate(exps) if e
            )
            cs = str(c)
            if not mono:
                parts.append(f"({cs})" if ("+" in cs or " - " in cs) else cs)
            elif c == QtPoly.one():
                parts.append(mono)
            elif c.is_constant():
                v = c.constant()
                parts.append(f"{v}*{mono}" if v != -1 else f"-{mono}")
            else:
                parts.append(f"({cs})*{mono}")
        out = parts[0]
        for p in parts[1:]:
            out += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
        return out

    def __repr__(self) -> str:
        return f"XPoly[{self.n}]({self})"
