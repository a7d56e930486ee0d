"""Univariate polynomials over the GF(3^k) tower, and rational functions on
hyperelliptic-type curves Y^2 = h(X).

Coefficients are kept as raw tower codes (ints) so the arithmetic runs off
the lookup tables in :mod:`k3w.algebra.gf` without boxing.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .gf import _ADD, _INV, _MUL, _NEG, FieldElem


def _trim(c: list[int]) -> tuple[int, ...]:
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def _code(x) -> int:
    if isinstance(x, FieldElem):
        return x.v
    if isinstance(x, int):
        return x % 3
    raise TypeError(f"not a field scalar: {x!r}")


class Poly:
    """Polynomial in one variable X, coefficients low degree first."""

    __slots__ = ("c", "level")

    def __init__(self, coeffs: Iterable = (), level: int = 4):
        self.c = _trim([_code(x) for x in coeffs])
        self.level = level

    @classmethod
    def _raw(cls, c: list[int], level: int) -> "Poly":
        p = cls.__new__(cls)
        p.c = _trim(c)
        p.level = level
        return p

    @classmethod
    def from_codes(cls, codes: Iterable[int], level: int = 4) -> "Poly":
        """Build from raw tower codes (not prime-field integers)."""
        return cls._raw(list(codes), level)

    @classmethod
    def x(cls, level: int = 4) -> "Poly":
        return cls._raw([0, 1], level)

    @classmethod
    def const(cls, a, level: int = 4) -> "Poly":
        return cls._raw([_code(a)], level)

    @property
    def degree(self) -> int:
        return len(self.c) - 1

    def is_zero(self) -> bool:
        return not self.c

    def lead(self) -> int:
        return self.c[-1]

    def coeff(self, i: int) -> FieldElem:
        return FieldElem(self.c[i] if i < len(self.c) else 0, self.level)

    def _lift(self, other) -> "Poly":
        if isinstance(other, Poly):
            return other
        return Poly.const(other, self.level)

    def __add__(self, other):
        o = self._lift(other)
        a, b = self.c, o.c
        n = max(len(a), len(b))
        out = [_ADD[a[i] if i < len(a) else 0][b[i] if i < len(b) else 0] for i in range(n)]
        return Poly._raw(out, max(self.level, o.level))

    __radd__ = __add__

    def __neg__(self):
        return Poly._raw([_NEG[x] for x in self.c], self.level)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        o = self._lift(other)
        a, b = self.c, o.c
        if not a or not b:
            return Poly._raw([], max(self.level, o.level))
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x == 0:
                continue
            row = _MUL[x]
            for j, y in enumerate(b):
                out[i + j] = _ADD[out[i + j]][row[y]]
        return Poly._raw(out, max(self.level, o.level))

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Poly":
        acc = Poly.const(1, self.level)
        base = self
        while n:
            if n & 1:
                acc = acc * base
            base = base * base
            n >>= 1
        return acc

    def scale(self, a) -> "Poly":
        row = _MUL[_code(a)]
        return Poly._raw([row[x] for x in self.c], self.level)

    def divmod(self, d: "Poly") -> tuple["Poly", "Poly"]:
        if d.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        r = list(self.c)
        inv = _INV[d.lead()]
        dd = d.degree
        q = [0] * max(len(r) - dd, 0)
        for k in range(len(r) - dd - 1, -1, -1):
            coef = _MUL[r[k + dd]][inv]
            q[k] = coef
            if coef:
                for j, y in enumerate(d.c):
                    r[k + j] = _ADD[r[k + j]][_NEG[_MUL[coef][y]]]
        lvl = max(self.level, d.level)
        return Poly._raw(q, lvl), Poly._raw(r[:dd] if dd > 0 else [], lvl)

    def __floordiv__(self, d: "Poly") -> "Poly":
        return self.divmod(d)[0]

    def __mod__(self, d: "Poly") -> "Poly":
        return self.divmod(d)[1]

    def monic(self) -> "Poly":
        if self.is_zero():
            return self
        return self.scale(FieldElem(_INV[self.lead()]))

    def derivative(self) -> "Poly":
        out = []
        for i in range(1, len(self.c)):
            k = i % 3
            out.append(_MUL[self.c[i]][k])
        return Poly._raw(out, self.level)

    def __call__(self, x):
        xv = _code(x)
        acc = 0
        for a in reversed(self.c):
            acc = _ADD[_MUL[acc][xv]][a]
        lvl = max(self.level, x.level if isinstance(x, FieldElem) else 1)
        return FieldElem(acc, lvl)

    def compose(self, g):
        """Horner evaluation at any ring element g supporting + and *."""
        acc = None
        for a in reversed(self.c):
            term = FieldElem(a)
            acc = term if acc is None else acc * g + term
        if acc is None:
            return g * 0
        return acc

    def valuation_at(self, root) -> int:
        """Multiplicity of ``root`` as a zero; raises on the zero polynomial."""
        if self.is_zero():
            raise ValueError("zero polynomial has infinite valuation")
        lin = Poly._raw([_NEG[_code(root)], 1], self.level)
        k, p = 0, self
        while True:
            q, r = p.divmod(lin)
            if not r.is_zero():
                return k
            p, k = q, k + 1

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, FieldElem)):
            other = Poly.const(other)
        if not isinstance(other, Poly):
            return NotImplemented
        return self.c == other.c

    def __hash__(self) -> int:
        return hash(self.c)

    def __repr__(self) -> str:
        if not self.c:
            return "Poly(0)"
        terms = [f"({FieldElem(a).zeta_notation()})*X^{i}" for i, a in enumerate(self.c) if a]
        return "Poly(" + " + ".join(terms) + ")"


def poly_gcd(a: Poly, b: Poly) -> Poly:
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def from_ints(coeffs: Sequence[int], level: int = 4) -> Poly:
    """Polynomial with prime-field integer coefficients (low degree first)."""
    return Poly([c % 3 for c in coeffs], level)


class RatFun:
    """Element (A + B*Y) / D of k(X)[Y]/(Y^2 - h), or of k(X) when h is None.

    Kept reduced: gcd(A, B, D) = 1 and D monic.  Equality is decided by
    cross-multiplication and reduction modulo the curve relation.
    """

    __slots__ = ("a", "b", "d", "h")

    def __init__(self, a: Poly, b: Poly | None = None, d: Poly | None = None, h: Poly | None = None):
        b = b if b is not None else Poly()
        d = d if d is not None else Poly.const(1)
        if d.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if h is None and not b.is_zero():
            raise ValueError("a Y-term needs a curve relation")
        g = poly_gcd(poly_gcd(a, b), d) if not (a.is_zero() and b.is_zero()) else d.monic()
        if g.degree > 0 or g.lead() != 1:
            a, b, d = a // g, b // g, d // g
        inv = FieldElem(_INV[d.lead()])
        self.a, self.b, self.d = a.scale(inv), b.scale(inv), d.scale(inv)
        self.h = h

    # constructors -----------------------------------------------------
    @classmethod
    def X(cls, h: Poly | None = None) -> "RatFun":
        return cls(Poly.x(), h=h)

    @classmethod
    def Y(cls, h: Poly) -> "RatFun":
        return cls(Poly(), Poly.const(1), h=h)

    @classmethod
    def const(cls, c, h: Poly | None = None) -> "RatFun":
        return cls(Poly.const(c), h=h)

    def _lift(self, o) -> "RatFun":
        if isinstance(o, RatFun):
            if o.h is not None and self.h is not None and o.h != self.h:
                raise ValueError("rational functions on different curves")
            return o
        if isinstance(o, Poly):
            return RatFun(o, h=self.h)
        return RatFun.const(o, self.h)

    def _h(self, o: "RatFun") -> Poly | None:
        return self.h if self.h is not None else o.h

    # arithmetic -------------------------------------------------------
    def __add__(self, other):
        o = self._lift(other)
        return RatFun(self.a * o.d + o.a * self.d, self.b * o.d + o.b * self.d, self.d * o.d, self._h(o))

    __radd__ = __add__

    def __neg__(self):
        return RatFun(-self.a, -self.b, self.d, self.h)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        o = self._lift(other)
        h = self._h(o)
        a = self.a * o.a
        if not (self.b.is_zero() or o.b.is_zero()):
            a = a + self.b * o.b * h
        b = self.a * o.b + self.b * o.a
        return RatFun(a, b, self.d * o.d, h)

    __rmul__ = __mul__

    def inverse(self) -> "RatFun":
        if self.is_zero():
            raise ZeroDivisionError("inverse of the zero function")
        if self.b.is_zero():
            return RatFun(self.d, Poly(), self.a, self.h)
        norm = self.a * self.a - self.b * self.b * self.h
        if norm.is_zero():
            raise ZeroDivisionError("zero divisor in k(X)[Y]/(Y^2-h)")
        return RatFun(self.d * self.a, -(self.d * self.b), norm, self.h)

    def __truediv__(self, other):
        return self * self._lift(other).inverse()

    def __rtruediv__(self, other):
        return self._lift(other) * self.inverse()

    def __pow__(self, n: int) -> "RatFun":
        base = self if n >= 0 else self.inverse()
        acc = RatFun.const(1, self.h)
        n = abs(n)
        while n:
            if n & 1:
                acc = acc * base
            base = base * base
            n >>= 1
        return acc

    def is_zero(self) -> bool:
        return self.a.is_zero() and self.b.is_zero()

    def __eq__(self, other) -> bool:
        if not isinstance(other, (RatFun, Poly, int, FieldElem)):
            return NotImplemented
        return ratfun_identity(self, self._lift(other))

    def __hash__(self):
        raise TypeError("RatFun is not hashable")

    # calculus ---------------------------------------------------------
    def derive(self) -> "RatFun":
        """The derivation with X' = Y and Y' = 1.

        On Y^2 = h with h' = -1 (true for X^9 - X in characteristic 3) this is
        the vector field dual to dY, so f.derive() is the multiplier of
        ``f_*(d/dY)``.  Without a curve relation it is the plain derivative.
        """
        if self.h is None:
            num = self.a.derivative() * self.d - self.a * self.d.derivative()
            return RatFun(num, d=self.d * self.d)
        # D(A + B Y) = A' Y + B' Y^2 + B
        y = RatFun.Y(self.h)
        n = RatFun(self.a, self.b, h=self.h)
        dn = RatFun(self.a.derivative(), h=self.h) * y + RatFun(self.b.derivative(), h=self.h) * y * y + RatFun(self.b, h=self.h)
        dd = RatFun(self.d.derivative(), h=self.h) * y
        den = RatFun(self.d, h=self.h)
        return (dn * den - n * dd) / (den * den)

    def evaluate(self, x, y=None) -> FieldElem:
        """Value at the affine point (x, y); raises ZeroDivisionError at poles."""
        dv = self.d(x)
        if dv.is_zero():
            raise ZeroDivisionError("pole")
        val = self.a(x)
        if not self.b.is_zero():
            if y is None:
                raise ValueError("need a Y-coordinate")
            val = val + self.b(x) * y
        return val / dv

    def substitute(self, x_img, y_img=None):
        """Compose with X -> x_img, Y -> y_img (elements of any RatFun ring)."""
        num = self.a.compose(x_img)
        if not self.b.is_zero():
            num = num + self.b.compose(x_img) * y_img
        return num / self.d.compose(x_img)

    def __repr__(self) -> str:
        return f"RatFun(({self.a!r} + {self.b!r}*Y) / {self.d!r})"


def ratfun_identity(lhs: RatFun, rhs: RatFun) -> bool:
    """True iff lhs == rhs as functions (on the attached curve, if any)."""
    if lhs.h is not None and rhs.h is not None and lhs.h != rhs.h:
        raise ValueError("rational functions on different curves")
    if lhs.d.is_zero() or rhs.d.is_zero():
        raise ZeroDivisionError("zero denominator")
    # both sides are already reduced to A + B*Y, and {1, Y} is a basis over k(X)
    a = lhs.a * rhs.d - rhs.a * lhs.d
    b = lhs.b * rhs.d - rhs.b * lhs.d
    return a.is_zero() and b.is_zero()
