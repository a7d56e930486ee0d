"""The field tower GF(3) < GF(9) < GF(81).

GF(9) = GF(3)[t]/(t^2 + t - 1) with zeta = t, and GF(81) = GF(9)[s]/(s^2 - zeta).
Every element is stored as an integer 0..80 whose base-3 digits are the
coefficients over the tower basis (1, t, s, t*s).  Elements of a subfield
have small integer codes, so the tower embeddings are the identity on codes.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterator

LEVELS = (1, 2, 4)

_ADD: list[list[int]] = []
_NEG: list[int] = []
_MUL: list[list[int]] = []
_INV: list[int] = []


def _digits(v: int) -> tuple[int, int, int, int]:
    return (v % 3, (v // 3) % 3, (v // 9) % 3, (v // 27) % 3)


def _undigits(d) -> int:
    return d[0] + 3 * d[1] + 9 * d[2] + 27 * d[3]


def _mul9(a: int, b: int) -> int:
    # (a0 + a1 t)(b0 + b1 t) with t^2 = 1 - t
    a0, a1 = a % 3, a // 3
    b0, b1 = b % 3, b // 3
    c0 = a0 * b0 + a1 * b1
    c1 = a0 * b1 + a1 * b0 - a1 * b1
    return (c0 % 3) + 3 * (c1 % 3)


def _add9(a: int, b: int) -> int:
    return ((a % 3 + b % 3) % 3) + 3 * ((a // 3 + b // 3) % 3)


_ZETA = 3  # t


def _build_tables() -> None:
    for a in range(81):
        da = _digits(a)
        _ADD.append([_undigits([(x + y) % 3 for x, y in zip(da, _digits(b))]) for b in range(81)])
        _NEG.append(_undigits([(-x) % 3 for x in da]))
    for a in range(81):
        a0, a1 = a % 9, a // 9
        row = []
        for b in range(81):
            b0, b1 = b % 9, b // 9
            # (a0 + a1 s)(b0 + b1 s) with s^2 = zeta
            c0 = _add9(_mul9(a0, b0), _mul9(_mul9(a1, b1), _ZETA))
            c1 = _add9(_mul9(a0, b1), _mul9(a1, b0))
            row.append(c0 + 9 * c1)
        _MUL.append(row)
    _INV.append(-1)
    for a in range(1, 81):
        _INV.append(next(b for b in range(1, 81) if _MUL[a][b] == 1))


_build_tables()


class FieldElem:
    """An element of GF(3^level), level in {1, 2, 4}.

    Mixed-level arithmetic promotes to the larger field through the tower
    embedding.  Plain ints are read as elements of the prime field.
    """

    __slots__ = ("level", "v")

    def __init__(self, v: int, level: int = 4):
        if level not in LEVELS:
            raise ValueError(f"unsupported tower level {level}")
        if not 0 <= v < 3**level:
            raise ValueError(f"code {v} is not an element of GF(3^{level})")
        self.v = v
        self.level = level

    @property
    def coords(self) -> tuple[int, ...]:
        return _digits(self.v)[: self.level]

    def _coerce(self, other) -> "FieldElem | None":
        if isinstance(other, FieldElem):
            return other
        if isinstance(other, int):
            return FieldElem(other % 3, 1)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FieldElem(_ADD[self.v][o.v], max(self.level, o.level))

    __radd__ = __add__

    def __neg__(self):
        return FieldElem(_NEG[self.v], self.level)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FieldElem(_ADD[self.v][_NEG[o.v]], max(self.level, o.level))

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FieldElem(_MUL[self.v][o.v], max(self.level, o.level))

    __rmul__ = __mul__

    def inverse(self) -> "FieldElem":
        if self.v == 0:
            raise ZeroDivisionError("inverse of zero in a finite field")
        return FieldElem(_INV[self.v], self.level)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, n: int):
        base = self if n >= 0 else self.inverse()
        n = abs(n)
        acc = 1
        b = base.v
        while n:
            if n & 1:
                acc = _MUL[acc][b]
            b = _MUL[b][b]
            n >>= 1
        return FieldElem(acc, self.level)

    def frobenius(self) -> "FieldElem":
        return self**3

    def is_zero(self) -> bool:
        return self.v == 0

    def __bool__(self) -> bool:
        return self.v != 0

    def __eq__(self, other) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.v == o.v

    def __hash__(self) -> int:
        return hash(self.v)

    def __lt__(self, other: "FieldElem") -> bool:
        return self.v < other.v

    def order(self) -> int:
        """Multiplicative order."""
        if self.v == 0:
            raise ZeroDivisionError("zero has no multiplicative order")
        k, x = 1, self.v
        while x != 1:
            x = _MUL[x][self.v]
            k += 1
        return k

    def zeta_notation(self) -> str:
        """'a+b*z' over GF(9); GF(81) elements add '+(c+d*z)*s'."""
        d = _digits(self.v)
        s = f"{d[0]}+{d[1]}*z"
        if self.level == 4 and (d[2] or d[3]):
            s += f"+({d[2]}+{d[3]}*z)*s"
        return s

    def __repr__(self) -> str:
        return f"GF{3**self.level}({self.zeta_notation()})"


class Field:
    """Descriptor for one level of the tower."""

    def __init__(self, level: int):
        if level not in LEVELS:
            raise ValueError(f"unsupported tower index k={level}; expected one of {LEVELS}")
        self.level = level
        self.order = 3**level

    def __call__(self, v: int) -> FieldElem:
        # negative ints are prime-field integers, not codes
        return FieldElem(v % 3 if v < 0 else v, self.level)

    @property
    def zero(self) -> FieldElem:
        return FieldElem(0, self.level)

    @property
    def one(self) -> FieldElem:
        return FieldElem(1, self.level)

    @property
    def zeta(self) -> FieldElem:
        if self.level < 2:
            raise ValueError("zeta lives in GF(9) and above")
        return FieldElem(_ZETA, self.level)

    def elements(self) -> Iterator[FieldElem]:
        for v in range(self.order):
            yield FieldElem(v, self.level)

    def nonzero(self) -> Iterator[FieldElem]:
        for v in range(1, self.order):
            yield FieldElem(v, self.level)

    def embed(self, x: FieldElem) -> FieldElem:
        if x.level > self.level:
            raise ValueError("cannot embed a larger field into a smaller one")
        return FieldElem(x.v, self.level)

    def __contains__(self, x: FieldElem) -> bool:
        return x.v < self.order

    def __repr__(self) -> str:
        return f"GF({self.order})"


@lru_cache(maxsize=None)
def field_tower(k: int) -> Field:
    """Return the descriptor of GF(3^k) for k in {1, 2, 4}."""
    return Field(k)


GF3 = field_tower(1)
GF9 = field_tower(2)
GF81 = field_tower(4)
ZETA = GF9.zeta


def zeta_pow(i: int, level: int = 2) -> FieldElem:
    return FieldElem(ZETA.v, level) ** i


# raw code-level tables for hot loops (read-only by convention)
ADD = _ADD
NEG = _NEG
MUL = _MUL
INV = _INV
