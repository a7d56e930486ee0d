"""The maximal order O = End(E) of the quaternion algebra ramified at 3 and infinity,
hermitian 2x2 matrices over O, and the Neron-Severi model of E x E.

O has integral basis {1, tau, sigma, tau*sigma} subject to
sigma^2 = -1 - sigma, tau^2 = -1, tau*sigma = sigma^2*tau.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from .algebra.gf import FieldElem, zeta_pow
from .algebra.linalg import solve_exact


class QuaternionError(RuntimeError):
    pass


# -- multiplication table by word rewriting -------------------------------------

_BASIS_WORDS = ("", "t", "s", "ts")
# left-hand side -> linear combination of words
_RULES = {
    "ss": {"": -1, "s": -1},
    "tt": {"": -1},
    "st": {"t": -1, "ts": -1},  # sigma*tau = sigma^2*tau*... rewritten via tau*sigma = sigma^2*tau
}


def _reduce(comb: dict[str, int]) -> dict[str, int]:
    out: dict[str, int] = {}
    todo = list(comb.items())
    while todo:
        w, c = todo.pop()
        if not c:
            continue
        for lhs, rhs in _RULES.items():
            k = w.find(lhs)
            if k >= 0:
                for r, rc in rhs.items():
                    todo.append((w[:k] + r + w[k + 2 :], c * rc))
                break
        else:
            out[w] = out.get(w, 0) + c
    return {w: c for w, c in out.items() if c}


@lru_cache(maxsize=1)
def mult_table() -> tuple[tuple[tuple[int, ...], ...], ...]:
    """table[i][j] = coordinates of basis_i * basis_j."""
    table = []
    for a in _BASIS_WORDS:
        row = []
        for b in _BASIS_WORDS:
            red = _reduce({a + b: 1})
            if set(red) - set(_BASIS_WORDS):
                raise QuaternionError(f"rewriting left {set(red)}")
            row.append(tuple(red.get(w, 0) for w in _BASIS_WORDS))
        table.append(tuple(row))
    return tuple(table)


@dataclass(frozen=True)
class QuatO:
    """a + b*tau + c*sigma + d*tau*sigma with integer coordinates."""

    c: tuple[int, int, int, int]

    @classmethod
    def of(cls, a: int = 0, b: int = 0, c: int = 0, d: int = 0) -> "QuatO":
        return cls((a, b, c, d))

    def __add__(self, o: "QuatO | int") -> "QuatO":
        o = _lift(o)
        return QuatO(tuple(x + y for x, y in zip(self.c, o.c)))

    __radd__ = __add__

    def __neg__(self) -> "QuatO":
        return QuatO(tuple(-x for x in self.c))

    def __sub__(self, o: "QuatO | int") -> "QuatO":
        return self + (-_lift(o))

    def __rsub__(self, o: "QuatO | int") -> "QuatO":
        return _lift(o) - self

    def __mul__(self, o: "QuatO | int") -> "QuatO":
        o = _lift(o)
        t = mult_table()
        out = [0, 0, 0, 0]
        for i, x in enumerate(self.c):
            if not x:
                continue
            for j, y in enumerate(o.c):
                if not y:
                    continue
                for k, v in enumerate(t[i][j]):
                    out[k] += x * y * v
        return QuatO(tuple(out))

    def __rmul__(self, o: int) -> "QuatO":
        return _lift(o) * self

    def __pow__(self, n: int) -> "QuatO":
        acc = ONE
        for _ in range(n):
            acc = acc * self
        return acc

    def conj(self) -> "QuatO":
        a, b, c, d = self.c
        # conj(sigma) = -1 - sigma, conj(tau) = -tau, conj(tau*sigma) = -tau*sigma
        return QuatO((a - c, -b, -c, -d))

    def norm(self) -> int:
        n = self * self.conj()
        if n.c[1:] != (0, 0, 0):
            raise QuaternionError(f"norm of {self} is not scalar")
        return n.c[0]

    def trace(self) -> int:
        t = self + self.conj()
        if t.c[1:] != (0, 0, 0):
            raise QuaternionError(f"trace of {self} is not scalar")
        return t.c[0]

    def is_zero(self) -> bool:
        return not any(self.c)

    def __repr__(self) -> str:
        names = ("1", "t", "s", "ts")
        parts = [f"{v}*{n}" for v, n in zip(self.c, names) if v]
        return "Q(" + (" + ".join(parts) or "0") + ")"


def _lift(o) -> QuatO:
    if isinstance(o, QuatO):
        return o
    if isinstance(o, int):
        return QuatO((o, 0, 0, 0))
    raise TypeError(f"cannot use {o!r} as an element of O")


ONE = QuatO.of(1)
ZERO = QuatO.of()
TAU = QuatO.of(0, 1)
SIGMA = QuatO.of(0, 0, 1)
TS = QuatO.of(0, 0, 0, 1)
F = -1 - 2 * SIGMA  # Frobenius, F^2 = -3
V = -F  # Verschiebung, conj(F)
PI = 1 - TAU
PIBAR = PI.conj()
S2 = SIGMA * SIGMA


def quat_mul(x: QuatO, y: QuatO) -> QuatO:
    return x * y


def quat_conj(x: QuatO) -> QuatO:
    return x.conj()


def quat_norm(x: QuatO) -> int:
    return x.norm()


def quat_trace(x: QuatO) -> int:
    return x.trace()


def self_check() -> list[str]:
    """Defining relations and the alpha, beta presentation."""
    problems = []
    if S2 != -1 - SIGMA:
        problems.append("sigma^2 != -1 - sigma")
    if TAU * TAU != -ONE:
        problems.append("tau^2 != -1")
    if TAU * SIGMA != S2 * TAU:
        problems.append("tau*sigma != sigma^2*tau")
    alpha, beta = F, TAU
    if alpha * alpha != QuatO.of(-3):
        problems.append("alpha^2 != -3")
    if beta * beta != -ONE:
        problems.append("beta^2 != -1")
    if alpha * beta != -(beta * alpha):
        problems.append("alpha*beta != -beta*alpha")
    return problems


# -- hermitian matrices -------------------------------------------------------------

@dataclass(frozen=True)
class HermMat:
    """(a, b; conj(b), d) with a, d integers and b in O."""

    a: int
    b: QuatO
    d: int

    def __add__(self, o: "HermMat") -> "HermMat":
        return HermMat(self.a + o.a, self.b + o.b, self.d + o.d)

    def __sub__(self, o: "HermMat") -> "HermMat":
        return HermMat(self.a - o.a, self.b - o.b, self.d - o.d)

    def scale(self, k: int) -> "HermMat":
        return HermMat(k * self.a, k * self.b, k * self.d)

    def det(self) -> int:
        return self.a * self.d - self.b.norm()

    def as_json(self) -> dict:
        return {"a": self.a, "b": list(self.b.c), "d": self.d}


HZERO = HermMat(0, ZERO, 0)


def pairing(l1: HermMat, l2: HermMat) -> int:
    """alpha2*delta1 + alpha1*delta2 - gamma1*beta2 - gamma2*beta1."""
    return l2.a * l1.d + l1.a * l2.d - (l1.b.conj() * l2.b).trace()


def rank1(a: QuatO, b: QuatO) -> HermMat:
    """j(Delta_{a,b}) = (N a, conj(a) b; conj(b) a, N b)."""
    if a.is_zero() and b.is_zero():
        raise QuaternionError("rank1 of the zero pair")
    return HermMat(a.norm(), a.conj() * b, b.norm())


# -- Neron-Severi basis ---------------------------------------------------------------

NS_NAMES = ("E1", "E2", "Delta", "Delta_1,tau", "Delta_1,-sigma", "Delta_1,-tau*sigma")
NS_PAIRS = ((ZERO, ONE), (ONE, ZERO), (ONE, ONE), (ONE, TAU), (ONE, -SIGMA), (ONE, -TS))


def ns_basis() -> list[HermMat]:
    return [rank1(a, b) for a, b in NS_PAIRS]


# the six displayed basis images: (a, b-coordinates, d)
PRINTED_BASIS = (
    (0, (0, 0, 0, 0), 1),
    (1, (0, 0, 0, 0), 0),
    (1, (1, 0, 0, 0), 1),
    (1, (0, 1, 0, 0), 1),
    (1, (0, 0, -1, 0), 1),
    (1, (0, 0, 0, -1), 1),
)

PRINTED_TABLE = (
    (0, 1, 1, 1, 1, 1),
    (1, 0, 1, 1, 1, 1),
    (1, 1, 0, 2, 1, 2),
    (1, 1, 2, 0, 2, 1),
    (1, 1, 1, 2, 0, 2),
    (1, 1, 2, 1, 2, 0),
)


@dataclass(frozen=True)
class NSClass:
    coeffs: tuple[int, int, int, int, int, int]


def ns_to_herm(c: NSClass) -> HermMat:
    acc = HZERO
    for k, m in zip(c.coeffs, ns_basis()):
        acc = acc + m.scale(k)
    return acc


def intersection_table() -> list[list[int]]:
    b = ns_basis()
    return [[pairing(x, y) for y in b] for x in b]


# -- the genus-4 class -----------------------------------------------------------------

# (C, basis element) for the genus-4 curve C, taken as given
GENUS4_INTERSECTIONS = (3, 3, 6, 6, 3, 3)
GENUS4_SELF = 6


@dataclass(frozen=True)
class Genus4Solution:
    cls: NSClass
    herm: HermMat
    reproduces_inputs: bool
    self_intersection: int


def solve_genus4(rhs: Sequence[int] = GENUS4_INTERSECTIONS) -> Genus4Solution:
    table = intersection_table()
    sol = solve_exact(table, list(rhs))
    if any(x.denominator != 1 for x in sol):
        raise QuaternionError(f"non-integral solution {sol}")
    cls = NSClass(tuple(int(x) for x in sol))
    h = ns_to_herm(cls)
    back = tuple(pairing(h, m) for m in ns_basis())
    return Genus4Solution(cls, h, back == tuple(rhs), pairing(h, h))


def j_of_C() -> HermMat:
    return solve_genus4().herm


# -- differential character and tangent classes ------------------------------------------

_D_BASIS = (1, zeta_pow(2).v, 1, zeta_pow(2).v)  # d(1), d(tau), d(sigma), d(tau*sigma)


def differential(x: QuatO) -> FieldElem:
    """Action on the invariant differential: the ring map O -> GF(9)."""
    acc = FieldElem(0, 2)
    for k, db in zip(x.c, _D_BASIS):
        acc = acc + FieldElem(db, 2) * k
    return acc


def tangent_class(a: QuatO, b: QuatO) -> tuple[int, int]:
    """Normalized direction (u:v) with d(a)u + d(b)v = 0, as GF(9) codes."""
    da, db = differential(a), differential(b)
    if da.is_zero() and db.is_zero():
        raise QuaternionError("both differentials vanish")
    if da.is_zero():
        return (1, 0)
    u, v = db, -da
    return (1, (v / u).v) if u else (0, 1)


INF = "inf"


def class_label(direction: tuple[int, int]):
    """(1:alpha) -> alpha as a GF(9) element, (0:1) -> 'inf'."""
    if direction == (0, 1):
        return INF
    return FieldElem(direction[1], 2)


# -- the ten decompositions ---------------------------------------------------------------

def _z(i: int) -> FieldElem:
    return zeta_pow(i)


# (label, exponent of zeta or None for 0 / inf), first member, second member
DECOMPOSITIONS = (
    ("inf", INF, (ONE, ZERO), (PI, F)),
    ("0", 0, (ZERO, ONE), (V, PI)),
    ("1", _z(0), (SIGMA + TAU, -S2 - TAU), (ONE, -SIGMA)),
    ("z", _z(1), (PI, -SIGMA), (ONE, PIBAR * S2)),
    ("z^2", _z(2), (1 + S2 * TAU, TAU - SIGMA), (ONE, TAU * S2)),
    ("z^3", _z(3), (ONE, S2 * PI), (-(PIBAR * S2), ONE)),
    ("-1", _z(4), (S2 + TAU, SIGMA + TAU), (ONE, S2)),
    ("-z", _z(5), (ONE, -(PIBAR * SIGMA)), (SIGMA * PI, ONE)),
    ("-z^2", _z(6), (-S2 + TAU, 1 + TAU * S2), (ONE, -TS)),
    ("-z^3", _z(7), (PIBAR * SIGMA, ONE), (ONE, -(SIGMA * PI))),
)


def _label_value(v):
    if v == INF:
        return INF
    if v == 0:
        return FieldElem(0, 2)
    return v


@dataclass(frozen=True)
class Decomposition:
    label: str
    first: tuple[QuatO, QuatO]
    second: tuple[QuatO, QuatO]
    m1: HermMat
    m2: HermMat
    sums_to_jC: bool
    inner: int
    tangents: tuple
    label_ok: bool


def decompositions() -> list[Decomposition]:
    jc = j_of_C()
    out = []
    for name, val, p1, p2 in DECOMPOSITIONS:
        m1, m2 = rank1(*p1), rank1(*p2)
        t1, t2 = tangent_class(*p1), tangent_class(*p2)
        want = _label_value(val)
        ok = t1 == t2 and class_label(t1) == want
        out.append(Decomposition(name, p1, p2, m1, m2, m1 + m2 == jc, pairing(m1, m2), (t1, t2), ok))
    return out


def cross_pairings() -> dict[tuple[str, str], int]:
    """Pairings between members of different classes."""
    ds = decompositions()
    out = {}
    for i, a in enumerate(ds):
        for j, b in enumerate(ds):
            if i >= j:
                continue
            for ka, ma in (("", a.m1), ("'", a.m2)):
                for kb, mb in (("", b.m1), ("'", b.m2)):
                    out[(a.label + ka, b.label + kb)] = pairing(ma, mb)
    return out


# numbered elliptic curves through the origin, as (number, primed, pair) as printed
NUMBERED_CURVES = {
    "1": (V, PI),
    "1'": (ZERO, ONE),
    "2": (ONE, ZERO),
    "2'": (PI, F),
    "3": (S2 * TAU, SIGMA + TAU),
    "3'": (ONE, S2),
    "4": (PI, -SIGMA),
    "4'": (ONE, PIBAR * S2),
    "5": (-S2 + TAU, 1 + TAU * S2),
    "5'": (ONE, -TS),
    "6": (ONE, S2 * PI),
    "6'": (-(PIBAR * S2), ONE),
    "7": (SIGMA + TAU, -S2 - TAU),
    "7'": (ONE, -SIGMA),
    "8": (ONE, -(PIBAR * SIGMA)),
    "8'": (SIGMA * PI, ONE),
    "9": (1 + S2 * TAU, TAU - SIGMA),
    "9'": (ONE, TAU * S2),
    "10": (PIBAR * SIGMA, ONE),
    "10'": (ONE, -(SIGMA * PI)),
}


def numbered_label_report() -> dict[str, dict]:
    """For each numbered curve: does its pair match a decomposition member, and do
    (k) + (k)' sum to j(C)?"""
    members = {}
    for d in decompositions():
        members[d.m1] = d.label
        members[d.m2] = d.label + "'"
    jc = j_of_C()
    out = {}
    for k in range(1, 11):
        a, b = NUMBERED_CURVES[str(k)], NUMBERED_CURVES[f"{k}'"]
        ma, mb = rank1(*a), rank1(*b)
        out[str(k)] = {
            "first_matches": members.get(ma),
            "second_matches": members.get(mb),
            "sums_to_jC": ma + mb == jc,
            "first_norms": (a[0].norm(), a[1].norm()),
        }
    return out
