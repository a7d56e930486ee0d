"""Curves on the quadric P^1 x P^1 over GF(9): C, C', the rulings C_i, D_j,
their ten common points, and the thirty (1,1)-forms through four of them.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from functools import lru_cache
from itertools import permutations

from .algebra.ffmat import normalize
from .algebra.gf import ADD, MUL, NEG, FieldElem, zeta_pow
from .algebra.poly import Poly, poly_gcd

LEVEL = 2


def z(i: int) -> int:
    """Code of zeta^i in GF(9)."""
    return zeta_pow(i).v


class QuadricError(RuntimeError):
    pass


P1 = tuple([(1, a) for a in range(9)] + [(0, 1)])


@dataclass(frozen=True, order=True)
class BiPoint:
    u: tuple[int, int]
    v: tuple[int, int]

    @classmethod
    def make(cls, u, v) -> "BiPoint":
        return cls(normalize(u), normalize(v))

    def swapped(self) -> "BiPoint":
        return BiPoint(self.v, self.u)

    def __str__(self) -> str:
        def f(p):
            return "(" + ":".join(FieldElem(c, LEVEL).zeta_notation() for c in p) + ")"

        return f"({f(self.u)},{f(self.v)})"


@dataclass(frozen=True)
class BiForm:
    """sum c[i,j] u0^(a-i) u1^i v0^(b-j) v1^j over GF(9)."""

    a: int
    b: int
    coeffs: tuple[tuple[tuple[int, int], int], ...]
    name: str = ""

    @classmethod
    def make(cls, a: int, b: int, coeffs: dict, name: str = "") -> "BiForm":
        items = tuple(sorted((k, c) for k, c in coeffs.items() if c))
        if not items:
            raise QuadricError("zero form")
        return cls(a, b, items, name)

    def __call__(self, p: BiPoint) -> int:
        (u0, u1), (v0, v1) = p.u, p.v
        acc = 0
        for (i, j), c in self.coeffs:
            t = c
            for base, e in ((u0, self.a - i), (u1, i), (v0, self.b - j), (v1, j)):
                for _ in range(e):
                    t = MUL[t][base]
            acc = ADD[acc][t]
        return acc

    def swapped(self) -> "BiForm":
        return BiForm.make(self.b, self.a, {(j, i): c for (i, j), c in self.coeffs}, self.name)

    @property
    def bidegree(self) -> tuple[int, int]:
        return (self.a, self.b)


def intersection_number(f: BiForm, g: BiForm) -> int:
    return f.a * g.b + f.b * g.a


# -- named curves ----------------------------------------------------------------

CURVE_C = BiForm.make(1, 3, {(0, 0): 1, (1, 3): NEG[1]}, "C")
CURVE_C1 = BiForm.make(3, 1, {(0, 0): 1, (3, 1): NEG[1]}, "C'")


def ruling_C(i: int) -> BiForm:
    """C_i: u1 = zeta^i u0 (1..8), C_9: u1 = 0, C_10: u0 = 0."""
    if 1 <= i <= 8:
        return BiForm.make(1, 0, {(1, 0): 1, (0, 0): NEG[z(i)]}, f"C{i}")
    if i == 9:
        return BiForm.make(1, 0, {(1, 0): 1}, "C9")
    if i == 10:
        return BiForm.make(1, 0, {(0, 0): 1}, "C10")
    raise ValueError(i)


def ruling_D(j: int) -> BiForm:
    """D_j: the same equations in (v0, v1)."""
    return replace(ruling_C(j).swapped(), name=f"D{j}")


# -- base points -------------------------------------------------------------------

def all_bipoints() -> list[BiPoint]:
    return [BiPoint(u, v) for u in P1 for v in P1]


def listed_base_points() -> list[BiPoint]:
    pts = [BiPoint((0, 1), (1, 0)), BiPoint((1, 0), (0, 1))]
    pts += [BiPoint((1, z(i)), (1, z(5 * i))) for i in range(1, 9)]
    return sorted(pts)


def common_points(f: BiForm, g: BiForm) -> list[BiPoint]:
    return [p for p in all_bipoints() if f(p) == 0 and g(p) == 0]


# -- local intersection multiplicity -----------------------------------------------

def _x_poly(form: BiForm, chart: int, j: int) -> Poly:
    """Coefficient of v0^(b-j) v1^j as a polynomial in the affine u coordinate.

    chart 0: u0 = 1, x = u1.  chart 1: u1 = 1, x = u0.
    """
    c = [0] * (form.a + 1)
    for (i, jj), v in form.coeffs:
        if jj != j:
            continue
        deg = i if chart == 0 else form.a - i
        c[deg] = ADD[c[deg]][v]
    return Poly.from_codes(c, LEVEL)


def _det(m: list[list[Poly]]) -> Poly:
    n = len(m)
    if n == 0:
        return Poly.from_codes([1], LEVEL)
    acc = Poly.from_codes([], LEVEL)
    for perm in permutations(range(n)):
        term = Poly.from_codes([1], LEVEL)
        for r, c in enumerate(perm):
            term = term * m[r][c]
            if term.is_zero():
                break
        if term.is_zero():
            continue
        inv = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        acc = acc - term if inv % 2 else acc + term
    return acc


def v_resultant(f: BiForm, g: BiForm, chart: int) -> Poly:
    """Homogeneous resultant in (v0:v1), as a polynomial in the affine u coordinate."""
    m, n = f.b, g.b
    size = m + n
    zero = Poly.from_codes([], LEVEL)
    fc = [_x_poly(f, chart, j) for j in range(m + 1)]
    gc = [_x_poly(g, chart, j) for j in range(n + 1)]
    rows = []
    for r in range(n):
        row = [zero] * size
        for j, c in enumerate(fc):
            row[r + j] = c
        rows.append(row)
    for r in range(m):
        row = [zero] * size
        for j, c in enumerate(gc):
            row[r + j] = c
        rows.append(row)
    return _det(rows)


def _fiber_binary(form: BiForm, u: tuple[int, int]) -> list[int]:
    """Coefficients (by power of v1) of the restriction to the fiber over u."""
    out = [0] * (form.b + 1)
    for (i, j), c in form.coeffs:
        t = c
        for base, e in ((u[0], form.a - i), (u[1], i)):
            for _ in range(e):
                t = MUL[t][base]
        out[j] = ADD[out[j]][t]
    return out


def _single_common_point(f: BiForm, g: BiForm, p: BiPoint) -> bool:
    """Is p the only common zero (over the closure) on its vertical fiber?"""
    fb, gb = _fiber_binary(f, p.u), _fiber_binary(g, p.u)
    if not any(fb) and not any(gb):
        return False
    # dehomogenize v0 = 1, w = v1; a root at infinity shows up as a degree drop
    F, G = Poly.from_codes(fb, LEVEL), Poly.from_codes(gb, LEVEL)
    at_inf = (F.degree < f.b) and (G.degree < g.b)
    if F.is_zero():
        h = G.monic()
    elif G.is_zero():
        h = F.monic()
    else:
        h = poly_gcd(F, G)
    if p.v == (0, 1):
        return at_inf and h.degree == 0
    if at_inf:
        return False
    w = p.v[1]
    lin = Poly.from_codes([NEG[w], 1], LEVEL)
    while h.degree > 0:
        q, r = h.divmod(lin)
        if not r.is_zero():
            return False
        h = q
    return True


def local_mult(f: BiForm, g: BiForm, p: BiPoint) -> int:
    """Local intersection multiplicity at p via resultant valuation."""
    if f(p) or g(p):
        raise QuadricError(f"{p} is not on both curves")
    for ff, gg, pp in ((f, g, p), (f.swapped(), g.swapped(), p.swapped())):
        if not _single_common_point(ff, gg, pp):
            continue
        chart = 0 if pp.u[0] else 1
        res = v_resultant(ff, gg, chart)
        if res.is_zero():
            raise QuadricError("curves share a common component")
        x0 = pp.u[1] if chart == 0 else 0
        return res.valuation_at(FieldElem(x0, LEVEL))
    raise QuadricError(f"cannot isolate {p} on a ruling fiber")


# -- the thirty (1,1)-forms ----------------------------------------------------------

def _f11(c00: int, c01: int, c10: int, c11: int, name: str) -> BiForm:
    return BiForm.make(1, 1, {(0, 0): c00, (0, 1): c01, (1, 0): c10, (1, 1): c11}, name)


def _neg(c: int) -> int:
    return NEG[c]


def _forms(corrected: bool) -> tuple[BiForm, ...]:
    one, mone = 1, _neg(1)
    forms: list[BiForm] = []
    for k in range(4):
        forms.append(_f11(one, 0, 0, _neg(z(2 * k)), f"u0v0-z^{2*k}u1v1"))
    for s, sn in ((one, "+"), (mone, "-")):
        forms.append(_f11(0, one, s, 0, f"u0v1{sn}u1v0"))
    # u0v0 +- a*u0v1 + b*u1v1, and the same with u1v0 in place of u0v1
    mixed = [(one, one), (z(1), _neg(z(2))), (z(3), z(2)), (z(2), mone)]
    for slot in ("u0v1", "u1v0"):
        for a, b in mixed:
            for s, sn in ((one, "+"), (mone, "-")):
                sa = MUL[s][a]
                c01, c10 = (sa, 0) if slot == "u0v1" else (0, sa)
                forms.append(_f11(one, c01, c10, b, f"u0v0{sn}({FieldElem(a, 2).zeta_notation()}){slot}+..."))
    for k in range(4):
        c = z(2 * k)
        if corrected:
            # u1v1 coefficient zeta^(4k); the uniform -1 only works for odd k
            forms.append(_f11(one, c, _neg(c), z(4 * k), f"u0v0+z^{2*k}(u0v1-u1v0)+z^{4*k}u1v1"))
        else:
            forms.append(_f11(one, c, _neg(c), mone, f"u0v0+z^{2*k}(u0v1-u1v0)-u1v1"))
    for a, b in ((z(1), _neg(z(2))), (z(3), z(2))):
        for s, sn in ((one, "+"), (mone, "-")):
            sa = MUL[s][a]
            forms.append(_f11(one, sa, sa, b, f"u0v0{sn}({FieldElem(a, 2).zeta_notation()})(u0v1+u1v0)+..."))
    return tuple(forms)


def printed_forms() -> tuple[BiForm, ...]:
    """The thirty forms exactly as commonly printed (two carry a sign misprint)."""
    return _forms(corrected=False)


@lru_cache(maxsize=1)
def thirty_forms() -> tuple[BiForm, ...]:
    return _forms(corrected=True)


def four_point_forms() -> list[tuple[int, int, int, int]]:
    """Every (1,1)-form up to scalar through exactly four base points (c00,c01,c10,c11)."""
    bp = base_points()
    out = []
    for c in [(1, a, b, d) for a in range(9) for b in range(9) for d in range(9)] + [
        (0, 1, b, d) for b in range(9) for d in range(9)
    ] + [(0, 0, 1, d) for d in range(9)] + [(0, 0, 0, 1)]:
        f = _f11(*c, "")
        if sum(1 for p in bp if f(p) == 0) == 4:
            out.append(c)
    return out


def form_vector(f: BiForm) -> tuple[int, int, int, int]:
    d = dict(f.coeffs)
    return normalize(tuple(d.get(k, 0) for k in ((0, 0), (0, 1), (1, 0), (1, 1))))


def printed_form_report() -> dict:
    """Which printed forms fail the four-point property, and what replaces them."""
    bp = base_points()
    printed, fixed = printed_forms(), thirty_forms()
    bad = [
        (pf.name, sum(1 for p in bp if pf(p) == 0), ff.name)
        for pf, ff in zip(printed, fixed)
        if sum(1 for p in bp if pf(p) == 0) != 4
    ]
    complete = set(four_point_forms())
    return {
        "printed_ok": len(printed) - len(bad),
        "misprints": bad,
        "complete_system_size": len(complete),
        "corrected_is_complete": {form_vector(f) for f in fixed} == complete,
    }


# -- checks --------------------------------------------------------------------------

@lru_cache(maxsize=1)
def base_points() -> tuple[BiPoint, ...]:
    pts = sorted(common_points(CURVE_C, CURVE_C1))
    if pts != listed_base_points():
        raise QuadricError("C and C' do not meet in the listed ten points")
    mults = [local_mult(CURVE_C, CURVE_C1, p) for p in pts]
    if sum(mults) != intersection_number(CURVE_C, CURVE_C1):
        raise QuadricError(f"local multiplicities {mults} do not exhaust C.C'")
    return tuple(pts)


@dataclass(frozen=True)
class Tangency:
    curve: str
    point: BiPoint
    mult: int


def ruling_tangencies() -> list[Tangency]:
    """Each C_i meets C (each D_j meets C') at one point, with multiplicity 3."""
    out = []
    for ruling, target in ((ruling_C, CURVE_C), (ruling_D, CURVE_C1)):
        for i in range(1, 11):
            r = ruling(i)
            pts = common_points(r, target)
            if len(pts) != 1:
                raise QuadricError(f"{r.name} meets {target.name} in {len(pts)} rational points")
            m = local_mult(r, target, pts[0])
            if m != intersection_number(r, target):
                raise QuadricError(f"{r.name} meets {target.name} elsewhere over the closure")
            out.append(Tangency(r.name, pts[0], m))
    return out


def incidence_matrix() -> list[list[int]]:
    """30 x 10 matrix: form k passes through base point p."""
    bp = base_points()
    return [[1 if f(p) == 0 else 0 for p in bp] for f in thirty_forms()]
