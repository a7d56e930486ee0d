"""The 112 rational curves and 280 rational points on the Kummer surface of
A = E x E, assembled from the torsion data on A.

Curves: 16 exceptional curves over Ker[2] (family A), images of the 16 genus-4
translates (family B) and images of the 80 elliptic curves.  Points: one per
(2-torsion point, tangent direction) and one per pair {b, -b} of 4-torsion
points outside Ker[2].
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations

from .abelian import (
    APoint,
    EPoint,
    a_neg,
    family_D,
    family_E,
    ker2,
)
from .algebra.gf import zeta_pow
from .quaternion import j_of_C, pairing, rank1


class KummerError(RuntimeError):
    pass


def _el(v: int) -> str:
    """GF(9) code as 0 or z^k."""
    if v == 0:
        return "0"
    k = next(k for k in range(8) if zeta_pow(k).v == v)
    return f"z^{k}"


def _ep(p: EPoint) -> str:
    if p.is_inf:
        return "Pinf"
    return f"({_el(p.x)},{_el(p.y)})"


def apoint_id(p: APoint) -> str:
    return f"[{_ep(p[0])}|{_ep(p[1])}]"


def _dir_id(d: tuple[int, int]) -> str:
    return "inf" if d[0] == 0 else _el(d[1])


def _apoint_key(p: APoint):
    return (p[0].key(), p[1].key())


# -- typed curves and points ---------------------------------------------------------------

@dataclass(frozen=True)
class KummerCurve:
    kind: str  # "exceptional" | "genus" | "elliptic"
    index: int  # index into Ker[2], family D or family E
    id: str


@dataclass(frozen=True)
class KummerPoint:
    kind: str  # "directional" | "paired"
    data: tuple
    id: str


@dataclass
class IncidenceStructure:
    curves: list[KummerCurve]
    points: list[KummerPoint]
    curve_points: list[list[int]]
    point_curves: list[list[int]]

    @property
    def n_incidences(self) -> int:
        return sum(len(c) for c in self.curve_points)

    def family(self, kind: str) -> list[int]:
        return [i for i, c in enumerate(self.curves) if c.kind == kind]


def _curves() -> list[KummerCurve]:
    k2 = ker2()
    out = [KummerCurve("exceptional", i, f"A:{apoint_id(a)}") for i, a in enumerate(k2)]
    out += [KummerCurve("genus", i, f"B:{apoint_id(d.shift)}") for i, d in enumerate(family_D())]
    fe = family_E()
    out += [
        KummerCurve("elliptic", i, f"E:{c.label}+{apoint_id(c.t)}") for i, c in enumerate(fe.curves)
    ]
    return out


@lru_cache(maxsize=1)
def build_structure() -> IncidenceStructure:
    curves = _curves()
    points: list[KummerPoint] = []
    index: dict[tuple, int] = {}

    def point(kind: str, data: tuple, pid: str) -> int:
        key = (kind, data)
        if key not in index:
            index[key] = len(points)
            points.append(KummerPoint(kind, data, pid))
        return index[key]

    def directional(a: APoint, d: tuple[int, int]) -> int:
        return point("directional", (a, d), f"D:{apoint_id(a)}:{_dir_id(d)}")

    def paired(b: APoint) -> int:
        pair = tuple(sorted((b, a_neg(b)), key=_apoint_key))
        return point("paired", pair, f"P:{{{apoint_id(pair[0])},{apoint_id(pair[1])}}}")

    k2 = ker2()
    k2set = set(k2)
    all_dirs = sorted({d for dd in family_D() for _, d in dd.directions})
    curve_points: list[list[int]] = []
    for c in curves:
        if c.kind == "exceptional":
            a = k2[c.index]
            pts = [directional(a, d) for d in all_dirs]
        elif c.kind == "genus":
            g = family_D()[c.index]
            pts = [directional(a, d) for a, d in g.directions]
        else:
            fe = family_E()
            e, mem = fe.curves[c.index], fe.members4[c.index]
            pts = [directional(a, e.direction) for a in sorted(mem & k2set, key=_apoint_key)]
            pts += sorted({paired(b) for b in mem - k2set})
        curve_points.append(sorted(set(pts)))

    point_curves: list[list[int]] = [[] for _ in points]
    for ci, pts in enumerate(curve_points):
        for p in pts:
            point_curves[p].append(ci)

    bad_c = [(curves[i].id, len(p)) for i, p in enumerate(curve_points) if len(p) != 10]
    bad_p = [(points[i].id, len(c)) for i, c in enumerate(point_curves) if len(c) != 4]
    if bad_c or bad_p or len(points) != 280 or len(curves) != 112:
        raise KummerError(
            f"degree violation: {len(curves)} curves, {len(points)} points, "
            f"curves {bad_c[:3]}, points {bad_p[:3]}"
        )
    return IncidenceStructure(curves, points, curve_points, point_curves)


# -- the curve graph -------------------------------------------------------------------------

@dataclass
class CurveGraph:
    n: int
    edges: list[tuple[int, int]]
    shared: dict  # (i, j) -> number of shared points

    def neighbours(self) -> list[set[int]]:
        nb: list[set[int]] = [set() for _ in range(self.n)]
        for i, j in self.edges:
            nb[i].add(j)
            nb[j].add(i)
        return nb


def curve_graph(s: IncidenceStructure | None = None) -> CurveGraph:
    s = s or build_structure()
    shared: dict = {}
    for cs in s.point_curves:
        for i, j in combinations(sorted(cs), 2):
            shared[(i, j)] = shared.get((i, j), 0) + 1
    multi = {k: v for k, v in shared.items() if v > 1}
    if multi:
        (i, j), v = next(iter(multi.items()))
        raise KummerError(f"curves {s.curves[i].id} and {s.curves[j].id} share {v} points")
    return CurveGraph(len(s.curves), sorted(shared), shared)


def graph_report(s: IncidenceStructure | None = None) -> dict:
    s = s or build_structure()
    g = curve_graph(s)
    nb = g.neighbours()
    fa, fb = s.family("exceptional"), s.family("genus")
    return {
        "degrees": sorted({len(x) for x in nb}),
        "edges": len(g.edges),
        "A_internal": sum(1 for i, j in g.edges if i in fa and j in fa),
        "B_internal": sum(1 for i, j in g.edges if i in fb and j in fb),
        "A_to_B": sorted({len(nb[i] & set(fb)) for i in fa}),
        "B_to_A": sorted({len(nb[i] & set(fa)) for i in fb}),
    }


def local_structure_ok(s: IncidenceStructure | None = None) -> bool:
    """Directional points carry one exceptional, one genus and two elliptic curves;
    paired points carry four elliptic curves; the directions at each a form P^1(GF(9))."""
    s = s or build_structure()
    by_a: dict = {}
    for p, cs in zip(s.points, s.point_curves):
        kinds = sorted(s.curves[c].kind for c in cs)
        if p.kind == "directional":
            if kinds != ["elliptic", "elliptic", "exceptional", "genus"]:
                return False
            by_a.setdefault(p.data[0], []).append(p.data[1])
        elif kinds != ["elliptic"] * 4:
            return False
    return len(by_a) == 16 and all(len(v) == len(set(v)) == 10 for v in by_a.values())


# -- intersection ledger -------------------------------------------------------------------------

@dataclass
class LedgerReport:
    self_on_A: dict  # kind -> self-intersection on A (or on the blowup for exceptional)
    after_blowup: dict
    on_kummer: dict
    matrix: list[list[Fraction]]
    matches_graph: bool
    mismatches: list


def _ns_class(c: KummerCurve):
    if c.kind == "genus":
        return j_of_C()
    if c.kind == "elliptic":
        e = family_E().curves[c.index]
        return rank1(e.a, e.b)
    return None


def _two_torsion(c: KummerCurve) -> frozenset:
    if c.kind == "exceptional":
        return frozenset([ker2()[c.index]])
    if c.kind == "genus":
        return family_D()[c.index].members
    return family_E().members4[c.index] & frozenset(ker2())


def intersection_ledger(s: IncidenceStructure | None = None) -> LedgerReport:
    """Intersection numbers of the 112 image curves on the Kummer surface.

    Stable curves D (genus-4 and elliptic, all inversion-invariant): the strict
    transform loses one per 2-torsion point, and g^* g(D~) = D~ halves the
    product.  Exceptional curves l: g^* g(l) = 2 l.
    """
    s = s or build_structure()
    n = len(s.curves)
    cls = [_ns_class(c) for c in s.curves]
    tors = [_two_torsion(c) for c in s.curves]
    m = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            ci, cj = s.curves[i], s.curves[j]
            if ci.kind == "exceptional" and cj.kind == "exceptional":
                # l_a . l_b on the blowup is -1 or 0; (2l).(2l') = 2 g(l).g(l')
                v = Fraction(4 * (-1 if i == j else 0), 2)
            elif ci.kind == "exceptional" or cj.kind == "exceptional":
                ex, st = (i, j) if ci.kind == "exceptional" else (j, i)
                # (2 l_a) . D~ = 2 g(l_a) . g(D~), and l_a . D~ = mult of D at a
                v = Fraction(2 * len(tors[ex] & tors[st]), 2)
            else:
                v = Fraction(pairing(cls[i], cls[j]) - len(tors[i] & tors[j]), 2)
            m[i][j] = m[j][i] = v
    g = curve_graph(s)
    adj = set(g.edges)
    bad = []
    for i in range(n):
        for j in range(i, n):
            want = -2 if i == j else (1 if (i, j) in adj else 0)
            if m[i][j] != want:
                bad.append((s.curves[i].id, s.curves[j].id, str(m[i][j]), want))
    jc = j_of_C()
    ell = rank1(family_E().curves[0].a, family_E().curves[0].b)
    self_on_A = {"genus": pairing(jc, jc), "elliptic": pairing(ell, ell), "exceptional": -1}
    after = {"genus": self_on_A["genus"] - 10, "elliptic": self_on_A["elliptic"] - 4, "exceptional": -1}
    on_k = {k: sorted({str(m[i][i]) for i in s.family(k)}) for k in ("genus", "elliptic", "exceptional")}
    return LedgerReport(self_on_A, after, on_k, m, not bad, bad)
