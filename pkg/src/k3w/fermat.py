"""Lines and rational points of the Fermat quartic x0^4 + x1^4 + x2^4 + x3^4 = 0 over GF(9)."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product

from .algebra.ffmat import axpy, normalize, rank, rref
from .algebra.gf import ADD, MUL, FieldElem

Q = 9
ELEMS = range(Q)
# binomial(4, j) mod 3
_BINOM4 = (1, 1, 0, 1, 1)


class FermatError(RuntimeError):
    pass


def _pow(a: int, n: int) -> int:
    r = 1
    for _ in range(n):
        r = MUL[r][a]
    return r


_POW = [[_pow(a, n) for n in range(5)] for a in range(Q)]


@dataclass(frozen=True, order=True)
class ProjPoint3:
    coords: tuple[int, int, int, int]  # GF(9) codes, first nonzero = 1

    @property
    def elems(self) -> tuple[FieldElem, ...]:
        return tuple(FieldElem(c, 2) for c in self.coords)

    def __str__(self) -> str:
        return "(" + ":".join(e.zeta_notation() for e in self.elems) + ")"


def quartic(v) -> int:
    acc = 0
    for c in v:
        acc = ADD[acc][_POW[c][4]]
    return acc


def projective_points(dim: int = 3) -> list[tuple[int, ...]]:
    pts = []
    for v in product(ELEMS, repeat=dim + 1):
        if any(v) and v[next(i for i, c in enumerate(v) if c)] == 1:
            pts.append(v)
    return pts


@lru_cache(maxsize=1)
def surface_points() -> tuple[ProjPoint3, ...]:
    pts = tuple(ProjPoint3(v) for v in projective_points() if quartic(v) == 0)
    if len(pts) != 280:
        raise FermatError(f"{len(pts)} surface points, expected 280")
    return pts


@dataclass(frozen=True, order=True)
class Line3:
    rows: tuple[tuple[int, ...], tuple[int, ...]]  # reduced echelon form

    @property
    def points(self) -> tuple[tuple[int, ...], ...]:
        return _line_points(self.rows)

    def meets(self, other: "Line3") -> bool:
        return rank(list(self.rows) + list(other.rows)) <= 3


@lru_cache(maxsize=None)
def _line_points(rows) -> tuple[tuple[int, ...], ...]:
    a, b = rows
    pts = {normalize(a)}
    for s in ELEMS:
        pts.add(normalize(axpy(s, a, b)))
    return tuple(sorted(pts))


def canonical_line(p, q) -> Line3:
    r = rref([p, q])
    if len(r) != 2:
        raise ValueError("points do not span a line")
    return Line3((tuple(r[0]), tuple(r[1])))


def all_lines():
    """Every line of P^3(GF(9)) in reduced echelon form (7462 of them)."""
    for i in range(4):
        for j in range(i + 1, 4):
            free_a = [c for c in range(i + 1, 4) if c != j]
            free_b = list(range(j + 1, 4))
            for va in product(ELEMS, repeat=len(free_a)):
                a = [0] * 4
                a[i] = 1
                for c, v in zip(free_a, va):
                    a[c] = v
                for vb in product(ELEMS, repeat=len(free_b)):
                    b = [0] * 4
                    b[j] = 1
                    for c, v in zip(free_b, vb):
                        b[c] = v
                    yield Line3((tuple(a), tuple(b)))


def restricted_coefficients(line: Line3) -> tuple[int, ...]:
    """Coefficients of s^j t^(4-j), j = 0..4, of the quartic on s*a + t*b."""
    a, b = line.rows
    out = []
    for j in range(5):
        acc = 0
        for ak, bk in zip(a, b):
            acc = ADD[acc][MUL[_POW[ak][j]][_POW[bk][4 - j]]]
        out.append(MUL[_BINOM4[j]][acc])
    return tuple(out)


def contained(line: Line3) -> bool:
    return not any(restricted_coefficients(line))


@lru_cache(maxsize=1)
def surface_lines() -> tuple[Line3, ...]:
    scanned = 0
    found = []
    for ln in all_lines():
        scanned += 1
        if contained(ln):
            found.append(ln)
    if scanned != 7462:
        raise FermatError(f"scanned {scanned} lines, expected 7462")
    if len(found) != 112:
        raise FermatError(f"{len(found)} lines on the surface, expected 112")
    return tuple(sorted(found))


@dataclass(frozen=True)
class Configuration:
    points: tuple[ProjPoint3, ...]
    lines: tuple[Line3, ...]
    incidence: tuple[tuple[int, ...], ...]  # line index -> sorted point indices

    def lines_through(self) -> list[list[int]]:
        out: list[list[int]] = [[] for _ in self.points]
        for li, pts in enumerate(self.incidence):
            for p in pts:
                out[p].append(li)
        return out


@lru_cache(maxsize=1)
def configuration() -> Configuration:
    pts = surface_points()
    lines = surface_lines()
    where = {p.coords: k for k, p in enumerate(pts)}
    inc = []
    for ln in lines:
        try:
            inc.append(tuple(sorted(where[c] for c in ln.points)))
        except KeyError as e:
            raise FermatError(f"line {ln.rows} has a point off the surface") from e
    cfg = Configuration(pts, lines, tuple(inc))
    bad_l = [k for k, row in enumerate(inc) if len(row) != 10]
    bad_p = [k for k, ls in enumerate(cfg.lines_through()) if len(ls) != 4]
    if bad_l or bad_p:
        raise FermatError(f"configuration degrees violated: lines {bad_l[:5]}, points {bad_p[:5]}")
    return cfg


@lru_cache(maxsize=1)
def line_graph() -> tuple[tuple[int, ...], ...]:
    lines = surface_lines()
    n = len(lines)
    adj: list[list[int]] = [[] for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            if lines[i].meets(lines[j]):
                adj[i].append(j)
                adj[j].append(i)
    return tuple(tuple(a) for a in adj)


@dataclass(frozen=True)
class Fibration:
    base: int
    triples: tuple[tuple[int, int, int], ...]
    centers: tuple[int, ...]  # point index of each triple's common point
    sections: tuple[int, ...]


def fibration(base: int, incidence=None, adj=None) -> Fibration:
    """Split the lines meeting ``base`` into 10 concurrent triples plus 81 sections.

    ``incidence`` (line -> point indices) and ``adj`` default to the surface's own.
    """
    adj = adj if adj is not None else line_graph()
    inc = [set(r) for r in (incidence if incidence is not None else configuration().incidence)]
    groups: dict[int, list[int]] = {}
    for m in adj[base]:
        common = inc[base] & inc[m]
        if len(common) != 1:
            raise FermatError(f"lines {base},{m} share {len(common)} points")
        groups.setdefault(next(iter(common)), []).append(m)
    if len(groups) != 10 or any(len(g) != 3 for g in groups.values()):
        raise FermatError(f"neighbours of line {base} do not form 10 triples")
    adjs = [set(a) for a in adj]
    triples, centers = [], []
    for pt, g in sorted(groups.items()):
        a, b, c = g
        if not (b in adjs[a] and c in adjs[a] and c in adjs[b]):
            raise FermatError(f"triple {g} of line {base} is not pairwise meeting")
        if not inc[a] & inc[b] & inc[c] == {pt}:
            raise FermatError(f"triple {g} of line {base} is not concurrent on the base line")
        triples.append(tuple(sorted(g)))
        centers.append(pt)
    nb = set(adj[base])
    sections = [k for k in range(len(adj)) if k != base and k not in nb]
    for s in sections:
        for t in triples:
            if sum(1 for m in t if m in adjs[s]) != 1:
                raise FermatError(f"section {s} does not meet exactly one line of {t}")
    return Fibration(base, tuple(triples), tuple(centers), tuple(sections))
