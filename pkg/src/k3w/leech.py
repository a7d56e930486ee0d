"""Leech lattice, the Lorentzian lattice II_{1,25} = U + Leech, and Leech roots.

Leech vectors are integer 24-tuples in the coordinate order of ``golay``
(inf, 0, ..., 22) with pairing <x, y> = -(x . y) / 8, so the minimal shell
has Euclidean square length 32.  A Lorentz vector is (m, n, lam) with
pairing m n' + m' n + <lam, lam'>.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import isqrt
from typing import Iterable, Sequence

import numpy as np

from .algebra import solve_exact, smith_invariants
from .golay import SteinerSystem, golay, index, printed_octads, to_mask, weight

Vec = tuple[int, ...]
SHELL_NORM = 32  # Euclidean x.x of a norm -4 Leech vector


class LeechError(RuntimeError):
    pass


def nu(points: Iterable) -> Vec:
    """Indicator vector nu_A of a subset A of Omega."""
    v = [0] * 24
    for p in points:
        v[index(p)] += 1
    return tuple(v)


NU_OMEGA: Vec = (1,) * 24


def vadd(*vs: Sequence[int]) -> Vec:
    return tuple(sum(c) for c in zip(*vs))


def vscale(k: int, v: Sequence[int]) -> Vec:
    return tuple(k * c for c in v)


def dot(a: Sequence[int], b: Sequence[int]) -> int:
    return sum(x * y for x, y in zip(a, b))


def leech_pair(a: Sequence[int], b: Sequence[int]) -> Fraction:
    return Fraction(-dot(a, b), 8)


def is_leech_vector(v: Sequence[int], system: SteinerSystem | None = None) -> bool:
    """Membership in the Leech lattice (Euclidean scale, coordinates in Z)."""
    system = system or golay()
    if len(v) != 24:
        return False
    m = v[0] % 2
    if any(c % 2 != m for c in v):
        return False
    if m == 0:
        mask = sum(1 << i for i, c in enumerate(v) if c % 4 == 2)
        return system.is_codeword(mask) and sum(v) % 8 == 0
    mask = sum(1 << i for i, c in enumerate(v) if c % 4 == 3)
    return system.is_codeword(mask) and sum(v) % 8 == 4


@dataclass(frozen=True, order=True)
class LorentzVector:
    m: int
    n: int
    lam: Vec

    def pair(self, other: "LorentzVector") -> Fraction:
        return self.m * other.n + other.m * self.n + leech_pair(self.lam, other.lam)

    def norm(self) -> Fraction:
        return self.pair(self)

    def __add__(self, other: "LorentzVector") -> "LorentzVector":
        return LorentzVector(self.m + other.m, self.n + other.n, vadd(self.lam, other.lam))

    def __sub__(self, other: "LorentzVector") -> "LorentzVector":
        return LorentzVector(self.m - other.m, self.n - other.n, vadd(self.lam, vscale(-1, other.lam)))

    def scale(self, k: int) -> "LorentzVector":
        return LorentzVector(k * self.m, k * self.n, vscale(k, self.lam))

    def is_zero(self) -> bool:
        return self.m == 0 and self.n == 0 and not any(self.lam)


RHO = LorentzVector(1, 0, (0,) * 24)
ZERO = LorentzVector(0, 0, (0,) * 24)


def leech_root(lam: Sequence[int]) -> LorentzVector:
    """The Leech root (-1 - <lam,lam>/2, 1, lam) attached to a Leech vector."""
    lam = tuple(int(c) for c in lam)
    sq = dot(lam, lam)
    if sq % 16:
        raise LeechError("not an even Leech vector")
    return LorentzVector(-1 + sq // 16, 1, lam)


def root_pairing(lam: Sequence[int], mu: Sequence[int]) -> int:
    """<r_lam, r_mu> = |lam - mu|^2 / 16 - 2."""
    d = sum((a - b) ** 2 for a, b in zip(lam, mu))
    return d // 16 - 2


# -- minimal shell ------------------------------------------------------------

def _family_4(system: SteinerSystem) -> np.ndarray:
    rows = []
    for i, j in combinations(range(24), 2):
        for si in (4, -4):
            for sj in (4, -4):
                v = [0] * 24
                v[i], v[j] = si, sj
                rows.append(v)
    return np.array(rows, dtype=np.int8)


def _even_signs() -> np.ndarray:
    out = []
    for k in range(256):
        bits = [(k >> b) & 1 for b in range(8)]
        if sum(bits) % 2 == 0:
            out.append([-2 if x else 2 for x in bits])
    return np.array(out, dtype=np.int8)


def _family_2(system: SteinerSystem) -> np.ndarray:
    signs = _even_signs()
    out = np.zeros((len(system.octads) * len(signs), 24), dtype=np.int8)
    for k, o in enumerate(system.octads):
        pos = [i for i in range(24) if o >> i & 1]
        out[k * 128 : (k + 1) * 128][:, pos] = signs
    return out


def _family_3(system: SteinerSystem) -> np.ndarray:
    words = np.array(system.codewords, dtype=np.int64)
    bits = (words[:, None] >> np.arange(24)) & 1
    base = (1 - 2 * bits).astype(np.int8)  # (-1)^c
    out = np.repeat(base, 24, axis=0)
    pos = np.tile(np.arange(24), len(base))
    out[np.arange(len(out)), pos] *= -3
    return out


FAMILIES = {"4": _family_4, "2": _family_2, "3": _family_3}


def _lexsorted(a: np.ndarray) -> np.ndarray:
    order = np.lexsort(a.T[::-1])
    return a[order]


@dataclass(frozen=True)
class Shell:
    vectors: np.ndarray  # (196560, 24) int8, lexicographically sorted
    census: dict

    def __len__(self) -> int:
        return len(self.vectors)


def minimal_shell(system: SteinerSystem | None = None, jobs: int = 1) -> Shell:
    """All Leech vectors of norm -4, built family by family."""
    system = system or golay()
    if jobs > 1:
        with ThreadPoolExecutor(jobs) as ex:
            parts = dict(zip(FAMILIES, ex.map(lambda f: f(system), FAMILIES.values())))
    else:
        parts = {k: f(system) for k, f in FAMILIES.items()}
    census = {k: len(v) for k, v in parts.items()}
    if census != {"4": 1104, "2": 97152, "3": 98304}:
        raise LeechError(f"shell census mismatch: {census}")
    allv = _lexsorted(np.concatenate(list(parts.values())))
    return Shell(allv, census)


@lru_cache(maxsize=1)
def shell() -> Shell:
    return minimal_shell()


# -- root quadruple -----------------------------------------------------------

X_VEC = vadd(vscale(4, nu(["inf"])), NU_OMEGA)
Z_VEC: Vec = (0,) * 24
P_VEC = vadd(vscale(4, nu(["inf"])), vscale(4, nu([0])))
Q_VEC = vadd(NU_OMEGA, vscale(-4, nu([1])))
CENTERS: dict[str, Vec] = {"x": X_VEC, "z": Z_VEC, "p": P_VEC, "q": Q_VEC}


@dataclass(frozen=True)
class RootQuadruple:
    x: LorentzVector
    z: LorentzVector
    p: LorentzVector
    q: LorentzVector

    def as_list(self) -> list[LorentzVector]:
        return [self.x, self.z, self.p, self.q]

    def gram(self) -> list[list[int]]:
        rs = self.as_list()
        return [[int(a.pair(b)) for b in rs] for a in rs]


A2A2 = [[-2, 1, 0, 0], [1, -2, 0, 0], [0, 0, -2, 1], [0, 0, 1, -2]]


def base_roots() -> RootQuadruple:
    quad = RootQuadruple(*(leech_root(CENTERS[k]) for k in "xzpq"))
    if quad.gram() != A2A2:
        raise LeechError(f"root quadruple Gram {quad.gram()} is not A2+A2")
    return quad


# -- the 112 roots orthogonal to R ---------------------------------------------

@dataclass(frozen=True)
class OrthRoot:
    """A Leech root orthogonal to R together with its octad and type (1 or 2)."""

    lam: Vec
    octad: int
    kind: int

    @property
    def root(self) -> LorentzVector:
        return leech_root(self.lam)


def _octad_of(lam: Vec) -> tuple[int, int]:
    if all(c in (0, 2) for c in lam):
        return sum(1 << i for i, c in enumerate(lam) if c == 2), 1
    if lam[0] == 3 and all(c in (1, -1) for c in lam[1:]):
        return (1 | sum(1 << i for i, c in enumerate(lam) if c == -1)), 2
    raise LeechError(f"orthogonal root of unexpected shape {lam}")


def _pairings_with_centers(lams: np.ndarray) -> np.ndarray:
    """(N, 4) array of <r_lam, c> for c in x, z, p, q."""
    out = np.empty((len(lams), 4), dtype=np.int64)
    big = lams.astype(np.int64)
    for k, c in enumerate(CENTERS.values()):
        d = big - np.array(c, dtype=np.int64)
        sq = np.einsum("ij,ij->i", d, d)
        out[:, k] = sq // 16 - 2
    return out


@lru_cache(maxsize=1)
def orthogonal_roots() -> tuple[OrthRoot, ...]:
    sh = shell().vectors
    pr = _pairings_with_centers(sh)
    hits = sh[np.all(pr == 0, axis=1)]
    roots = []
    for row in hits:
        lam = tuple(int(c) for c in row)
        octad, kind = _octad_of(lam)
        roots.append(OrthRoot(lam, octad, kind))
    roots.sort(key=lambda r: (r.kind, r.lam))
    if len(roots) != 112:
        raise LeechError(f"found {len(roots)} orthogonal roots, expected 112")
    return tuple(roots)


def type_census(roots: Sequence[OrthRoot]) -> dict[int, int]:
    out = {1: 0, 2: 0}
    for r in roots:
        out[r.kind] += 1
    return out


def characterization_holds(roots: Sequence[OrthRoot], system: SteinerSystem | None = None) -> bool:
    """Type 1 <-> octads through inf,0 avoiding 1; type 2 <-> octads through inf,1 avoiding 0."""
    system = system or golay()
    t1 = {r.octad for r in roots if r.kind == 1}
    t2 = {r.octad for r in roots if r.kind == 2}
    return t1 == set(system.octads_containing(["inf", 0], [1])) and t2 == set(
        system.octads_containing(["inf", 1], [0])
    )


# -- chain roots (A5 and A3+A2 extensions of R) ---------------------------------

# pairing pattern (x, z, p, q) of r with the quadruple
A5_PATTERNS = ((1, 0, 1, 0), (1, 0, 0, 1), (0, 1, 1, 0), (0, 1, 0, 1))
A3A2_PATTERNS = ((1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1))


def projection_norm(pattern: Sequence[int]) -> Fraction:
    """Norm of the projection of a root with these R-pairings onto R^perp (exact)."""
    y = solve_exact(A2A2, pattern)
    return Fraction(-2) - sum(Fraction(b) * c for b, c in zip(pattern, y))


@dataclass(frozen=True)
class ChainRoots:
    kind: str
    by_pattern: dict  # pattern -> sorted tuple of Leech vectors
    norms: dict  # pattern -> Fraction

    @property
    def count(self) -> int:
        return sum(len(v) for v in self.by_pattern.values())

    def all(self) -> list[Vec]:
        return sorted(v for vs in self.by_pattern.values() for v in vs)


@lru_cache(maxsize=1)
def _chain_candidates() -> dict[tuple, set]:
    """Roots with pairings in {0,1} against R having exactly one or two ones.

    A root adjacent to at most one node of each A2 is orthogonal to some
    node c of the quadruple, so its vector is c + (shell vector).
    """
    sh = shell().vectors.astype(np.int64)
    wanted = set(A5_PATTERNS) | set(A3A2_PATTERNS)
    found: dict[tuple, set] = {p: set() for p in wanted}
    for c in CENTERS.values():
        lams = sh + np.array(c, dtype=np.int64)
        pr = _pairings_with_centers(lams)
        ok = np.all((pr == 0) | (pr == 1), axis=1) & (pr.sum(axis=1) > 0) & (pr.sum(axis=1) <= 2)
        for lam, pat in zip(lams[ok], pr[ok]):
            pat = tuple(int(v) for v in pat)
            if pat in found:
                found[pat].add(tuple(int(v) for v in lam))
    return found


def chain_roots(kind: str) -> ChainRoots:
    """Leech roots r for which R + r is A5 (kind='A5') or A3+A2 (kind='A3A2')."""
    pats = {"A5": A5_PATTERNS, "A3A2": A3A2_PATTERNS}.get(kind)
    if pats is None:
        raise ValueError(f"unknown chain kind {kind!r}")
    found = _chain_candidates()
    by = {p: tuple(sorted(found[p])) for p in pats}
    norms = {p: projection_norm(p) for p in pats}
    return ChainRoots(kind, by, norms)


def verify_projection(lam: Vec, quad: RootQuadruple | None = None) -> Fraction:
    """Projection norm of one explicit root, from its own pairings."""
    quad = quad or base_roots()
    r = leech_root(lam)
    b = [r.pair(s) for s in quad.as_list()]
    y = solve_exact(A2A2, b)
    return r.norm() - sum(bi * yi for bi, yi in zip(b, y))


# -- Weyl vector ------------------------------------------------------------------

def weyl_projection() -> LorentzVector:
    quad = base_roots()
    w = RHO
    for s in quad.as_list():
        w = w + s
    return w


def weyl_explicit() -> LorentzVector:
    lam = vadd(vscale(8, nu(["inf"])), vscale(4, nu([0])), vscale(-4, nu([1])), vscale(2, NU_OMEGA))
    return LorentzVector(4, 4, lam)


def root_sum() -> LorentzVector:
    acc = ZERO
    for r in orthogonal_roots():
        acc = acc + r.root
    return acc


# -- incidence ------------------------------------------------------------------------

@lru_cache(maxsize=1)
def gram_matrix() -> tuple[tuple[int, ...], ...]:
    lams = np.array([r.lam for r in orthogonal_roots()], dtype=np.int64)
    g = -(lams @ lams.T) // 8
    sq = np.diag(lams @ lams.T)
    m = -1 + sq // 16
    g = g + m[:, None] + m[None, :]
    return tuple(tuple(int(v) for v in row) for row in g)


def root_incidence() -> tuple[tuple[tuple[int, ...], ...], list[list[int]]]:
    g = gram_matrix()
    n = len(g)
    for i in range(n):
        if g[i][i] != -2:
            raise LeechError(f"diagonal entry {i} is {g[i][i]}")
        for j in range(n):
            if i != j and g[i][j] not in (0, 1):
                raise LeechError(f"pairing ({i},{j}) = {g[i][j]}")
    adj = [[j for j in range(n) if j != i and g[i][j] == 1] for i in range(n)]
    return g, adj


def octad_rule(a: OrthRoot, b: OrthRoot) -> int:
    """Predicted pairing of two distinct orthogonal roots from their octads."""
    k = weight(a.octad & b.octad)
    if a.kind == b.kind:
        return {2: 1, 4: 0}.get(k, -1)
    return {4: 1, 2: 0}.get(k, -1)


def octad_rule_violations() -> list[tuple[int, int]]:
    roots = orthogonal_roots()
    g = gram_matrix()
    bad = []
    for i, j in combinations(range(len(roots)), 2):
        if octad_rule(roots[i], roots[j]) != g[i][j]:
            bad.append((i, j))
    return bad


@dataclass(frozen=True)
class FiberClasses:
    root: int
    triples: tuple[tuple[int, int, int], ...]
    fiber: LorentzVector
    sections: tuple[int, ...]


def fiber_classes(i: int) -> FiberClasses:
    """Split the 30 neighbours of root i into 10 triangles; check the common sum."""
    roots = orthogonal_roots()
    g, adj = root_incidence()
    nb = adj[i]
    nbset = set(nb)
    seen: set[int] = set()
    triples = []
    for a in nb:
        if a in seen:
            continue
        inner = [b for b in adj[a] if b in nbset]
        if len(inner) != 2 or g[inner[0]][inner[1]] != 1:
            raise LeechError(f"neighbours of root {i} do not split into triangles")
        t = tuple(sorted([a] + inner))
        triples.append(t)
        seen.update(t)
    if len(triples) != 10 or len(seen) != 30:
        raise LeechError(f"root {i}: {len(triples)} triples")
    sums = []
    for t in triples:
        s = ZERO
        for k in t:
            s = s + roots[k].root
        sums.append(s)
    if any(s != sums[0] for s in sums) or sums[0].norm() != 0:
        raise LeechError(f"root {i}: triple sums differ or are not isotropic")
    rest = [k for k in range(len(roots)) if k != i and k not in nbset]
    for k in rest:
        if roots[k].root.pair(sums[0]) != 1:
            raise LeechError(f"root {k} does not pair to 1 with the fiber of root {i}")
        if sum(1 for a in nb if g[k][a] == 1) != 10:
            raise LeechError(f"root {k} does not meet exactly 10 neighbours of root {i}")
    return FiberClasses(i, tuple(sorted(triples)), sums[0], tuple(rest))


@dataclass(frozen=True)
class GenerationReport:
    rank: int
    invariants: tuple[int, ...]
    sublattice_disc: int
    sublattice_index: int


def generation_check(base: int | None = None) -> GenerationReport:
    """Smith form of the 112-root Gram and the index of the U + A2^10 sublattice."""
    g = gram_matrix()
    inv = smith_invariants(g)
    rank = sum(1 for d in inv if d)
    nonunit = tuple(d for d in inv if d > 1)
    roots = orthogonal_roots()
    if base is None:
        base = next(k for k, r in enumerate(roots) if r.octad == printed_octads()["K"])
    fc = fiber_classes(base)
    gens = [k for t in fc.triples for k in t] + [fc.sections[0]]
    sub = [[g[a][b] for b in gens] for a in gens]
    # the 31 generators satisfy 9 relations; the nonzero Smith invariants
    # multiply to |disc| of the lattice they span
    d = 1
    for v in smith_invariants(sub):
        if v:
            d *= v
    disc = 1
    for v in nonunit:
        disc *= v
    idx2, rem = divmod(d, disc)
    idx = isqrt(idx2)
    if rem or idx * idx != idx2:
        raise LeechError(f"sublattice discriminant {d} is not disc(S) times a square")
    return GenerationReport(rank, nonunit, d, idx)


# -- (16)_10 inside the roots --------------------------------------------------------

def sixteen_ten_roots() -> tuple[list[int], list[int]]:
    roots = orthogonal_roots()
    two = to_mask([2])
    a_side = [k for k, r in enumerate(roots) if r.kind == 1 and r.octad & two]
    b_side = [k for k, r in enumerate(roots) if r.kind == 2 and r.octad & two]
    if len(a_side) != 16 or len(b_side) != 16:
        raise LeechError(f"(16)_10 selection gave {len(a_side)} + {len(b_side)}")
    return a_side, b_side


def sixteen_ten_ok(a_side: Sequence[int], b_side: Sequence[int]) -> bool:
    g = gram_matrix()
    inner = all(g[i][j] == 0 for side in (a_side, b_side) for i, j in combinations(side, 2))
    cross_a = all(sum(g[i][j] for j in b_side) == 10 for i in a_side)
    cross_b = all(sum(g[i][j] for i in a_side) == 10 for j in b_side)
    return inner and cross_a and cross_b


def printed_neighbour_check() -> dict:
    """Compare the printed 30 neighbours of r_K with the computed ones."""
    roots = orthogonal_roots()
    printed = printed_octads()
    kmask = printed["K"]
    kidx = next(k for k, r in enumerate(roots) if r.octad == kmask)
    _, adj = root_incidence()
    computed = {roots[j].octad for j in adj[kidx]}
    listed = {name: m for name, m in printed.items() if name != "K"}
    hits = {name for name, m in listed.items() if m in computed}
    missing_from_print = computed - set(listed.values())
    return {
        "distinct_printed": len(set(listed.values())),
        "found": len({listed[n] for n in hits}),
        "not_neighbours": sorted(set(listed) - hits),
        "unprinted_neighbours": sorted(missing_from_print),
    }
