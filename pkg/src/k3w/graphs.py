"""Canonical labeling and isomorphism of small simple graphs by
individualization-refinement with automorphism pruning.
"""

from __future__ import annotations

import random
from array import array
from collections import Counter
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

from ._kernels import refine


@dataclass(frozen=True)
class SimpleGraph:
    n: int
    edges: tuple[tuple[int, int], ...]

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "SimpleGraph":
        es = set()
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range")
            es.add((min(u, v), max(u, v)))
        return cls(n, tuple(sorted(es)))

    @classmethod
    def from_adjacency(cls, adj: Sequence[Iterable[int]]) -> "SimpleGraph":
        return cls.from_edges(len(adj), ((i, j) for i, row in enumerate(adj) for j in row if i < j))

    @cached_property
    def adj(self) -> list[list[int]]:
        out: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            out[u].append(v)
            out[v].append(u)
        return [sorted(a) for a in out]

    @cached_property
    def csr(self) -> tuple[array, array]:
        indptr, indices = array("i", [0]), array("i")
        for a in self.adj:
            indices.extend(a)
            indptr.append(len(indices))
        return indptr, indices

    def relabel(self, perm: Sequence[int]) -> "SimpleGraph":
        """Graph with vertex v renamed perm[v]."""
        return SimpleGraph.from_edges(self.n, ((perm[u], perm[v]) for u, v in self.edges))

    def degrees(self) -> list[int]:
        return [len(a) for a in self.adj]


@dataclass
class CanonicalForm:
    order: list[int]  # order[v] = canonical position of vertex v
    edges: tuple[tuple[int, int], ...]
    colors: tuple[int, ...] = ()
    automorphism_generators: list[list[int]] = field(default_factory=list)
    nodes: int = 0

    @property
    def certificate(self) -> tuple:
        return (self.colors, self.edges)


def _cert(g: SimpleGraph, perm: Sequence[int], init: Sequence[int]) -> tuple:
    cols = [0] * g.n
    for v, p in enumerate(perm):
        cols[p] = init[v]
    es = sorted((min(perm[u], perm[v]), max(perm[u], perm[v])) for u, v in g.edges)
    return (tuple(cols), tuple(es))


class _Orbits:
    def __init__(self, n: int, gens: Iterable[Sequence[int]]):
        self.p = list(range(n))
        for g in gens:
            self.add(g)

    def add(self, g: Sequence[int]) -> None:
        for v, w in enumerate(g):
            if v != w:
                self._union(v, w)

    def find(self, v: int) -> int:
        while self.p[v] != v:
            self.p[v] = self.p[self.p[v]]
            v = self.p[v]
        return v

    def _union(self, a: int, b: int) -> None:
        a, b = self.find(a), self.find(b)
        if a != b:
            self.p[max(a, b)] = min(a, b)


class _Search:
    def __init__(self, g: SimpleGraph, init: Sequence[int]):
        self.g = g
        self.init = list(init)
        self.indptr, self.indices = g.csr
        self.first: tuple | None = None  # (path, perm, cert)
        self.best: tuple | None = None
        self.gens: list[list[int]] = []
        self.nodes = 0

    def _refine(self, colors: list[int]) -> tuple[list[int], int]:
        return refine(self.indptr, self.indices, colors)

    @staticmethod
    def _target(colors: list[int]) -> list[int]:
        cnt = Counter(colors)
        c = min((k, c) for c, k in cnt.items() if k > 1)[1]
        return [v for v, x in enumerate(colors) if x == c]

    def _leaf(self, path: list[int], perm: list[int]) -> int | None:
        cert = _cert(self.g, perm, self.init)
        if self.first is None:
            self.first = self.best = (path, perm, cert)
            return None
        for ref in (self.first, self.best):
            if cert == ref[2]:
                inv = [0] * self.g.n
                for v, p in enumerate(ref[1]):
                    inv[p] = v
                gamma = [inv[perm[u]] for u in range(self.g.n)]
                if any(gamma[u] != u for u in range(self.g.n)):
                    self.gens.append(gamma)
                k = 0
                while k < len(path) and k < len(ref[0]) and path[k] == ref[0][k]:
                    k += 1
                return k
        if cert < self.best[2]:
            self.best = (path, perm, cert)
        return None

    def run(self, colors: list[int], path: list[int]) -> int | None:
        self.nodes += 1
        colors, k = self._refine(colors)
        if k == self.g.n:
            return self._leaf(path, colors)
        cell = self._target(colors)
        c = colors[cell[0]]
        d = len(path)
        on_first = self.first is None or self.first[0][:d] == path
        explored: list[int] = []
        orb, seen = _Orbits(self.g.n, []), 0
        for v in cell:
            if on_first and explored:
                # fold in generators found since the last check that fix the path
                for gen in self.gens[seen:]:
                    if all(gen[u] == u for u in path):
                        orb.add(gen)
                seen = len(self.gens)
                if any(orb.find(v) == orb.find(u) for u in explored):
                    continue
            explored.append(v)
            child = [2 * x + (1 if x == c and u != v else 0) for u, x in enumerate(colors)]
            r = self.run(child, path + [v])
            if r is not None and r < d:
                return r
        return None


def canonical_label(g: SimpleGraph, colors: Sequence[int] | None = None) -> CanonicalForm:
    """Canonical form; isomorphic (colored) graphs get identical edge lists."""
    init = list(colors) if colors is not None else [0] * g.n
    if g.n == 0:
        return CanonicalForm([], (), ())
    s = _Search(g, init)
    s.run(list(init), [])
    _, perm, cert = s.best
    return CanonicalForm(list(perm), cert[1], cert[0], s.gens, s.nodes)


# -- invariants and verification --------------------------------------------------------------

def triangle_count(g: SimpleGraph) -> int:
    nb = [set(a) for a in g.adj]
    return sum(len(nb[u] & nb[v]) for u, v in g.edges) // 3


def common_neighbour_profile(g: SimpleGraph) -> tuple:
    """Sorted counts of |N(u) & N(v)| over adjacent and non-adjacent pairs."""
    nb = [set(a) for a in g.adj]
    adj_c: Counter = Counter()
    non_c: Counter = Counter()
    for u in range(g.n):
        for v in range(u + 1, g.n):
            k = len(nb[u] & nb[v])
            (adj_c if v in nb[u] else non_c)[k] += 1
    return (tuple(sorted(adj_c.items())), tuple(sorted(non_c.items())))


def invariants(g: SimpleGraph) -> dict:
    return {
        "n": g.n,
        "edges": len(g.edges),
        "degrees": tuple(sorted(Counter(g.degrees()).items())),
        "triangles": triangle_count(g),
        "common_neighbours": common_neighbour_profile(g),
    }


def verify_bijection(g1: SimpleGraph, g2: SimpleGraph, m: Sequence[int]) -> bool:
    """True iff m is a bijection V1 -> V2 carrying the edge set of g1 onto that of g2."""
    if g1.n != g2.n or len(m) != g1.n or sorted(m) != list(range(g2.n)):
        return False
    if len(g1.edges) != len(g2.edges):
        return False
    e2 = set(g2.edges)
    return all((min(m[u], m[v]), max(m[u], m[v])) in e2 for u, v in g1.edges)


@dataclass
class IsoResult:
    isomorphic: bool
    mapping: list[int] | None
    reason: str = ""


def isomorphism(
    g1: SimpleGraph,
    g2: SimpleGraph,
    colors1: Sequence[int] | None = None,
    colors2: Sequence[int] | None = None,
) -> IsoResult:
    i1, i2 = invariants(g1), invariants(g2)
    for key in i1:
        if i1[key] != i2[key]:
            return IsoResult(False, None, f"invariant '{key}' differs")
    c1, c2 = canonical_label(g1, colors1), canonical_label(g2, colors2)
    if c1.certificate != c2.certificate:
        return IsoResult(False, None, "canonical forms differ")
    inv2 = [0] * g2.n
    for v, p in enumerate(c2.order):
        inv2[p] = v
    m = [inv2[c1.order[v]] for v in range(g1.n)]
    if not verify_bijection(g1, g2, m):
        raise AssertionError("canonical forms agree but the induced bijection fails verification")
    if colors1 is not None and any(colors1[v] != colors2[m[v]] for v in range(g1.n)):
        raise AssertionError("induced bijection does not respect vertex colors")
    return IsoResult(True, m, "verified")


def random_relabel(g: SimpleGraph, rng: random.Random) -> tuple[SimpleGraph, list[int]]:
    perm = list(range(g.n))
    rng.shuffle(perm)
    return g.relabel(perm), perm


# -- the three 112-vertex graphs -------------------------------------------------------------

def leech_graph() -> SimpleGraph:
    from .leech import root_incidence

    return SimpleGraph.from_adjacency(root_incidence()[1])


def fermat_graph() -> SimpleGraph:
    from .fermat import line_graph

    return SimpleGraph.from_adjacency(line_graph())


def kummer_graph() -> SimpleGraph:
    from .kummer import curve_graph

    cg = curve_graph()
    return SimpleGraph.from_edges(cg.n, cg.edges)


GRAPHS = {"leech": leech_graph, "fermat": fermat_graph, "kummer": kummer_graph}
