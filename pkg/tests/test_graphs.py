from array import array

import networkx as nx
import pytest
from hypothesis import given
from hypothesis import strategies as st

from k3w import graphs as G
from k3w._kernels import _refine_py

try:
    from k3w._kernels import _refine_cy
except ImportError:  # extension not built
    _refine_cy = None


@st.composite
def graphs(draw, max_n=12):
    n = draw(st.integers(1, max_n))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    es = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return G.SimpleGraph.from_edges(n, es)


def to_nx(g):
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    return h


@given(graphs(), st.randoms(use_true_random=False))
def test_canonical_invariant_under_relabeling(g, rng):
    h, perm = G.random_relabel(g, rng)
    assert G.canonical_label(g).certificate == G.canonical_label(h).certificate
    res = G.isomorphism(g, h)
    assert res.isomorphic and G.verify_bijection(g, h, res.mapping)


@given(graphs(max_n=8), graphs(max_n=8))
def test_certificates_agree_with_networkx(g, h):
    same = G.canonical_label(g).certificate == G.canonical_label(h).certificate
    assert same == nx.is_isomorphic(to_nx(g), to_nx(h))


@given(graphs(max_n=9))
def test_automorphism_generators_are_automorphisms(g):
    for gen in G.canonical_label(g).automorphism_generators:
        assert G.verify_bijection(g, g, gen)


def test_group_sizes_from_generators():
    # Petersen graph has 120 automorphisms
    pet = G.SimpleGraph.from_edges(10, nx.petersen_graph().edges())
    gens = G.canonical_label(pet).automorphism_generators
    group = {tuple(range(10))}
    frontier = list(group)
    while frontier:
        p = frontier.pop()
        for s in gens:
            q = tuple(s[p[i]] for i in range(10))
            if q not in group:
                group.add(q)
                frontier.append(q)
    assert len(group) == 120


def test_colors_respected():
    path = G.SimpleGraph.from_edges(3, [(0, 1), (1, 2)])
    assert G.isomorphism(path, path, [1, 0, 0], [0, 0, 1]).isomorphic
    assert not G.isomorphism(path, path, [1, 0, 0], [0, 1, 0]).isomorphic


def test_non_isomorphic_by_invariant():
    a = G.SimpleGraph.from_edges(4, [(0, 1), (1, 2), (2, 3)])
    b = G.SimpleGraph.from_edges(4, [(0, 1), (0, 2), (0, 3)])
    res = G.isomorphism(a, b)
    assert not res.isomorphic and res.mapping is None


def test_bad_edges():
    with pytest.raises(ValueError):
        G.SimpleGraph.from_edges(3, [(1, 1)])
    with pytest.raises(ValueError):
        G.SimpleGraph.from_edges(3, [(0, 5)])


def test_verify_bijection_rejects():
    g = G.SimpleGraph.from_edges(3, [(0, 1)])
    assert not G.verify_bijection(g, g, [0, 0, 1])
    assert not G.verify_bijection(g, g, [0, 2, 1])


@pytest.mark.skipif(_refine_cy is None, reason="compiled kernel not built")
@given(graphs(max_n=30), st.data())
def test_compiled_refine_matches_python(g, data):
    cols = data.draw(st.lists(st.integers(0, 3), min_size=g.n, max_size=g.n))
    ip, ix = g.csr
    assert list(_refine_cy.refine(ip, ix, cols)[0]) == list(_refine_py.refine(ip, ix, cols)[0])
    assert _refine_cy.refine(ip, ix, cols)[1] == _refine_py.refine(ip, ix, cols)[1]


@given(graphs(max_n=20))
def test_refine_is_equitable(g):
    ip, ix = g.csr
    col, k = _refine_py.refine(ip, ix, [0] * g.n)
    assert set(col) == set(range(k))
    for a in range(k):
        cell = [v for v in range(g.n) if col[v] == a]
        for b in range(k):
            counts = {sum(1 for u in g.adj[v] if col[u] == b) for v in cell}
            assert len(counts) == 1


def test_empty_graph():
    e = G.SimpleGraph.from_edges(0, [])
    assert G.canonical_label(e).certificate == ((), ())
    if _refine_cy is not None:
        col, k = _refine_cy.refine(array("i", [0]), array("i"), [])
        assert list(col) == [] and k == 0


def test_the_three_graphs_isomorphic():
    gs = {k: f() for k, f in G.GRAPHS.items()}
    inv = {k: G.invariants(g) for k, g in gs.items()}
    assert inv["leech"] == inv["fermat"] == inv["kummer"]
    for a, b in (("leech", "fermat"), ("fermat", "kummer")):
        r = G.isomorphism(gs[a], gs[b])
        assert r.isomorphic and G.verify_bijection(gs[a], gs[b], r.mapping)
