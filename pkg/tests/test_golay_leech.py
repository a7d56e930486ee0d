from collections import Counter
from fractions import Fraction
from itertools import combinations
from math import comb

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from k3w import golay as G
from k3w import leech as L


@pytest.fixture(scope="module")
def S():
    return G.golay()


def test_steiner_block_intersection_numbers(S):
    # lambda_i of S(5,8,24): C(24-i,5-i)/C(8-i,5-i)
    for i, want in enumerate((759, 253, 77, 21, 5, 1)):
        assert want == comb(24 - i, 5 - i) // comb(8 - i, 5 - i)
        pts = list(range(i))
        assert len(S.octads_containing(pts)) == want


def test_validate_clean(S):
    assert G.validate(S, exhaustive=False) == []


@given(st.integers(0, 4095), st.integers(0, 4095))
def test_code_closed_under_xor(i, j):
    S = G.golay()
    a, b = S.codewords[i], S.codewords[j]
    assert S.is_codeword(a ^ b)


@given(st.sets(st.integers(0, 23), min_size=5, max_size=5))
def test_octad_through_five(five):
    S = G.golay()
    o = S.octad_through([G.label(i) for i in five])
    assert G.weight(o) == 8 and all(o >> i & 1 for i in five)


def test_octad_through_wrong_size(S):
    with pytest.raises(ValueError):
        S.octad_through([0, 1, 2])


def test_labels_roundtrip():
    for i in range(24):
        assert G.index(G.label(i)) == i
    assert G.to_points(G.to_mask(["inf", 0, 5])) == ["inf", 0, 5]


def test_printed_neighbours(S):
    rep = G.printed_report(S)
    assert rep["distinct"] == 29 and len(rep["duplicates"]) == 1


# -- Leech -------------------------------------------------------------------------------------

@pytest.fixture(scope="module")
def shell():
    return L.shell()


def test_shell_family_sizes_by_counting():
    # (+-4,+-4,0^22), (+-2^8,0^16) on octads with even minus signs, (-+3,+-1^23) per point
    assert comb(24, 2) * 4 == 1104
    assert 759 * 2**7 == 97152
    assert 24 * 2**12 == 98304
    assert L.shell().census == {"4": 1104, "2": 97152, "3": 98304}


def test_shell_shapes(shell):
    v = shell.vectors.astype(np.int64)
    assert np.all(np.einsum("ij,ij->i", v, v) == 32)
    assert len(np.unique(v, axis=0)) == 196560
    # closed under negation
    neg = {tuple(r) for r in (-v[:2000])}
    allv = {tuple(r) for r in v}
    assert neg <= allv


@given(st.integers(0, 196559), st.integers(0, 196559))
def test_shell_pairings_integral(i, j):
    v = L.shell().vectors
    a, b = v[i].tolist(), v[j].tolist()
    assert L.is_leech_vector(a)
    assert L.is_leech_vector(L.vadd(a, b))
    p = L.leech_pair(a, b)
    assert p.denominator == 1 and -4 <= p <= 4


def test_non_lattice_vectors():
    assert not L.is_leech_vector((1,) * 24)
    assert not L.is_leech_vector((2,) + (0,) * 23)
    assert not L.is_leech_vector((4, 0, 0))


def test_base_roots_a2a2():
    assert L.base_roots().gram() == L.A2A2


def test_orthogonal_root_count_by_octad_counting(S):
    # type 1 <-> octads through inf,0 avoiding 1: lambda_2 - lambda_3 = 77 - 21
    roots = L.orthogonal_roots()
    assert L.type_census(roots) == {1: 77 - 21, 2: 77 - 21}
    assert L.characterization_holds(roots)
    for r in roots:
        assert r.root.norm() == -2
        assert all(r.root.pair(c) == 0 for c in L.base_roots().as_list())


def test_root_pairing_formula():
    roots = L.orthogonal_roots()
    for a, b in combinations(roots[:20], 2):
        assert L.root_pairing(a.lam, b.lam) == a.root.pair(b.root)


def test_gram_symmetric_and_incidence():
    g = L.gram_matrix()
    assert all(g[i][i] == -2 for i in range(112))
    assert all(g[i][j] == g[j][i] for i in range(112) for j in range(112))
    assert L.octad_rule_violations() == []


def test_projection_norms():
    assert L.projection_norm((1, 0, 0, 0)) <= 0
    a5, a32 = L.chain_roots("A5"), L.chain_roots("A3A2")
    assert a5.count == 5184 and a32.count == 648
    assert set(a5.norms.values()) == {Fraction(-2, 3)}


def test_weyl_vector():
    w = L.weyl_projection()
    assert w == L.weyl_explicit()
    assert w.norm() == 4
    assert L.root_sum() == w.scale(28)


def test_fibers_and_generation():
    for i in (0, 55, 56, 111):
        f = L.fiber_classes(i)
        assert len(f.triples) == 10 and len(f.sections) == 81
    g = L.generation_check()
    assert g.rank == 22 and g.invariants == (3, 3)


def test_sixteen_ten():
    a, b = L.sixteen_ten_roots()
    assert len(a) == len(b) == 16 and L.sixteen_ten_ok(a, b)
    deg = Counter(sum(1 for j in b if L.gram_matrix()[i][j] == 1) for i in a)
    assert deg == {10: 16}
