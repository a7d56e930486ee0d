from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from k3w.algebra import ffmat
from k3w.algebra.gf import ADD, GF9, GF81, INV, MUL, NEG, FieldElem, field_tower, zeta_pow
from k3w.algebra.linalg import SingularMatrixError, det_exact, solve_exact
from k3w.algebra.poly import Poly, poly_gcd
from k3w.algebra.smith import smith_invariants

codes = st.integers(0, 80)
nonzero = st.integers(1, 80)


@given(codes, codes, codes)
def test_ring_axioms(a, b, c):
    assert ADD[a][b] == ADD[b][a] and MUL[a][b] == MUL[b][a]
    assert ADD[ADD[a][b]][c] == ADD[a][ADD[b][c]]
    assert MUL[MUL[a][b]][c] == MUL[a][MUL[b][c]]
    assert MUL[a][ADD[b][c]] == ADD[MUL[a][b]][MUL[a][c]]
    assert ADD[a][NEG[a]] == 0 and ADD[a][0] == a and MUL[a][1] == a


@given(nonzero)
def test_inverse(a):
    assert MUL[a][INV[a]] == 1


def test_subfields_are_fixed_points_of_frobenius():
    # GF(3^k) inside GF(81) is {x : x^(3^k) = x}; codes must be the small ones
    for k in (1, 2):
        fixed = {x.v for x in GF81.elements() if x ** (3**k) == x}
        assert fixed == set(range(3**k))
    assert all(x**81 == x for x in GF81.elements())


def test_multiplicative_groups_cyclic():
    assert max(x.order() for x in GF81.nonzero()) == 80
    assert max(x.order() for x in GF9.nonzero()) == 8
    assert zeta_pow(1).order() == 8


def test_zeta_codes():
    assert [zeta_pow(i).v for i in range(8)] == [1, 3, 7, 8, 2, 6, 5, 4]


@given(st.integers(0, 8), st.integers(0, 8))
def test_gf9_closed(a, b):
    assert ADD[a][b] < 9 and MUL[a][b] < 9


def test_bad_level():
    with pytest.raises(ValueError):
        field_tower(3)
    with pytest.raises(ValueError):
        GF9.embed(GF81(40))


@given(codes)
def test_frobenius_is_additive_power(a):
    x = FieldElem(a)
    assert x.frobenius() == x**3


polys = st.lists(codes, min_size=0, max_size=6).map(lambda c: Poly.from_codes(c))


@given(polys, polys, codes)
def test_poly_evaluation_homomorphism(f, g, x):
    e = FieldElem(x)
    assert (f * g)(e) == f(e) * g(e)
    assert (f + g)(e) == f(e) + g(e)


@given(polys, polys)
def test_poly_divmod(f, d):
    if d.is_zero():
        return
    q, r = f.divmod(d)
    assert q * d + r == f
    assert r.is_zero() or r.degree < d.degree


@given(polys, polys)
def test_product_rule(f, g):
    assert (f * g).derivative() == f.derivative() * g + f * g.derivative()


@given(polys, polys)
def test_gcd_divides(f, g):
    h = poly_gcd(f, g)
    if h.is_zero():
        assert f.is_zero() and g.is_zero()
        return
    assert (f % h).is_zero() and (g % h).is_zero()


int_mats = st.integers(1, 5).flatmap(
    lambda r: st.integers(1, 5).flatmap(
        lambda c: st.lists(st.lists(st.integers(-9, 9), min_size=c, max_size=c), min_size=r, max_size=r)
    )
)


@given(int_mats)
def test_smith_matches_sympy(m):
    from sympy import Matrix, ZZ
    from sympy.matrices.normalforms import smith_normal_form

    s = smith_normal_form(Matrix(m), domain=ZZ)
    oracle = [abs(int(s[i, i])) for i in range(min(s.shape))]
    assert smith_invariants(m) == oracle


@given(int_mats)
def test_smith_divisibility(m):
    d = [x for x in smith_invariants(m) if x]
    assert all(b % a == 0 for a, b in zip(d, d[1:]))


gf3_mats = st.lists(st.lists(st.integers(0, 2), min_size=5, max_size=5), min_size=1, max_size=6)


@given(gf3_mats)
def test_rank_matches_sympy_gf3(m):
    from sympy import GF
    from sympy.polys.matrices import DomainMatrix

    dm = DomainMatrix([[GF(3)(x) for x in row] for row in m], (len(m), 5), GF(3))
    assert ffmat.rank(m) == dm.rank()


@given(st.lists(st.integers(0, 80), min_size=4, max_size=4))
def test_normalize_projective(v):
    if not any(v):
        with pytest.raises(ValueError):
            ffmat.normalize(v)
        return
    n = ffmat.normalize(v)
    assert next(x for x in n if x) == 1
    c = next(x for x in v if x)
    assert tuple(MUL[c][x] for x in n) == tuple(v)


@given(st.lists(st.lists(st.integers(-5, 5), min_size=3, max_size=3), min_size=3, max_size=3), st.lists(st.integers(-5, 5), min_size=3, max_size=3))
def test_solve_exact(a, b):
    if det_exact(a) == 0:
        with pytest.raises(SingularMatrixError):
            solve_exact(a, b)
        return
    x = solve_exact(a, b)
    assert all(sum(Fraction(a[i][j]) * x[j] for j in range(3)) == b[i] for i in range(3))
