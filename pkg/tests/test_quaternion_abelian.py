from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from k3w import abelian as A
from k3w import quaternion as Q
from k3w.algebra.gf import FieldElem

# -- quaternion order against the algebra (-3,-1)_Q ------------------------------------------
#
# Independent model: i^2 = -3, j^2 = -1, k = ij.  The order embeds by
# 1 -> 1, tau -> j, sigma -> (-1 - i)/2.

A_, B_ = -3, -1


def hmul(x, y):
    x0, x1, x2, x3 = x
    y0, y1, y2, y3 = y
    return (
        x0 * y0 + A_ * x1 * y1 + B_ * x2 * y2 - A_ * B_ * x3 * y3,
        x0 * y1 + x1 * y0 - B_ * x2 * y3 + B_ * x3 * y2,
        x0 * y2 + x2 * y0 + A_ * x1 * y3 - A_ * x3 * y1,
        x0 * y3 + x3 * y0 + x1 * y2 - x2 * y1,
    )


h = Fraction(1, 2)
_ONE, _TAU, _SIG = (1, 0, 0, 0), (0, 0, 1, 0), (-h, -h, 0, 0)
_IMG = (_ONE, _TAU, _SIG, hmul(_TAU, _SIG))


def embed(x: Q.QuatO):
    out = [Fraction(0)] * 4
    for c, b in zip(x.c, _IMG):
        for k in range(4):
            out[k] += c * b[k]
    return tuple(out)


def rnorm(v):
    return v[0] ** 2 - A_ * v[1] ** 2 - B_ * v[2] ** 2 + A_ * B_ * v[3] ** 2


quats = st.tuples(*[st.integers(-6, 6)] * 4).map(lambda t: Q.QuatO(t))


@given(quats, quats)
def test_multiplication_matches_algebra(x, y):
    assert embed(x * y) == hmul(embed(x), embed(y))


@given(quats, quats, quats)
def test_ring_axioms(x, y, z):
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    assert (x * y).conj() == y.conj() * x.conj()


@given(quats, quats)
def test_norm_multiplicative_and_reduced(x, y):
    assert (x * y).norm() == x.norm() * y.norm()
    assert x.norm() == rnorm(embed(x))
    assert x.trace() == 2 * embed(x)[0]


def test_presentation():
    assert Q.self_check() == []
    assert Q.F.norm() == 3 and Q.PI.norm() == 2


def test_hermitian_pairing():
    for a, b in Q.NS_PAIRS:
        m = Q.rank1(a, b)
        assert m.det() == 0 and Q.pairing(m, m) == 0
    assert Q.intersection_table() == [list(r) for r in Q.PRINTED_TABLE]
    with pytest.raises(Q.QuaternionError):
        Q.rank1(Q.ZERO, Q.ZERO)


def test_genus4_class():
    sol = Q.solve_genus4()
    assert sol.reproduces_inputs and sol.self_intersection == 6
    jc = Q.j_of_C()
    assert (jc.a, jc.d, jc.det()) == (3, 3, 3)


def test_decompositions():
    ds = Q.decompositions()
    assert len(ds) == 10
    assert all(d.sums_to_jC and d.inner == 3 and d.label_ok for d in ds)
    assert set(Q.cross_pairings().values()) <= {1, 2}


# -- the elliptic curve ------------------------------------------------------------------------

def chi(a: FieldElem, q: int) -> int:
    if a.is_zero():
        return 0
    return 1 if a ** ((q - 1) // 2) == FieldElem(1) else -1


@pytest.mark.parametrize("level,q", [(1, 3), (2, 9), (4, 81)])
def test_point_count_by_character_sum(level, q):
    want = q + 1 + sum(chi(FieldElem(x) ** 3 - FieldElem(x), q) for x in range(q))
    assert len(A.torsion(level)) == want


pts64 = st.integers(0, 63).map(lambda i: A.torsion(4)[i])


@given(pts64, pts64, pts64)
def test_group_law(p, q, r):
    assert A.on_curve(A.e_add(p, q))
    assert A.e_add(p, q) == A.e_add(q, p)
    assert A.e_add(A.e_add(p, q), r) == A.e_add(p, A.e_add(q, r))
    assert A.e_add(p, A.e_neg(p)) == A.O
    assert A.e_add(p, q) == A.e_add_cubic(p, q)


@given(pts64)
def test_torsion_structure(p):
    # Frobenius over GF(81) acts as 9, so E(GF(81)) = E[8] and E[4] = E(GF(9))
    assert A.e_mul(8, p).is_inf
    assert A.e_mul(4, p).is_inf == (p in A.torsion(2))
    assert A.e_mul(2, p) == A.e_double(p)


@given(quats, quats, pts64)
def test_endo_eval_is_a_ring_action(x, y, p):
    assert A.endo_eval(x * y, p) == A.endo_eval(x, A.endo_eval(y, p))
    assert A.endo_eval(x + y, p) == A.e_add(A.endo_eval(x, p), A.endo_eval(y, p))


@given(quats, pts64, pts64)
def test_endo_eval_additive_in_point(x, p, q):
    assert A.endo_eval(x, A.e_add(p, q)) == A.e_add(A.endo_eval(x, p), A.endo_eval(x, q))


def test_relations_and_the_failing_commutation():
    fails = {k: v for k, v in A.endo_identities().items() if v}
    # sigma pi = pi sigma is false: the commutator is the endomorphism (sigma^2 - sigma) tau
    assert set(fails) == {"sigma pi = pi sigma"}
    c = (Q.S2 - Q.SIGMA) * Q.TAU
    for p in A.torsion(4):
        comm = A.e_sub(A.sigma(A.pi_formula(p)), A.pi_formula(A.sigma(p)))
        assert comm == A.endo_eval(c, p)
    assert len(fails["sigma pi = pi sigma"]) == 63


def test_frobenius_element():
    for p in A.torsion(4):
        assert A.frob(p) == A.endo_eval(Q.F, p)


# -- genus-4 curve Y^2 = X^9 - X --------------------------------------------------------------

@pytest.mark.parametrize("level,q", [(2, 9), (4, 81)])
def test_genus4_point_count(level, q):
    affine = sum(1 + chi(FieldElem(x) ** 9 - FieldElem(x), q) for x in range(q))
    assert len(A.genus4_points(level)) == affine + 1


@given(st.integers(0, 1000))
def test_psi_lands_on_a(k):
    pts = A.genus4_points(4)
    p = pts[k % len(pts)]
    a, b = A.psi(p)
    assert A.on_curve(a) and A.on_curve(b)


def test_phi_report():
    r = A.phi_checks()
    assert r.phi_weierstrass and r.phi_prime_weierstrass and r.eta_automorphism and r.composition
    assert r.phi_multiplier_is_one and r.phi_prime_multiplier_ok and r.images_ok
    assert all(r.scalars.values())
    for p, d in r.tangent_directions.items():
        assert d == A.expected_direction(p)
    assert A.psi_injective(4)


def test_family_d():
    assert A.family_D_report() == {"count": 16, "overlaps": [6], "curves_per_point": [10]}
    assert all(A.translates_check().values())


def test_family_e():
    r = A.family_E_report()
    assert r["count"] == 80
    assert r["two_torsion_per_curve"] == [4] and r["curves_per_two_torsion_point"] == [20]


@given(st.integers(0, 79), st.integers(0, 63), st.integers(0, 63))
def test_elliptic_membership_stable_under_negation(k, i, j):
    # each curve of E passes through a 2-torsion point t, so it is t + E' = -t + E'
    c = A.family_E().curves[k]
    p = (A.torsion(4)[i], A.torsion(4)[j])
    assert c.contains(p) == c.contains(A.a_neg(p))


def test_tables():
    rep = A.four_torsion_table()
    assert rep.ok and rep.entries == 240 and not rep.mismatches
    bad = A.four_torsion_table(q5_variant="minus_both")
    assert len(bad.mismatches) == 40


def test_tables_detect_corruption():
    fx = A.load_table_fixture()
    key = next(iter(fx))
    fx[key] = "7" if fx[key] != "7" else "8"
    assert not A.four_torsion_table(fixture=fx).ok


def test_full_incidence_and_triples():
    inc = A.full_4tors_incidence()
    assert set(inc.degrees.values()) == {4} and inc.symmetric_pairs
    tr = A.triple_check()
    assert len(tr) == 10 and all(t.ns_identity and t.directions_agree and t.two_torsion_exclusive for t in tr)
    assert len({t.direction for t in tr}) == 10
