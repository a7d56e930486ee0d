from collections import Counter

import pytest

from k3w import abelian as A
from k3w import kummer as K


@pytest.fixture(scope="module")
def s():
    return K.build_structure()


def test_curve_families(s):
    kinds = Counter(c.kind for c in s.curves)
    assert kinds == {"exceptional": 16, "genus": 16, "elliptic": 80}
    assert len({c.id for c in s.curves}) == 112


def test_point_counts(s):
    kinds = Counter(p.kind for p in s.points)
    # 16 two-torsion points x 10 tangent directions; pairs {b, -b} of Ker4 \ Ker2
    assert kinds["directional"] == 16 * 10
    assert kinds["paired"] == (len(A.ker4()) - len(A.ker2())) // 2
    assert len({p.id for p in s.points}) == 280


def test_incidence_degrees(s):
    assert {len(x) for x in s.curve_points} == {10}
    assert {len(x) for x in s.point_curves} == {4}
    assert s.n_incidences == 1120 == 280 * 4
    # the two index directions agree
    for c, pts in enumerate(s.curve_points):
        assert all(c in s.point_curves[p] for p in pts)


def test_graph(s):
    g = K.curve_graph(s)
    assert len(g.edges) == 1680 and set(g.shared.values()) == {1}
    r = K.graph_report(s)
    assert r["degrees"] == [30] and r["A_internal"] == r["B_internal"] == 0
    assert r["A_to_B"] == r["B_to_A"] == [10]
    assert K.local_structure_ok(s)


def test_ledger(s):
    led = K.intersection_ledger(s)
    assert led.matches_graph and not led.mismatches
    nb = K.curve_graph(s).neighbours()
    for i in range(0, 112, 5):
        for j in range(112):
            want = -2 if i == j else (1 if j in nb[i] else 0)
            assert led.matrix[i][j] == want
    assert all(v == ["-2"] for v in led.on_kummer.values())


def test_shared_pair_detected(s):
    import dataclasses

    bad = dataclasses.replace(s, point_curves=[list(x) for x in s.point_curves])
    bad.point_curves[0] = bad.point_curves[0] + bad.point_curves[1]
    with pytest.raises(K.KummerError):
        K.curve_graph(bad)
