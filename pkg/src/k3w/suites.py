"""Verification suites behind ``k3w verify``.

Every suite returns a Report.  ``fault`` injects one deliberate corruption
(an octad, a Fermat line or a table cell) to exercise the failure path.
"""

from __future__ import annotations

import random
from collections import Counter
from fractions import Fraction
from itertools import combinations
from math import comb

from .report import Recorder, Report

FAULTS = {"octad": "golay", "line": "fermat", "table-cell": "abelian"}


# -- golay ------------------------------------------------------------------------------------

def corrupt_octads(octads: list[int]) -> tuple[list[int], int]:
    """Swap one point of the octad K for a point outside it."""
    from .golay import printed_octads

    k = printed_octads()["K"]
    i = octads.index(k)
    inside = next(b for b in range(24) if k >> b & 1)
    outside = next(b for b in range(24) if not k >> b & 1)
    out = list(octads)
    out[i] = k ^ (1 << inside) ^ (1 << outside)
    return out, i


def five_cover(octads) -> tuple[bool, dict]:
    cnt: Counter = Counter()
    for o in octads:
        bits = [1 << i for i in range(24) if o >> i & 1]
        for c in combinations(bits, 5):
            cnt[c[0] | c[1] | c[2] | c[3] | c[4]] += 1
    multi = sum(1 for v in cnt.values() if v > 1)
    missing = comb(24, 5) - len(cnt)
    return (multi == 0 and missing == 0), {"covered_twice": multi, "uncovered": missing}


def suite_golay(fault: str | None = None, **_) -> Report:
    from .golay import fmt, golay, printed_octads, printed_report, weight

    r = Recorder("golay")
    system = golay()
    octads = list(system.octads)
    if fault == "octad":
        octads, _ = corrupt_octads(octads)
    r.eq("octads=759", "octads of the Steiner system S(5,8,24)", 759, lambda: len(set(octads)))
    r.true("steiner-5-cover", "each 5-subset of 24 points in exactly one octad", lambda: five_cover(octads))
    r.eq(
        "weight-enumerator",
        "weight enumerator of the extended Golay code",
        {0: 1, 8: 759, 12: 2576, 16: 759, 24: 1},
        system.weight_enumerator,
    )

    def in_code():
        bad = [fmt(o) for o in octads if not (system.is_codeword(o) and weight(o) == 8)]
        return not bad, bad[:3]

    r.true("octads-in-code", "octads are the weight-8 codewords", in_code)

    def printed():
        have = set(octads)
        bad = sorted(n for n, m in printed_octads().items() if m not in have)
        return not bad, bad

    r.true("printed-octads", "printed octads K, K_i, K'_i, K''_i are octads", printed)
    rep = printed_report(system)
    r.eq("printed-neighbours-valid", "printed 30-neighbour list of r_K", 30, lambda: rep["valid"])
    from .leech import printed_neighbour_check

    chk = printed_neighbour_check()
    r.note(
        "printed-neighbours-distinct",
        "printed 30-neighbour list of r_K",
        30,
        rep["distinct"],
        {"duplicates": rep["duplicates"], "unprinted_neighbour": [fmt(m) for m in chk["unprinted_neighbours"]]},
    )
    return r.done()


# -- leech ------------------------------------------------------------------------------------

def suite_leech(jobs: int = 1, **_) -> Report:
    from . import leech as L

    r = Recorder("leech")
    sh = L.minimal_shell(jobs=jobs)
    r.eq("shell=196560", "norm -4 vectors of the Leech lattice", 196560, lambda: len(sh))
    r.eq("shell-census", "shapes (4^2 0^22), (2^8 0^16), (-3 1^23)", {"4": 1104, "2": 97152, "3": 98304}, lambda: sh.census)
    r.true("base-roots", "four roots spanning A2+A2", lambda: L.base_roots() is not None)
    roots = L.orthogonal_roots()
    r.eq("orth-roots=112", "Leech roots orthogonal to A2+A2", 112, lambda: len(roots))
    r.eq("root-types=56+56", "octad type census of the 112 roots", {1: 56, 2: 56}, lambda: L.type_census(roots))
    r.true("root-characterization", "octad characterization of the 112 roots", lambda: L.characterization_holds(roots))
    for kind, count, per, norm in (("A5", 5184, 1296, Fraction(-2, 3)), ("A3A2", 648, 162, Fraction(-4, 3))):
        ch = L.chain_roots(kind)
        r.eq(f"{kind}-roots={count}", f"roots extending A2+A2 to {kind}", count, lambda: ch.count)
        r.eq(f"{kind}-per-pattern", f"{kind} roots per attachment pattern", [per] * 4, lambda: [len(v) for v in ch.by_pattern.values()])
        r.eq(f"{kind}-norm={norm}", f"projection norm of {kind} roots", {norm}, lambda: set(ch.norms.values()))

        def explicit(ch=ch, norm=norm):
            vals = {L.verify_projection(vs[0]) for vs in ch.by_pattern.values()}
            return vals == {norm}, sorted(vals)

        r.true(f"{kind}-projection-explicit", f"projection norm of explicit {kind} roots", explicit)
    w = L.weyl_projection()
    r.eq("weyl-norm=4", "norm of the projected Weyl vector", 4, lambda: w.norm())
    r.true("weyl-explicit", "projected Weyl vector in coordinates", lambda: L.weyl_explicit() == w)
    r.true("weyl-pairing=1", "Weyl vector pairs to 1 with every root", lambda: all(x.root.pair(w) == 1 for x in roots))
    r.true("weyl-sum=28w", "sum of the 112 roots is 28 w", lambda: L.root_sum() == w.scale(28))
    gen = L.generation_check()
    r.eq("gram-rank=22", "rank of the 112-root Gram matrix", 22, lambda: gen.rank)
    r.eq("gram-invariants=(3,3)", "nonunit invariant factors of the Gram matrix", (3, 3), lambda: gen.invariants)
    r.eq("sublattice-index=81", "index of the span of a fiber and a section", 81, lambda: gen.sublattice_index)

    def regular():
        _, adj = L.root_incidence()
        degs = sorted({len(a) for a in adj})
        return degs == [30], degs

    r.true("incidence-30-regular", "dual graph of the 112 roots", regular)
    r.eq("octad-rule", "pairings predicted by octad intersections", [], L.octad_rule_violations)

    def fibers():
        bad = []
        for i in range(len(roots)):
            fc = L.fiber_classes(i)
            if len(fc.triples) != 10 or len(fc.sections) != 81:
                bad.append(i)
        return not bad, bad[:5]

    r.true("fiber-classes", "10 concurrent triples and 81 sections per root", fibers)
    r.true("sixteen-ten", "two 16-sets of roots forming a (16)_10 configuration", lambda: L.sixteen_ten_ok(*L.sixteen_ten_roots()))
    return r.done()


# -- fermat -----------------------------------------------------------------------------------

def suite_fermat(fault: str | None = None, **_) -> Report:
    from . import fermat as Fm

    r = Recorder("fermat")
    pts = Fm.surface_points()
    r.eq("points=280", "GF(9)-points of x^4+y^4+z^4+w^4 = 0", 280, lambda: len(pts))
    r.eq("lines-scanned=7462", "lines of P^3(GF(9))", 7462, lambda: sum(1 for _ in Fm.all_lines()))
    lines = list(Fm.surface_lines())
    r.eq("lines=112", "lines on the Fermat quartic", 112, lambda: len(lines))
    if fault == "line":
        lines[0] = next(ln for ln in Fm.all_lines() if not Fm.contained(ln))

    def contained():
        bad = [i for i, ln in enumerate(lines) if not Fm.contained(ln)]
        return not bad, bad

    r.true("lines-contained", "every listed line lies on the surface", contained)
    where = {p.coords: k for k, p in enumerate(pts)}
    inc = [tuple(sorted(where[c] for c in ln.points if c in where)) for ln in lines]

    def config():
        per_line = Counter(len(x) for x in inc)
        per_point = Counter(Counter(p for x in inc for p in x).get(k, 0) for k in range(len(pts)))
        ok = per_line == Counter({10: 112}) and per_point == Counter({4: 280})
        return ok, {"points_per_line": dict(per_line), "lines_per_point": dict(per_point)}

    r.true("(280_4,112_10)", "point-line configuration on the Fermat quartic", config)
    adj = [[j for j in range(len(lines)) if j != i and lines[i].meets(lines[j])] for i in range(len(lines))]

    def graph():
        degs = sorted({len(a) for a in adj})
        edges = sum(len(a) for a in adj) // 2
        return degs == [30] and edges == 1680, {"degrees": degs, "edges": edges}

    r.true("line-graph", "intersection graph of the 112 lines", graph)

    def fibrations():
        bad = []
        for b in range(len(lines)):
            try:
                f = Fm.fibration(b, inc, adj)
                if len(f.triples) != 10 or len(f.sections) != 81:
                    bad.append(b)
            except Fm.FermatError as e:
                bad.append(f"{b}: {e}")
        return not bad, bad[:3]

    r.true("fibration 10+81", "quasi-elliptic fibration from each line", fibrations)
    return r.done()


# -- quadric ------------------------------------------------------------------------------------

def suite_quadric(**_) -> Report:
    from . import quadric as Qd

    r = Recorder("quadric")
    r.true("base-points", "ten points of C and C' as listed", lambda: len(Qd.base_points()) == 10)

    def transverse():
        m = [Qd.local_mult(Qd.CURVE_C, Qd.CURVE_C1, p) for p in Qd.base_points()]
        return set(m) == {1}, m

    r.true("transverse", "C and C' meet transversally", transverse)

    def tangencies():
        ts = Qd.ruling_tangencies()
        return len(ts) == 20 and {t.mult for t in ts} == {3}, [(t.curve, str(t.point), t.mult) for t in ts if t.mult != 3]

    r.true("tangencies=3", "each ruling curve C_i, D_j is tangent of order 3", tangencies)
    inc = Qd.incidence_matrix()
    r.eq("forms-through-4", "thirty (1,1)-forms through four base points", [4] * 30, lambda: [sum(row) for row in inc])
    r.eq("forms-per-point=12", "forms through each base point", [12] * 10, lambda: [sum(col) for col in zip(*inc)])
    rep = Qd.printed_form_report()
    r.true("complete-system", "the thirty forms are all (1,1)-forms through four base points", lambda: rep["corrected_is_complete"])
    r.note("printed-forms", "printed list of thirty (1,1)-forms", 30, rep["printed_ok"], {"misprints": rep["misprints"]})
    return r.done()


# -- abelian (with the quaternion order and NS model) ----------------------------------------

def _corrupt_fixture(fixture: dict) -> tuple[dict, tuple]:
    from .abelian import E0_LABELS

    key = ("Q1", "Q1")
    out = dict(fixture)
    labels = list(E0_LABELS)
    out[key] = labels[(labels.index(out[key]) + 1) % len(labels)]
    return out, key


def suite_abelian(fault: str | None = None, tables: str | None = None, **_) -> Report:
    from . import abelian as A
    from . import quaternion as Qn

    r = Recorder("abelian")
    # quaternion order and the hermitian NS model
    r.eq("ring-relations", "relations of the maximal order", [], Qn.self_check)
    r.eq("norms", "N(F) = 3, N(pi) = 2", (3, 2), lambda: (Qn.F.norm(), Qn.PI.norm()))
    r.eq("ns-table", "intersection table of the NS basis", [list(x) for x in Qn.PRINTED_TABLE], Qn.intersection_table)
    sol = Qn.solve_genus4()
    r.eq("genus4-class", "class of the genus-4 curve in the NS basis", (1, 1, -1, -1, 2, 2), lambda: tuple(sol.cls.coeffs))
    jc = Qn.j_of_C()
    r.eq(
        "genus4-hermitian",
        "hermitian matrix of the genus-4 curve",
        (3, str(-(1 + Qn.TAU) * (1 + 2 * Qn.SIGMA)), 3, 3),
        lambda: (jc.a, str(jc.b), jc.d, jc.det()),
    )
    ds = Qn.decompositions()
    r.true(
        "decompositions",
        "ten splittings of the genus-4 class into two elliptic classes",
        lambda: (all(d.sums_to_jC and d.inner == 3 and d.label_ok for d in ds), [d.label for d in ds if not d.label_ok]),
    )
    r.eq("cross-pairings", "pairings between different splittings", {1, 2}, lambda: set(Qn.cross_pairings().values()))
    r.eq("tangent-classes", "ten tangent classes fill P^1(GF(9))", 10, lambda: len({d.tangents[0] for d in ds}))
    lab = Qn.numbered_label_report()["3"]
    r.note("numbered-curve-3", "numbered elliptic curve (3)", True, bool(lab["first_matches"]), lab)

    # the elliptic curve
    r.eq("point-counts", "|E(GF(3))|, |E(GF(9))|, |E(GF(81))|", (4, 16, 64), lambda: tuple(len(A.torsion(k)) for k in (1, 2, 4)))
    r.true(
        "Ker4=E(F9)",
        "4-torsion is the GF(9)-points",
        lambda: {p for p in A.torsion(4) if A.e_mul(4, p).is_inf} == set(A.torsion(2)),
    )
    r.true("group-assoc-F9", "associativity on E(GF(9))", lambda: A.group_law_associative(A.torsion(2)))
    pts = A.torsion(4)
    r.true("addition-forms", "chord rule agrees with y = y1 + y2 - lam^3", lambda: all(A.e_add(p, q) == A.e_add_cubic(p, q) for p in pts for q in pts))
    fails = A.endo_identities()
    for name, bad in fails.items():
        if name == "sigma pi = pi sigma":
            r.note(f"endo:{name}", "endomorphism relation", 0, len(bad), {"failing_points": len(bad), "of": len(pts)})
        else:
            r.eq(f"endo:{name}", "endomorphism relation", 0, lambda bad=bad: len(bad))

    # the genus-4 curve and psi
    ph = A.phi_checks()
    r.true(
        "phi-identities",
        "phi, phi' are maps to E; phi' = eta' T phi eta; multipliers 1 and z^3 X^3",
        lambda: (
            ph.phi_weierstrass and ph.phi_prime_weierstrass and ph.eta_automorphism and ph.composition
            and ph.phi_multiplier_is_one and ph.phi_prime_multiplier_ok and all(ph.scalars.values()),
            {k: v for k, v in vars(ph).items() if isinstance(v, bool)},
        ),
    )
    r.true("psi-images", "psi maps C(GF(9)) onto the ten listed 2-torsion points", lambda: ph.images_ok)
    r.true(
        "tangent-directions",
        "tangent directions of psi(C) at its 2-torsion points",
        lambda: all(d == A.expected_direction(p) for p, d in ph.tangent_directions.items()),
    )
    lm = A.translates_check()
    r.true("psi-injective-F81", "psi is injective on C(GF(81))", lambda: lm["psi_injective_F81"])
    r.true(
        "translates-avoid-4-torsion",
        "translates of psi(C) miss Ker[4] minus Ker[2]",
        lambda: (lm["base_disjoint"] and lm["translates_disjoint"] and lm["rational_preimages"], lm["argument"]),
    )

    # families and tables
    r.eq("family-D", "sixteen genus-4 translates", {"count": 16, "overlaps": [6], "curves_per_point": [10]}, A.family_D_report)
    r.eq(
        "family-E",
        "eighty elliptic curves through 2-torsion",
        {
            "count": 80,
            "two_torsion_per_curve": [4],
            "four_torsion_per_curve": [16],
            "curves_per_two_torsion_point": [20],
            "directions_cover_twice": True,
        },
        A.family_E_report,
    )
    fixture = A.load_table_fixture(tables)
    corrupted = None
    if fault == "table-cell":
        fixture, corrupted = _corrupt_fixture(fixture)

    def table():
        rep = A.four_torsion_table(fixture=fixture)
        diag = A.table_uniqueness_diagnosis(rep, fixture)
        return rep.ok and rep.entries == 240 and len(fixture) == 240, {"entries": rep.entries, "mismatches": diag[:5], "injected": corrupted}

    r.true("tables-240", "4-torsion points on the twenty curves through 0", table)

    def incidence():
        inc = A.full_4tors_incidence()
        degs = sorted(set(inc.degrees.values()))
        return degs == [4] and inc.symmetric_pairs and len(inc.degrees) == 240, {"degrees": degs, "symmetric": inc.symmetric_pairs}

    r.true("4-torsion-incidence", "each 4-torsion point on four of the eighty curves", incidence)

    def triples():
        ts = A.triple_check()
        ok = all(t.ns_identity and t.pairings == (3, 3, 3) and t.directions_agree and t.two_torsion_exclusive for t in ts)
        return ok and len({t.direction for t in ts}) == 10, [t.label for t in ts if not t.directions_agree]

    r.true("triples", "C_a, Delta_a, Delta'_a: classes, pairings 3, common tangent", triples)
    return r.done()


# -- kummer ------------------------------------------------------------------------------------

def suite_kummer(**_) -> Report:
    from . import kummer as K

    r = Recorder("kummer")
    s = r.eq("built", "incidence structure of 112 curves and 280 points", True, lambda: K.build_structure() is not None)
    if not s:
        return r.done()
    st = K.build_structure()
    r.eq("curves=112", "rational curves on the Kummer surface", 112, lambda: len(st.curves))
    r.eq("points=280", "GF(9)-points on the curves", 280, lambda: len(st.points))
    r.eq("curve-degree=10", "points on each curve", [10], lambda: sorted({len(x) for x in st.curve_points}))
    r.eq("point-degree=4", "curves through each point", [4], lambda: sorted({len(x) for x in st.point_curves}))
    r.eq("incidences=1120", "point-curve incidences", 1120, lambda: st.n_incidences)
    gr = K.graph_report(st)
    r.eq("curve-graph-30-regular", "curve graph degrees", ([30], 1680), lambda: (gr["degrees"], gr["edges"]))
    r.eq(
        "A-B-(16)_10",
        "exceptional curves and genus-4 images form a (16)_10 configuration",
        (0, 0, [10], [10]),
        lambda: (gr["A_internal"], gr["B_internal"], gr["A_to_B"], gr["B_to_A"]),
    )
    r.true("local-structure", "curves through each point by type", lambda: K.local_structure_ok(st))
    led = K.intersection_ledger(st)
    r.eq(
        "ledger-self=-2",
        "self-intersection of each image curve",
        {"genus": ["-2"], "elliptic": ["-2"], "exceptional": ["-2"]},
        lambda: led.on_kummer,
        {"on_A": led.self_on_A, "after_blowup": led.after_blowup},
    )
    r.true("ledger-matches-graph", "intersection ledger equals -2 I + adjacency", lambda: (led.matches_graph, led.mismatches[:3]))
    return r.done()


# -- isomorphism -------------------------------------------------------------------------------

def suite_iso(relabelings: int = 10, seed: int = 0, **_) -> Report:
    from . import graphs as G
    from . import kummer as K
    from . import leech as L

    r = Recorder("iso")
    gs = {k: f() for k, f in G.GRAPHS.items()}
    inv = {k: G.invariants(g) for k, g in gs.items()}
    r.true("invariants-agree", "degree, triangle and common-neighbour profiles", lambda: (inv["leech"] == inv["fermat"] == inv["kummer"], {"triangles": inv["leech"]["triangles"]}))
    for a, b in (("leech", "fermat"), ("leech", "kummer"), ("fermat", "kummer")):
        def iso(a=a, b=b):
            res = G.isomorphism(gs[a], gs[b])
            ok = res.isomorphic and G.verify_bijection(gs[a], gs[b], res.mapping)
            return ok, res.reason

        r.true(f"iso {a}~{b}", "Leech roots, Fermat lines and Kummer curves have one dual graph", iso)

    def sixteen():
        sa, sb = L.sixteen_ten_roots()
        cl = [1 if i in sa else 2 if i in sb else 0 for i in range(112)]
        kinds = [c.kind for c in K.build_structure().curves]
        ck = [{"exceptional": 1, "genus": 2}.get(k, 0) for k in kinds]
        return G.isomorphism(gs["leech"], gs["kummer"], cl, ck).isomorphic

    r.true("(16)_10-colored-iso", "the two (16)_10 configurations correspond under an isomorphism", sixteen)
    rng = random.Random(seed)

    def stable():
        bad = []
        for k, g in gs.items():
            c0 = G.canonical_label(g).certificate
            for _ in range(relabelings):
                if G.canonical_label(G.random_relabel(g, rng)[0]).certificate != c0:
                    bad.append(k)
                    break
        return not bad, bad

    r.true("canonical-stable", f"canonical form under {relabelings} random relabelings", stable)
    return r.done()


SUITES = {
    "golay": suite_golay,
    "leech": suite_leech,
    "fermat": suite_fermat,
    "quadric": suite_quadric,
    "abelian": suite_abelian,
    "kummer": suite_kummer,
    "iso": suite_iso,
}


def run_suite(name: str, **kw) -> Report:
    return SUITES[name](**kw)
