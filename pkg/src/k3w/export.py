"""Serializers for ``k3w export``: octads, roots, lines, incidence, tables."""

from __future__ import annotations

import csv
import io
import json
from typing import Callable


class UnsupportedFormat(ValueError):
    pass


def _dot(name: str, n: int, edges, labels: list[str] | None = None) -> str:
    out = [f"graph {name} {{"]
    for v in range(n):
        lab = f' [label="{labels[v]}"]' if labels else ""
        out.append(f"  {v}{lab};")
    out += [f"  {u} -- {v};" for u, v in edges]
    out.append("}")
    return "\n".join(out) + "\n"


def _csv(rows) -> str:
    buf = io.StringIO()
    csv.writer(buf, lineterminator="\n").writerows(rows)
    return buf.getvalue()


def _json(obj) -> str:
    return json.dumps(obj, indent=1) + "\n"


def octads(fmt: str) -> str:
    from .golay import golay, to_points

    rows = [[str(p) for p in to_points(o)] for o in golay().octads]
    if fmt == "json":
        return _json({"count": len(rows), "octads": rows})
    if fmt == "csv":
        return _csv(rows)
    raise UnsupportedFormat("octads export supports json and csv")


def roots(fmt: str) -> str:
    from .golay import to_points
    from .leech import orthogonal_roots, root_incidence

    rs = orthogonal_roots()
    _, adj = root_incidence()
    if fmt == "json":
        return _json(
            [
                {"index": i, "lambda": list(r.lam), "octad": [str(p) for p in to_points(r.octad)], "type": r.kind, "neighbours": adj[i]}
                for i, r in enumerate(rs)
            ]
        )
    if fmt == "csv":
        return _csv([["index", "type", "lambda"]] + [[i, r.kind, " ".join(map(str, r.lam))] for i, r in enumerate(rs)])
    edges = [(i, j) for i, a in enumerate(adj) for j in a if i < j]
    return _dot("leech_roots", len(rs), edges)


def lines(fmt: str) -> str:
    from .fermat import configuration, line_graph

    cfg = configuration()
    if fmt == "json":
        return _json(
            {
                "points": [list(p.coords) for p in cfg.points],
                "lines": [{"index": i, "basis": [list(r) for r in ln.rows], "points": list(cfg.incidence[i])} for i, ln in enumerate(cfg.lines)],
            }
        )
    if fmt == "csv":
        return _csv([["line", "point"]] + [[i, p] for i, pts in enumerate(cfg.incidence) for p in pts])
    adj = line_graph()
    return _dot("fermat_lines", len(adj), [(i, j) for i, a in enumerate(adj) for j in a if i < j])


def incidence(fmt: str) -> str:
    from .kummer import build_structure, curve_graph

    s = build_structure()
    if fmt == "json":
        return _json(
            {
                "curves": [{"id": c.id, "kind": c.kind} for c in s.curves],
                "points": [{"id": p.id, "kind": p.kind} for p in s.points],
                "incidence": s.curve_points,
            }
        )
    if fmt == "csv":
        return _csv([["curve", "point"]] + [[s.curves[i].id, s.points[p].id] for i, pts in enumerate(s.curve_points) for p in pts])
    g = curve_graph(s)
    return _dot("kummer_curves", g.n, g.edges, [c.id for c in s.curves])


def tables(fmt: str) -> str:
    from .abelian import TABLE_AXIS, four_torsion_table

    rep = four_torsion_table()
    grid = {r: {c: rep.computed.get((r, c)) or "" for c in TABLE_AXIS} for r in TABLE_AXIS}
    if fmt == "json":
        return _json({"rows": "E2 coordinate", "columns": "E1 coordinate", "table": grid})
    if fmt == "csv":
        return _csv([["E2\\E1", *TABLE_AXIS]] + [[r, *grid[r].values()] for r in TABLE_AXIS])
    raise UnsupportedFormat("tables export supports json and csv")


EXPORTS: dict[str, Callable[[str], str]] = {
    "octads": octads,
    "roots": roots,
    "lines": lines,
    "incidence": incidence,
    "tables": tables,
}
