"""Compare the compiled and pure-Python refinement kernels.

    python benchmarks/bench_refine.py [--repeat N]

Refinement is timed by calling both kernels directly on the three 112-vertex
graphs. Full canonical labeling is timed in a subprocess per backend, since
the backend is fixed at import.
"""

import argparse
import json
import os
import subprocess
import sys
import timeit

from k3w import graphs as G
from k3w._kernels import _refine_py

try:
    from k3w._kernels import _refine_cy
except ImportError:
    _refine_cy = None

_LABEL_SNIPPET = """
import json, time
from k3w import graphs as G
from k3w._kernels import BACKEND
gs = [f() for f in G.GRAPHS.values()]
t0 = time.perf_counter()
for _ in range({n}):
    for g in gs:
        G.canonical_label(g)
print(json.dumps({{"backend": BACKEND, "seconds": (time.perf_counter() - t0) / ({n} * len(gs))}}))
"""


def bench_refine(repeat: int) -> dict:
    out = {}
    for name, f in G.GRAPHS.items():
        g = f()
        ip, ix = g.csr
        # one individualized vertex, as in the search
        cols = [0] * g.n
        cols[0] = 1
        row = {"python": min(timeit.repeat(lambda: _refine_py.refine(ip, ix, cols), number=20, repeat=repeat)) / 20}
        if _refine_cy is not None:
            row["cython"] = min(timeit.repeat(lambda: _refine_cy.refine(ip, ix, cols), number=20, repeat=repeat)) / 20
        out[name] = row
    return out


def bench_label(n: int) -> dict:
    out = {}
    for backend, flag in (("cython", "0"), ("python", "1")):
        env = dict(os.environ, K3W_PURE_PYTHON=flag)
        p = subprocess.run([sys.executable, "-c", _LABEL_SNIPPET.format(n=n)], capture_output=True, text=True, env=env, check=True)
        res = json.loads(p.stdout)
        out[res["backend"] if backend == "cython" else backend] = res["seconds"]
    return out


def main() -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--labelings", type=int, default=5)
    args = ap.parse_args()

    print("refine, one call (ms)")
    for name, row in bench_refine(args.repeat).items():
        cells = "  ".join(f"{k} {v * 1e3:8.3f}" for k, v in row.items())
        speed = f"  x{row['python'] / row['cython']:.1f}" if "cython" in row else ""
        print(f"  {name:<7} {cells}{speed}")
    lab = bench_label(args.labelings)
    print("canonical_label, per graph (ms)")
    for k, v in lab.items():
        print(f"  {k:<7} {v * 1e3:8.1f}")


if __name__ == "__main__":
    main()
