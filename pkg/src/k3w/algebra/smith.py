"""Smith normal form of integer matrices (invariant factors only)."""

from __future__ import annotations

from typing import Sequence

IntMatrix = Sequence[Sequence[int]]


def smith_invariants(m: IntMatrix) -> list[int]:
    """Invariant factors d1 | d2 | ... of ``m``, padded with zeros to min(rows, cols).

    Plain elementary row/column reduction over Python ints.
    """
    a = [[int(x) for x in row] for row in m]
    rows = len(a)
    cols = len(a[0]) if rows else 0
    n = min(rows, cols)
    diag: list[int] = []
    t = 0
    while t < n:
        # pivot: smallest nonzero |entry| in the remaining block
        best = None
        for i in range(t, rows):
            for j in range(t, cols):
                v = a[i][j]
                if v and (best is None or abs(v) < best[0]):
                    best = (abs(v), i, j)
                    if best[0] == 1:
                        break
            if best and best[0] == 1:
                break
        if best is None:
            break
        _, i, j = best
        a[t], a[i] = a[i], a[t]
        if j != t:
            for row in a:
                row[t], row[j] = row[j], row[t]
        while True:
            p = a[t][t]
            dirty = False
            for i in range(t + 1, rows):
                if a[i][t]:
                    q = a[i][t] // p
                    if q:
                        ai, at = a[i], a[t]
                        for j in range(t, cols):
                            if at[j]:
                                ai[j] -= q * at[j]
                    if a[i][t]:
                        dirty = True
            for j in range(t + 1, cols):
                if a[t][j]:
                    q = a[t][j] // p
                    if q:
                        for i in range(t, rows):
                            if a[i][t]:
                                a[i][j] -= q * a[i][t]
                    if a[t][j]:
                        dirty = True
            if not dirty:
                # pivot must divide the whole remaining block
                bad = next(
                    ((i, j) for i in range(t + 1, rows) for j in range(t + 1, cols) if a[i][j] % p),
                    None,
                )
                if bad is None:
                    break
                i, _ = bad
                for j in range(t, cols):
                    a[t][j] += a[i][j]
                continue
            # bring the smallest nonzero entry of row/column t to the pivot
            cand = [(abs(a[i][t]), i, t) for i in range(t, rows) if a[i][t]]
            cand += [(abs(a[t][j]), t, j) for j in range(t, cols) if a[t][j]]
            _, i, j = min(cand)
            if i != t:
                a[t], a[i] = a[i], a[t]
            if j != t:
                for row in a:
                    row[t], row[j] = row[j], row[t]
        diag.append(abs(a[t][t]))
        t += 1
    return diag + [0] * (n - len(diag))


def rank_of(m: IntMatrix) -> int:
    return sum(1 for d in smith_invariants(m) if d)


def nonunit_factors(m: IntMatrix) -> list[int]:
    return [d for d in smith_invariants(m) if d > 1]
