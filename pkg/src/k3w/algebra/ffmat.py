"""Row reduction over GF(3^k) on raw element codes."""

from __future__ import annotations

from typing import Sequence

from .gf import ADD, INV, MUL, NEG


def rref(rows: Sequence[Sequence[int]]) -> list[list[int]]:
    """Reduced row echelon form; zero rows are dropped."""
    m = [list(r) for r in rows]
    out: list[list[int]] = []
    ncols = len(m[0]) if m else 0
    for col in range(ncols):
        piv = next((i for i, r in enumerate(m) if r[col]), None)
        if piv is None:
            continue
        row = m.pop(piv)
        inv = INV[row[col]]
        row = [MUL[inv][v] for v in row]
        for r in m + out:
            c = r[col]
            if c:
                f = NEG[c]
                for j in range(ncols):
                    r[j] = ADD[r[j]][MUL[f][row[j]]]
        out.append(row)
    return out


def rank(rows: Sequence[Sequence[int]]) -> int:
    return len(rref(rows))


def normalize(v: Sequence[int]) -> tuple[int, ...]:
    """Scale a nonzero vector so its first nonzero coordinate is 1."""
    lead = next((c for c in v if c), 0)
    if not lead:
        raise ValueError("zero vector has no projective class")
    inv = INV[lead]
    return tuple(MUL[inv][c] for c in v)


def axpy(a: int, x: Sequence[int], y: Sequence[int]) -> tuple[int, ...]:
    """a*x + y."""
    return tuple(ADD[MUL[a][xi]][yi] for xi, yi in zip(x, y))
