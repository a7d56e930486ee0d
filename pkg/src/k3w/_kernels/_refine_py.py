"""Pure-Python color refinement; the reference for the compiled kernel."""


def refine(indptr, indices, colors):
    """Refine ``colors`` to the coarsest equitable partition below it.

    Each round recolors v by the rank of (color, degree, sorted neighbour
    colors) among all such signatures, until the number of cells is stable.
    Returns (colors, number of cells); the colors are 0..k-1.
    """
    n = len(colors)
    col = list(colors)
    k = len(set(col))
    nbrs = [indices[indptr[v]:indptr[v + 1]] for v in range(n)]
    while True:
        sigs = [(col[v], len(nbrs[v]), *sorted(col[u] for u in nbrs[v])) for v in range(n)]
        rank = {s: i for i, s in enumerate(sorted(set(sigs)))}
        col = [rank[s] for s in sigs]
        if len(rank) == k:
            return col, k
        k = len(rank)
