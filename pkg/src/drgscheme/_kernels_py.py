"""Pure numpy versions of the graph kernels (same signatures as the compiled ones).

Counts go through float64 matrix products, exact while n < 2**53.
"""

import numpy as np


def _dense(indptr, indices, n):
    adj = np.zeros((n, n), dtype=np.float64)
    rows = np.repeat(np.arange(n), np.diff(np.asarray(indptr)))
    adj[rows, np.asarray(indices)] = 1.0
    return adj


def all_distances(indptr, indices, n):
    adj = _dense(indptr, indices, n)
    dist = np.full((n, n), -1, dtype=np.int32)
    np.fill_diagonal(dist, 0)
    frontier = np.eye(n)
    seen = np.eye(n, dtype=bool)
    step = 0
    while True:
        step += 1
        nxt = ((frontier @ adj) > 0) & ~seen
        if not nxt.any():
            return dist
        dist[nxt] = step
        seen |= nxt
        frontier = nxt.astype(np.float64)


def local_counts(dist, indptr, indices, diam):
    """Per-pair c, a, b from one product per distance layer.

    On failure returns the first pair, in row-major order, whose counts differ
    from those of the first pair at the same distance, like the compiled kernel.
    """
    dist = np.asarray(dist)
    n = dist.shape[0]
    adj = _dense(indptr, indices, n)
    # layer[j][x, y] = neighbours of y at distance j from x
    layer = [((dist == j).astype(np.float64) @ adj).astype(np.int64) for j in range(diam + 1)]
    zero = np.zeros((n, n), dtype=np.int64)
    c = np.full(diam + 1, -1, dtype=np.int64)
    a = np.full(diam + 1, -1, dtype=np.int64)
    b = np.full(diam + 1, -1, dtype=np.int64)
    worst = None
    for h in range(diam + 1):
        mask = dist == h
        flat = np.flatnonzero(mask)
        if flat.size == 0:
            continue
        cc = (layer[h - 1] if h > 0 else zero)[mask]
        aa = layer[h][mask]
        bb = (layer[h + 1] if h < diam else zero)[mask]
        c[h], a[h], b[h] = cc[0], aa[0], bb[0]
        bad = (cc != cc[0]) | (aa != aa[0]) | (bb != bb[0])
        if bad.any():
            pos = int(flat[np.argmax(bad)])
            worst = pos if worst is None else min(worst, pos)
    if worst is not None:
        x, y = divmod(worst, n)
        return 1, c, a, b, x, y
    return 0, c, a, b, -1, -1
