# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled graph kernels: all-pairs BFS and distance-regularity counting.

Both take the graph in CSR form (int32 indptr / indices).
"""

import numpy as np


def all_distances(const int[:] indptr, const int[:] indices, int n):
    """n x n int32 distance matrix, -1 where unreachable."""
    dist = np.full((n, n), -1, dtype=np.int32)
    queue = np.empty(max(n, 1), dtype=np.int32)
    cdef int[:, :] D = dist
    cdef int[:] Q = queue
    cdef int s, head, tail, u, v, e, du
    for s in range(n):
        D[s, s] = 0
        Q[0] = s
        head = 0
        tail = 1
        while head < tail:
            u = Q[head]
            head += 1
            du = D[s, u]
            for e in range(indptr[u], indptr[u + 1]):
                v = indices[e]
                if D[s, v] < 0:
                    D[s, v] = du + 1
                    Q[tail] = v
                    tail += 1
    return dist


def local_counts(const int[:, :] dist, const int[:] indptr, const int[:] indices, int diam):
    """Per-distance counts c_h, a_h, b_h, checked to be pair-independent.

    Returns (status, c, a, b, x, y): status 0 with x = y = -1 when every ordered
    pair at distance h sees the same counts, else 1 and the first offending pair.
    """
    cdef Py_ssize_t n = dist.shape[0]
    c_arr = np.full(diam + 1, -1, dtype=np.int64)
    a_arr = np.full(diam + 1, -1, dtype=np.int64)
    b_arr = np.full(diam + 1, -1, dtype=np.int64)
    cdef long long[:] C = c_arr
    cdef long long[:] A = a_arr
    cdef long long[:] B = b_arr
    cdef int x, y, z, e, h, j
    cdef long long cc, aa, bb
    for x in range(n):
        for y in range(n):
            h = dist[x, y]
            cc = 0
            aa = 0
            bb = 0
            for e in range(indptr[y], indptr[y + 1]):
                z = indices[e]
                j = dist[x, z]
                if j == h - 1:
                    cc += 1
                elif j == h:
                    aa += 1
                else:
                    bb += 1
            if C[h] < 0:
                C[h] = cc
                A[h] = aa
                B[h] = bb
            elif C[h] != cc or A[h] != aa or B[h] != bb:
                return 1, c_arr, a_arr, b_arr, x, y
    return 0, c_arr, a_arr, b_arr, -1, -1
