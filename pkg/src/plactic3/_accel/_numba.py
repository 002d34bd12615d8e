"""numba kernels.  Same signatures and results as ``_numpy``."""

import numpy as np
from numba import njit


@njit(cache=True)
def insert_batch(counts, letters, k):
    out = counts.copy()
    for i in range(out.shape[0]):
        x = letters[i]
        r = 0
        off = 0
        while True:
            y = -1
            for l in range(x + 1, k):
                if out[i, off + l - r] > 0:
                    y = l
                    break
            out[i, off + x - r] += 1
            if y < 0:
                break
            out[i, off + y - r] -= 1
            x = y
            off += k - r
            r += 1
    return out


@njit(cache=True)
def _find(parent, i):
    while parent[i] != i:
        parent[i] = parent[parent[i]]
        i = parent[i]
    return i


@njit(cache=True)
def components(n, src, dst):
    parent = np.arange(n)
    for e in range(src.shape[0]):
        a = _find(parent, src[e])
        b = _find(parent, dst[e])
        # the root of every set stays its least member
        if a < b:
            parent[b] = a
        elif b < a:
            parent[a] = b
    for i in range(n):
        parent[i] = _find(parent, i)
    return parent
