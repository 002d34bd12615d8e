"""Pure numpy kernels, used when numba is disabled or unavailable."""

import numpy as np


def insert_batch(counts, letters, k):
    """Row-insert ``letters[i]`` into the tableau ``counts[i]`` for every ``i``.

    A tableau is stored as its flattened count matrix: row ``r`` holds the
    counts of letters ``r .. k-1`` starting at offset ``sum(k - j for j < r)``.
    """
    out = counts.copy()
    n = out.shape[0]
    x = np.asarray(letters, dtype=np.int64).copy()
    active = np.ones(n, dtype=bool)
    rows = np.arange(n)
    off = 0
    for r in range(k):
        if not active.any():
            break
        y = np.full(n, -1, dtype=np.int64)
        for l in range(k - 1, r - 1, -1):
            hit = active & (l > x) & (out[:, off + l - r] > 0)
            y[hit] = l
        idx = rows[active]
        out[idx, off + x[idx] - r] += 1
        bumped = active & (y >= 0)
        idx = rows[bumped]
        out[idx, off + y[idx] - r] -= 1
        x = np.where(bumped, y, x)
        active = bumped
        off += k - r
    return out


def components(n, src, dst):
    """Label every node by the least node of its connected component."""
    labels = np.arange(n)
    if len(src) == 0:
        return labels
    while True:
        m = np.minimum(labels[src], labels[dst])
        new = labels.copy()
        np.minimum.at(new, src, m)
        np.minimum.at(new, dst, m)
        while True:
            jumped = new[new]
            if np.array_equal(jumped, new):
                break
            new = jumped
        if np.array_equal(new, labels):
            return labels
        labels = new
