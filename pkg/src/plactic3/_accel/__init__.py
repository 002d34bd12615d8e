"""Kernel dispatch.

The numba kernels are used unless ``PLACTIC_NUMBA=0`` is set in the
environment (or numba cannot be imported); the numpy kernels give identical
results.  ``kernels(name)`` returns a specific backend, for benchmarks and
cross-checks.
"""

import os
import types

import numpy as np

from . import _numpy

try:
    from . import _numba
except ImportError:  # pragma: no cover - numba is a declared dependency
    _numba = None


def _select() -> str:
    flag = os.environ.get("PLACTIC_NUMBA", "1").strip().lower()
    if flag in ("0", "false", "no", "off") or _numba is None:
        return "numpy"
    return "numba"


BACKEND = _select()


def kernels(name: str | None = None) -> types.ModuleType:
    name = name or BACKEND
    if name == "numba":
        if _numba is None:
            raise RuntimeError("numba backend requested but numba is not importable")
        return _numba
    if name == "numpy":
        return _numpy
    raise ValueError(f"unknown kernel backend {name!r}")


def insert_batch(counts, letters, k):
    return kernels().insert_batch(
        np.ascontiguousarray(counts, dtype=np.int32),
        np.ascontiguousarray(letters, dtype=np.int64),
        int(k),
    )


def components(n, src, dst):
    return kernels().components(
        int(n),
        np.ascontiguousarray(src, dtype=np.int64),
        np.ascontiguousarray(dst, dtype=np.int64),
    )
