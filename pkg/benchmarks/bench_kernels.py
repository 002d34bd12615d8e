#!/usr/bin/env python3
"""Compare the numba and numpy kernel backends.

Kernel timings run in-process through ``_accel.kernels(name)``.  End-to-end
timings (word partitions, quotient levels, tableau tables) run each backend
in a fresh subprocess with ``PLACTIC_NUMBA`` set, so import-time selection
and caches are honest.  numba timings exclude the first (compiling) call.

    python benchmarks/bench_kernels.py [--repeat 5] [--json out.json]
"""

from __future__ import annotations

import argparse
import json
import os
import subprocess
import sys
import time

import numpy as np

from plactic3 import _accel
from plactic3.tableau import all_word_counts

END_TO_END = {
    "word_partition(M, n=10)": (
        "from plactic3.presentations import M_PRESENTATION, word_partition\n"
        "word_partition(M_PRESENTATION, 10)"
    ),
    "all_word_counts(n=12)": (
        "from plactic3.tableau import _all_word_counts\n"
        "_all_word_counts(12, 3)"
    ),
    "N2 congruence levels 0..30": (
        "from plactic3.presentations import catalog\n"
        "catalog()['N2']._engine.labels(30)"
    ),
}


def best_of(fn, repeat: int) -> float:
    times = []
    for _ in range(repeat):
        start = time.perf_counter()
        fn()
        times.append(time.perf_counter() - start)
    return min(times)


def kernel_cases(rng: np.random.Generator):
    counts = np.ascontiguousarray(all_word_counts(10), dtype=np.int32)
    letters = rng.integers(0, 3, size=counts.shape[0], dtype=np.int64)
    n = 400_000
    src = rng.integers(0, n, size=n // 2, dtype=np.int64)
    dst = rng.integers(0, n, size=n // 2, dtype=np.int64)
    return {
        f"insert_batch ({counts.shape[0]} tableaux)": ("insert_batch", (counts, letters, 3)),
        f"components ({n} nodes, {n // 2} edges)": ("components", (n, src, dst)),
    }


def run_end_to_end(backend: str, code: str) -> float:
    env = dict(os.environ, PLACTIC_NUMBA="1" if backend == "numba" else "0")
    # warm-up pass inside the same process so numba compilation is excluded
    script = (
        "import time\n"
        "from plactic3.tableau import _all_word_counts\n"
        "from plactic3._accel import components\n"
        "import numpy as np\n"
        "_all_word_counts(3, 3); components(3, np.array([0]), np.array([1]))\n"
        "t = time.perf_counter()\n"
        f"{code}\n"
        "print(time.perf_counter() - t)\n"
    )
    out = subprocess.run([sys.executable, "-c", script], env=env, check=True,
                         capture_output=True, text=True)
    return float(out.stdout.strip().splitlines()[-1])


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=5)
    parser.add_argument("--skip-end-to-end", action="store_true")
    parser.add_argument("--json", metavar="PATH")
    args = parser.parse_args(argv)

    rng = np.random.default_rng(0)
    rows = []
    for label, (name, inputs) in kernel_cases(rng).items():
        results = {}
        for backend in ("numba", "numpy"):
            fn = getattr(_accel.kernels(backend), name)
            fn(*inputs)  # compile / warm up
            results[backend] = (best_of(lambda: fn(*inputs), args.repeat), fn(*inputs))
        same = np.array_equal(results["numba"][1], results["numpy"][1])
        rows.append((label, results["numba"][0], results["numpy"][0], same))

    if not args.skip_end_to_end:
        for label, code in END_TO_END.items():
            rows.append((label, run_end_to_end("numba", code),
                         run_end_to_end("numpy", code), None))

    print(f"{'case':<44} {'numba [s]':>10} {'numpy [s]':>10} {'speedup':>8}  agree")
    for label, t_nb, t_np, same in rows:
        agree = "-" if same is None else ("yes" if same else "NO")
        print(f"{label:<44} {t_nb:>10.4f} {t_np:>10.4f} {t_np / t_nb:>7.1f}x  {agree}")
    if args.json:
        with open(args.json, "w", encoding="utf-8") as fh:
            json.dump([{"case": r[0], "numba_s": r[1], "numpy_s": r[2], "agree": r[3]}
                       for r in rows], fh, indent=2)
    return 0 if all(r[3] is not False for r in rows) else 1


if __name__ == "__main__":
    sys.exit(main())
