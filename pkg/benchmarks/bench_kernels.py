"""Benchmark the compiled kernels against the numpy fallback.

Run from the repository root after building the extension:

    python benchmarks/bench_kernels.py

Workloads: the randomized catalyst scan (the hot search loop), the
tail-sum / conversion-probability kernel on a large tensor-power
spectrum, and the tensor-product sort.
"""

import time

import numpy as np

from entcat import _pykernels

try:
    from entcat import _ckernels
except ImportError:
    _ckernels = None

ALPHA = np.array([0.31, 0.31, 0.30, 0.04, 0.04])
BETA = np.array([0.48, 0.24, 0.14, 0.14, 0.0])


def _sorted_rows(p, count, seed):
    rng = np.random.default_rng(seed)
    u = np.sort(rng.random((count, p - 1)), axis=1)
    spac = np.diff(u, axis=1, prepend=0.0, append=1.0)
    spac.sort(axis=1)
    return np.ascontiguousarray(spac[:, ::-1])


def _big_pair(copies=8):
    # (0.6, 0.4) tensor powers: 2**copies entries each.
    a = np.array([1.0])
    b = np.array([1.0])
    for _ in range(copies):
        a = np.sort(np.multiply.outer(a, [0.62, 0.38]).ravel())[::-1].copy()
        b = np.sort(np.multiply.outer(b, [0.6, 0.4]).ravel())[::-1].copy()
    return a, b


def timeit(fn, repeat=5):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def main():
    backends = [("python", _pykernels)]
    if _ckernels is not None:
        backends.append(("cython", _ckernels))
    else:
        print("compiled extension not built; timing the fallback only\n")

    rows = _sorted_rows(2, 50_000, seed=1)
    big_src, big_tgt = _big_pair(16)  # 65536 entries
    small = np.linspace(1, 2, 64)
    small /= small.sum()
    small = np.sort(small)[::-1].copy()

    workloads = [
        (
            "catalyst_scan 50k samples p=2 (no hit)",
            lambda k: k.catalyst_scan(ALPHA, BETA, rows, 4.0 / 7.0, 1.0, 1e-9),
        ),
        (
            f"pmax_witness dim {big_src.size}",
            lambda k: k.pmax_witness(big_src, big_tgt, 1e-9),
        ),
        (
            "outer_sorted 64 x 64",
            lambda k: k.outer_sorted(small, small),
        ),
    ]

    results = {}
    for wname, fn in workloads:
        for bname, mod in backends:
            results[(wname, bname)] = timeit(lambda: fn(mod))

    width = max(len(w) for w, _ in workloads)
    print(f"{'workload':<{width}}  {'python':>10}  {'cython':>10}  {'speedup':>8}")
    for wname, _ in workloads:
        py = results[(wname, "python")]
        cy = results.get((wname, "cython"))
        cy_txt = f"{cy * 1e3:9.2f}ms" if cy is not None else "      n/a"
        ratio = f"{py / cy:7.1f}x" if cy else "     n/a"
        print(f"{wname:<{width}}  {py * 1e3:9.2f}ms  {cy_txt}  {ratio}")

    # Sanity: both backends agree on the scan outcome.
    if _ckernels is not None:
        a = _pykernels.catalyst_scan(ALPHA, BETA, rows, 4.0 / 7.0, 1.0, 1e-9)
        b = _ckernels.catalyst_scan(ALPHA, BETA, rows, 4.0 / 7.0, 1.0, 1e-9)
        assert a == b, (a, b)
        print("\nbackends agree on the scan outcome:", a)


if __name__ == "__main__":
    main()
