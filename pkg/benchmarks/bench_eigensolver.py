"""Benchmark the compiled Jacobi kernel against the numpy fallback.

Times both backends (and LAPACK for scale) on random complex Hermitian
matrices and checks that their spectra agree.  Run:

    python benchmarks/bench_eigensolver.py [--sizes 16 32 64 128] [--repeats 5]
"""

import argparse
import time

import numpy as np

from akltneg import _jacobi_py

try:
    from akltneg import _jacobi_cy
except ImportError:
    _jacobi_cy = None


def _random_hermitian(n, rng):
    m = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
    return (m + m.conj().T) / 2.0


def _time(fn, h, repeats):
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn(h)
        best = min(best, time.perf_counter() - t0)
    return best


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--sizes", type=int, nargs="+", default=[16, 32, 64, 128])
    parser.add_argument("--repeats", type=int, default=5)
    args = parser.parse_args()

    rng = np.random.default_rng(11)
    print(f"{'n':>5} {'python':>12} {'compiled':>12} {'speedup':>9} "
          f"{'lapack':>12} {'max dev':>10}")
    for n in args.sizes:
        h = _random_hermitian(n, rng)
        w_ref = np.linalg.eigvalsh(h)
        t_py = _time(lambda x: _jacobi_py.jacobi_eigh(x)[0], h, args.repeats)
        dev = np.abs(_jacobi_py.jacobi_eigh(h)[0] - w_ref).max()
        if _jacobi_cy is not None:
            t_cy = _time(lambda x: _jacobi_cy.jacobi_eigh(x)[0], h, args.repeats)
            dev = max(dev, np.abs(_jacobi_cy.jacobi_eigh(h)[0] - w_ref).max())
            cy_txt, speedup = f"{t_cy * 1e3:9.2f} ms", f"{t_py / t_cy:8.1f}x"
        else:
            cy_txt, speedup = "not built", "-"
        t_np = _time(np.linalg.eigvalsh, h, args.repeats)
        print(f"{n:>5} {t_py * 1e3:9.2f} ms {cy_txt:>12} {speedup:>9} "
              f"{t_np * 1e3:9.2f} ms {dev:10.2e}")


if __name__ == "__main__":
    main()
