"""Time the numba kernels against the pure-numpy fallback.

Both implementations are imported side by side, so one process covers
both backends. The first numba call (compilation or cache load) is excluded
by a warm-up. Agreement between the backends is printed next to each timing.

    python3 benchmarks/bench_backends.py [--repeat 5] [--nodes 120]
"""

import argparse
import time

import numpy as np

from airygap import kernels
from airygap.specfun import gauss_legendre
from airygap.surface import GapConfig


def best_time(fn, repeat):
    fn()  # warm-up
    best = np.inf
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def max_diff(a, b):
    if isinstance(a, tuple):
        return max(max_diff(x, y) for x, y in zip(a, b))
    return float(np.max(np.abs(np.asarray(a) - np.asarray(b))))


def cases(nodes):
    cfg = GapConfig(-1.0, -2.0, -3.0)
    x_mat, _ = gauss_legendre(nodes).union(cfg.intervals(4.0, 19.0))
    x_airy = np.linspace(-40.0, 30.0, 200_000)
    rng = np.random.default_rng(0)
    z = rng.uniform(-1, 1, 20_000) + 1j * rng.uniform(-1, 1, 20_000)
    u = rng.uniform(-30, 30, 200_000)
    k = 0.8
    kp = np.sqrt((1 - k) * (1 + k))
    return [
        (f"airy_kernel_matrix ({x_mat.size}x{x_mat.size})", "airy_kernel_matrix", (x_mat,)),
        (f"airy_eval ({x_airy.size} points)", "airy_eval", (x_airy,)),
        (f"theta_series ({z.size} points, order 2)", "theta_series", (z, 1j, 14, 2)),
        (f"sn_cn_dn ({u.size} points)", "sn_cn_dn", (u, k, kp)),
    ]


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--nodes", type=int, default=120, help="nodes per interval for the matrix case")
    args = ap.parse_args(argv)

    impls = {name: kernels.implementation(name) for name in ("numpy", "numba")}
    print(f"{'kernel':<44}{'numpy [ms]':>12}{'numba [ms]':>12}{'speedup':>10}{'max diff':>11}")
    for label, fname, fargs in cases(args.nodes):
        f_np = getattr(impls["numpy"], fname)
        f_nb = getattr(impls["numba"], fname)
        t_np = best_time(lambda: f_np(*fargs), args.repeat)
        t_nb = best_time(lambda: f_nb(*fargs), args.repeat)
        diff = max_diff(f_np(*fargs), f_nb(*fargs))
        print(f"{label:<44}{1e3 * t_np:>12.3f}{1e3 * t_nb:>12.3f}{t_np / t_nb:>10.1f}{diff:>11.1e}")


if __name__ == "__main__":
    main()
