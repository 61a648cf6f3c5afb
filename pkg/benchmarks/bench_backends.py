"""Timing comparison of the compiled kernels against the NumPy fallback.

Runs the same workloads through both backends and prints per-call times:
raw message-passing sweeps, full BP decodes, a coupled global decode, and
the systematic encoding solve.

    python benchmarks/bench_backends.py [--reps 50]
"""

import argparse
import time

import numpy as np

import lgpolar as lg
from lgpolar import _backend, _kernels_py, presets
from lgpolar.bp import LLR_MAX, bp_decode
from lgpolar.channel import awgn_llr
from lgpolar.code import polar_transform
from lgpolar.simulate import frame_rng

try:
    from lgpolar import _kernels
except ImportError:
    _kernels = None


def _use(kernels):
    _backend.l_sweep = kernels.l_sweep
    _backend.r_sweep = kernels.r_sweep
    _backend.transform_bits_inplace = kernels.transform_bits_inplace
    _backend.systematic_solve = kernels.systematic_solve


def _time(fn, reps):
    fn()
    fn()
    start = time.perf_counter()
    for _ in range(reps):
        fn()
    return (time.perf_counter() - start) / reps * 1e3


def _sweep_workload(kernels, n_bits):
    rng = np.random.default_rng(0)
    shape = (n_bits.bit_length(), n_bits)
    l = np.clip(rng.normal(0, 10, shape), -LLR_MAX, LLR_MAX)
    r = np.clip(rng.normal(0, 10, shape), -LLR_MAX, LLR_MAX)

    def run():
        kernels.l_sweep(l, r, False, LLR_MAX)
        kernels.r_sweep(l, r, False, LLR_MAX)

    return run


def _bp_workload(kernels, code, llr):
    def run():
        _use(kernels)
        bp_decode(llr, code, 30, early_stop=False)

    return run


def _global_workload(kernels, cfg, llr):
    def run():
        _use(kernels)
        lg.global_decode(llr, cfg)

    return run


def _systematic_workload(kernels, n_bits):
    rng = np.random.default_rng(1)
    sys_mask = np.zeros(n_bits, dtype=np.uint8)
    sys_mask[rng.choice(n_bits, n_bits // 2, replace=False)] = 1
    x_vals = np.where(sys_mask, rng.integers(0, 2, n_bits), 0).astype(np.uint8)

    def run():
        kernels.systematic_solve(x_vals.copy(), sys_mask)

    return run


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--reps", type=int, default=50)
    args = parser.parse_args()

    if _kernels is None:
        raise SystemExit("compiled kernels are not built; nothing to compare")

    code = lg.partition_channels(lg.construct_reliability(1024, 0.0, 0.5), 512, 0)
    rng = frame_rng(0, 2.5, 0)
    u = np.zeros(1024, dtype=np.uint8)
    u[code.info_set] = rng.integers(0, 2, 512, dtype=np.uint8)
    bp_llr = awgn_llr(polar_transform(u), 2.5, 0.5, rng)

    cfg = presets.build_coupled(presets.PRESETS["setting1"])
    v_a = rng.integers(0, 2, cfg.ka, dtype=np.uint8)
    v_b = rng.integers(0, 2, cfg.kb, dtype=np.uint8)
    global_llr = awgn_llr(lg.lg_encode(v_a, v_b, cfg), 2.5, 0.5, rng)

    workloads = [
        ("L+R sweep, N=1024", _sweep_workload, (1024,)),
        ("bp_decode, N=1024, 30 iters", _bp_workload, (code, bp_llr)),
        ("global_decode, setting1", _global_workload, (cfg, global_llr)),
        ("systematic_solve, N=1024", _systematic_workload, (1024,)),
    ]

    print(f"{'workload':<30} {'compiled':>10} {'python':>10} {'speedup':>8}")
    for label, factory, extra in workloads:
        fast = _time(factory(_kernels, *extra), args.reps)
        slow = _time(factory(_kernels_py, *extra), max(args.reps // 5, 3))
        print(f"{label:<30} {fast:>8.3f}ms {slow:>8.3f}ms {slow / fast:>7.1f}x")
    _use(_kernels)


if __name__ == "__main__":
    main()
