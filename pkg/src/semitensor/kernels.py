"""Structure-exploiting semi-tensor product and a benchmark harness.

The reference product materializes A x I_a and B x I_b (a = t/n, b = t/p,
t = lcm(n, p)) before multiplying, allocating lifts on the order of t^2
entries. The fast path never forms them: entry (i*a + alpha, j*b + beta)
of the product only receives contributions from inner indices k with
k = alpha (mod a) and k = beta (mod b), where the lifted factors reduce
to A[i, k div a] * B[k div b, j]. Walking k once and scattering into the
output touches each contribution exactly once, with the output as the
only allocation.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from math import lcm
from statistics import median

from . import matrix as _mx
from .matrix import FLOAT64, Matrix, _zero, eq_within, from_rows
from .stp import ltimes


def ltimes_fast(A: Matrix, B: Matrix) -> Matrix:
    """Left semi-tensor product without materializing the Kronecker lifts.

    Exact mode agrees bit-for-bit with the reference ltimes: for every
    output cell the surviving inner indices are visited in the same
    ascending order, and the skipped terms are exact zeros.
    """
    if A.scalar != B.scalar:
        raise ValueError(f"scalar kinds differ: {A.scalar} vs {B.scalar}")
    t = lcm(A.cols, B.rows)
    a = t // A.cols
    b = t // B.rows
    out_rows = A.rows * a
    out_cols = B.cols * b
    acc = [_zero(A.scalar)] * (out_rows * out_cols)
    n, q = A.cols, B.cols
    for k in range(t):
        ka, alpha = divmod(k, a)
        kb, beta = divmod(k, b)
        brow = kb * q
        for i in range(A.rows):
            av = A.data[i * n + ka]
            if av == 0:
                continue
            base = (i * a + alpha) * out_cols + beta
            for j in range(q):
                bv = B.data[brow + j]
                if bv == 0:
                    continue
                acc[base + j * b] += av * bv
    return Matrix(out_rows, out_cols, tuple(acc), A.scalar)


@dataclass(frozen=True)
class BenchConfig:
    """Shape list, repetition count and RNG seed for the harness."""

    sizes: tuple[tuple[int, int, int, int], ...]
    repetitions: int = 5
    seed: int = 0

    def __post_init__(self):
        if self.repetitions < 3:
            raise ValueError("need at least 3 repetitions for a median")
        for s in self.sizes:
            if len(s) != 4 or any(d < 1 for d in s):
                raise ValueError(f"bad size entry {s}")


def _random_float_matrix(rng, m: int, n: int) -> Matrix:
    return from_rows([[rng.uniform(-1.0, 1.0) for _ in range(n)] for _ in range(m)], FLOAT64)


def _timed(fn, A, B, repetitions: int) -> tuple[int, Matrix, int]:
    """(median ns, result, entries allocated during one call)."""
    fn(A, B)  # warmup
    before = _mx.allocated_elems()
    result = fn(A, B)
    alloc = _mx.allocated_elems() - before
    times = []
    for _ in range(repetitions):
        t0 = time.perf_counter_ns()
        fn(A, B)
        times.append(time.perf_counter_ns() - t0)
    return int(median(times)), result, alloc


def bench(cfg: BenchConfig) -> list[dict]:
    """Median timings and allocation footprints, one report row per size."""
    import random

    rng = random.Random(cfg.seed)
    rows = []
    for (m, n, p, q) in cfg.sizes:
        A = _random_float_matrix(rng, m, n)
        B = _random_float_matrix(rng, p, q)
        t = lcm(n, p)
        naive_ns, naive_out, naive_alloc = _timed(ltimes, A, B, cfg.repetitions)
        fast_ns, fast_out, fast_alloc = _timed(ltimes_fast, A, B, cfg.repetitions)
        if not eq_within(naive_out, fast_out, rtol=1e-12):
            raise AssertionError(f"fast path diverged from reference at size {(m, n, p, q)}")
        out_elems = fast_out.rows * fast_out.cols
        rows.append(
            {
                "shape": [m, n, p, q],
                "t": t,
                "naive_ns": naive_ns,
                "fast_ns": fast_ns,
                "speedup": naive_ns / fast_ns if fast_ns else float("inf"),
                "naive_peak_elems": naive_alloc - out_elems,
                "fast_peak_elems": fast_alloc - out_elems,
            }
        )
    return rows
