"""Benchmark the compiled canonization kernel against the pure one.

Run as ``python3 benchmarks/bench_canon.py``.  Canonizes batches of
random graphs with both backends, checks they agree, and prints the
per-call timings.
"""

from __future__ import annotations

import argparse
import itertools
import random
import time

from seidel import _canon_py

try:
    from seidel import _canon_c
except ImportError:
    _canon_c = None


def random_masks(rng: random.Random, n: int, p: float) -> list[int]:
    masks = [0] * n
    for a, b in itertools.combinations(range(n), 2):
        if rng.random() < p:
            masks[a] |= 1 << b
            masks[b] |= 1 << a
    return masks


def timed(fn, batch):
    t0 = time.perf_counter()
    out = [fn(n, m) for n, m in batch]
    return time.perf_counter() - t0, out


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--sizes", type=int, nargs="*", default=[8, 10, 12, 16, 20])
    ap.add_argument("--count", type=int, default=500)
    ap.add_argument("--density", type=float, default=0.5)
    ap.add_argument("--seed", type=int, default=2026)
    args = ap.parse_args()

    rng = random.Random(args.seed)
    print(f"{'n':>4} {'pure us':>10} {'compiled us':>12} {'speedup':>8}")
    for n in args.sizes:
        batch = [(n, random_masks(rng, n, args.density)) for _ in range(args.count)]
        t_pure, out_pure = timed(_canon_py.canonical_order, batch)
        if _canon_c is None:
            print(f"{n:>4} {1e6 * t_pure / args.count:>10.1f} {'absent':>12} {'-':>8}")
            continue
        t_comp, out_comp = timed(_canon_c.canonical_order, batch)
        for rp, rc in zip(out_pure, out_comp):
            assert rp[0] == rc[0] and rp[1] == rc[1], "backends disagree"
        print(
            f"{n:>4} {1e6 * t_pure / args.count:>10.1f} "
            f"{1e6 * t_comp / args.count:>12.1f} {t_pure / t_comp:>8.1f}"
        )
    if _canon_c is None:
        print("compiled kernel not built; only pure timings shown")


if __name__ == "__main__":
    main()
