"""Compare the pure-Python kernels against the compiled extension.

Times the two hot paths (edit distance and density clustering) on
reproducible workloads sized like real evaluation runs, verifies both
backends agree on every input first, and prints a table with the
speedup. Exits 1 if the compiled extension is not importable.

Usage: python3 benchmarks/bench_kernels.py [--pairs N] [--repeats N]
"""

from __future__ import annotations

import argparse
import sys
import time

import numpy as np

from ingreval import _fallback
from ingreval.prng import SplitMix64

ALPHABET = "abcdefghijklmnopqrstuvwxyz éüß水飴酸"


def make_pairs(rng: SplitMix64, count: int) -> list[tuple[str, str]]:
    def word() -> str:
        return "".join(rng.choice(ALPHABET)
                       for _ in range(4 + rng.randint(15)))
    return [(word(), word()) for _ in range(count)]


def make_points(rng: SplitMix64, n: int) -> tuple[list[float], list[float]]:
    xs = [rng.uniform() * 400.0 for _ in range(n)]
    ys = [rng.uniform() * 600.0 for _ in range(n)]
    return xs, ys


def best_of(repeats: int, fn) -> float:
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--pairs", type=int, default=2000,
                        help="string pairs per distance workload")
    parser.add_argument("--repeats", type=int, default=5,
                        help="timing repeats; best is reported")
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args(argv)

    try:
        from ingreval import _speedups
    except ImportError:
        print("compiled extension not importable; build it with "
              "'pip install -e . --no-build-isolation'", file=sys.stderr)
        return 1

    rng = SplitMix64(args.seed)
    pairs = make_pairs(rng, args.pairs)
    clouds = {n: make_points(rng, n) for n in (200, 1000)}
    arrays = {n: (np.ascontiguousarray(xs), np.ascontiguousarray(ys))
              for n, (xs, ys) in clouds.items()}

    for a, b in pairs[:200]:
        assert _fallback.levenshtein(a, b) == _speedups.levenshtein(a, b)
        assert (_fallback.levenshtein_within(a, b, 2)
                == _speedups.levenshtein_within(a, b, 2))
    for n, (xs, ys) in clouds.items():
        ax, ay = arrays[n]
        assert (_fallback.dbscan_labels(xs, ys, 15.0, 3)
                == list(_speedups.dbscan_labels(ax, ay, 15.0, 3)))

    rows = []

    def bench(name, pure_fn, fast_fn):
        pure = best_of(args.repeats, pure_fn)
        fast = best_of(args.repeats, fast_fn)
        rows.append((name, pure, fast))

    bench(f"levenshtein ({args.pairs} pairs)",
          lambda: [_fallback.levenshtein(a, b) for a, b in pairs],
          lambda: [_speedups.levenshtein(a, b) for a, b in pairs])
    bench(f"levenshtein_within limit=2 ({args.pairs} pairs)",
          lambda: [_fallback.levenshtein_within(a, b, 2)
                   for a, b in pairs],
          lambda: [_speedups.levenshtein_within(a, b, 2)
                   for a, b in pairs])
    for n in (200, 1000):
        xs, ys = clouds[n]
        ax, ay = arrays[n]
        bench(f"dbscan_labels n={n}",
              lambda xs=xs, ys=ys: _fallback.dbscan_labels(xs, ys,
                                                           15.0, 3),
              lambda ax=ax, ay=ay: _speedups.dbscan_labels(ax, ay,
                                                           15.0, 3))

    width = max(len(r[0]) for r in rows)
    print(f"{'kernel':<{width}}  {'pure':>10}  {'compiled':>10}  speedup")
    for name, pure, fast in rows:
        print(f"{name:<{width}}  {pure * 1e3:>8.2f}ms  "
              f"{fast * 1e3:>8.2f}ms  {pure / fast:>6.1f}x")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
