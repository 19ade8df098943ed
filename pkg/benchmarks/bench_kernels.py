"""Compare the compiled kernels with the pure-Python fallback.

    python3 benchmarks/bench_kernels.py [--repeat 5]

Each row times one kernel on the same inputs under both backends and checks
that the answers agree.
"""
from __future__ import annotations

import argparse
import timeit

from d2color import generators as gen
from d2color import kernels


def flow_network(g, p, q):
    # minimum-cut network for p|S| - q e(S), as built by the density module
    n, m = g.n, g.m
    s, t = n, n + 1
    degs = g.degrees()
    tails, heads, caps, rcaps = [], [], [], []
    for v in range(n):
        tails += [s, v]
        heads += [v, t]
        caps += [q * m, q * m + 2 * p - q * degs[v]]
        rcaps += [0, 0]
    for u, v in g.edges():
        tails.append(u)
        heads.append(v)
        caps.append(q)
        rcaps.append(q)
    return (n + 2, tails, heads, caps, rcaps, s, t)


def adjmasks(g):
    return [sum(1 << w for w in g.neighbors(v)) for v in g.vertices()]


def cases():
    for n in (50, 200, 800):
        g = gen.random_bounded_mad(n, 3, seed=n, p=2.5 / n)
        yield f"max_flow n={n}", kernels.max_flow, flow_network(g, 7, 5)
    for n in (12, 16, 18):
        g = gen.erdos_renyi(n, 0.3, seed=n)
        yield f"densest_subset n={n}", kernels.densest_subset, (n, adjmasks(g))
        yield f"min_linear_subset n={n}", kernels.min_linear_subset, (n, adjmasks(g), 33, 20)


def main(argv=None) -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args(argv)
    if kernels.BACKEND != "cython":
        print("compiled kernels unavailable; only the Python backend will be timed")
    print(f"{'kernel':<26}{'python ms':>12}{'cython ms':>12}{'speedup':>10}")
    for label, fn, call_args in cases():
        times, answers = {}, {}
        backends = ("python", "cython") if kernels.BACKEND == "cython" else ("python",)
        for backend in backends:
            answers[backend] = fn(*call_args, backend=backend)
            runs = timeit.repeat(lambda: fn(*call_args, backend=backend), number=1, repeat=args.repeat)
            times[backend] = min(runs) * 1e3
        if len(set(map(repr, answers.values()))) != 1:
            raise SystemExit(f"{label}: backends disagree")
        py = times["python"]
        cy = times.get("cython")
        if cy is None:
            print(f"{label:<26}{py:>12.2f}{'-':>12}{'-':>10}")
        else:
            print(f"{label:<26}{py:>12.2f}{cy:>12.2f}{py / cy:>9.1f}x")


if __name__ == "__main__":
    main()
