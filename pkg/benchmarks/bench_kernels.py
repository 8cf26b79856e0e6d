"""Compiled vs pure-Python kernels on the polygons the Schur sums and covering tests produce.

    python benchmarks/bench_kernels.py [--pairs 400] [--repeat 3]

Prints per-kernel timings, the speed-up and the largest relative disagreement.
"""

import argparse
import time

import numpy as np

from alphashear import _backend
from alphashear.constants import envelope_peak
from alphashear.covering import build_covering
from alphashear.schur import SchurParams, _U, _Q


def schur_polygons(count, seed=0):
    """B U for random transition matrices of the beta = 2 preset, half of them far off-diagonal."""
    rng = np.random.default_rng(seed)
    prm = SchurParams.preset(2, 8)
    a = prm.alpha
    polys = []
    for _ in range(count):
        n1, n2 = rng.integers(0, 9, 2)
        m1 = rng.integers(-int(np.ceil(2 ** (n1 * (1 - a)))), int(np.ceil(2 ** (n1 * (1 - a)))) + 1)
        m2 = rng.integers(-int(np.ceil(2 ** (n2 * (1 - a)))), int(np.ceil(2 ** (n2 * (1 - a)))) + 1)
        t1 = np.array([[2.0**n1, 0], [m1 * 2 ** (a * n1), 2 ** (a * n1)]])
        t2 = np.array([[2.0**n2, 0], [m2 * 2 ** (a * n2), 2 ** (a * n2)]])
        b = np.linalg.solve(t1, t2)
        polys.append(_U @ b.T)
    return np.array(polys), prm


def covering_polygons(count):
    cov = build_covering(0.5, 8)
    polys = np.array([p.polygons()[0] for p in cov.pieces[1:]])
    idx = np.random.default_rng(1).integers(0, len(polys), (count, 2))
    return polys[idx[:, 0]], polys[idx[:, 1]]


def timed(fn, repeat):
    best = np.inf
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t0)
    return best, out


def rel_diff(a, b):
    a, b = np.asarray(a, float), np.asarray(b, float)
    return float(np.max(np.abs(a - b) / np.maximum(np.abs(b), 1e-300)))


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--pairs", type=int, default=400)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    polys, prm = schur_polygons(args.pairs)
    cstar = envelope_peak(prm.M1, prm.M2)
    radial = np.concatenate([polys[: args.pairs // 2], np.repeat(_Q[None], 4, axis=0)])
    pa, pb = covering_polygons(args.pairs * 20)

    cases = [
        ("separable_integrals", lambda pure: _backend.separable_integrals(polys, prm.M1, prm.M2, prm.K, cstar,
                                                                          1e-7, 0.0, pure)[0], len(polys)),
        ("radial_integrals", lambda pure: _backend.radial_integrals(radial, prm.H, 1e-7, 0.0, pure)[0],
         len(radial)),
        ("sat_intersect", lambda pure: _backend.sat_intersect(pa, pb, pure=pure), len(pa)),
    ]
    print(f"compiled extension available: {_backend._compiled is not None}")
    print(f"{'kernel':22s} {'items':>7s} {'compiled [s]':>13s} {'pure [s]':>10s} {'speed-up':>9s} {'max rel diff':>13s}")
    for name, fn, items in cases:
        tc, oc = timed(lambda: fn(False), args.repeat)
        tp, op = timed(lambda: fn(True), 1)
        if oc.dtype == bool:
            diff = float(np.mean(oc != op))
        else:
            diff = rel_diff(oc, op)
        print(f"{name:22s} {items:7d} {tc:13.4f} {tp:10.4f} {tp / tc:9.1f} {diff:13.2e}")


if __name__ == "__main__":
    main()
