#!/usr/bin/env python3
"""Sweep the dilation factor and tabulate quotient positivity margins.

For each q the script samples fundamental-domain points, records the
scale-relative floor of the Gram spectrum of the quotient form, the
worst deviation of the rank-2 vertical bound from equality, and the
blow-up product min-eigenvalue times fiber norm near the zero section.
The margins should stay strictly positive and the products should stay
pinned at one for every admissible q; values close to |q| = 1 stress the
fundamental domain the hardest.
"""

import argparse

import numpy as np

from hktlab.bundles import get_connection
from hktlab.hermitian import gram, hermitian_pair, qpos_margin
from hktlab.hopf import (fiber_norm2, fundamental_domain_points, hopf_data,
                         omega_tilde_expr, vertical_probe)
from hktlab.total_space import psi, total_space


def sweep_one(ts, q, rng, count, probes):
    h = hopf_data(ts, q)
    ctx = ts.ctx
    mb = 2 * ts.n
    rel_floor = float("inf")
    tight = 0.0
    blowup = 0.0
    for pt in fundamental_domain_points(h, rng, count):
        fr = omega_tilde_expr(h, pt)
        G = gram(ctx, fr)
        scale = max(1.0, float(np.linalg.norm(G, 2)))
        rel_floor = min(rel_floor, qpos_margin(ctx, fr) / scale)
        p = float(psi(ts, pt))
        for _ in range(probes):
            x = vertical_probe(h, rng)
            pair = float(complex(hermitian_pair(ctx, fr, x, x)).real)
            nx = fiber_norm2(h, x)
            tight = max(tight, abs(pair - nx / p) / (nx / p))
        small = list(pt)
        small[4 * ts.n:] = [0.05 * c for c in small[4 * ts.n:]]
        Gv = gram(ctx, omega_tilde_expr(h, small))[mb:, mb:]
        lam = float(np.linalg.eigvalsh(0.5 * (Gv + Gv.conj().T))[0])
        blowup = max(blowup, abs(lam * float(psi(ts, small)) - 1.0))
    return rel_floor, tight, blowup


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--bundle", default="bpst")
    ap.add_argument("--count", type=int, default=40)
    ap.add_argument("--probes", type=int, default=10)
    ap.add_argument("--seed", type=int, default=42)
    ap.add_argument("--scales", type=float, nargs="+",
                    default=[2.0, 4.0, 1.3, 0.7, 0.37, -1.6, -2.0])
    args = ap.parse_args()

    ts = total_space(get_connection(args.bundle))
    rng = np.random.default_rng(args.seed)
    print(f"bundle={args.bundle} count={args.count} probes={args.probes}")
    print(f"{'q':>8}  {'rel floor':>12}  {'rank2 dev':>12}  {'blowup dev':>12}")
    for q in args.scales:
        floor, tight, blow = sweep_one(ts, q, rng, args.count, args.probes)
        print(f"{q:8.2f}  {floor:12.4e}  {tight:12.4e}  {blow:12.4e}")


if __name__ == "__main__":
    main()
