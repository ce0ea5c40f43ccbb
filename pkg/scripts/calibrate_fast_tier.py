#!/usr/bin/env python3
"""Measure the fast-tier error constant against the Euler-Maclaurin route.

Sweeps a (sigma, t) grid covering the regimes the moment integrals touch,
prints the maximum of |fast - accurate| / (2 pi / t)^{(sigma+1)/2} for the
value and the same with an extra 1/log t for the derivative.  The constants
frozen in zwm.zeta carry a safety factor on top of these maxima.
"""

import sys

sys.path.insert(0, "src")

import numpy as np

from zwm import zeta as Z

TWO_PI = 2 * np.pi


def main():
    rng = np.random.default_rng(7)
    worst = 0.0
    worst_d = 0.0
    rows = []
    for t0 in [256, 400, 700, 1200, 2000, 3500, 6000, 10000, 18000, 30000, 50000]:
        for sigma in [0.05, 0.2, 0.35, 0.5, 0.65, 0.8, 0.95]:
            ts = t0 * (1.0 + rng.uniform(0, 0.08, size=12))
            fz, fzp, _, _, _ = Z._afe_eval_grid(sigma, ts, True)
            az, azp, aerr, aderr, _ = Z._em_eval_grid(sigma, ts, True, 1e-13)
            scale = (TWO_PI / ts) ** (0.5 * (sigma + 1.0))
            c = np.abs(fz - az) / scale
            cd = np.abs(fzp - azp) / (scale * np.log(ts))
            worst = max(worst, float(c.max()))
            worst_d = max(worst_d, float(cd.max()))
            rows.append((t0, sigma, float(c.max()), float(cd.max())))
    for t0, sigma, c, cd in rows:
        print(f"t~{t0:>6}  sigma={sigma:4.2f}  C={c: .4e}  C_deriv={cd: .4e}")
    print(f"\nmax C        = {worst:.4e}")
    print(f"max C_deriv  = {worst_d:.4e}")
    print("suggested frozen constants (x5 safety):",
          f"FAST_ERR_CONST = {5*worst:.3f}", f"FAST_ERR_CONST_DERIV = {5*worst_d:.3f}")


if __name__ == "__main__":
    main()
