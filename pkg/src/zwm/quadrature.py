"""Adaptive Gauss-Kronrod integration with caller-supplied breakpoints.

The integrand callable must be vectorized: it receives a numpy array of
abscissae and returns the values as an array.  Panels are evaluated in
batches so a single callable invocation covers many panels; this is what
keeps the zeta-line integrands affordable.
"""

from __future__ import annotations

import heapq
import math
from dataclasses import dataclass

import numpy as np

from ._frozen import G7_WEIGHTS, GK15_NODES, GK15_WEIGHTS
from .errors import NonFiniteSample, SlowDecayDetected

_NODES = np.asarray(GK15_NODES)
_WK = np.asarray(GK15_WEIGHTS)
_WG = np.asarray(G7_WEIGHTS)


@dataclass(frozen=True)
class QuadResult:
    value: float
    abs_err_est: float
    n_evals: int
    max_depth_hit: bool

    def __add__(self, other):
        return QuadResult(self.value + other.value,
                          self.abs_err_est + other.abs_err_est,
                          self.n_evals + other.n_evals,
                          self.max_depth_hit or other.max_depth_hit)


def _eval_panels(f, los, his):
    """Apply the GK15 rule to a batch of panels; returns (values, errors)."""
    mids = 0.5 * (los + his)
    halfs = 0.5 * (his - los)
    xs = mids[:, None] + halfs[:, None] * _NODES[None, :]
    ys = np.asarray(f(xs.ravel()), dtype=float).reshape(xs.shape)
    bad = ~np.isfinite(ys)
    if bad.any():
        raise NonFiniteSample(float(xs[bad][0]))
    vals = halfs * (ys @ _WK)
    gauss = halfs * (ys @ _WG)
    return vals, np.abs(vals - gauss)


def integrate(f, lo, hi, tol_abs, breakpoints=(), max_depth=40,
              max_evals=6_000_000, batch=128) -> QuadResult:
    """Integrate f over [lo, hi] with panels pre-split at breakpoints.

    Bisects the worst panels until the summed error estimate drops below
    tol_abs, panel depth reaches max_depth, or the evaluation budget is
    exhausted; the last two set max_depth_hit and the estimate stays honest.
    """
    if not lo < hi:
        raise ValueError(f"need lo < hi, got [{lo}, {hi}]")
    if tol_abs <= 0:
        raise ValueError("tol_abs must be positive")
    pts = [lo] + sorted(float(b) for b in breakpoints if lo < b < hi) + [hi]
    edges = [pts[0]]
    for q in pts[1:]:
        if q - edges[-1] > 1e-12 * max(1.0, abs(q)):
            edges.append(q)
    if len(edges) < 2:
        edges = [lo, hi]

    los = np.asarray(edges[:-1])
    his = np.asarray(edges[1:])
    vals, errs = _eval_panels(f, los, his)
    n_evals = 15 * los.size

    # heap entries: (-err, seq, lo, hi, val, err, depth)
    heap = []
    seq = 0
    for i in range(los.size):
        heap.append((-errs[i], seq, los[i], his[i], vals[i], errs[i], 0))
        seq += 1
    heapq.heapify(heap)
    total_err = float(np.sum(errs))
    depth_hit = False

    while total_err > tol_abs and heap:
        group = []
        while heap and len(group) < batch and total_err > tol_abs:
            item = heapq.heappop(heap)
            if item[6] >= max_depth:
                depth_hit = True
                group.append((item, False))
                continue
            group.append((item, True))
        splittable = [it for it, ok in group if ok]
        keep = [it for it, ok in group if not ok]
        if not splittable or n_evals >= max_evals:
            for it, _ in group:
                heapq.heappush(heap, it)
            depth_hit = depth_hit or n_evals >= max_evals
            break
        clos, chis = [], []
        for _, _, plo, phi, _, _, _ in splittable:
            mid = 0.5 * (plo + phi)
            clos += [plo, mid]
            chis += [mid, phi]
        cv, ce = _eval_panels(f, np.asarray(clos), np.asarray(chis))
        n_evals += 15 * len(clos)
        for j, (perr, _, plo, phi, pval, perr_abs, depth) in enumerate(splittable):
            total_err -= perr_abs
            for k in (2 * j, 2 * j + 1):
                heapq.heappush(heap, (-ce[k], seq, clos[k], chis[k], cv[k],
                                      ce[k], depth + 1))
                seq += 1
                total_err += ce[k]
        for it in keep:
            heapq.heappush(heap, it)

    # deterministic assembly: sum panels in interval order
    panels = sorted(heap, key=lambda it: it[2])
    value = float(sum(it[4] for it in panels))
    err = float(sum(it[5] for it in panels))
    return QuadResult(value, err, n_evals, depth_hit)


def integrate_tail(f, lo, tol_abs, decay_exponent, max_blocks=60) -> QuadResult:
    """Integrate f over [lo, infinity) by dyadic blocks.

    The caller declares that f is eventually bounded by C / t^decay_exponent
    with decay_exponent >= 2; successive dyadic blocks must then shrink by
    about 2^(1 - decay).  Summation stops once a block estimate falls below
    tol_abs / 4; the geometric extrapolation of the remaining blocks is added
    to the error estimate as the analytic tail bound.
    """
    if decay_exponent < 2:
        raise ValueError("decay_exponent must be >= 2")
    ratio = 2.0 ** (1.0 - decay_exponent)
    total = QuadResult(0.0, 0.0, 0, False)
    prev = None
    grew = 0
    last = 0.0
    for j in range(max_blocks):
        a, b = lo * 2.0 ** j, lo * 2.0 ** (j + 1)
        blk = integrate(f, a, b, tol_abs / 2.0 ** (j + 2))
        total = total + blk
        last = abs(blk.value)
        if prev is not None and prev > 0 and last > 0.75 * prev and j >= 2:
            grew += 1
            if grew >= 2:
                raise SlowDecayDetected(
                    f"block [{a:.3g}, {b:.3g}] = {last:.3e} vs previous {prev:.3e}")
        else:
            grew = 0
        prev = last
        if last < tol_abs / 4.0:
            break
    tail_bound = last * ratio / (1.0 - ratio)
    return QuadResult(total.value, total.abs_err_est + tail_bound,
                      total.n_evals, total.max_depth_hit)
