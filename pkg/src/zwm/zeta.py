"""Evaluators for zeta and friends in the critical strip.

Two complementary evaluation routes are implemented:

* an Euler-Maclaurin route (``accurate`` tier): O(t) cost, near machine
  precision, with a computable remainder bound; usable anywhere in
  0 < sigma <= 2 (and on the real axis down to sigma = 0), for t up to 1e6;

* a corrected main-sum route (``fast`` tier): both sums of the functional
  equation cut at N = floor(sqrt(t / 2 pi)) plus the leading saddle-point
  correction term, O(sqrt(t)) cost, absolute error O(t^{-(sigma+1)/2}) with
  an empirically calibrated constant.

Everything is vectorized over the ordinate t; the scalar public operations
wrap the vector core.  All evaluators satisfy F(conj s) = conj F(s) exactly
because negative ordinates are routed through conjugation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.special import bernoulli as _bernoulli_row
from scipy.special import digamma as _digamma
from scipy.special import loggamma as _loggamma

from . import _frozen
from .errors import (
    AlphaOutOfRange,
    HeightOutOfRange,
    NearZeroSingularity,
    PoleAt1,
    PoleOfGamma,
    PrecisionNotAttainable,
    SelfCheckFailed,
)

TWO_PI = 2.0 * math.pi
T_MAX = 1.0e6          # validated height range
T_FAST_MIN = 256.0     # below this the accurate tier is used even in fast rows
_EM_K = 14             # Bernoulli correction terms in the Euler-Maclaurin tail

# fast-tier absolute error bound: C * (2 pi / t)^{(sigma+1)/2} for the value
# and an extra log t factor for the derivative.  The constants are measured
# against the Euler-Maclaurin route on a (sigma, t) grid covering
# [0.05, 0.95] x [256, 5e4] by scripts/calibrate_fast_tier.py and carry a
# safety factor of five on the observed maxima.
FAST_ERR_CONST = 0.46
FAST_ERR_CONST_DERIV = 0.19

_B2K = _bernoulli_row(2 * _EM_K + 2)[::2]  # B_0, B_2, ..., B_{2K+2}


# ---------------------------------------------------------------------------
# domain types


@dataclass(frozen=True)
class ComplexPoint:
    """A point s = sigma + i t."""

    sigma: float
    t: float

    def __post_init__(self):
        if not (math.isfinite(self.sigma) and math.isfinite(self.t)):
            raise ValueError("ComplexPoint requires finite coordinates")

    @property
    def s(self) -> complex:
        return complex(self.sigma, self.t)


@dataclass(frozen=True)
class EvalResult:
    value: complex
    abs_error_bound: float
    terms_used: int


@dataclass(frozen=True)
class NearOnePair:
    logderiv_at_1_plus_alpha: float
    zeta_at_1_minus_alpha: float
    alpha: float


def _as_s(point) -> complex:
    if isinstance(point, ComplexPoint):
        return point.s
    return complex(point)


# ---------------------------------------------------------------------------
# theta and chi


def theta_loggamma(t):
    """Riemann-Siegel theta via the exact log-Gamma route."""
    t = np.asarray(t, dtype=float)
    z = 0.25 + 0.5j * t
    out = np.imag(_loggamma(z)) - 0.5 * t * math.log(math.pi)
    return out if out.ndim else float(out)


def theta(t):
    """Riemann-Siegel theta: asymptotic series for |t| >= 10, log-Gamma below."""
    t = np.asarray(t, dtype=float)
    scalar = t.ndim == 0
    t = np.atleast_1d(t)
    out = np.empty_like(t)
    small = np.abs(t) < 10.0
    if small.any():
        out[small] = theta_loggamma(t[small])
    big = ~small
    if big.any():
        tb = t[big]
        at = np.abs(tb)
        val = 0.5 * at * np.log(at / TWO_PI) - 0.5 * at - math.pi / 8.0
        for n in range(1, 6):
            coef = (1.0 - 2.0 ** (1 - 2 * n)) * abs(_B2K[n]) / (4 * n * (2 * n - 1))
            val += coef / at ** (2 * n - 1)
        out[big] = np.sign(tb) * val
    return float(out[0]) if scalar else out


def theta_deriv(t):
    """theta'(t) = (1/2) log(t / 2 pi) + O(1/t^2)."""
    t = np.asarray(t, dtype=float)
    return 0.5 * np.log(np.abs(t) / TWO_PI) + 1.0 / (48.0 * t * t) * (-1.0)


def _log_sin(w):
    """log sin(w) for complex array w with Im w >= 0, overflow-safe."""
    w = np.asarray(w, dtype=complex)
    out = np.empty_like(w)
    hi = w.imag > 300.0
    lo = ~hi
    if lo.any():
        out[lo] = np.log(np.sin(w[lo]))
    if hi.any():
        wh = w[hi]
        out[hi] = -1j * wh + 1j * math.pi / 2 - math.log(2.0) + np.log1p(-np.exp(2j * wh))
    return out


def _chi_log(sigma, t):
    """log chi(sigma + i t) for t >= 0 (array), up to multiples of 2 pi i."""
    s = sigma + 1j * np.asarray(t, dtype=float)
    return (s * math.log(2.0) + (s - 1.0) * math.log(math.pi)
            + _log_sin(0.5 * math.pi * s) + _loggamma(1.0 - s))


def chi(point) -> EvalResult:
    """chi(s) = 2^s pi^{s-1} sin(pi s / 2) Gamma(1 - s)."""
    s = _as_s(point)
    one_minus = 1.0 - s
    if one_minus.imag == 0.0 and one_minus.real <= 0.0 and one_minus.real == int(one_minus.real):
        raise PoleOfGamma(f"Gamma pole at 1 - s = {one_minus}")
    conj = s.imag < 0
    if conj:
        s = s.conjugate()
    val = complex(np.exp(_chi_log(s.real, np.array([s.imag]))[0]))
    if conj:
        val = val.conjugate()
    # error: a few ulp on each log factor, scaled by |chi|
    err = abs(val) * 1e-13 * (1.0 + 0.1 * math.log1p(abs(s)))
    return EvalResult(val, err, 1)


def chi_log_deriv(sigma, t):
    """chi'/chi (sigma + i t) for array t >= 0."""
    s = sigma + 1j * np.asarray(t, dtype=float)
    w = 0.5 * math.pi * s
    # cot(w), overflow-safe for large Im w
    out = np.empty_like(s)
    hi = w.imag > 300.0
    lo = ~hi
    if lo.any():
        out[lo] = np.cos(w[lo]) / np.sin(w[lo])
    if hi.any():
        q = np.exp(2j * w[hi])
        out[hi] = -1j * (1.0 + q) / (1.0 - q)
    return (math.log(2.0) + math.log(math.pi) + 0.5 * math.pi * out
            - _digamma(1.0 - s))


# ---------------------------------------------------------------------------
# Euler-Maclaurin route


def _em_bound_logs(abs_s, sigma, N, K=_EM_K):
    """log of the remainder bound and of its derivative counterpart."""
    m = 2 * K + 1
    top = math.log(abs_s + m + 1.0) * m + math.log(4.0) - m * math.log(TWO_PI)
    base = top - (sigma + 2 * K) * math.log(N) - math.log(sigma + 2 * K)
    # derivative bound: harmonic-sum factor plus the log N weight
    h_ub = m / max(1.0, abs_s)
    dlog = base + math.log(h_ub + math.log(N) + 1.0 / (sigma + 2 * K) + 1.0)
    return base, dlog


def _em_pick_N(tmax, sigma_min, target):
    abs_s = math.hypot(2.0, tmax)
    N = max(24, int(0.45 * tmax) + 1)
    for _ in range(60):
        b, _ = _em_bound_logs(abs_s, sigma_min, N)
        if b <= math.log(max(target, 1e-300)) - math.log(3.0):
            return N
        N = int(N * 1.35) + 8
    raise PrecisionNotAttainable(
        f"Euler-Maclaurin cannot reach {target:.2e} at t = {tmax:.3g}")


def _em_eval_grid(sigma, t, want_deriv, target=1e-13):
    """Euler-Maclaurin zeta (and zeta') on one sigma line for array t >= 0.

    Returns (z, zp, err, errp, N) where zp/errp are None unless requested.
    """
    t = np.asarray(t, dtype=float)
    tmax = float(t.max()) if t.size else 0.0
    N = _em_pick_N(tmax, min(sigma, 1.0) if sigma > 0 else 0.05, target)
    n = np.arange(1, N, dtype=float)
    logn = np.log(n)
    s = sigma + 1j * t

    z = np.zeros(t.shape, dtype=complex)
    zp = np.zeros(t.shape, dtype=complex) if want_deriv else None

    # chunk the (t x n) phase matrix to bound memory
    max_cells = 4_000_000
    rows = max(1, max_cells // max(1, N))
    wmain = np.exp(-sigma * logn)
    for i in range(0, t.size, rows):
        sl = slice(i, min(i + rows, t.size))
        phases = np.exp((-1j) * np.outer(t[sl], logn))
        z[sl] = phases @ wmain
        if want_deriv:
            zp[sl] = phases @ (-logn * wmain)

    logN = math.log(N)
    Npow = np.exp((1.0 - s) * logN)  # N^{1-s}
    NpowS = np.exp(-s * logN)        # N^{-s}
    sm1 = s - 1.0
    z += Npow / sm1 + 0.5 * NpowS
    if want_deriv:
        zp += -logN * Npow / sm1 - Npow / sm1**2 - 0.5 * logN * NpowS

    # Bernoulli tail: T_k = B_{2k}/(2k)! * (s)_{2k-1} * N^{-s-2k+1}
    poch = s.copy()                       # (s)_1 and its s-derivative
    dpoch = np.ones_like(s) if want_deriv else None
    fac2k = 2.0                           # (2k)!
    scale = NpowS / N                     # N^{-s-1}
    for k in range(1, _EM_K + 1):
        coef = _B2K[k] / fac2k
        z += coef * poch * scale
        if want_deriv:
            zp += coef * scale * (dpoch - logN * poch)
        # advance to k+1
        f1, f2 = s + (2 * k - 1), s + 2 * k
        if want_deriv:
            dpoch = dpoch * f1 * f2 + poch * (f1 + f2)
        poch = poch * f1 * f2
        fac2k *= (2 * k + 1) * (2 * k + 2)
        scale = scale / (N * N)

    abs_s = math.hypot(sigma, tmax)
    b, db = _em_bound_logs(abs_s, max(sigma, 0.05), N)
    # roundoff: phase arguments t log n are rounded once at size ~ t log N
    rnd = 8e-16 * (1.0 + tmax * logN)
    err = math.exp(min(b, 700.0)) + rnd
    errp = math.exp(min(db, 700.0)) + rnd * (logN + 1.0) if want_deriv else None
    return z, zp, err, errp, N


# ---------------------------------------------------------------------------
# corrected main-sum route (fast tier)


def _psi_profile(p, deriv=False):
    """Remainder profile Psi(p) = cos(2 pi (p^2 - p - 1/16)) / cos(2 pi p).

    Removable singularities at p = 1/4 and 3/4 are patched with frozen
    Taylor expansions.  Returns Psi(p) or Psi'(p).
    """
    p = np.asarray(p, dtype=float)
    den = np.cos(TWO_PI * p)
    out = np.empty_like(p)
    near_q = np.abs(p - 0.25) < 1e-2
    near_tq = np.abs(p - 0.75) < 1e-2
    ok = ~(near_q | near_tq)
    if ok.any():
        ph = TWO_PI * (p[ok] ** 2 - p[ok] - 0.0625)
        if not deriv:
            out[ok] = np.cos(ph) / den[ok]
        else:
            num = np.cos(ph)
            dnum = -TWO_PI * (2 * p[ok] - 1.0) * np.sin(ph)
            dden = -TWO_PI * np.sin(TWO_PI * p[ok])
            out[ok] = (dnum * den[ok] - num * dden) / den[ok] ** 2
    for mask, p0, coeffs in ((near_q, 0.25, _frozen.RS_PSI_QUARTER),
                             (near_tq, 0.75, _frozen.RS_PSI_THREEQ)):
        if mask.any():
            h = p[mask] - p0
            if not deriv:
                acc = np.zeros_like(h)
                for c in reversed(coeffs):
                    acc = acc * h + c
            else:
                acc = np.zeros_like(h)
                for j, c in reversed(list(enumerate(coeffs))):
                    if j == 0:
                        continue
                    acc = acc * h + j * c
            out[mask] = acc
    return out


def fast_err_bound(sigma, t, deriv=False):
    """Calibrated absolute error bound of the fast tier."""
    t = np.asarray(t, dtype=float)
    base = FAST_ERR_CONST * (TWO_PI / t) ** (0.5 * (sigma + 1.0))
    if deriv:
        return FAST_ERR_CONST_DERIV * base * np.log(t)
    return base


def _afe_eval_grid(sigma, t, want_deriv):
    """Corrected two-sum evaluation on one sigma line, t >= T_FAST_MIN array."""
    t = np.asarray(t, dtype=float)
    a = np.sqrt(t / TWO_PI)
    N = np.floor(a).astype(int)
    p = a - N
    Nmax = int(N.max())
    n = np.arange(1, Nmax + 1, dtype=float)
    logn = np.log(n)
    mask = n[None, :] <= N[:, None]

    z = np.zeros(t.shape, dtype=complex)
    zp = np.zeros(t.shape, dtype=complex) if want_deriv else None
    chi_l = np.exp(_chi_log(sigma, t))
    chid = chi_log_deriv(sigma, t) if want_deriv else None

    max_cells = 4_000_000
    rows = max(1, max_cells // max(1, Nmax))
    wmain = np.exp(-sigma * logn)
    wsec = np.exp((sigma - 1.0) * logn)
    for i in range(0, t.size, rows):
        sl = slice(i, min(i + rows, t.size))
        ph = np.exp((-1j) * np.outer(t[sl], logn)) * mask[sl]
        main = ph @ wmain
        sec = np.conj(ph @ wsec)
        z[sl] = main + chi_l[sl] * sec
        if want_deriv:
            dmain = ph @ (-logn * wmain)
            dsec = np.conj(ph @ (logn * wsec))
            zp[sl] = dmain + chi_l[sl] * (chid[sl] * sec + dsec)

    th = theta(t)
    sign = np.where(N % 2 == 1, 1.0, -1.0)
    pref = sign * (TWO_PI / t) ** (0.5 * sigma) * np.exp(-1j * th)
    corr = pref * _psi_profile(p)
    z += corr
    if want_deriv:
        thp = 0.5 * np.log(t / TWO_PI)
        dcorr = corr * (-thp + 0.5j * sigma / t)
        dcorr += pref * _psi_profile(p, deriv=True) * (-1j) / (2.0 * np.sqrt(TWO_PI * t))
        zp += dcorr

    err = fast_err_bound(sigma, t)
    errp = fast_err_bound(sigma, t, deriv=True) if want_deriv else None
    return z, zp, err, errp, Nmax


# ---------------------------------------------------------------------------
# row API (vector evaluation along one sigma line, t > 0)


def eval_line(sigma, t, want_deriv=False, fast=True, target=1e-12):
    """Evaluate zeta (and optionally zeta') at sigma + i t for an array t > 0.

    Returns (z, zp, err, errp) with err/errp per-point absolute bounds.
    The fast tier handles t >= T_FAST_MIN when its calibrated bound is
    acceptable; everything else goes through Euler-Maclaurin.
    """
    t = np.asarray(t, dtype=float)
    if t.size == 0:
        e = np.zeros(0)
        return e.astype(complex), e.astype(complex) if want_deriv else None, e, e
    if float(t.max()) > T_MAX:
        raise HeightOutOfRange(f"t = {t.max():.3g} beyond validated range {T_MAX:.0e}")
    if np.any(t < 0):
        raise ValueError("eval_line requires t >= 0; use conjugation for t < 0")

    z = np.empty(t.shape, dtype=complex)
    zp = np.empty(t.shape, dtype=complex) if want_deriv else None
    err = np.empty(t.shape)
    errp = np.empty(t.shape) if want_deriv else None

    use_fast = fast and (0.05 <= sigma <= 0.95)
    fast_mask = (t >= T_FAST_MIN) if use_fast else np.zeros(t.shape, dtype=bool)
    slow_mask = ~fast_mask

    if fast_mask.any():
        idx = np.nonzero(fast_mask)[0]
        order = np.argsort(t[idx])
        idx = idx[order]
        # chunk by height so the shared main-sum length fits the local regime
        chunks = np.array_split(idx, max(1, idx.size // 4096 + 1))
        for ch in chunks:
            zc, zpc, ec, epc, _ = _afe_eval_grid(sigma, t[ch], want_deriv)
            z[ch] = zc
            err[ch] = ec
            if want_deriv:
                zp[ch] = zpc
                errp[ch] = epc
    if slow_mask.any():
        idx = np.nonzero(slow_mask)[0]
        order = np.argsort(t[idx])
        idx = idx[order]
        chunks = [ch for ch in np.array_split(idx, max(1, idx.size // 2048 + 1))
                  if ch.size]
        for ch in chunks:
            zc, zpc, ec, epc, _ = _em_eval_grid(sigma, t[ch], want_deriv, target)
            z[ch] = zc
            err[ch] = ec
            if want_deriv:
                zp[ch] = zpc
                errp[ch] = epc
    return z, zp, err, errp


# ---------------------------------------------------------------------------
# scalar public operations


def _validate_point(s: complex):
    if not (math.isfinite(s.real) and math.isfinite(s.imag)):
        raise ValueError("s must be finite")
    if abs(s.imag) > T_MAX:
        raise HeightOutOfRange(f"|t| = {abs(s.imag):.3g} beyond {T_MAX:.0e}")
    if s == 1.0:
        raise PoleAt1("zeta(1) is a pole")
    if s.imag == 0.0:
        if s.real <= 0.0 and not (s.real > -0.5):
            raise ValueError("real-axis evaluation supported only for sigma > -1/2")
    elif not (0.0 < s.real <= 2.0):
        raise ValueError(f"sigma = {s.real} outside (0, 2]")


def zeta(point, target_abs_err: float = 1e-12) -> EvalResult:
    """zeta(s) with a certified absolute error bound <= target_abs_err."""
    if target_abs_err <= 0:
        raise ValueError("target_abs_err must be positive")
    s = _as_s(point)
    _validate_point(s)
    conj = s.imag < 0
    if conj:
        s = s.conjugate()
    t = s.imag
    if t >= T_FAST_MIN and 0.05 <= s.real <= 0.95 and \
            float(fast_err_bound(s.real, t)) <= target_abs_err:
        z, _, err, _, nterms = _afe_eval_grid(s.real, np.array([t]), False)
        val, bound = complex(z[0]), float(err if np.isscalar(err) else err[0])
    else:
        z, _, err, _, nterms = _em_eval_grid(s.real, np.array([t]), False,
                                             target_abs_err)
        val, bound = complex(z[0]), float(err)
    if bound > target_abs_err:
        raise PrecisionNotAttainable(
            f"bound {bound:.2e} above target {target_abs_err:.2e} at s = {s}")
    if conj:
        val = val.conjugate()
    return EvalResult(val, bound, nterms)


def zeta_prime(point, target_abs_err: float = 1e-9, self_check: bool = False) -> EvalResult:
    """zeta'(s) via analytically differentiated sums.

    With self_check=True an independent Cauchy-circle differentiation
    (radius 1e-3, 32 nodes) must agree within combined bounds.
    """
    if target_abs_err <= 0:
        raise ValueError("target_abs_err must be positive")
    s = _as_s(point)
    _validate_point(s)
    conj = s.imag < 0
    if conj:
        s = s.conjugate()
    t = s.imag
    if t >= T_FAST_MIN and 0.05 <= s.real <= 0.95 and \
            float(fast_err_bound(s.real, t, deriv=True)) <= target_abs_err:
        _, zp, _, errp, nterms = _afe_eval_grid(s.real, np.array([t]), True)
        val, bound = complex(zp[0]), float(errp if np.isscalar(errp) else errp[0])
    else:
        _, zp, _, errp, nterms = _em_eval_grid(s.real, np.array([t]), True,
                                               target_abs_err / 50.0)
        val, bound = complex(zp[0]), float(errp)
    if bound > target_abs_err:
        raise PrecisionNotAttainable(
            f"bound {bound:.2e} above target {target_abs_err:.2e} at s = {s}")
    if self_check:
        other, obound = _cauchy_circle_deriv(s)
        if abs(val - other) > bound + obound:
            raise SelfCheckFailed(
                f"derivative routes differ by {abs(val - other):.3e} "
                f"> {bound + obound:.3e} at s = {s}")
    if conj:
        val = val.conjugate()
    return EvalResult(val, bound, nterms)


def _cauchy_circle_deriv(s: complex, radius: float = 1e-3, nodes: int = 32):
    """zeta'(s) = (1/r) * mean_j zeta(s + r e^{i phi_j}) e^{-i phi_j}."""
    phis = TWO_PI * np.arange(nodes) / nodes
    acc = 0.0 + 0.0j
    emax = 0.0
    for phi in phis:
        zs = s + radius * complex(math.cos(phi), math.sin(phi))
        r = zeta(zs, target_abs_err=1e-13)
        acc += r.value * complex(math.cos(phi), -math.sin(phi))
        emax = max(emax, r.abs_error_bound)
    val = acc / (nodes * radius)
    # node evaluation error amplified by 1/r; series truncation is negligible
    return val, emax / radius + 1e-12 * abs(val)


def log_deriv(point, target_abs_err: float = 1e-8, floor: float = 1e-14) -> EvalResult:
    """zeta'/zeta(s) with propagated error bound.

    Raises NearZeroSingularity when |zeta(s)| is at or below the floor so
    that quadrature callers can split the offending panel.
    """
    s = _as_s(point)
    z = zeta(point, target_abs_err=min(1e-12, target_abs_err))
    if abs(z.value) <= floor:
        raise NearZeroSingularity(abs(z.value), where=s.imag)
    zp = zeta_prime(point, target_abs_err=max(1e-12, target_abs_err * abs(z.value)))
    val = zp.value / z.value
    bound = (zp.abs_error_bound + abs(val) * z.abs_error_bound) / abs(z.value)
    return EvalResult(val, bound, z.terms_used + zp.terms_used)


def hardy_z(t, target_abs_err: float = 1e-10) -> float:
    """Hardy Z(t) = Re(e^{i theta(t)} zeta(1/2 + i t))."""
    tt = float(t)
    r = zeta(complex(0.5, abs(tt)), target_abs_err=target_abs_err)
    val = (complex(math.cos(theta(abs(tt))), math.sin(theta(abs(tt)))) * r.value).real
    return val


def hardy_z_row(t, fast=True):
    """Vectorized Hardy Z on an ordinate array; returns (Z, abs error bound)."""
    t = np.asarray(t, dtype=float)
    z, _, err, _ = eval_line(0.5, t, want_deriv=False, fast=fast)
    rot = np.exp(1j * theta(t))
    return (rot * z).real, err


def near_one(alpha: float) -> NearOnePair:
    """(zeta'/zeta)(1 + alpha) and zeta(1 - alpha) for 0 <= alpha < 1/2.

    Below |alpha| = 1/64 both values come from the frozen Laurent tables
    around s = 1 (Stieltjes constants), which keeps the downstream smooth
    main-term combination cancellation-free.
    """
    if not (0.0 <= alpha < 0.5):
        raise AlphaOutOfRange(f"alpha = {alpha} outside [0, 1/2)")
    if alpha == 0.0:
        raise AlphaOutOfRange("alpha = 0 is the double pole; use the combined branch")
    if alpha < 1.0 / 64.0:
        ld = -1.0 / alpha + _poly(_frozen.LOGDERIV_NEAR_ONE, alpha)
        zm = -1.0 / alpha + _poly(_frozen.ZETA_ONE_MINUS, alpha)
        return NearOnePair(ld, zm, alpha)
    z1p, zp1p, _, _ = eval_line(1.0 + alpha, np.array([0.0]), want_deriv=True,
                                fast=False, target=1e-14)
    zm1, _, _, _ = eval_line(1.0 - alpha, np.array([0.0]), fast=False, target=1e-14)
    return NearOnePair(float(zp1p[0].real / z1p[0].real), float(zm1[0].real), alpha)


def _poly(coeffs, x):
    acc = 0.0
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc
