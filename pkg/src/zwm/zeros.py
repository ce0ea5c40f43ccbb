"""Locating, certifying, caching and summing over nontrivial-zero ordinates.

Zeros are bracketed as sign changes of the Hardy Z function on a Gram-point
grid (with recursive subdivision where Gram's law fails), refined by batched
bisection, and certified against the smooth-count oracle round(theta/pi + 1)
evaluated at both window ends.

The module also evaluates the Lorentzian kernel sums over a zero table that
drive the explicit-formula side of the moment computations, with an optional
smooth-density correction for out-of-window zeros.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, field

import numpy as np
from scipy.special import lambertw

from . import quadrature, zeta
from .errors import (
    CertificationFailed,
    MalformedLine,
    MarginTooSmallWarning,
    NonMonotonic,
)

TWO_PI = 2.0 * math.pi
ZERO_FILE_MAGIC = "# zwm-zeros v1"
_BISECT_FAST_FLOOR = 2e-3  # below this bracket width, switch to accurate Z


@dataclass(frozen=True)
class ZeroTable:
    """Ascending zero ordinates on [t_lo, t_hi] with a completeness flag."""

    t_lo: float
    t_hi: float
    ordinates: np.ndarray = field(repr=False)
    certified: bool

    def __post_init__(self):
        o = np.asarray(self.ordinates, dtype=float)
        object.__setattr__(self, "ordinates", o)
        if o.size and not np.all(np.diff(o) > 0):
            raise NonMonotonic("ordinates must be strictly increasing")
        if o.size and (o[0] < self.t_lo - 1e-9 or o[-1] > self.t_hi + 1e-9):
            raise ValueError("ordinates outside the declared window")

    @property
    def count(self) -> int:
        return int(self.ordinates.size)

    def in_range(self, lo, hi) -> np.ndarray:
        i = np.searchsorted(self.ordinates, lo, side="left")
        j = np.searchsorted(self.ordinates, hi, side="right")
        return self.ordinates[i:j]


# ---------------------------------------------------------------------------
# counting


def zero_count_main(T: float) -> float:
    """Smooth zero-count main term theta(T)/pi + 1."""
    if T < 10:
        raise ValueError("zero_count_main requires T >= 10")
    return zeta.theta(T) / math.pi + 1.0


def zero_count_coarse(T: float) -> float:
    """Coarse display form (T/2pi) log(T/2pi) - T/2pi."""
    x = T / TWO_PI
    return x * math.log(x) - x


def turing_count(T: float) -> int:
    """Integer zero count N(T) predicted by rounding the smooth main term."""
    return int(round(zero_count_main(T)))


# ---------------------------------------------------------------------------
# Gram points


def gram_points(n_lo: int, n_hi: int) -> np.ndarray:
    """Gram points g_n, theta(g_n) = n pi, for n in [n_lo, n_hi]."""
    n = np.arange(n_lo, n_hi + 1, dtype=float)
    x = (n + 0.875) / math.e
    t = TWO_PI * (n + 0.875) / np.real(lambertw(np.maximum(x, 0.2)))
    t = np.maximum(t, 10.0)
    target = n * math.pi
    for _ in range(8):
        t = t - (zeta.theta(t) - target) / (0.5 * np.log(t / TWO_PI))
        t = np.maximum(t, 7.0)
    return t


# ---------------------------------------------------------------------------
# zero search


def _bisect_batched(lo, hi, z_lo_sign, tol):
    """Refine sign-change brackets by bisection, batched over all zeros."""
    lo = lo.copy()
    hi = hi.copy()
    sgn = z_lo_sign.copy()
    while True:
        width = hi - lo
        active = width > tol
        if not active.any():
            break
        fast = bool(np.max(width[active]) > _BISECT_FAST_FLOOR)
        mid = 0.5 * (lo + hi)
        zm, _ = zeta.hardy_z_row(mid[active], fast=fast)
        ms = np.where(zm >= 0, 1.0, -1.0)
        go_right = ms == sgn[active]
        ia = np.nonzero(active)[0]
        lo[ia[go_right]] = mid[ia[go_right]]
        hi[ia[~go_right]] = mid[ia[~go_right]]
    return 0.5 * (lo + hi)


def find_zeros(t_lo: float, t_hi: float, tol: float = 1e-9) -> ZeroTable:
    """Locate all zero ordinates in [t_lo, t_hi], bisected to tol.

    The count is certified against the smooth-count oracle at both ends;
    Gram intervals that hide zeros (Gram-law violations) are recursively
    subdivided, up to 64 subdivisions, until the counts agree.
    """
    if not (10.0 <= t_lo < t_hi <= zeta.T_MAX):
        raise ValueError(f"window [{t_lo}, {t_hi}] outside [10, {zeta.T_MAX:.0e}]")
    if tol < 1e-10:
        raise ValueError("tol must be >= 1e-10")

    expected = turing_count(t_hi) - turing_count(t_lo)
    n_lo = int(math.ceil(zeta.theta(t_lo) / math.pi)) + 1
    n_hi = int(math.floor(zeta.theta(t_hi) / math.pi)) - 1
    inner = gram_points(n_lo, n_hi) if n_hi >= n_lo else np.empty(0)
    inner = inner[(inner > t_lo + 1e-9) & (inner < t_hi - 1e-9)]
    grid = np.concatenate(([t_lo], inner, [t_hi]))

    zvals, _ = zeta.hardy_z_row(grid, fast=True)
    signs = np.where(zvals >= 0, 1.0, -1.0)
    detected = int(np.sum(signs[1:] != signs[:-1]))
    if detected != expected:
        grid, zvals, signs, detected = _refine_until(grid, zvals, expected)

    if detected != expected:
        raise CertificationFailed(
            f"found {detected} sign changes vs oracle {expected} on "
            f"[{t_lo}, {t_hi}] after 64-fold subdivision")

    chg = np.nonzero(signs[1:] != signs[:-1])[0]
    ordinates = _bisect_batched(grid[chg], grid[chg + 1], signs[chg], tol)
    return ZeroTable(t_lo=t_lo, t_hi=t_hi, ordinates=ordinates, certified=True)


def _refine_until(grid, zvals, expected, max_levels=6):
    """Insert midpoints everywhere until the sign-change count matches."""
    for _ in range(max_levels):
        mids = 0.5 * (grid[1:] + grid[:-1])
        zm, _ = zeta.hardy_z_row(mids, fast=True)
        g2 = np.empty(grid.size + mids.size)
        z2 = np.empty_like(g2)
        g2[0::2] = grid
        g2[1::2] = mids
        z2[0::2] = zvals
        z2[1::2] = zm
        grid, zvals = g2, z2
        signs = np.where(zvals >= 0, 1.0, -1.0)
        detected = int(np.sum(signs[1:] != signs[:-1]))
        if detected == expected:
            return grid, zvals, signs, detected
    signs = np.where(zvals >= 0, 1.0, -1.0)
    return grid, zvals, signs, int(np.sum(signs[1:] != signs[:-1]))


# ---------------------------------------------------------------------------
# persistence (plain text, one ordinate per line, optional header)


def save_zeros(table: ZeroTable, path) -> None:
    with open(path, "w") as fh:
        fh.write(f"{ZERO_FILE_MAGIC} {table.t_lo:.9f} {table.t_hi:.9f} "
                 f"{table.count} {1 if table.certified else 0}\n")
        for g in table.ordinates:
            fh.write(f"{g:.9f}\n")


def load_zeros(path) -> ZeroTable:
    ordinates = []
    header = None
    with open(path) as fh:
        for lineno, line in enumerate(fh, start=1):
            line = line.strip()
            if not line:
                continue
            if line.startswith("#"):
                if lineno == 1 and line.startswith(ZERO_FILE_MAGIC):
                    header = line[len(ZERO_FILE_MAGIC):].split()
                continue
            try:
                ordinates.append(float(line))
            except ValueError:
                raise MalformedLine(lineno, line) from None
    arr = np.asarray(ordinates)
    if arr.size > 1 and not np.all(np.diff(arr) > 0):
        raise NonMonotonic("ordinates in file are not strictly increasing")
    if header is not None:
        t_lo, t_hi = float(header[0]), float(header[1])
        certified = bool(int(header[3])) and int(header[2]) == arr.size
    else:
        t_lo = float(arr[0]) if arr.size else 0.0
        t_hi = float(arr[-1]) if arr.size else 0.0
        certified = False
    return ZeroTable(t_lo=t_lo, t_hi=t_hi, ordinates=arr, certified=certified)


# ---------------------------------------------------------------------------
# kernel sums


def _density(u):
    """Smooth zero density log(u / 2 pi) / 2 pi, clipped at zero."""
    u = np.asarray(u, dtype=float)
    return np.maximum(np.log(np.maximum(u, 6.3) / TWO_PI), 0.0) / TWO_PI


def lorentz_sum(sigma: float, t: float, table: ZeroTable, tail: bool = False,
                margin_warn: float = 50.0) -> float:
    """Sum of (sigma-1/2) / ((sigma-1/2)^2 + (t-gamma)^2) over the table.

    With tail=True the out-of-window contribution (including the mirrored
    negative-ordinate zeros) is added from the smooth density model.
    """
    if sigma <= 0.5:
        raise ValueError("lorentz_sum requires sigma > 1/2")
    d = sigma - 0.5
    if min(t - table.t_lo, table.t_hi - t) < margin_warn:
        warnings.warn("window margin below recommended 50",
                      MarginTooSmallWarning, stacklevel=2)
    g = table.ordinates
    val = float(np.sum(d / (d * d + (t - g) ** 2)))
    if tail:
        val += _lorentz_tail(d, t, table.t_lo, table.t_hi)
    return val


def _lorentz_tail(d, t, lo, hi, tol=1e-9):
    """Density-model kernel mass outside [lo, hi], plus the mirror zeros."""
    gamma1 = 14.0

    def k(u):
        return d * _density(u) / (d * d + (u - t) ** 2)

    def k_mirror(u):
        return d * _density(u) / (d * d + (u + t) ** 2)

    total = quadrature.integrate_tail(k, hi, tol, 2.0).value
    total += quadrature.integrate_tail(k_mirror, gamma1, tol, 2.0).value
    if lo > gamma1:
        total += quadrature.integrate(k, gamma1, lo, tol).value
    return total


def lorentz_sum_row(sigma, ts, table: ZeroTable, window: float = 50.0,
                    tail: bool = True, squared: bool = False):
    """Vectorized kernel sums for an ascending ordinate array ts.

    Sums the Lorentzian kernel (or its square, for the diagonal term) over
    table zeros within +-window of each t; with tail=True adds the smooth
    density estimate of the out-of-window kernel mass (plain kernel only;
    the squared kernel's tail is O(density * d^2 / window^3) and dropped).
    """
    d = sigma - 0.5
    if d <= 0:
        raise ValueError("requires sigma > 1/2")
    ts = np.asarray(ts, dtype=float)
    g = table.ordinates
    out = np.empty(ts.shape)
    i0 = np.searchsorted(g, ts - window, side="left")
    i1 = np.searchsorted(g, ts + window, side="right")
    # group points sharing the same zero slice to keep broadcasting tight
    start = 0
    while start < ts.size:
        stop = start + 1
        while stop < ts.size and i0[stop] == i0[start] and i1[stop] == i1[start]:
            stop += 1
        gs = g[i0[start]:i1[start]]
        dt = ts[start:stop, None] - gs[None, :]
        ker = d / (d * d + dt * dt)
        if squared:
            ker = ker * ker
        out[start:stop] = ker.sum(axis=1)
        start = stop
    if tail and not squared:
        out += _density(ts) * (math.pi - 2.0 * np.arctan(window / d))
    return out


def explicit_formula_residual(sigma: float, t: float, table: ZeroTable) -> float:
    """Re zeta'/zeta(sigma+it) + (1/2) log(t/2pi) - kernel sum (with tail).

    Small (O(1/t) plus density-model error) when the table is complete
    around t; the workhorse consistency check between the evaluation engine
    and the zero table.
    """
    ld = zeta.log_deriv(complex(sigma, t), target_abs_err=1e-9)
    ker = lorentz_sum(sigma, t, table, tail=True)
    return float(ld.value.real) + 0.5 * math.log(t / TWO_PI) - ker
