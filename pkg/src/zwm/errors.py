"""Exception and warning types shared across the package."""


class ZwmError(Exception):
    """Base class for all package-specific failures."""


# --- evaluation engine ---

class HeightOutOfRange(ZwmError):
    """Requested ordinate is beyond the validated evaluation regime."""


class PoleAt1(ZwmError):
    """zeta has a pole at s = 1."""


class PoleOfGamma(ZwmError):
    """Gamma factor of chi evaluated at a nonpositive integer."""


class PrecisionNotAttainable(ZwmError):
    """No available method reaches the requested absolute error."""


class SelfCheckFailed(ZwmError):
    """Two independent evaluation routes disagree beyond combined bounds."""


class NearZeroSingularity(ZwmError):
    """|zeta(s)| fell below the configured floor; caller must split panels."""

    def __init__(self, abs_zeta, where=None):
        self.abs_zeta = abs_zeta
        self.where = where
        super().__init__(f"|zeta| = {abs_zeta:.3e} below floor (t = {where})")


class AlphaOutOfRange(ZwmError):
    """Shift alpha outside [0, 1/2)."""


# --- zeros ---

class CertificationFailed(ZwmError):
    """Zero count does not match the smooth-count oracle after refinement."""


class MalformedLine(ZwmError):
    def __init__(self, lineno, content):
        self.lineno = lineno
        super().__init__(f"line {lineno}: cannot parse ordinate from {content!r}")


class NonMonotonic(ZwmError):
    """Ordinates in a zero table must be strictly increasing."""


class UncertifiedZeros(ZwmError):
    """Operation requires a certified zero table."""


# --- quadrature ---

class NonFiniteSample(ZwmError):
    def __init__(self, location):
        self.location = location
        super().__init__(f"integrand not finite at t = {location}")


class SlowDecayDetected(ZwmError):
    """Dyadic tail blocks are not shrinking at the declared decay rate."""


# --- closed forms ---

class UnknownFormula(ZwmError):
    pass


class IdentityViolation(ZwmError):
    def __init__(self, identity, a, detail=""):
        self.identity = identity
        self.a = a
        super().__init__(f"identity {identity} violated at a = {a} {detail}")


# --- arithmetic side ---

class LimitExceeded(ZwmError):
    """Sieve limit above the supported maximum."""


class SieveTooSmall(ZwmError):
    """Requested x exceeds the sieve table."""


class TooManyBreakpoints(ZwmError):
    """Piecewise variance integral would need too many pieces; lower b."""


# --- plancherel ---

class GapExceeded(ZwmError):
    def __init__(self, report):
        self.report = report
        super().__init__(f"relative gap {report.rel_gap:.4f} above tolerance")


# --- warnings ---

class MarginTooSmallWarning(UserWarning):
    """Zero-window margin below the recommended 50; tail estimate degraded."""


class HeuristicTailWarning(UserWarning):
    """A reported tail bound is an empirical envelope, not a proof."""
