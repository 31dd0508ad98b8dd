"""Scalar numerical kernels: adaptive quadrature and bracketed root finding.

These are deliberately small and self-contained so the wave-curve code can
state exactly what accuracy it gets. The closed-form velocity-jump helpers at
the bottom double as independent test oracles for the quadrature path.
"""

from __future__ import annotations

import heapq
import math
from dataclasses import dataclass
from typing import Callable

from .errors import AccuracyError, BracketError, DomainError

_EPS = 2.220446049250313e-16

# 15-point Kronrod extension of the 7-point Gauss rule (positive half).
_XGK = (
    0.991455371120813,
    0.949107912342759,
    0.864864423359769,
    0.741531185599394,
    0.586087235467691,
    0.405845151377397,
    0.207784955007898,
    0.0,
)
_WGK = (
    0.022935322010529,
    0.063092092629979,
    0.104790010322250,
    0.140653259715525,
    0.169004726639267,
    0.190350578064785,
    0.204432940075298,
    0.209482141084728,
)
# Gauss-7 weights, paired with the odd-indexed Kronrod abscissae.
_WG = (
    0.129484966168870,
    0.279705391489277,
    0.381830050505119,
    0.417959183673469,
)


@dataclass(frozen=True)
class ToleranceConfig:
    """Accuracy knobs for the scalar kernels.

    ``max_iterations`` bounds bisection steps for roots and subdivision depth
    for quadrature.
    """

    abs_tol: float = 1e-12
    rel_tol: float = 1e-10
    max_iterations: int = 200

    def __post_init__(self):
        floor = 10.0 * _EPS
        if not (self.abs_tol >= floor and self.rel_tol >= floor):
            raise DomainError(f"tolerances must be >= {floor}")
        if self.max_iterations < 1:
            raise DomainError("max_iterations must be positive")


DEFAULT_ROOT_TOL = ToleranceConfig()
DEFAULT_QUAD_TOL = ToleranceConfig(max_iterations=60)


def _gauss_kronrod(f: Callable[[float], float], a: float, b: float) -> tuple[float, float]:
    """Kronrod-15 estimate of the integral over [a, b] and |K15 - G7| error."""
    c = 0.5 * (a + b)
    h = 0.5 * (b - a)
    fc = f(c)
    kron = _WGK[7] * fc
    gauss = _WG[3] * fc
    for i in range(7):
        x = h * _XGK[i]
        fsum = f(c - x) + f(c + x)
        kron += _WGK[i] * fsum
        if i % 2 == 1:
            gauss += _WG[i // 2] * fsum
    return kron * h, abs(kron - gauss) * abs(h)


def integrate(
    f: Callable[[float], float],
    a: float,
    b: float,
    tol: ToleranceConfig = DEFAULT_QUAD_TOL,
) -> float:
    """Globally adaptive bisection quadrature with a nested Gauss-Kronrod 7/15 rule.

    The interval with the largest error estimate is bisected until the summed
    error drops below max(abs_tol, rel_tol*|integral|). ``tol.max_iterations``
    bounds the bisection depth of any one interval; running out of depth (or
    of the overall split budget) raises AccuracyError carrying the best
    estimate.
    """
    if not (a <= b):
        raise DomainError(f"need a <= b, got [{a!r}, {b!r}]")
    if a == b:
        return 0.0
    est, err = _gauss_kronrod(f, a, b)
    # Heap entries: (-err, lo, hi, est, err, depth); frozen entries get key 0
    # so they are only popped once nothing improvable remains.
    heap = [(-err, a, b, est, err, 0)]
    total_est = est
    total_err = err
    splits = 0
    while heap and total_err > max(tol.abs_tol, tol.rel_tol * abs(total_est)):
        key, lo, hi, est_i, err_i, depth = heapq.heappop(heap)
        if key == 0.0:
            heapq.heappush(heap, (key, lo, hi, est_i, err_i, depth))
            break
        tiny = (hi - lo) <= 4.0 * _EPS * max(abs(lo), abs(hi))
        if depth >= tol.max_iterations or tiny or splits >= 10_000:
            heapq.heappush(heap, (0.0, lo, hi, est_i, err_i, depth))
            continue
        mid = 0.5 * (lo + hi)
        e1, r1 = _gauss_kronrod(f, lo, mid)
        e2, r2 = _gauss_kronrod(f, mid, hi)
        total_est += e1 + e2 - est_i
        total_err += r1 + r2 - err_i
        heapq.heappush(heap, (-r1, lo, mid, e1, r1, depth + 1))
        heapq.heappush(heap, (-r2, mid, hi, e2, r2, depth + 1))
        splits += 1
    if total_err > max(tol.abs_tol, tol.rel_tol * abs(total_est)):
        raise AccuracyError(
            f"quadrature accuracy not reached (error ~{total_err:.3e})",
            estimate=total_est,
        )
    return total_est


def find_root(
    f: Callable[[float], float],
    lo: float,
    hi: float,
    tol: ToleranceConfig = DEFAULT_ROOT_TOL,
) -> float:
    """Safeguarded bisection for f(x) = 0 on a sign-changing bracket.

    The iterate never leaves [lo, hi]. Stops when |f(x)| <= abs_tol or the
    bracket width drops below rel_tol*|x| + abs_tol.
    """
    if lo > hi:
        lo, hi = hi, lo
    flo = f(lo)
    if flo == 0.0:
        return lo
    fhi = f(hi)
    if fhi == 0.0:
        return hi
    if (flo > 0.0) == (fhi > 0.0):
        raise BracketError(f"no sign change on [{lo!r}, {hi!r}]: f={flo!r}, {fhi!r}")
    for _ in range(tol.max_iterations):
        mid = 0.5 * (lo + hi)
        fm = f(mid)
        if abs(fm) <= tol.abs_tol:
            return mid
        if (fm > 0.0) == (flo > 0.0):
            lo, flo = mid, fm
        else:
            hi, fhi = mid, fm
        if (hi - lo) <= tol.rel_tol * abs(mid) + tol.abs_tol:
            return 0.5 * (lo + hi)
    raise AccuracyError(
        f"root not located to tolerance in {tol.max_iterations} iterations",
        estimate=(lo, hi),
    )


def expand_bracket(
    f: Callable[[float], float],
    seed: float,
    direction: str,
) -> tuple[float, float]:
    """Expand geometrically (factor 2) from ``seed`` until a sign change is bracketed.

    ``direction`` is "up" or "down". Positive seeds only: this walks the
    density axis. Stops with BracketError past 1e308 (up) or below the 1e-300
    density floor (down).
    """
    if direction not in ("up", "down"):
        raise DomainError(f"direction must be 'up' or 'down', got {direction!r}")
    if not (seed > 0.0 and math.isfinite(seed)):
        raise DomainError(f"seed must be positive and finite, got {seed!r}")
    fa = f(seed)
    if not math.isfinite(fa):
        raise DomainError(f"f(seed) is not finite: {fa!r}")
    if fa == 0.0:
        return seed, seed
    a = seed
    while True:
        b = a * 2.0 if direction == "up" else a * 0.5
        if direction == "up" and b > 1e308:
            raise BracketError(f"no sign change found expanding up from {seed!r}")
        if direction == "down" and b < 1e-300:
            raise BracketError(f"no sign change found expanding down from {seed!r}")
        fb = f(b)
        if fb == 0.0:
            return (b, b)
        if (fa > 0.0) != (fb > 0.0):
            return (min(a, b), max(a, b))
        a, fa = b, fb


def gcg_velocity_jump(B: float, alpha: float, rho_lo: float, rho_hi: float) -> float:
    """Closed form of the rarefaction integral for A = 0.

    Equals integral over [rho_lo, rho_hi] of sqrt(alpha*B)*s^(-(alpha+3)/2) ds.
    """
    m = 0.5 * (alpha + 1.0)
    return 2.0 * math.sqrt(alpha * B) / (alpha + 1.0) * (rho_lo**-m - rho_hi**-m)


def polytropic_velocity_jump(A: float, n: float, rho_lo: float, rho_hi: float) -> float:
    """Closed form of the rarefaction integral for B = 0 (n = 1 is the log form).

    Equals integral over [rho_lo, rho_hi] of sqrt(A*n)*s^((n-3)/2) ds.
    """
    if n == 1.0:
        return math.sqrt(A) * math.log(rho_hi / rho_lo)
    e = 0.5 * (n - 1.0)
    return 2.0 * math.sqrt(A * n) / (n - 1.0) * (rho_hi**e - rho_lo**e)
