"""Hot numeric kernels for the finite-volume cross-validator.

Every function here is written as plain scalar/ndarray Python and compiled
with numba's ``@njit`` when available. Setting the environment variable
``CHAPGAS_NO_NUMBA=1`` (before import) selects the pure-Python fallback lane;
``bench/benchmark_fv.py`` compares the two. The math mirrors the high-level
solver exactly (same curves, same star-state intersection, same sampling tie
rules) so the Godunov flux agrees with ``solver.sample`` at xi = 0.

Model codes: 0 = transport, 1 = generalized Chaplygin (A = 0), 2 = extended.
"""

from __future__ import annotations

import math
import os

import numpy as np

try:
    from numba import njit as _njit

    _HAVE_NUMBA = True
except ImportError:  # pragma: no cover - numba is a declared dependency
    _HAVE_NUMBA = False

_DISABLED = os.environ.get("CHAPGAS_NO_NUMBA", "").strip().lower() in {
    "1",
    "true",
    "yes",
    "on",
}
NUMBA_ENABLED = _HAVE_NUMBA and not _DISABLED


def _jit(func):
    if NUMBA_ENABLED:
        return _njit(cache=True)(func)
    return func


MODEL_TRANSPORT = 0
MODEL_GCG = 1
MODEL_ECG = 2

# 15-point Kronrod nodes/weights (full set, symmetric).
_K15_X = np.array(
    [
        -0.991455371120813,
        -0.949107912342759,
        -0.864864423359769,
        -0.741531185599394,
        -0.586087235467691,
        -0.405845151377397,
        -0.207784955007898,
        0.0,
        0.207784955007898,
        0.405845151377397,
        0.586087235467691,
        0.741531185599394,
        0.864864423359769,
        0.949107912342759,
        0.991455371120813,
    ]
)
_K15_W = np.array(
    [
        0.022935322010529,
        0.063092092629979,
        0.104790010322250,
        0.140653259715525,
        0.169004726639267,
        0.190350578064785,
        0.204432940075298,
        0.209482141084728,
        0.204432940075298,
        0.190350578064785,
        0.169004726639267,
        0.140653259715525,
        0.104790010322250,
        0.063092092629979,
        0.022935322010529,
    ]
)

_DEGEN = 1e-10  # relative density-jump threshold for zero-strength waves


@_jit
def cs2(A, B, n, alpha, rho):
    return A * n * rho ** (n - 1.0) + alpha * B * rho ** (-(alpha + 1.0))


@_jit
def pressure(A, B, n, alpha, rho):
    return A * rho**n - B * rho ** (-alpha)


@_jit
def du_integral(A, B, n, alpha, a, b):
    """Integral over [a, b] of sqrt(cs2(s))/s ds, 0 < a <= b.

    Closed forms for the single-term laws; otherwise composite Kronrod-15 on
    geometric panels no wider than one octave (the integrand is then smooth
    and the fixed rule is effectively exact).
    """
    if a >= b:
        return 0.0
    if A == 0.0:
        if B == 0.0:
            return 0.0
        m = 0.5 * (alpha + 1.0)
        return 2.0 * math.sqrt(alpha * B) / (alpha + 1.0) * (a**-m - b**-m)
    if B == 0.0:
        if n == 1.0:
            return math.sqrt(A) * math.log(b / a)
        e = 0.5 * (n - 1.0)
        return 2.0 * math.sqrt(A * n) / (n - 1.0) * (b**e - a**e)
    npan = int(math.ceil(math.log(b / a) / math.log(2.0)))
    if npan < 1:
        npan = 1
    ratio = (b / a) ** (1.0 / npan)
    total = 0.0
    lo = a
    for k in range(npan):
        hi = b if k == npan - 1 else lo * ratio
        c = 0.5 * (lo + hi)
        h = 0.5 * (hi - lo)
        acc = 0.0
        for i in range(15):
            x = c + h * _K15_X[i]
            acc += _K15_W[i] * math.sqrt(cs2(A, B, n, alpha, x)) / x
        total += acc * h
        lo = hi
    return total


@_jit
def shock_radicand(A, B, n, alpha, ra, rb):
    dp = A * (rb**n - ra**n) - B * (rb**-alpha - ra**-alpha)
    return (rb - ra) / (ra * rb) * dp


@_jit
def curve1_u(A, B, n, alpha, rl, ul, rho):
    """Forward 1-curve through (rl, ul)."""
    if rho < rl:
        return ul + du_integral(A, B, n, alpha, rho, rl)
    if rho > rl:
        rad = shock_radicand(A, B, n, alpha, rl, rho)
        if rad < 0.0:
            rad = 0.0
        return ul - math.sqrt(rad)
    return ul


@_jit
def curve2b_u(A, B, n, alpha, rr, ur, rho):
    """Velocity whose 2-wave reaches (rr, ur) on the right from density rho."""
    if rho < rr:
        return ur - du_integral(A, B, n, alpha, rho, rr)
    if rho > rr:
        rad = shock_radicand(A, B, n, alpha, rr, rho)
        if rad < 0.0:
            rad = 0.0
        return ur + math.sqrt(rad)
    return ur


@_jit
def _mismatch(A, B, n, alpha, rl, ul, rr, ur, rho):
    return curve1_u(A, B, n, alpha, rl, ul, rho) - curve2b_u(
        A, B, n, alpha, rr, ur, rho
    )


@_jit
def star_state(A, B, n, alpha, rl, ul, rr, ur):
    """Intermediate (rho*, u*) of a classical Riemann problem.

    Geometric bracket expansion from the geometric-mean seed followed by a
    Brent iteration that never leaves the bracket.
    """
    seed = math.sqrt(rl * rr)
    f0 = _mismatch(A, B, n, alpha, rl, ul, rr, ur, seed)
    if f0 == 0.0:
        us = curve1_u(A, B, n, alpha, rl, ul, seed)
        return seed, us
    # The mismatch decreases in rho: positive value means the root is above.
    a = seed
    fa = f0
    b = seed
    fb = f0
    found = False
    for _ in range(1200):
        if f0 > 0.0:
            b = b * 2.0
            if b > 1e305:
                break
            fb = _mismatch(A, B, n, alpha, rl, ul, rr, ur, b)
        else:
            a = a * 0.5
            if a < 1e-300:
                break
            fa = _mismatch(A, B, n, alpha, rl, ul, rr, ur, a)
        if (fa > 0.0) != (fb > 0.0):
            found = True
            break
        if f0 > 0.0:
            a = b
            fa = fb
        else:
            b = a
            fb = fa
    if not found:
        raise RuntimeError("wave-curve intersection escaped the density range")
    # Brent on [a, b].
    c = a
    fc = fa
    e = b - a
    d = e
    eps = 2.220446049250313e-16
    for _ in range(200):
        if abs(fc) < abs(fb):
            a = b
            b = c
            c = a
            fa = fb
            fb = fc
            fc = fa
        tol = 2.0 * eps * abs(b) + 1e-14
        m = 0.5 * (c - b)
        if abs(m) <= tol or fb == 0.0:
            break
        if abs(e) < tol or abs(fa) <= abs(fb):
            e = m
            d = e
        else:
            s = fb / fa
            if a == c:
                pq = 2.0 * m * s
                q = 1.0 - s
            else:
                q = fa / fc
                r = fb / fc
                pq = s * (2.0 * m * q * (q - r) - (b - a) * (r - 1.0))
                q = (q - 1.0) * (r - 1.0) * (s - 1.0)
            if pq > 0.0:
                q = -q
            else:
                pq = -pq
            s = e
            e = d
            if 2.0 * pq < 3.0 * m * q - abs(tol * q) and pq < abs(0.5 * s * q):
                d = pq / q
            else:
                e = m
                d = e
        a = b
        fa = fb
        if abs(d) > tol:
            b += d
        elif m > 0.0:
            b += tol
        else:
            b -= tol
        fb = _mismatch(A, B, n, alpha, rl, ul, rr, ur, b)
        if (fb > 0.0 and fc > 0.0) or (fb <= 0.0 and fc <= 0.0):
            c = a
            fc = fa
            e = b - a
            d = e
    rs = b
    us = 0.5 * (
        curve1_u(A, B, n, alpha, rl, ul, rs) + curve2b_u(A, B, n, alpha, rr, ur, rs)
    )
    return rs, us


@_jit
def sample_classical(A, B, n, alpha, rl, ul, rr, ur, rs, us, xi):
    """State of the classical two-wave solution at xi (left state on speed ties)."""
    have1 = abs(rs - rl) > _DEGEN * max(rs, rl)
    have2 = abs(rs - rr) > _DEGEN * max(rs, rr)
    if have1:
        if rs > rl:  # 1-shock
            s1lo = (rs * us - rl * ul) / (rs - rl)
            s1hi = s1lo
            fan1 = False
        else:  # 1-fan
            s1lo = ul - math.sqrt(cs2(A, B, n, alpha, rl))
            s1hi = us - math.sqrt(cs2(A, B, n, alpha, rs))
            fan1 = True
        if xi <= s1lo:
            return rl, ul
        if xi <= s1hi and fan1:
            if xi == s1hi:
                return rs, us
            lo = rs
            hi = rl
            for _ in range(120):
                mid = 0.5 * (lo + hi)
                u_mid = ul + du_integral(A, B, n, alpha, mid, rl)
                g = u_mid - math.sqrt(cs2(A, B, n, alpha, mid)) - xi
                if g > 0.0:
                    lo = mid
                else:
                    hi = mid
                if hi - lo <= 1e-13 * hi:
                    break
            mid = 0.5 * (lo + hi)
            return mid, ul + du_integral(A, B, n, alpha, mid, rl)
    if have2:
        if rs > rr:  # 2-shock
            s2lo = (rr * ur - rs * us) / (rr - rs)
            s2hi = s2lo
            fan2 = False
        else:  # 2-fan
            s2lo = us + math.sqrt(cs2(A, B, n, alpha, rs))
            s2hi = ur + math.sqrt(cs2(A, B, n, alpha, rr))
            fan2 = True
        if xi <= s2lo:
            return rs, us
        if xi <= s2hi and fan2:
            if xi == s2hi:
                return rr, ur
            lo = rs
            hi = rr
            for _ in range(120):
                mid = 0.5 * (lo + hi)
                u_mid = us + du_integral(A, B, n, alpha, rs, mid)
                g = u_mid + math.sqrt(cs2(A, B, n, alpha, mid)) - xi
                if g < 0.0:
                    lo = mid
                else:
                    hi = mid
                if hi - lo <= 1e-13 * hi:
                    break
            mid = 0.5 * (lo + hi)
            return mid, us + du_integral(A, B, n, alpha, rs, mid)
        return rr, ur
    if have1:
        return rs, us
    return rl, ul


@_jit
def _state_flux(A, B, n, alpha, model, rho, u):
    if model == MODEL_TRANSPORT or rho <= 0.0:
        p = 0.0
    else:
        p = pressure(A, B, n, alpha, rho)
    return rho * u, rho * u * u + p


@_jit
def _lf_pair_flux(A, B, n, alpha, model, rl, ul, rr, ur, lam):
    fl_r, fl_m = _state_flux(A, B, n, alpha, model, rl, ul)
    fr_r, fr_m = _state_flux(A, B, n, alpha, model, rr, ur)
    fr = 0.5 * (fl_r + fr_r) - 0.5 * lam * (rr - rl)
    fm = 0.5 * (fl_m + fr_m) - 0.5 * lam * (rr * ur - rl * ul)
    return fr, fm


@_jit
def _cell_velocity(rho, mom):
    if rho > 0.0:
        return mom / rho
    return 0.0


@_jit
def interface_fluxes_godunov(rho, mom, A, B, n, alpha, model, lam, frho, fmom):
    """Godunov fluxes at all cells+1 interfaces (outflow ghosts).

    Delta-shock-bearing interface data (transport with u_l > u_r, GCG in the
    delta region) falls back to the Lax-Friedrichs flux; the return value
    counts those interfaces.
    """
    m = rho.shape[0]
    nfall = 0
    for i in range(m + 1):
        il = i - 1 if i > 0 else 0
        ir = i if i < m else m - 1
        rl = rho[il]
        ul = _cell_velocity(rho[il], mom[il])
        rr = rho[ir]
        ur = _cell_velocity(rho[ir], mom[ir])
        if rl == rr and ul == ur:
            fr, fm = _state_flux(A, B, n, alpha, model, rl, ul)
        elif model == MODEL_TRANSPORT:
            if ul > ur:
                fr, fm = _lf_pair_flux(A, B, n, alpha, model, rl, ul, rr, ur, lam)
                nfall += 1
            elif ul < ur:  # vacuum fan between the states
                if ul >= 0.0:
                    fr, fm = _state_flux(A, B, n, alpha, model, rl, ul)
                elif ur <= 0.0:
                    fr, fm = _state_flux(A, B, n, alpha, model, rr, ur)
                else:
                    fr = 0.0
                    fm = 0.0
            else:  # contact at speed u
                if ul >= 0.0:
                    fr, fm = _state_flux(A, B, n, alpha, model, rl, ul)
                else:
                    fr, fm = _state_flux(A, B, n, alpha, model, rr, ur)
        else:
            if model == MODEL_GCG:
                mm = 0.5 * (alpha + 1.0)
                sb = math.sqrt(B)
                if ur + sb * rr**-mm <= ul - sb * rl**-mm:
                    fr, fm = _lf_pair_flux(A, B, n, alpha, model, rl, ul, rr, ur, lam)
                    nfall += 1
                    frho[i] = fr
                    fmom[i] = fm
                    continue
            rs, us = star_state(A, B, n, alpha, rl, ul, rr, ur)
            r0, u0 = sample_classical(A, B, n, alpha, rl, ul, rr, ur, rs, us, 0.0)
            fr, fm = _state_flux(A, B, n, alpha, model, r0, u0)
        frho[i] = fr
        fmom[i] = fm
    return nfall


@_jit
def interface_fluxes_lf(rho, mom, A, B, n, alpha, model, lam, frho, fmom):
    m = rho.shape[0]
    for i in range(m + 1):
        il = i - 1 if i > 0 else 0
        ir = i if i < m else m - 1
        frho[i], fmom[i] = _lf_pair_flux(
            A,
            B,
            n,
            alpha,
            model,
            rho[il],
            _cell_velocity(rho[il], mom[il]),
            rho[ir],
            _cell_velocity(rho[ir], mom[ir]),
            lam,
        )
    return 0


@_jit
def max_abs_speed(rho, mom, A, B, n, alpha, model):
    s = 0.0
    for i in range(rho.shape[0]):
        u = _cell_velocity(rho[i], mom[i])
        if model == MODEL_TRANSPORT or rho[i] <= 0.0:
            c = 0.0
        else:
            c = math.sqrt(cs2(A, B, n, alpha, rho[i]))
        v = abs(u) + c
        if v > s:
            s = v
    return s


@_jit
def conservative_update(rho, mom, frho, fmom, dt_over_dx):
    m = rho.shape[0]
    for i in range(m):
        rho[i] -= dt_over_dx * (frho[i + 1] - frho[i])
        mom[i] -= dt_over_dx * (fmom[i + 1] - fmom[i])
