"""Agreement between the jitted kernel lane and the high-level solver."""

import math

import numpy as np
import pytest

from chapgas import PressureParams, State, sample, solve
from chapgas import _kernels as K
from chapgas.numerics import integrate


def test_numba_flag_is_bool():
    assert isinstance(K.NUMBA_ENABLED, bool)


def test_kernel_integral_matches_library_quadrature():
    rng = np.random.default_rng(41)
    for _ in range(30):
        A = rng.uniform(0.01, 1.0)
        B = rng.uniform(0.01, 1.0)
        n = rng.uniform(1.0, 3.0)
        alpha = rng.uniform(0.05, 1.0)
        lo = rng.uniform(0.02, 1.0)
        hi = lo * rng.uniform(1.1, 50.0)

        def f(s):
            return math.sqrt(A * n * s ** (n - 1.0) + alpha * B * s ** (-alpha - 1.0)) / s

        assert K.du_integral(A, B, n, alpha, lo, hi) == pytest.approx(
            integrate(f, lo, hi), rel=1e-10, abs=1e-12
        )


def test_kernel_star_state_matches_solver():
    rng = np.random.default_rng(42)
    for _ in range(40):
        A = rng.uniform(0.01, 1.0)
        B = rng.uniform(0.01, 1.0)
        n = rng.uniform(1.0, 3.0)
        alpha = rng.uniform(0.05, 1.0)
        p = PressureParams.ecg(A, B, n, alpha)
        left = State(rng.uniform(0.2, 3.0), rng.uniform(-1.5, 1.5))
        right = State(rng.uniform(0.2, 3.0), rng.uniform(-1.5, 1.5))
        sol = solve(p, left, right)
        rs, us = K.star_state(A, B, n, alpha, left.rho, left.u, right.rho, right.u)
        assert rs == pytest.approx(sol.intermediate.rho, rel=1e-8)
        assert us == pytest.approx(sol.intermediate.u, abs=1e-8)


def test_kernel_sample_matches_solver_sample():
    rng = np.random.default_rng(43)
    for _ in range(25):
        A = rng.uniform(0.02, 0.5)
        B = rng.uniform(0.02, 0.5)
        n = rng.uniform(1.0, 3.0)
        alpha = rng.uniform(0.1, 1.0)
        p = PressureParams.ecg(A, B, n, alpha)
        left = State(rng.uniform(0.3, 2.0), rng.uniform(-1.0, 1.0))
        right = State(rng.uniform(0.3, 2.0), rng.uniform(-1.0, 1.0))
        sol = solve(p, left, right)
        rs, us = K.star_state(A, B, n, alpha, left.rho, left.u, right.rho, right.u)
        for xi in rng.uniform(-3.0, 3.0, 8):
            kr, ku = K.sample_classical(
                A, B, n, alpha, left.rho, left.u, right.rho, right.u, rs, us, float(xi)
            )
            pt = sample(sol, float(xi))
            assert kr == pytest.approx(pt.rho, rel=1e-6, abs=1e-9)
            assert ku == pytest.approx(pt.u, abs=1e-6)


def test_kernel_gcg_closed_forms():
    # A = 0 velocity jump has a closed form; the kernel must use it exactly.
    assert K.du_integral(0.0, 1.0, 1.0, 1.0, 0.5, 1.0) == pytest.approx(1.0, rel=1e-14)
    assert K.du_integral(0.0, 0.0, 1.0, 1.0, 0.5, 1.0) == 0.0


def test_kernel_transport_flux_cases():
    rho = np.array([1.0, 1.0])
    frho = np.empty(3)
    fmom = np.empty(3)
    # colliding states: delta at the interface, LF fallback reported
    mom = np.array([1.0, -1.0])
    nf = K.interface_fluxes_godunov(rho, mom, 0.0, 0.0, 1.0, 1.0, K.MODEL_TRANSPORT, 10.0, frho, fmom)
    assert nf == 1
    # expanding states: vacuum at the interface, zero flux
    mom = np.array([-1.0, 1.0])
    nf = K.interface_fluxes_godunov(rho, mom, 0.0, 0.0, 1.0, 1.0, K.MODEL_TRANSPORT, 10.0, frho, fmom)
    assert nf == 0
    assert frho[1] == 0.0 and fmom[1] == 0.0


def test_kernel_max_speed():
    rho = np.array([1.0, 4.0])
    mom = np.array([2.0, -4.0])
    assert K.max_abs_speed(rho, mom, 0.0, 0.0, 1.0, 1.0, K.MODEL_TRANSPORT) == 2.0
    s = K.max_abs_speed(rho, mom, 0.0, 1.0, 1.0, 1.0, K.MODEL_GCG)
    assert s == pytest.approx(2.0 + 1.0)  # |u| + sqrt(alpha B) rho^-(alpha+1)/2 at cell 0
