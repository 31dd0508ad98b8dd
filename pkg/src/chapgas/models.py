"""Equation-of-state family, states and eigenstructure.

Three model tags are supported:

* ``ECG``       -- P(rho) = A*rho^n - B/rho^alpha with A, B > 0,
* ``GCG``       -- the A = 0 case (pressure -B/rho^alpha),
* ``TRANSPORT`` -- the pressureless A = B = 0 case.

Everything here is a pure function of its arguments; parameter and state
values are immutable and safe to share across threads.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from .errors import DomainError, UnsupportedModelError

# Densities below this are treated as out of domain rather than as vacuum;
# vacuum is representable only inside a RiemannSolution.
RHO_FLOOR = 1e-300


class Model(Enum):
    ECG = "ecg"
    GCG = "gcg"
    TRANSPORT = "transport"


@dataclass(frozen=True)
class PressureParams:
    """Pressure-law coefficients plus the model tag selecting the branch.

    The tag is explicit rather than inferred from A = 0 / B = 0 so a limit
    sweep can hold a tiny-but-positive A distinct from the exact GCG model.
    """

    model: Model
    A: float = 0.0
    B: float = 0.0
    n: float = 1.0
    alpha: float = 1.0

    def __post_init__(self):
        for name in ("A", "B", "n", "alpha"):
            v = float(getattr(self, name))
            object.__setattr__(self, name, v)
            if not math.isfinite(v):
                raise DomainError(f"{name} must be finite, got {v!r}")
        if self.model is Model.ECG:
            if not (self.A > 0.0 and self.B > 0.0):
                raise DomainError("ECG requires A > 0 and B > 0")
            if not (1.0 <= self.n <= 3.0):
                raise DomainError("ECG requires 1 <= n <= 3")
            if not (0.0 < self.alpha <= 1.0):
                raise DomainError("ECG requires 0 < alpha <= 1")
        elif self.model is Model.GCG:
            if self.A != 0.0:
                raise DomainError("GCG requires A = 0")
            if not (self.B > 0.0):
                raise DomainError("GCG requires B > 0")
            if not (0.0 < self.alpha <= 1.0):
                raise DomainError("GCG requires 0 < alpha <= 1")
        elif self.model is Model.TRANSPORT:
            if self.A != 0.0 or self.B != 0.0:
                raise DomainError("transport requires A = B = 0")
        else:  # pragma: no cover - enum is closed
            raise UnsupportedModelError(f"unknown model {self.model!r}")

    @classmethod
    def ecg(cls, A: float, B: float, n: float, alpha: float) -> "PressureParams":
        return cls(Model.ECG, A=A, B=B, n=n, alpha=alpha)

    @classmethod
    def gcg(cls, B: float, alpha: float) -> "PressureParams":
        return cls(Model.GCG, A=0.0, B=B, n=1.0, alpha=alpha)

    @classmethod
    def transport(cls) -> "PressureParams":
        return cls(Model.TRANSPORT)


@dataclass(frozen=True)
class State:
    """A point (rho, u) in the closed upper half phase plane.

    rho = 0 is legal only for vacuum representations produced by the solver;
    wave-curve operations require rho > 0.
    """

    rho: float
    u: float

    def __post_init__(self):
        object.__setattr__(self, "rho", float(self.rho))
        object.__setattr__(self, "u", float(self.u))
        if not (math.isfinite(self.rho) and self.rho >= 0.0):
            raise DomainError(f"density must be finite and >= 0, got {self.rho!r}")
        if not math.isfinite(self.u):
            raise DomainError(f"velocity must be finite, got {self.u!r}")


def _check_rho(rho: float) -> None:
    if not (rho > 0.0 and math.isfinite(rho)):
        raise DomainError(f"density must be positive and finite, got {rho!r}")
    if rho < RHO_FLOOR:
        raise DomainError(f"density {rho!r} below representable floor {RHO_FLOOR}")


def pressure(p: PressureParams, rho: float) -> float:
    """P(rho) = A*rho^n - B/rho^alpha; identically 0 under the transport tag."""
    _check_rho(rho)
    if p.model is Model.TRANSPORT:
        return 0.0
    return p.A * rho**p.n - p.B * rho ** (-p.alpha)


def sound_speed_sq(p: PressureParams, rho: float) -> float:
    """dP/drho = A*n*rho^(n-1) + alpha*B/rho^(alpha+1) (the eigenvalue radicand)."""
    _check_rho(rho)
    if p.model is Model.TRANSPORT:
        return 0.0
    return p.A * p.n * rho ** (p.n - 1.0) + p.alpha * p.B * rho ** (-(p.alpha + 1.0))


def eigenvalues(p: PressureParams, s: State) -> tuple[float, float]:
    """Characteristic speeds (u - c, u + c); the double value (u, u) for transport."""
    c = math.sqrt(sound_speed_sq(p, s.rho))
    return s.u - c, s.u + c


def genuine_nonlinearity_indicator(p: PressureParams, rho: float) -> float:
    """Directional derivative of each eigenvalue along its own eigenvector.

    Positive for every legal ECG parameter set; zero for GCG with alpha = 1,
    where both fields are linearly degenerate. Not defined for transport.
    """
    if p.model is Model.TRANSPORT:
        raise UnsupportedModelError("transport has no classical nonlinearity indicator")
    _check_rho(rho)
    A, B, n, a = p.A, p.B, p.n, p.alpha
    num = A * n * (n + 1.0) * rho ** (n + a) + (1.0 - a) * a * B
    den = 2.0 * math.sqrt((A * n * rho ** (n + a) + a * B) * rho ** (a + 1.0))
    return num / den
