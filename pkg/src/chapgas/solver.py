"""Self-similar Riemann solutions for the three models, and pointwise sampling.

A solution is an ordered list of segments tiling the xi = x/t axis:
constant states, rarefaction fans, shocks, contacts, delta shocks and vacuum
intervals. Zero-width segments (shock/contact/delta) carry their speed as
``xi_lo == xi_hi``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Optional

from .errors import (
    BracketError,
    DomainError,
    NoDeltaShockError,
    NumericalLimitError,
    UnsupportedModelError,
)
from .models import Model, PressureParams, State, eigenvalues
from .numerics import ToleranceConfig, expand_bracket, find_root
from .waves import (
    WaveFamily,
    curve_one_u,
    curve_two_u_backward,
    gcg_entropy_window,
    classify_gcg,
    rarefaction_u,
    shock_speed,
)

# Relative density-jump threshold below which a wave counts as zero-strength.
_DEGENERATE_RTOL = 1e-10

_ROOT_TOL = ToleranceConfig(abs_tol=1e-12, rel_tol=1e-10, max_iterations=200)


class SegmentKind(Enum):
    CONSTANT = "constant"
    FAN = "fan"
    SHOCK = "shock"
    CONTACT = "contact"
    DELTA = "delta"
    VACUUM = "vacuum"


@dataclass(frozen=True)
class DeltaShock:
    """Delta-shock data: speed, delta velocity (= speed) and weight growth rate.

    The carried weight is ``weight_rate * t``; ``entropy_satisfied`` reports
    the characteristic-impingement window check (strict inequalities).
    """

    sigma: float
    u_delta: float
    weight_rate: float
    entropy_satisfied: bool


@dataclass(frozen=True)
class WaveSegment:
    kind: SegmentKind
    xi_lo: float
    xi_hi: float
    left: Optional[State] = None
    right: Optional[State] = None
    family: Optional[WaveFamily] = None
    delta: Optional[DeltaShock] = None

    @property
    def speed(self) -> float:
        if self.xi_lo != self.xi_hi:
            raise DomainError("speed is defined only for zero-width segments")
        return self.xi_lo

    @property
    def state(self) -> State:
        if self.kind is not SegmentKind.CONSTANT:
            raise DomainError("state is defined only for constant segments")
        return self.left


@dataclass(frozen=True)
class SamplePoint:
    rho: float
    u: float
    in_vacuum: bool = False
    on_delta: bool = False
    at_discontinuity: bool = False

    @property
    def state(self) -> State:
        return State(self.rho, self.u)


@dataclass(frozen=True)
class RiemannSolution:
    params: PressureParams
    left: State
    right: State
    segments: tuple[WaveSegment, ...]
    intermediate: Optional[State] = None

    @property
    def delta(self) -> Optional[DeltaShock]:
        for seg in self.segments:
            if seg.kind is SegmentKind.DELTA:
                return seg.delta
        return None

    def pattern(self) -> str:
        """Compact wave-structure label, e.g. ``R1S2``, ``delta``, ``vacuum``."""
        tags = []
        for seg in self.segments:
            if seg.kind is SegmentKind.FAN:
                tags.append("R%d" % seg.family.value)
            elif seg.kind is SegmentKind.SHOCK:
                tags.append("S%d" % seg.family.value)
            elif seg.kind is SegmentKind.CONTACT:
                tags.append("J%d" % seg.family.value if seg.family else "J")
            elif seg.kind is SegmentKind.DELTA:
                tags.append("delta")
            elif seg.kind is SegmentKind.VACUUM:
                tags.append("vacuum")
        return "+".join(tags) if tags else "constant"

    def speed_range(self) -> Optional[tuple[float, float]]:
        """Smallest and largest finite wave speed, or None for a constant solution."""
        los = [s.xi_lo for s in self.segments if math.isfinite(s.xi_lo)]
        his = [s.xi_hi for s in self.segments if math.isfinite(s.xi_hi)]
        if not los:
            return None
        return min(los), max(his)


def _constant(state: State, lo: float, hi: float) -> WaveSegment:
    return WaveSegment(SegmentKind.CONSTANT, lo, hi, left=state, right=state)


def _wave_segment(
    p: PressureParams, fam: WaveFamily, a: State, b: State
) -> Optional[WaveSegment]:
    """One classical wave from ``a`` (left) to ``b`` (right), or None when degenerate."""
    if abs(a.rho - b.rho) <= _DEGENERATE_RTOL * max(a.rho, b.rho):
        return None
    contact_like = p.model is Model.GCG and p.alpha == 1.0
    idx = 0 if fam is WaveFamily.ONE else 1
    is_rarefaction = b.rho < a.rho if fam is WaveFamily.ONE else b.rho > a.rho
    if is_rarefaction:
        lo = eigenvalues(p, a)[idx]
        hi = eigenvalues(p, b)[idx]
        if contact_like:
            s = 0.5 * (lo + hi)
            return WaveSegment(SegmentKind.CONTACT, s, s, left=a, right=b, family=fam)
        return WaveSegment(SegmentKind.FAN, lo, hi, left=a, right=b, family=fam)
    s = shock_speed(p, a, b)
    kind = SegmentKind.CONTACT if contact_like else SegmentKind.SHOCK
    return WaveSegment(kind, s, s, left=a, right=b, family=fam)


def _assemble(
    p: PressureParams, left: State, mid: State, right: State
) -> tuple[WaveSegment, ...]:
    waves = []
    w1 = _wave_segment(p, WaveFamily.ONE, left, mid)
    if w1 is not None:
        waves.append(w1)
    w2 = _wave_segment(p, WaveFamily.TWO, mid, right)
    if w2 is not None:
        waves.append(w2)
    segs = []
    cursor_state, cursor_xi = left, -math.inf
    for w in waves:
        segs.append(_constant(cursor_state, cursor_xi, w.xi_lo))
        segs.append(w)
        cursor_state, cursor_xi = w.right, w.xi_hi
    segs.append(_constant(cursor_state, cursor_xi, math.inf))
    return tuple(segs)


def _solve_two_wave(p: PressureParams, left: State, right: State) -> RiemannSolution:
    """Intersect the forward 1-curve with the backward 2-curve and assemble."""

    def mismatch(rho: float) -> float:
        return curve_one_u(p, left, rho) - curve_two_u_backward(p, right, rho)

    seed = math.sqrt(left.rho * right.rho)
    h0 = mismatch(seed)
    if h0 == 0.0:
        rho_star = seed
    else:
        direction = "up" if h0 > 0.0 else "down"  # mismatch is strictly decreasing
        try:
            lo, hi = expand_bracket(mismatch, seed, direction)
        except BracketError as exc:
            raise NumericalLimitError(
                f"wave-curve intersection escaped the representable density range: {exc}",
                state=State(seed, 0.5 * (left.u + right.u)),
            ) from exc
        rho_star = lo if lo == hi else find_root(mismatch, lo, hi, _ROOT_TOL)
    u_star = 0.5 * (
        curve_one_u(p, left, rho_star) + curve_two_u_backward(p, right, rho_star)
    )
    mid = State(rho_star, u_star)
    return RiemannSolution(
        p, left, right, _assemble(p, left, mid, right), intermediate=mid
    )


def solve_ecg(p: PressureParams, left: State, right: State) -> RiemannSolution:
    """Exact Riemann solution for the two-term pressure law (always classical)."""
    if p.model is not Model.ECG:
        raise UnsupportedModelError("solve_ecg requires the ECG tag")
    if left.rho <= 0.0 or right.rho <= 0.0:
        raise DomainError("Riemann data must have positive densities")
    if left == right:
        return RiemannSolution(p, left, right, (_constant(left, -math.inf, math.inf),))
    return _solve_two_wave(p, left, right)


def _gcg_delta(p: PressureParams, left: State, right: State) -> DeltaShock:
    rl, ul, rr, ur = left.rho, left.u, right.rho, right.u
    if rl != rr:
        rad = rl * rr * (
            (ur - ul) ** 2
            - (1.0 / rr - 1.0 / rl) * (p.B / rr**p.alpha - p.B / rl**p.alpha)
        )
        wr = math.sqrt(rad)
        sigma = (rr * ur - rl * ul + wr) / (rr - rl)
    else:
        wr = rl * ul - rr * ur
        sigma = 0.5 * (ul + ur)
    win_lo, win_hi = gcg_entropy_window(p, left, right)
    return DeltaShock(sigma, sigma, wr, win_lo < sigma < win_hi)


def solve_gcg(p: PressureParams, left: State, right: State) -> RiemannSolution:
    """Exact Riemann solution for the A = 0 model, including the delta-shock region."""
    if p.model is not Model.GCG:
        raise UnsupportedModelError("solve_gcg requires the GCG tag")
    if left.rho <= 0.0 or right.rho <= 0.0:
        raise DomainError("Riemann data must have positive densities")
    if left == right:
        return RiemannSolution(p, left, right, (_constant(left, -math.inf, math.inf),))
    if classify_gcg(p, left, right).tag == "V":
        d = _gcg_delta(p, left, right)
        segs = (
            _constant(left, -math.inf, d.sigma),
            WaveSegment(
                SegmentKind.DELTA, d.sigma, d.sigma, left=left, right=right, delta=d
            ),
            _constant(right, d.sigma, math.inf),
        )
        return RiemannSolution(p, left, right, segs)
    return _solve_two_wave(p, left, right)


def solve_transport(left: State, right: State) -> RiemannSolution:
    """Pressureless Riemann solution: vacuum fan, contact, or delta shock."""
    p = PressureParams.transport()
    if left.rho <= 0.0 or right.rho <= 0.0:
        raise DomainError("Riemann data must have positive densities")
    if left == right:
        return RiemannSolution(p, left, right, (_constant(left, -math.inf, math.inf),))
    ul, ur = left.u, right.u
    if ul < ur:
        segs = (
            _constant(left, -math.inf, ul),
            WaveSegment(SegmentKind.VACUUM, ul, ur, left=left, right=right),
            _constant(right, ur, math.inf),
        )
        return RiemannSolution(p, left, right, segs)
    if ul == ur:
        segs = (
            _constant(left, -math.inf, ul),
            WaveSegment(SegmentKind.CONTACT, ul, ul, left=left, right=right),
            _constant(right, ul, math.inf),
        )
        return RiemannSolution(p, left, right, segs)
    sl, sr = math.sqrt(left.rho), math.sqrt(right.rho)
    sigma = (sl * ul + sr * ur) / (sl + sr)
    weight_rate = sl * sr * (ul - ur)
    d = DeltaShock(sigma, sigma, weight_rate, ur < sigma < ul)
    segs = (
        _constant(left, -math.inf, sigma),
        WaveSegment(SegmentKind.DELTA, sigma, sigma, left=left, right=right, delta=d),
        _constant(right, sigma, math.inf),
    )
    return RiemannSolution(p, left, right, segs)


def solve(p: PressureParams, left: State, right: State) -> RiemannSolution:
    """Dispatch on the model tag."""
    if p.model is Model.ECG:
        return solve_ecg(p, left, right)
    if p.model is Model.GCG:
        return solve_gcg(p, left, right)
    return solve_transport(left, right)


def _fan_state(p: PressureParams, seg: WaveSegment, xi: float) -> State:
    """State inside a fan: solve lambda_fam(rho, u(rho)) = xi on the fan densities."""
    anchor = seg.left
    idx = 0 if seg.family is WaveFamily.ONE else 1

    def u_of_rho(rho: float) -> float:
        return rarefaction_u(p, seg.family, anchor, rho)

    def g(rho: float) -> float:
        return eigenvalues(p, State(rho, u_of_rho(rho)))[idx] - xi

    lo = min(seg.left.rho, seg.right.rho)
    hi = max(seg.left.rho, seg.right.rho)
    rho = find_root(g, lo, hi, _ROOT_TOL)
    return State(rho, u_of_rho(rho))


def sample(sol: RiemannSolution, xi: float) -> SamplePoint:
    """Evaluate the self-similar solution at xi = x/t.

    Exactly at a shock/contact/delta speed the state on the left of the
    discontinuity is returned, flagged; inside a vacuum interval the value is
    (0, xi), flagged ``in_vacuum``.
    """
    for seg in sol.segments:
        if seg.xi_lo == seg.xi_hi and xi == seg.xi_lo:
            return SamplePoint(
                seg.left.rho,
                seg.left.u,
                on_delta=seg.kind is SegmentKind.DELTA,
                at_discontinuity=True,
            )
    for seg in sol.segments:
        if seg.xi_lo <= xi <= seg.xi_hi:
            if seg.kind is SegmentKind.CONSTANT:
                return SamplePoint(seg.left.rho, seg.left.u)
            if seg.kind is SegmentKind.VACUUM:
                return SamplePoint(0.0, xi, in_vacuum=True)
            if seg.kind is SegmentKind.FAN:
                if xi == seg.xi_lo:
                    return SamplePoint(seg.left.rho, seg.left.u)
                if xi == seg.xi_hi:
                    return SamplePoint(seg.right.rho, seg.right.u)
                s = _fan_state(sol.params, seg, xi)
                return SamplePoint(s.rho, s.u)
    raise AssertionError(f"xi={xi!r} not covered by solution segments")  # pragma: no cover


def delta_weight_at(sol: RiemannSolution, t: float) -> float:
    """Weight carried by the delta shock at time t >= 0 (weight_rate * t)."""
    if t < 0.0:
        raise DomainError("time must be nonnegative")
    d = sol.delta
    if d is None:
        raise NoDeltaShockError("solution carries no delta shock")
    return d.weight_rate * t
