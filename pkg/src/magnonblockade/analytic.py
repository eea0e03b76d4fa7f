"""Closed-form weak-drive steady-state amplitudes and blockade conditions.

In the weak-drive limit the state is confined to the two-excitation
subspace {|0,g>, |0,e>, |1,g>, |1,e>, |2,g>} and the stationary
amplitudes have closed forms built from

    dbar = delta - i kappa/2
    c    = g^2 - dbar^2 + delta_f^2
    d    = 2 dbar^2 + 2 dbar delta_f - g^2

The zeros of |c| mark the anharmonicity (conventional) blockade locus,
the zeros of the two-excitation numerator mark the interference
(unconventional) locus.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

SINGULARITY_FLOOR = 1e-12
AMPLITUDE_FLOOR = 1e-12


class AnalyticSingularityError(ValueError):
    """Closed-form amplitudes are singular here; the numeric path still works."""


@dataclass(frozen=True)
class AmplitudeSet:
    """Stationary two-excitation amplitudes plus factor magnitudes.

    a_sq, b_sq, c_sq, d_sq are the squared magnitudes of the factored
    form of g2(0); they are used for condition algebra only, never for
    evaluating g2(0) itself.
    """

    c0e: complex
    c1g: complex
    c1e: complex
    c2g: complex
    a_sq: float
    b_sq: float
    c_sq: float
    d_sq: float
    drive_mode: str  # "single" | "double"


@dataclass(frozen=True)
class ConditionSolution:
    """Real detuning roots of a blockade condition.

    regime is one of "real_pair", "degenerate", "no_real_solution";
    roots is empty exactly for "no_real_solution".  finite_kappa_points
    carries the separately known exact (delta, delta_f) locus at finite
    kappa (single-drive interference condition only).
    """

    roots: tuple[float, ...]
    regime: str
    finite_kappa_points: tuple[tuple[float, float], ...] = ()


def _denominators(g: float, kappa: float, delta: float, delta_f: float):
    dbar = delta - 0.5j * kappa
    c = g**2 - dbar**2 + delta_f**2
    # |d|^2 = (2 delta^2 + 2 delta_f delta - g^2 - kappa^2/2)^2
    #         + kappa^2 (2 delta + delta_f)^2
    d = 2.0 * dbar**2 + 2.0 * dbar * delta_f - g**2
    return dbar, c, d


def amplitudes(params) -> AmplitudeSet:
    """Closed-form steady-state amplitudes for the current drive mode."""
    om = params.omega_m_drive
    onv = params.omega_nv_drive
    if om <= 0:
        raise ValueError("analytic amplitudes require omega_m_drive > 0")
    g, kappa, delta, delta_f = params.g, params.kappa, params.delta, params.delta_f
    dbar, c, d = _denominators(g, kappa, delta, delta_f)
    if abs(c) < SINGULARITY_FLOOR or abs(d) < SINGULARITY_FLOOR:
        raise AnalyticSingularityError(
            f"analytic singularity: |c| = {abs(c):.3e}, |d| = {abs(d):.3e}"
        )
    rt2 = math.sqrt(2.0)

    c0e = (onv * (dbar + delta_f) - om * g) / c
    c1g = (om * (dbar - delta_f) - onv * g) / c
    c1e = -(
        4.0 * om * onv * dbar**2
        + (4.0 * om * onv * delta_f - 4.0 * om**2 * g - 2.0 * onv**2 * g) * dbar
        + 2.0 * om * onv * g**2
        - 2.0 * onv**2 * g * delta_f
    ) / (2.0 * c * d)
    c2g = (
        -2.0 * rt2 * om**2 * dbar**2
        + (4.0 * rt2 * om * onv * g + 2.0 * rt2 * om**2 * delta_f) * dbar
        - rt2 * (om**2 + onv**2) * g**2
    ) / (2.0 * c * d)

    lam = onv / om
    a_sq = ((delta - delta_f - lam * g) ** 2 + kappa**2 / 4.0) ** 2
    b_sq = (
        -2.0 * (delta**2 - kappa**2 / 4.0)
        + (4.0 * lam * g + 2.0 * delta_f) * delta
        - (1.0 + lam**2) * g**2
    ) ** 2 + kappa**2 * (2.0 * delta - 2.0 * lam * g - delta_f) ** 2
    c_sq = (g**2 + delta_f**2 - delta**2 + kappa**2 / 4.0) ** 2 + kappa**2 * delta**2
    d_sq = (
        2.0 * delta**2 + 2.0 * delta_f * delta - g**2 - kappa**2 / 2.0
    ) ** 2 + kappa**2 * (2.0 * delta + delta_f) ** 2

    return AmplitudeSet(
        c0e=c0e,
        c1g=c1g,
        c1e=c1e,
        c2g=c2g,
        a_sq=a_sq,
        b_sq=b_sq,
        c_sq=c_sq,
        d_sq=d_sq,
        drive_mode="single" if onv == 0 else "double",
    )


def g2_analytic(params) -> float:
    """Weak-drive g2(0) = 2|c2g|^2 / |c1g|^4 from the raw amplitudes."""
    amp = amplitudes(params)
    mag_c1g = abs(amp.c1g)
    if mag_c1g < AMPLITUDE_FLOOR:
        raise AnalyticSingularityError(
            f"|c1g| = {mag_c1g:.3e} underflows the amplitude floor"
        )
    return 2.0 * abs(amp.c2g) ** 2 / mag_c1g**4


def cmb_condition(g: float, delta_f: float) -> ConditionSolution:
    """Anharmonicity-blockade locus: delta = +-sqrt(g^2 + delta_f^2)."""
    if g < 0:
        raise ValueError("g must be >= 0")
    root = math.hypot(g, delta_f)
    if root == 0.0:
        return ConditionSolution(roots=(0.0,), regime="degenerate")
    return ConditionSolution(roots=(-root, root), regime="real_pair")


def umb_condition_single(
    g: float, delta_f: float, kappa: float = 0.0
) -> ConditionSolution:
    """Interference-blockade locus for the magnon-only drive.

    Roots are the kappa -> 0 values delta = delta_f/2 +- sqrt(delta_f^2/4
    - g^2/2).  The finite-kappa exact locus (delta, delta_f) =
    (+-sqrt(2 g^2 - kappa^2)/2, 2 delta), valid when 2 g^2 >= kappa^2,
    is reported separately in finite_kappa_points.
    """
    if g < 0 or kappa < 0:
        raise ValueError("g and kappa must be >= 0")
    points: tuple[tuple[float, float], ...] = ()
    if 2.0 * g**2 >= kappa**2:
        d0 = math.sqrt(2.0 * g**2 - kappa**2) / 2.0
        points = ((d0, 2.0 * d0), (-d0, -2.0 * d0))
    disc = delta_f**2 / 4.0 - g**2 / 2.0
    if disc < 0:
        return ConditionSolution(
            roots=(), regime="no_real_solution", finite_kappa_points=points
        )
    if disc == 0:
        return ConditionSolution(
            roots=(delta_f / 2.0,), regime="degenerate", finite_kappa_points=points
        )
    s = math.sqrt(disc)
    return ConditionSolution(
        roots=(delta_f / 2.0 - s, delta_f / 2.0 + s),
        regime="real_pair",
        finite_kappa_points=points,
    )


def umb_condition_double(g: float, delta_f: float, lam: float) -> ConditionSolution:
    """Interference-blockade locus with both drives, kappa -> 0.

    delta = delta_f/2 + lam g +- sqrt((delta_f/2 + lam g)^2
    - (1 + lam^2) g^2 / 2); reduces to the single-drive locus at lam = 0.
    """
    if g < 0:
        raise ValueError("g must be >= 0")
    if lam < 0 or not math.isfinite(lam):
        raise ValueError("lam must be finite and >= 0")
    center = delta_f / 2.0 + lam * g
    disc = center**2 - (1.0 + lam**2) * g**2 / 2.0
    if disc < 0:
        return ConditionSolution(roots=(), regime="no_real_solution")
    if disc == 0:
        return ConditionSolution(roots=(center,), regime="degenerate")
    s = math.sqrt(disc)
    return ConditionSolution(roots=(center - s, center + s), regime="real_pair")


def intersection_points(g: float, lam: float) -> list[tuple[float, bool]]:
    """The three delta_f values where the two blockade loci intersect.

    The first point always exists; the other two require lam >= 2 sqrt(2)
    and merge at equality.  Non-existent points carry delta_f = nan.
    """
    if g <= 0:
        raise ValueError("g must be > 0")
    if lam <= 0:
        raise ValueError("lam must be > 0")
    first = -g * (lam**2 - 1.0) / (2.0 * lam)
    if lam**2 >= 8.0:
        s = math.sqrt(lam**2 - 8.0)
        second = (-g * (lam + 3.0 * s) / 8.0, True)
        third = (-g * (lam - 3.0 * s) / 8.0, True)
    else:
        second = (math.nan, False)
        third = (math.nan, False)
    return [(first, True), second, third]
