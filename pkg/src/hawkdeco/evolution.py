"""Coherence decay of a superposed hole over time.

The off-diagonal density matrix element obeys rho_od'(t) = -Gamma(t)
rho_od(t), so

    coherence(t) = exp(-int_0^t Gamma(t') dt').

With evaporation on, Gamma(t') is evaluated at the shrinking mass
M(t') = M0 (1 - t'/t_bh)^(1/3) while the branch separation delta_x stays
fixed; the rate then grows monotonically as the hole shrinks, so the
evaporating trace always lies at or below the constant-mass one.

The accumulated exponent is integrated on the uniform grid with local
parabolic segments (composite Simpson when the interval count is even),
exact for constant and linear rates and O(h^4) otherwise.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .blackhole import CODATA2018, PhysicalConstants, evaporation_time, mass_at_time, schwarzschild_radius
from .rates import SuperpositionGeometry, vacuum_rate

# geom.r_s must describe the same hole as mass0; allow rounding slack
_GEOMETRY_CONSISTENCY = 1e-9


@dataclass(frozen=True)
class CoherenceTrace:
    """Sampled coherence history.  quasi_static_valid records whether the
    initial decoherence time is under 1% of the lifetime, the regime in
    which treating emission as quasi-static is self-consistent."""

    times: np.ndarray
    coherence: np.ndarray
    mass: np.ndarray
    quasi_static_valid: bool


def _cumulative_parabolic(times: np.ndarray, values: np.ndarray) -> np.ndarray:
    """Cumulative integral on a uniform grid via quadratic segments.

    For each point triple the interpolating parabola contributes
    h(5 f0 + 8 f1 - f2)/12 and h(-f0 + 8 f1 + 5 f2)/12 to its two
    subintervals; adjacent pairs sum to the Simpson weights.  A trailing
    odd interval reuses the parabola through the last three points.
    """
    n = len(times) - 1
    h = times[1] - times[0]
    inc = np.empty(n)
    f0 = values[0:-2:2]
    f1 = values[1:-1:2]
    f2 = values[2::2]
    inc[0:n - (n % 2):2] = h * (5.0 * f0 + 8.0 * f1 - f2) / 12.0
    inc[1:n - (n % 2) + 1:2] = h * (-f0 + 8.0 * f1 + 5.0 * f2) / 12.0
    if n % 2 == 1:
        a, b, c = values[n - 2], values[n - 1], values[n]
        inc[n - 1] = h * (-a + 8.0 * b + 5.0 * c) / 12.0
    out = np.empty(n + 1)
    out[0] = 0.0
    np.cumsum(inc, out=out[1:])
    return out


def evolve_coherence(
    geom: SuperpositionGeometry,
    mass0: float,
    t_max: float,
    steps: int,
    evaporate: bool = False,
    constants: PhysicalConstants = CODATA2018,
    species_multiplicity: int = 1,
) -> CoherenceTrace:
    """Integrate the decoherence exponent over [0, t_max] on `steps`
    uniform intervals.

    geom must be the t = 0 geometry of the hole of mass mass0 (checked);
    with evaporate on, t_max must stay short of the evaporation time.
    """
    if steps < 2:
        raise ValueError(f"steps must be >= 2, got {steps}")
    if not t_max > 0.0:
        raise ValueError(f"t_max must be positive, got {t_max}")
    r_s0 = schwarzschild_radius(mass0, constants)
    if abs(geom.r_s - r_s0) > _GEOMETRY_CONSISTENCY * r_s0:
        raise ValueError(
            f"geometry r_s={geom.r_s!r} does not match mass0={mass0!r} "
            f"(expected r_s={r_s0!r})")

    t_bh = evaporation_time(mass0, constants)
    if evaporate and t_max >= t_bh:
        raise ValueError(
            f"t_max={t_max} reaches the evaporation time {t_bh}; the quasi-static "
            "description ends there")

    times = np.linspace(0.0, t_max, steps + 1)
    masses = np.empty(steps + 1)
    rates = np.empty(steps + 1)
    if evaporate:
        for i, t in enumerate(times):
            m = mass_at_time(mass0, float(t), constants)
            masses[i] = m
            g = SuperpositionGeometry(geom.delta_x, schwarzschild_radius(m, constants))
            rates[i] = vacuum_rate(g, constants=constants,
                                   species_multiplicity=species_multiplicity).rate
    else:
        masses[:] = mass0
        rates[:] = vacuum_rate(geom, constants=constants,
                               species_multiplicity=species_multiplicity).rate

    exponent = _cumulative_parabolic(times, rates)
    coherence = np.exp(-exponent)

    rate0 = rates[0]
    quasi_static = bool(rate0 > 0.0 and (1.0 / rate0) < 0.01 * t_bh)
    return CoherenceTrace(times=times, coherence=coherence, mass=masses,
                          quasi_static_valid=quasi_static)
