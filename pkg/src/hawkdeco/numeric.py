"""Independent numerical routes to the quantities with closed forms.

Everything here deliberately avoids the trigamma/zeta machinery that the
closed forms use, so agreement between the two is a real cross-check and
not a tautology:

  * overlap_numeric  -- the sinc-weighted spectral average, by quadrature
  * rate_numeric     -- emission rate times (1 - overlap), by quadrature
  * trigamma_series  -- psi1 by direct summation with an integral tail

The overlap integrand in u = 4 pi omega R_s / c is

    (u^2 / (e^u - 1)) sinc(alpha u),   alpha = dx / (4 pi R_s),

integrated over [u_min, 41.5] and divided by the same integral without
the sinc.  For alpha > 1 the integrand oscillates faster than blind
interval refinement resolves economically, so the domain is split at the
sinc zeros k pi / alpha; the per-lobe integrals alternate in sign, and
once the lobe count is large the remaining series is summed by repeated
averaging of its partial sums (Euler acceleration), which converges
geometrically in the slowly-varying regime where it is invoked.

The cancellation hazard in 1 - overlap at small alpha is kept out of the
rate by integrating (u^2/(e^u - 1)) (1 - sinc(alpha u)) directly with a
series-stabilized 1 - sinc kernel.
"""

from __future__ import annotations

import math
from typing import Optional

import numpy as np

from .quadrature import QuadratureSpec, QuadratureAccuracyError, gk15_batch, integrate_adaptive
from .rates import SuperpositionGeometry
from .special import one_minus_sinc, sinc
from .spectrum import EmissionSpectrum, U_TRUNCATION, bose_spectral_kernel

# Past this many sinc lobes the remaining alternating series is
# accelerated instead of integrated lobe by lobe.
_EXPLICIT_LOBES = 2048
_ACCEL_LOBES = 64


def trigamma_series(z: complex, terms: int = 10000) -> complex:
    """psi1(z) = sum_n 1/(z+n)^2 with the Euler-Maclaurin tail
    1/(z+N) + 1/(2 (z+N)^2).  Direct route, no recurrence, no Bernoulli
    expansion; the reference the fast implementation is checked against."""
    z = complex(z)
    if z.imag == 0.0 and z.real <= 0.0 and z.real == int(z.real):
        raise ValueError(f"trigamma pole at non-positive integer z={z.real}")
    if terms < 100:
        raise ValueError(f"terms must be at least 100, got {terms}")
    n = np.arange(terms)
    w = z + n
    partial = np.sum((1.0 / (w * w))[::-1])
    tail_base = z + terms
    return complex(partial + 1.0 / tail_base + 0.5 / (tail_base * tail_base))


def trigamma_series_error_bound(z: complex, terms: int = 10000) -> float:
    """Truncation bound for trigamma_series: the next Euler-Maclaurin
    correction 1/(6 |z+N|^3), padded 2x for the terms beyond it."""
    w = abs(complex(z) + terms)
    return 2.0 / (6.0 * w ** 3)


def _sinc_zeros(alpha: float, u_min: float) -> np.ndarray:
    k_first = int(math.floor(u_min * alpha / math.pi)) + 1
    k_last = int(math.ceil(U_TRUNCATION * alpha / math.pi)) - 1
    zeros = np.pi * np.arange(k_first, k_last + 1) / alpha
    zeros = zeros[(zeros > u_min) & (zeros < U_TRUNCATION)]
    return np.concatenate(([u_min], zeros, [U_TRUNCATION]))


def _accelerated_tail(lobe_values: np.ndarray) -> tuple[float, float]:
    # Euler acceleration: repeatedly average adjacent partial sums of the
    # alternating lobe series.  Error estimate is the last diagonal move,
    # doubled to stay on the conservative side.
    partial = np.cumsum(lobe_values)
    estimate = float(partial[-1])
    change = abs(estimate)
    while len(partial) > 1:
        partial = 0.5 * (partial[:-1] + partial[1:])
        new = float(partial[-1])
        change = abs(new - estimate)
        estimate = new
        if change == 0.0:
            break
    return estimate, 2.0 * change


def _oscillatory_integral(alpha: float, u_min: float, quad: QuadratureSpec) -> tuple[float, float]:
    """integral of bose * sinc(alpha u) over [u_min, U] for alpha > 1,
    split at the sinc zeros.  Returns (value, error estimate)."""

    def f(u):
        return bose_spectral_kernel(u) * sinc(alpha * u)

    points = _sinc_zeros(alpha, u_min)
    n_lobes = len(points) - 1
    if n_lobes <= _EXPLICIT_LOBES + _ACCEL_LOBES:
        return integrate_adaptive(f, points, quad)

    explicit_pts = points[:_EXPLICIT_LOBES + 1]
    head, head_err = integrate_adaptive(f, explicit_pts, quad)

    accel_pts = points[_EXPLICIT_LOBES:_EXPLICIT_LOBES + _ACCEL_LOBES + 1]
    lobes, lobe_errs = gk15_batch(f, accel_pts[:-1], accel_pts[1:])
    tail, tail_err = _accelerated_tail(lobes)
    # The alternating continuation past U_TRUNCATION that the acceleration
    # implicitly sums is bounded by the Bose tail already counted in the
    # domain truncation budget.
    return head + tail, head_err + tail_err + float(np.sum(lobe_errs))


def _seed_points(u_min: float, alpha: float = 0.0) -> list[float]:
    seeds = {u_min, U_TRUNCATION}
    for p in (0.5, 2.0, 8.0, 20.0):
        if u_min < p < U_TRUNCATION:
            seeds.add(p)
    if alpha > 0.0:
        # place whatever sinc zeros exist in range on interval edges
        k = 1
        while k * math.pi / alpha < U_TRUNCATION:
            if k * math.pi / alpha > u_min:
                seeds.add(k * math.pi / alpha)
            k += 1
            if k > 64:
                break
    return sorted(seeds)


def _check_geometry(geom: SuperpositionGeometry,
                    spectrum: Optional[EmissionSpectrum]) -> EmissionSpectrum:
    if spectrum is None:
        return EmissionSpectrum(r_s=geom.r_s)
    if abs(spectrum.r_s - geom.r_s) > 1e-12 * geom.r_s:
        raise ValueError(
            f"geometry r_s={geom.r_s!r} and spectrum r_s={spectrum.r_s!r} disagree")
    return spectrum


def _denominator(u_min: float, quad: QuadratureSpec) -> tuple[float, float]:
    if u_min >= U_TRUNCATION - 1.0:
        raise ValueError(
            f"cutoff u_min={u_min:.3g} leaves no resolvable spectrum below u={U_TRUNCATION}")
    return integrate_adaptive(bose_spectral_kernel, _seed_points(u_min), quad)


def overlap_numeric_detail(
    geom: SuperpositionGeometry,
    spectrum: Optional[EmissionSpectrum] = None,
    quad: QuadratureSpec = QuadratureSpec(),
) -> tuple[float, float]:
    """(overlap, error estimate) by quadrature."""
    spectrum = _check_geometry(geom, spectrum)
    u_min = spectrum.u_min
    denom, denom_err = _denominator(u_min, quad)
    alpha = geom.y
    if alpha == 0.0:
        return 1.0, 0.0
    if alpha <= 1.0:
        num, num_err = integrate_adaptive(
            lambda u: bose_spectral_kernel(u) * sinc(alpha * u),
            _seed_points(u_min, alpha), quad)
    else:
        num, num_err = _oscillatory_integral(alpha, u_min, quad)
    value = num / denom
    err = (num_err + abs(value) * denom_err) / denom
    return value, err


def overlap_numeric(
    geom: SuperpositionGeometry,
    spectrum: Optional[EmissionSpectrum] = None,
    quad: QuadratureSpec = QuadratureSpec(),
) -> float:
    """Sinc-weighted spectral average of the emission spectrum: the
    emitted-photon overlap, computed without the closed form."""
    return overlap_numeric_detail(geom, spectrum, quad)[0]


def rate_numeric_detail(
    geom: SuperpositionGeometry,
    spectrum: Optional[EmissionSpectrum] = None,
    quad: QuadratureSpec = QuadratureSpec(),
) -> tuple[float, float]:
    """(rate, error estimate) in s^-1 by quadrature."""
    spectrum = _check_geometry(geom, spectrum)
    u_min = spectrum.u_min
    denom, denom_err = _denominator(u_min, quad)
    per_u_coeff = (spectrum.prefactor() * 27.0 * spectrum.constants.c
                   / (64.0 * math.pi ** 4 * spectrum.r_s))
    alpha = geom.y
    if alpha == 0.0:
        return 0.0, 0.0
    if alpha < 1.0:
        # positive integrand, relative accuracy survives small alpha;
        # the denominator never enters this branch's value
        comp, comp_err = integrate_adaptive(
            lambda u: bose_spectral_kernel(u) * one_minus_sinc(alpha * u),
            _seed_points(u_min, alpha), quad)
    else:
        num, num_err = _oscillatory_integral(alpha, u_min, quad)
        comp = denom - num
        comp_err = num_err + denom_err
    rate = per_u_coeff * comp
    return rate, per_u_coeff * comp_err


def rate_numeric(
    geom: SuperpositionGeometry,
    spectrum: Optional[EmissionSpectrum] = None,
    quad: QuadratureSpec = QuadratureSpec(),
) -> float:
    """Vacuum decoherence rate by quadrature: per-u emission coefficient
    times the integral of the spectrum weighted by 1 - sinc."""
    return rate_numeric_detail(geom, spectrum, quad)[0]
