"""Coherence traces: exponential decay, grid convergence, evaporation."""

import math

import numpy as np
import pytest

from hawkdeco import (
    SuperpositionGeometry,
    evaporation_time,
    evolve_coherence,
    schwarzschild_radius,
    vacuum_rate,
)

M_MOON = 7.35e22

# small hole whose lifetime is short enough for evaporation to matter
M_SMALL = 1e9


def small_hole_geom(dx_over_rs: float = 2.7327e-17) -> SuperpositionGeometry:
    r_s = schwarzschild_radius(M_SMALL)
    return SuperpositionGeometry(delta_x=dx_over_rs * r_s, r_s=r_s)


def test_constant_mass_matches_exponential_exactly():
    geom = SuperpositionGeometry.from_mass(M_MOON, 0.01)
    rate = vacuum_rate(geom).rate
    tau = 1.0 / rate
    trace = evolve_coherence(geom, M_MOON, t_max=3.0 * tau, steps=64)
    expected = np.exp(-rate * trace.times)
    assert np.allclose(trace.coherence, expected, rtol=1e-13, atol=0.0)
    assert trace.coherence[0] == 1.0
    assert np.all(trace.mass == M_MOON)


def test_coherence_at_tau_is_inverse_e():
    geom = SuperpositionGeometry.from_mass(M_MOON, 0.01)
    tau = 1.0 / vacuum_rate(geom).rate
    trace = evolve_coherence(geom, M_MOON, t_max=tau, steps=100)
    assert trace.coherence[-1] == pytest.approx(math.exp(-1.0), abs=1e-6)


def test_log_coherence_linear_in_rate():
    # doubling the emission channels doubles the exponent everywhere
    geom = SuperpositionGeometry.from_mass(M_MOON, 0.01)
    tau = 1.0 / vacuum_rate(geom).rate
    one = evolve_coherence(geom, M_MOON, t_max=2.0 * tau, steps=32)
    two = evolve_coherence(geom, M_MOON, t_max=2.0 * tau, steps=32,
                           species_multiplicity=2)
    assert np.allclose(np.log(two.coherence[1:]), 2.0 * np.log(one.coherence[1:]),
                       rtol=1e-12)


def test_grid_doubling_convergence_evaporating():
    geom = small_hole_geom()
    t_max = 0.5 * evaporation_time(M_SMALL)
    coarse = evolve_coherence(geom, M_SMALL, t_max, steps=128, evaporate=True)
    fine = evolve_coherence(geom, M_SMALL, t_max, steps=256, evaporate=True)
    drift = abs(fine.coherence[-1] - coarse.coherence[-1]) / fine.coherence[-1]
    assert drift < 1e-8


def test_evaporation_accelerates_decoherence():
    geom = small_hole_geom()
    t_max = 0.9 * evaporation_time(M_SMALL)
    frozen = evolve_coherence(geom, M_SMALL, t_max, steps=200, evaporate=False)
    shrinking = evolve_coherence(geom, M_SMALL, t_max, steps=200, evaporate=True)
    assert np.all(shrinking.coherence[1:] <= frozen.coherence[1:])
    assert shrinking.coherence[-1] < frozen.coherence[-1]
    assert np.all(np.diff(shrinking.mass) < 0.0)
    assert shrinking.mass[0] == M_SMALL


def test_trace_invariants():
    geom = small_hole_geom()
    trace = evolve_coherence(geom, M_SMALL, 0.5 * evaporation_time(M_SMALL),
                             steps=77, evaporate=True)  # odd interval count
    assert trace.times[0] == 0.0
    assert len(trace.times) == len(trace.coherence) == len(trace.mass) == 78
    assert np.all(np.diff(trace.coherence) <= 0.0)
    assert np.all(trace.coherence > 0.0)
    assert np.all(trace.coherence <= 1.0)


def test_quasi_static_flag():
    # decoherence far faster than evaporation: flag set
    geom = SuperpositionGeometry.from_mass(M_MOON, 0.01)
    trace = evolve_coherence(geom, M_MOON, 1e-10, steps=4)
    assert trace.quasi_static_valid
    # decoherence slower than the hole's own lifetime: flag cleared
    slow = small_hole_geom(dx_over_rs=1e-22)
    trace = evolve_coherence(slow, M_SMALL, 1e-3, steps=4)
    assert not trace.quasi_static_valid


def test_validation_errors():
    geom = SuperpositionGeometry.from_mass(M_MOON, 0.01)
    with pytest.raises(ValueError):
        evolve_coherence(geom, M_MOON, t_max=1.0, steps=1)
    with pytest.raises(ValueError):
        evolve_coherence(geom, M_MOON, t_max=0.0, steps=8)
    with pytest.raises(ValueError):
        evolve_coherence(geom, 2.0 * M_MOON, t_max=1.0, steps=8)  # wrong mass
    small = small_hole_geom()
    with pytest.raises(ValueError):
        evolve_coherence(small, M_SMALL, t_max=evaporation_time(M_SMALL),
                         steps=8, evaporate=True)
