"""
Casimir Invariant Tests
"""

import pytest
import numpy as np
from math import comb, pi, sin
from pathlib import Path
import sys

sys.path.insert(0, str(Path(__file__).parent.parent))

from chamber import Spectrum, special_points, spectrum_of
from entropy import AngleCoords, angles_to_spectrum
from invariants import (
    CasimirSet,
    boundary_vanishing,
    casimirs_from_spectrum,
    casimirs_from_traces,
    characteristic_residual,
    elementary_symmetric,
    power_traces,
)
from states import (
    DensityMatrix,
    DimensionMismatchError,
    conjugate,
    haar_unitary,
    random_density_matrix,
    random_pure_state,
)


def cubic_discriminant(casimirs: CasimirSet) -> float:
    """Discriminant of t^3 - I1 t^2 + I2 t - I3; nonnegative iff all three roots are real."""
    b, c, d = -casimirs.invariant(1), casimirs.invariant(2), -casimirs.invariant(3)
    return 18 * b * c * d - 4 * b ** 3 * d + b ** 2 * c ** 2 - 4 * c ** 3 - 27 * d ** 2


def test_n3_special_point_values():
    points = dict(special_points(3))

    center = casimirs_from_spectrum(points["O"])
    assert center.invariant(2) == pytest.approx(1 / 3, abs=1e-15)
    assert center.invariant(3) == pytest.approx(1 / 27, abs=1e-15)

    pure = casimirs_from_spectrum(points["P"])
    assert pure.invariant(2) == 0.0 and pure.invariant(3) == 0.0

    edge = casimirs_from_spectrum(points["Q_A"])
    assert edge.invariant(2) == pytest.approx(0.25, abs=1e-15)
    assert edge.invariant(3) == 0.0


@pytest.mark.parametrize("n", range(2, 9))
def test_maximally_mixed_closed_form(n):
    casimirs = casimirs_from_spectrum(Spectrum.uniform(n))

    assert casimirs.invariant(0) == 1.0
    for j in range(1, n + 1):
        assert casimirs.invariant(j) == pytest.approx(comb(n, j) / n ** j, abs=1e-12)


def test_invariant_index_checked():
    casimirs = casimirs_from_spectrum(Spectrum.uniform(3))
    with pytest.raises(IndexError):
        casimirs.invariant(4)


def test_elementary_symmetric_small():
    np.testing.assert_allclose(elementary_symmetric([1.0, 2.0, 3.0]), [1.0, 6.0, 11.0, 6.0])


@pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
def test_newton_identities_match_spectrum(n):
    rng = np.random.default_rng(600 + n)
    for _ in range(200):
        rho = random_density_matrix(n, rng)
        from_traces = casimirs_from_traces(rho)
        from_spectrum = casimirs_from_spectrum(spectrum_of(rho))

        assert np.max(np.abs(from_traces.as_array() - from_spectrum.as_array())) < 1e-10
        assert from_traces.invariant(1) == pytest.approx(1.0, abs=1e-12)
        assert np.min(from_spectrum.as_array()) >= -1e-12
        assert characteristic_residual(rho, from_traces) < 1e-9


def test_trace_formulas():
    rho = random_density_matrix(4, seed=9)
    t1, t2, t3 = power_traces(rho, highest=3)
    casimirs = casimirs_from_traces(rho)

    assert casimirs.invariant(2) == pytest.approx(0.5 * (t1 ** 2 - t2), abs=1e-14)
    assert casimirs.invariant(3) == pytest.approx((t1 ** 3 + 2 * t3 - 3 * t1 * t2) / 6, abs=1e-14)


@pytest.mark.parametrize("x", [0.0, 0.2, 0.5, 0.9, 1.0])
def test_qubit_quadratic_casimir(x):
    casimirs = casimirs_from_traces(DensityMatrix.diagonal([x, 1 - x]))
    assert casimirs.invariant(2) == pytest.approx(x * (1 - x), abs=1e-14)
    assert 0.0 <= casimirs.invariant(2) <= 0.25


@pytest.mark.parametrize("theta", [0.0, pi / 6, pi / 2, 2.0, pi])
def test_qubit_casimir_from_angles(theta):
    spectrum = angles_to_spectrum(2, AngleCoords(theta=theta))
    assert casimirs_from_spectrum(spectrum).invariant(2) == pytest.approx(sin(theta) ** 2 / 4, abs=1e-15)


def test_quadratic_casimir_vanishes_iff_pure():
    rng = np.random.default_rng(700)
    for _ in range(100):
        pure = random_pure_state(3, rng)
        mixed = random_density_matrix(3, rng)

        assert abs(casimirs_from_traces(pure).invariant(2)) < 1e-12
        assert casimirs_from_traces(mixed).invariant(2) > 1e-9


def test_residual_exact_cases():
    mixed = DensityMatrix.maximally_mixed(4)
    pure = random_pure_state(3, seed=5)

    assert characteristic_residual(mixed, casimirs_from_traces(mixed)) < 1e-12
    assert characteristic_residual(pure, casimirs_from_traces(pure)) < 1e-12


def test_residual_dimension_mismatch():
    with pytest.raises(DimensionMismatchError):
        characteristic_residual(DensityMatrix.maximally_mixed(3), casimirs_from_spectrum(Spectrum.uniform(4)))


def test_boundary_examples():
    face = Spectrum.from_values([1 / 3, 1 / 3, 1 / 3, 0.0])
    edge = Spectrum.from_values([0.5, 0.5, 0.0, 0.0])

    assert boundary_vanishing(face) == (True, False)
    assert casimirs_from_spectrum(face).invariant(4) == 0.0
    assert casimirs_from_spectrum(face).invariant(3) == pytest.approx(1 / 27, abs=1e-15)

    assert boundary_vanishing(edge) == (True, True)
    assert boundary_vanishing(Spectrum.uniform(4)) == (False, False)
    assert casimirs_from_spectrum(Spectrum.uniform(4)).invariant(4) == pytest.approx(4.0 ** -4, abs=1e-15)


@pytest.mark.parametrize("n", range(2, 9))
def test_boundary_vanishing_on_special_points(n):
    for name, spectrum in special_points(n):
        zeros = int(np.sum(spectrum.values == 0.0))
        casimirs = casimirs_from_spectrum(spectrum)
        status = boundary_vanishing(spectrum)

        assert status.is_boundary == (zeros >= 1), name
        assert status.is_edge == (zeros >= 2), name
        if zeros >= 1:
            assert abs(casimirs.invariant(n)) < 1e-12
        else:
            assert casimirs.invariant(n) > 1e-12
        if zeros >= 2:
            assert abs(casimirs.invariant(n - 1)) < 1e-12


def test_real_root_inequality_qutrit():
    rng = np.random.default_rng(800)
    for _ in range(200):
        casimirs = casimirs_from_traces(random_density_matrix(3, rng))
        assert cubic_discriminant(casimirs) >= -1e-12
    # I2 = 1/3 with I3 below 1/27 has complex roots
    assert cubic_discriminant(CasimirSet(n_levels=3, values=[1.0, 1 / 3, 0.02])) < 0


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_conjugation_invariance(n):
    rng = np.random.default_rng(900 + n)
    for _ in range(100):
        rho = random_density_matrix(n, rng)
        rotated = conjugate(rho, haar_unitary(n, rng))
        np.testing.assert_allclose(casimirs_from_traces(rotated).as_array(), casimirs_from_traces(rho).as_array(),
                                   atol=1e-10)


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
