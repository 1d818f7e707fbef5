import math

import numpy as np
import pytest

import stadion


@pytest.fixture(scope="module")
def case_a():
    return stadion.build_case("A")


def test_field_products():
    a = stadion.FieldElement.generator(1)
    b = stadion.FieldElement.generator(2)
    c = stadion.FieldElement.generator(3)
    assert b * c == a
    assert str(a * b) == "B + C"
    assert math.isclose(float(b.inverse()), 1 / float(b), rel_tol=1e-14)
    assert b * b.inverse() == stadion.FieldElement([1])
    assert b.inverse().coeffs()[2:4] == ["1/2", "-1/2"]
    assert math.isclose(float(stadion.cos_pi16(3)), math.cos(3 * math.pi / 16), rel_tol=1e-14)


def test_case_a_geometry(case_a):
    assert len(case_a.envelope_vertices) == 16
    assert all(abs(t - 7 * math.pi / 8) < 1e-12 for t in case_a.interior_angles)
    assert case_a.genus == 13
    assert case_a.independent_periods == 26
    assert case_a.linking_periods == 29
    assert abs(case_a.epsilon_pol - 0.0196) < 5e-5
    assert stadion.envelope(case_a, 1000)["check"]["contained"]
    assert len(stadion.unfolding(case_a)["periods"]) == 29


def test_table_row():
    a = stadion.min_z("A", 8.67e-4, threads=1)
    assert a["found"]
    assert a["Z"] == 186445124
    assert a["q"] == [263673223, 344505668, 142698920]


def test_energy_exact():
    assert stadion.energy_over_pi2(186445124, 1, 2) == 40 * 186445124**2
    assert math.isclose(stadion.energy(1, 1, 1), 16 * math.pi**2)
    with pytest.raises(ValueError):
        stadion.energy(1, 0, 0)


def test_wave_function(case_a):
    w = stadion.WaveFunction(case_a, 186445124, 1, 2)
    assert not w.degenerate
    assert w(1.0, 0.0) == 0
    # corner_x is rounded to double; at this Z that leaves a tiny residue
    assert abs(w(w.corner_x, 0.4)) < 1e-5
    x, y, re, im = w.grid(32)
    assert re.shape == (32, 32)
    assert np.isnan(re).any() and np.isfinite(re).any()
    r = stadion.residual(w, 8.67e-4, samples=256)
    assert r["boundary_ok"]
    assert stadion.WaveFunction(case_a, 5, 2, 2).degenerate


def test_errors():
    with pytest.raises(ValueError):
        stadion.build_case("Q")
    with pytest.raises(ValueError):
        stadion.build_case_from_json('{"angles": [2.0]}')
