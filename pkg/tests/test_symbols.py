import json
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import quadrature_coefficient
from symtoep import catalog
from symtoep.symbols import (
    MatrixSymbol,
    PiecewiseConstant,
    TrigPolynomial,
    load_symbol,
    matrix_abs_eigs,
    phi_samples,
    psi_samples,
    psi_samples_block,
    reduce_angle,
    symbol_from_dict,
    symbol_grid,
)

PI = math.pi


# --- Fourier coefficients


def test_theta2_coefficients(theta2):
    assert theta2.fourier_coefficient(0) == pytest.approx(PI ** 2 / 3, abs=1e-15)
    assert theta2.fourier_coefficient(3) == pytest.approx(-2 / 9, abs=1e-15)
    assert theta2.fourier_coefficient(-4) == pytest.approx(2 / 16, abs=1e-15)


@pytest.mark.parametrize("k", [0, 1, 2, 5])
def test_theta2_coefficients_against_quadrature(theta2, k):
    ref = quadrature_coefficient(lambda t: t * t, k)
    assert abs(ref.imag) < 1e-10
    assert theta2.fourier_coefficient(k) == pytest.approx(ref.real, abs=1e-9)


def test_cosine_symbol_coefficient(f41):
    assert f41.fourier_coefficient(1) == -6.0
    assert f41.fourier_coefficient(-1) == -6.0
    assert f41.fourier_coefficient(2) == 0.0


def test_piecewise_coefficient_k1(f44):
    # frozen from the adaptive-Simpson oracle below; equals -3/pi
    assert f44.fourier_coefficient(1) == pytest.approx(-0.954929658551372, abs=1e-12)
    ref = quadrature_coefficient(f44.evaluate, 1, breaks=f44.breaks)
    assert f44.fourier_coefficient(1) == pytest.approx(ref.real, abs=1e-10)


@pytest.mark.parametrize("k", [0, 2, 3, 7, -5])
def test_piecewise_coefficients_against_quadrature(f44, k):
    ref = quadrature_coefficient(f44.evaluate, k, breaks=f44.breaks)
    assert f44.fourier_coefficient(k) == pytest.approx(ref.real, abs=1e-10)


@pytest.mark.parametrize("sym", [
    TrigPolynomial({0: 3.5}),
    PiecewiseConstant([-PI, PI], [3.5]),
    PiecewiseConstant([-PI, 0.0, PI], [3.5, 3.5]),
])
def test_constant_symbol_has_no_harmonics(sym):
    for k in (1, 2, -3, 17):
        assert abs(sym.fourier_coefficient(k)) < 1e-15
    assert sym.fourier_coefficient(0) == pytest.approx(3.5)


@pytest.mark.parametrize("name", ["ex4.1", "ex4.3", "ex4.4"])
def test_even_symbols_have_even_coefficients(name):
    sym = catalog.builtin(name)
    ks = np.arange(1, 60)
    np.testing.assert_allclose(sym.coefficients(ks), sym.coefficients(-ks), atol=1e-15)


def test_piecewise_coefficient_decay(f44):
    v = f44.values
    C = np.sum(np.abs(v - np.roll(v, -1))) / (2 * PI) * 2
    ks = np.concatenate((np.arange(-1000, 0), np.arange(1, 1001)))
    assert np.all(np.abs(f44.coefficients(ks)) <= C / np.abs(ks) + 1e-15)


def test_piecewise_validation():
    with pytest.raises(ValueError):
        PiecewiseConstant([-PI, 1.0, 0.5, PI], [1, 2, 3])
    with pytest.raises(ValueError):
        PiecewiseConstant([-PI, PI], [1, 2])
    with pytest.raises(ValueError):
        PiecewiseConstant([-3.0, PI], [1])


# --- pointwise values


def test_evaluate_examples(f41, f42, theta2):
    assert f41.evaluate(0.0) == pytest.approx(-10.0)
    assert f42.evaluate(0.0) == pytest.approx(18.0)
    assert theta2.evaluate(3 * PI) == pytest.approx(PI ** 2)


def test_piecewise_right_continuity(f44):
    assert f44.evaluate(-PI / 2) == 2.0
    assert f44.evaluate(PI / 2) == 5.0
    assert f44.evaluate(-PI / 2 - 1e-9) == 5.0
    assert f44.evaluate(PI) == 5.0


def test_seam_uses_value_at_pi():
    s = PiecewiseConstant([-PI, 0.0, PI], [1.0, 7.0])
    assert s.evaluate(PI) == 7.0
    assert s.evaluate(-PI) == 7.0
    assert s.evaluate(3 * PI) == 7.0


def test_reduce_angle_range():
    t = np.linspace(-20, 20, 2001)
    r, seam = reduce_angle(t)
    assert np.all(r >= -PI) and np.all(r < PI + 1e-15)
    np.testing.assert_allclose(np.cos(r), np.cos(t), atol=1e-12)


# --- grid and samplings


def test_grid_nodes():
    g = symbol_grid(8)
    assert g[-1] == 2 * PI
    assert np.all(np.diff(g) > 0)
    np.testing.assert_allclose(g, -2 * PI + np.arange(1, 9) * 4 * PI / 8, atol=1e-14)


def test_constant_symbol_samples():
    one = TrigPolynomial({0: 1.0})
    np.testing.assert_array_equal(psi_samples(one, 4), [-1, -1, 1, 1])
    np.testing.assert_array_equal(phi_samples(one, 4), [-1, -1, 1, 1])


def test_theta2_psi_matches_four_branch_formula(theta2):
    n = 200
    th = -2 * PI + np.arange(1, n + 1) * 4 * PI / n
    j = np.arange(1, n + 1)
    expected = np.select(
        [j <= n // 4, j <= n // 2, j <= 3 * n // 4],
        [-(th + 2 * PI) ** 2, -th ** 2, th ** 2],
        (th - 2 * PI) ** 2)
    np.testing.assert_allclose(psi_samples(theta2, n), expected, atol=1e-12)


def test_psi_against_direct_evaluation(f41):
    n = 8
    th = -2 * PI + np.arange(1, n + 1) * 4 * PI / n
    expected = [abs(2 - 12 * math.cos(t)) if t > 1e-12 else -abs(2 - 12 * math.cos(t + 2 * PI))
                for t in th]
    np.testing.assert_allclose(psi_samples(f41, n), expected, atol=1e-12)


@pytest.mark.parametrize("name", ["ex4.1", "ex4.2", "ex4.3", "ex4.6"])
@pytest.mark.parametrize("n", [7, 80, 301])
def test_phi_equals_psi_for_real_coefficients(name, n):
    sym = catalog.builtin(name)
    np.testing.assert_allclose(phi_samples(sym, n), psi_samples(sym, n), atol=1e-12, rtol=0)


@pytest.mark.parametrize("n", [7, 80, 301])
def test_phi_psi_differ_only_at_jumps(f44, n):
    # |f| is even only almost everywhere; right-continuity breaks it at +-pi/2
    diff = np.nonzero(phi_samples(f44, n) != psi_samples(f44, n))[0]
    th = np.abs(symbol_grid(n)[diff])
    assert np.all(np.isclose(np.minimum(np.abs(th - PI / 2), np.abs(th - 3 * PI / 2)), 0, atol=1e-12))


def test_phi_is_rearrangement_of_psi(f42):
    n = 300
    np.testing.assert_allclose(np.sort(phi_samples(f42, n)), np.sort(psi_samples(f42, n)),
                               atol=1e-12, rtol=0)


@pytest.mark.parametrize("n", [4, 10, 200, 201])
def test_psi_point_symmetry(f42, n):
    s = psi_samples(f42, n)
    neg = s[: n // 2]
    # negative node theta_j pairs with positive node theta_j + 2pi = theta_{j + n/2}
    if n % 2 == 0:
        np.testing.assert_array_equal(neg, -s[n // 2:])
    assert np.sum(s <= 0) >= n // 2


# --- matrix-valued symbols


def test_matrix_abs_eigs_example(f45):
    np.testing.assert_allclose(matrix_abs_eigs(f45, 0.0), [1.0, 12.0], atol=1e-12)
    np.testing.assert_allclose(matrix_abs_eigs(f45, PI), [3.0, 8.0], atol=1e-12)


def test_matrix_abs_eigs_scalar_case(f42):
    m = MatrixSymbol([[f42]])
    for t in (0.0, 0.3, -2.0):
        assert matrix_abs_eigs(m, t)[0] == pytest.approx(abs(f42.evaluate(t)))


def test_block_samples_scalar_case(f42):
    np.testing.assert_allclose(psi_samples_block(MatrixSymbol([[f42]]), 31), psi_samples(f42, 31),
                               atol=1e-13)


def test_block_samples_branches(f45):
    s = psi_samples_block(f45, 200)
    pos = s[s > 0]
    assert np.all(((pos >= 1 - 1e-12) & (pos <= 3 + 1e-12)) | ((pos >= 8 - 1e-12) & (pos <= 12 + 1e-12)))
    np.testing.assert_array_equal(np.sort(s[s < 0]), np.sort(-pos))


def test_block_hermitian_check():
    a = TrigPolynomial({0: 1.0, 1: 1.0})
    b = TrigPolynomial({0: 1.0, 1: 2.0})
    with pytest.raises(ValueError):
        MatrixSymbol([[a, a], [b, a]]).check_hermitian_coefficients(3)


# --- symbol files


def test_symbol_file_round_trip(tmp_path):
    path = tmp_path / "f.json"
    path.write_text(json.dumps({"kind": "trigpoly", "coeffs": {"-1": 2.0, "0": 4.0, "1": 1.0}}))
    sym = load_symbol(path)
    assert sym.fourier_coefficient(-1) == 2.0 and sym.fourier_coefficient(1) == 1.0


def test_symbol_file_variants():
    pw = symbol_from_dict({"kind": "piecewise", "breaks": ["-pi", "-pi/2", "pi/2", "pi"],
                           "values": [5, 2, 5]})
    assert pw.fourier_coefficient(1) == pytest.approx(-3 / PI)
    assert symbol_from_dict({"kind": "theta2"}).fourier_coefficient(0) == pytest.approx(PI ** 2 / 3)
    m = symbol_from_dict({"kind": "matrix", "s": 2, "entries": [
        [{"kind": "trigpoly", "coeffs": {"0": 6, "1": 0.25, "-1": 0.25}},
         {"kind": "trigpoly", "coeffs": {"0": 4, "1": 0.75, "-1": 0.75}}],
        [{"kind": "trigpoly", "coeffs": {"0": 4, "1": 0.75, "-1": 0.75}},
         {"kind": "trigpoly", "coeffs": {"0": 6, "1": 0.25, "-1": 0.25}}]]})
    np.testing.assert_allclose(matrix_abs_eigs(m, 0.0), [1, 12], atol=1e-12)
    with pytest.raises(ValueError):
        symbol_from_dict({"kind": "spline"})


@settings(max_examples=30, deadline=None)
@given(st.dictionaries(st.integers(-4, 4), st.floats(-10, 10), min_size=1, max_size=6),
       st.floats(-50, 50))
def test_trigpoly_value_is_coefficient_series(coeffs, t):
    sym = TrigPolynomial(coeffs)
    direct = sum(a * np.exp(1j * k * t) for k, a in coeffs.items())
    assert abs(sym.evaluate(t) - direct) <= 1e-9 * (1 + sum(abs(a) for a in coeffs.values()))
