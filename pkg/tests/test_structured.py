import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import circulant_from_column, circulant_projection, dense_toeplitz
from symtoep import catalog
from symtoep.structured import (
    assemble_blocks,
    build_block_toeplitz,
    build_hankel,
    build_toeplitz,
    chan_optimal_column,
    decompose_even,
    exchange,
    flip_kron_left,
    flip_left,
    strang_column,
    write_matrix_csv,
)
from symtoep.symbols import MatrixSymbol, TrigPolynomial


def test_toeplitz_example_41(f41):
    np.testing.assert_array_equal(build_toeplitz(f41, 3), [[2, -6, 0], [-6, 2, -6], [0, -6, 2]])


def test_toeplitz_orientation_example_42(f42):
    T = build_toeplitz(f42, 4)
    np.testing.assert_array_equal(T[0], [4, 2, 2, 9])
    np.testing.assert_array_equal(T[:, 0], [4, 1, 0, 0])


@pytest.mark.parametrize("name", ["ex4.2", "ex4.3", "ex4.4"])
def test_toeplitz_against_double_loop(name):
    sym = catalog.builtin(name)
    np.testing.assert_array_equal(build_toeplitz(sym, 9), dense_toeplitz(sym.fourier_coefficient, 9))


def test_toeplitz_size_one(theta2):
    np.testing.assert_array_equal(build_toeplitz(theta2, 1), [[theta2.fourier_coefficient(0)]])


def test_toeplitz_rejects_bad_size(f41):
    with pytest.raises(ValueError):
        build_toeplitz(f41, 0)


def test_flip_example_41(f41):
    np.testing.assert_array_equal(flip_left(build_toeplitz(f41, 3)),
                                  [[0, -6, 2], [-6, 2, -6], [2, -6, 0]])


@pytest.mark.parametrize("n", [1, 4, 7])
def test_exchange_spectrum(n):
    lam = np.linalg.eigvalsh(exchange(n))
    assert np.sum(np.isclose(lam, 1)) == (n + 1) // 2
    assert np.sum(np.isclose(lam, -1)) == n // 2


@pytest.mark.parametrize("name", ["ex4.1", "ex4.2", "ex4.3", "ex4.4", "ex4.6"])
@pytest.mark.parametrize("n", [1, 2, 5, 50])
def test_flipped_toeplitz_symmetric_and_involutive(name, n):
    T = build_toeplitz(catalog.builtin(name), n)
    YT = flip_left(T)
    assert np.abs(YT - YT.T).max() == 0.0
    np.testing.assert_array_equal(flip_left(YT), T)


def test_hankel_example(f41):
    np.testing.assert_array_equal(build_hankel(f41, "+", 2), [[-6, 0], [0, 0]])
    np.testing.assert_array_equal(build_hankel(f41, "+", 1), [[-6]])


def test_hankel_entries_and_symmetry(f42):
    Hp, Hm = build_hankel(f42, "+", 5), build_hankel(f42, "-", 5)
    for i in range(5):
        for j in range(5):
            assert Hp[i, j] == f42.fourier_coefficient(i + j + 1)
            assert Hm[i, j] == f42.fourier_coefficient(-(i + j + 1))
    np.testing.assert_array_equal(Hp, Hp.T)
    np.testing.assert_array_equal(Hm, Hm.T)


@pytest.mark.parametrize("name,n", [("ex4.1", 6), ("ex4.2", 8), ("ex4.3", 10), ("ex4.4", 12)])
def test_decompose_even_reassembles_exactly(name, n):
    sym = catalog.builtin(name)
    np.testing.assert_array_equal(assemble_blocks(decompose_even(sym, n)),
                                  flip_left(build_toeplitz(sym, n)))


def test_decompose_zero_symbol():
    for block in decompose_even(TrigPolynomial({}), 6):
        assert not block.any()


def test_decompose_odd_rejected(f41):
    with pytest.raises(ValueError):
        decompose_even(f41, 7)


# --- block Toeplitz


def test_block_toeplitz_scalar_case(f42):
    np.testing.assert_array_equal(build_block_toeplitz(MatrixSymbol([[f42]]), 6), build_toeplitz(f42, 6))


def test_block_toeplitz_example_45(f45):
    n, s = 2, 2
    T = build_block_toeplitz(f45, n)
    for p in range(n):
        for q in range(n):
            for j in range(s):
                for l in range(s):
                    assert T[p * s + j, q * s + l] == f45.entries[j][l].fourier_coefficient(p - q)
    Q = np.array([[1, 1], [1, -1]]) / np.sqrt(2)
    np.testing.assert_allclose(T[:2, :2], Q @ np.diag([10, 2]) @ Q, atol=1e-14)
    np.testing.assert_allclose(T[2:, :2], Q @ np.diag([1, -0.5]) @ Q, atol=1e-14)


def test_block_toeplitz_constant():
    a, b = TrigPolynomial({0: 2.0}), TrigPolynomial({0: -1.0})
    A0 = np.array([[2.0, -1.0], [-1.0, 2.0]])
    np.testing.assert_array_equal(build_block_toeplitz(MatrixSymbol([[a, b], [b, a]]), 3),
                                  np.kron(np.eye(3), A0))


def test_flip_kron(f45, f42):
    np.testing.assert_array_equal(flip_kron_left(build_toeplitz(f42, 5), 1), flip_left(build_toeplitz(f42, 5)))
    T = build_block_toeplitz(f45, 2)
    F = flip_kron_left(T, 2)
    np.testing.assert_array_equal(F[:2], T[2:])
    np.testing.assert_array_equal(F[2:], T[:2])
    np.testing.assert_array_equal(flip_kron_left(F, 2), T)
    np.testing.assert_array_equal(F, np.kron(np.eye(2)[::-1], np.eye(2)) @ T)


# --- circulant columns


def test_strang_examples(f41, f46):
    np.testing.assert_array_equal(strang_column(f41, 4).first_column, [2, -6, 0, -6])
    np.testing.assert_array_equal(strang_column(f46, 5).first_column, [2, -3, 0, 0, -2])
    np.testing.assert_array_equal(strang_column(TrigPolynomial({0: 3.0}), 6).first_column, [3, 0, 0, 0, 0, 0])


@pytest.mark.parametrize("n", [4, 5, 9])
def test_strang_matches_central_diagonals(f46, n):
    C = circulant_from_column(strang_column(f46, n).first_column)
    T = build_toeplitz(f46, n)
    for d in (-1, 0, 1):
        np.testing.assert_array_equal(np.diagonal(C, d), np.diagonal(T, d))


def test_chan_examples(f41):
    np.testing.assert_allclose(chan_optimal_column(f41, 4).first_column, [2, -4.5, 0, -4.5])
    np.testing.assert_array_equal(chan_optimal_column(TrigPolynomial({0: 3.0}), 5).first_column, [3, 0, 0, 0, 0])


@pytest.mark.parametrize("name", ["ex4.2", "ex4.3", "ex4.4"])
def test_chan_is_frobenius_projection(name):
    sym = catalog.builtin(name)
    T = build_toeplitz(sym, 11)
    np.testing.assert_allclose(chan_optimal_column(sym, 11).first_column, circulant_projection(T), atol=1e-14)


@settings(max_examples=20, deadline=None)
@given(st.integers(2, 16), st.integers(0, 2**32 - 1))
def test_chan_beats_random_circulants(n, seed):
    r = np.random.default_rng(seed)
    deg = int(r.integers(1, 4))
    sym = TrigPolynomial({k: r.standard_normal() for k in range(-deg, deg + 1)})
    T = build_toeplitz(sym, n)
    c = chan_optimal_column(sym, n).first_column
    best = np.linalg.norm(circulant_from_column(c) - T)
    for _ in range(100):
        cp = c + r.standard_normal(n) * r.choice([1e-3, 1e-1, 1.0])
        assert best <= np.linalg.norm(circulant_from_column(cp) - T) + 1e-12


@pytest.mark.parametrize("builder", [strang_column, chan_optimal_column])
@pytest.mark.parametrize("name", ["ex4.2", "ex4.3", "ex4.4"])
def test_circulants_commute_with_negation(builder, name):
    sym = catalog.builtin(name)
    np.testing.assert_array_equal(builder(-sym, 12).first_column, -builder(sym, 12).first_column)


def test_circulant_spec_eigs_cached(f42):
    c = strang_column(f42, 9)
    from symtoep.transforms import circulant_eigs
    np.testing.assert_allclose(c.eigs, circulant_eigs(c.first_column), atol=1e-12)
    assert c.n == 9


def test_matrix_csv_full_precision(tmp_path, theta2):
    T = build_toeplitz(theta2, 4)
    path = tmp_path / "t.csv"
    write_matrix_csv(T, path)
    back = np.loadtxt(path, delimiter=",")
    np.testing.assert_array_equal(back, T)
