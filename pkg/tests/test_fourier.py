"""Fourier factorization, eigen-system, and the conjugation relation."""

import numpy as np
import pytest

from hwrep import (
    IrrepLabel,
    ParameterError,
    enumerate_irreps,
    eigensystem_y,
    fourier_FD,
    generator_matrices,
    omega_matrix,
    standard_fourier,
    verify_fourier_relations,
)

TOL = 1e-9


def test_standard_fourier_small():
    assert np.allclose(standard_fourier(1), [[1.0]])
    F2 = standard_fourier(2)
    assert np.allclose(F2, np.array([[1, 1], [1, -1]]) / np.sqrt(2))


@pytest.mark.parametrize("d", [1, 2, 4, 8, 16, 32])
def test_fourier_fourth_power(d):
    F = standard_fourier(d)
    assert np.max(np.abs(np.linalg.matrix_power(F, 4) - np.eye(d))) < TOL
    assert np.max(np.abs(F @ F.conj().T - np.eye(d))) < 1e-12


def test_standard_fourier_rejects_non_power():
    for d in (0, 3, 6, 12):
        with pytest.raises(ParameterError):
            standard_fourier(d)


def test_omega_matrix_examples():
    assert np.allclose(omega_matrix(IrrepLabel(2, 1, 0, 0)), np.eye(4))
    om = omega_matrix(IrrepLabel(2, 2, 0, 1))
    assert np.allclose(om, np.diag([1, 1j]))
    assert np.max(np.abs(om @ om.conj().T - np.eye(2))) < 1e-12


def test_fd_factorization_and_example():
    label = IrrepLabel(2, 2, 1, 1)
    F = fourier_FD(label)
    expected = np.array([[1, 1], [1j, -1j]]) / np.sqrt(2)  # w4^(rk) w2^(kj) / sqrt(2)
    assert np.allclose(F, expected)
    assert np.allclose(F, omega_matrix(label) @ standard_fourier(2))
    # r = 0 collapses to the plain transform
    assert np.allclose(fourier_FD(IrrepLabel(2, 1, 0, 0)), standard_fourier(4))


def test_fd_one_dimensional():
    for q in range(4):
        assert np.allclose(fourier_FD(IrrepLabel(2, 0, q, 0)), [[1.0]])


def test_eigensystem_examples():
    eig = eigensystem_y(IrrepLabel(1, 1, 0, 0))
    assert sorted(np.round(eig.eigenvalues.real, 9)) == [-1.0, 1.0]
    eig = eigensystem_y(IrrepLabel(2, 2, 0, 1))
    assert np.allclose(sorted(eig.eigenvalues, key=lambda z: z.imag), [-1j, 1j])
    # unimodular spectrum
    assert np.allclose(np.abs(eig.eigenvalues), 1.0)


@pytest.mark.parametrize("s", [1, 2, 3])
def test_eigen_residuals(s):
    for label in enumerate_irreps(s):
        _, _, y = generator_matrices(label)
        yc = y.to_complex()
        eig = eigensystem_y(label)
        N = 1 << s
        d = label.dim
        for k in range(d):
            psi = eig.eigenvectors[:, k]
            assert np.max(np.abs(yc @ psi - eig.eigenvalues[k] * psi)) < 1e-12
        # lambda^d = w_t^r
        assert np.allclose(eig.eigenvalues**d, np.exp(2j * np.pi * d * label.r / N))


@pytest.mark.parametrize("s", [1, 2, 3])
def test_verify_relations_pass(s):
    for label in enumerate_irreps(s):
        report = verify_fourier_relations(label)
        assert report["passed"], report
        assert max(report["residuals"].values()) < 1e-12
        assert report["orientation"] == "F_inv_y_F"


def test_reverse_orientation_reading_holds_iff_untwisted():
    # F y^u F^-1 = w^(ru-q) x_D^-1 is exact exactly when q = r = 0
    for s in (1, 2, 3):
        for label in enumerate_irreps(s):
            if label.p == 0:
                continue
            report = verify_fourier_relations(label)
            literal = report["informational"]["conjugation_reverse_orientation_to_x_inverse"]
            if label.q == 0 and label.r == 0:
                assert literal < 1e-12, (label, literal)
            else:
                assert literal > 1e-3, (label, literal)


def test_faithful_conjugation_example():
    # s=1 faithful: F y F^-1 = x^-1 exactly
    label = IrrepLabel(1, 1, 0, 0)
    _, x, y = generator_matrices(label)
    F = fourier_FD(label)
    lhs = F @ y.to_complex() @ F.conj().T
    assert np.max(np.abs(lhs - x.inverse().to_complex())) < 1e-12
    report = verify_fourier_relations(label)
    assert report["informational"]["conjugation_reverse_orientation_to_x_inverse"] < 1e-12


def test_exact_relation_statement():
    # F^-1 y^u F = w^(ru - q) x_D, checked directly on a twisted label
    label = IrrepLabel(2, 2, 1, 1)
    _, x, y = generator_matrices(label)
    F = fourier_FD(label)
    N = 4
    u = label.u
    lhs = F.conj().T @ y.power(u).to_complex() @ F
    rhs = np.exp(2j * np.pi * ((label.r * u - label.q) % N) / N) * x.to_complex()
    assert np.max(np.abs(lhs - rhs)) < 1e-12


def test_monomial_and_dense_worlds_agree():
    # the float matrix being diagonalized is the image of the exact monomial y_D
    for label in enumerate_irreps(2):
        _, _, y = generator_matrices(label)
        yc = y.to_complex()
        dense = y.to_dense()
        for i in range(label.dim):
            for j in range(label.dim):
                assert abs(yc[i, j] - dense[i][j].to_complex()) < 1e-12
