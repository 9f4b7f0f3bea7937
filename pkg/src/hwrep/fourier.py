"""Generalized finite Fourier transforms diagonalizing the shift operator.

For an irrep of dimension d = 2^(s-t) the transform factors as
F_D = Omega_r * F, with (Omega_r)_kk = w_s^(r k) and F the standard
d-point Fourier matrix (1/sqrt(d)) w_d^(k j).  The columns of F_D are the
eigenvectors of the twisted shift y_D, with eigenvalues w_s^r w_d^k.

The entrywise product form of F_D carries the 1/sqrt(d) normalization:
without it neither F_D = Omega_r * F nor unitarity holds.

Orientation of the conjugation relation, settled numerically: the
eigenvector-column convention makes F_D^-1 y_D F_D diagonal, and the exact
identity valid for every label is

    F_D^-1  y_D^u  F_D  =  w_s^(r u - q) * x_D,         u the odd cofactor

(equivalently  F_D^-1 y_D^-u F_D = w_s^(q - r u) * x_D^-1).  The same
relation written with x_D^-1 on the right and F...F^-1 on the left holds
only for labels with q = r = 0, which includes every faithful irrep; the
report below carries residuals for both readings.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ParameterError
from .reps import IrrepLabel, MonomialMatrix, generator_matrices

TOLERANCE = 1e-9


def standard_fourier(d: int) -> np.ndarray:
    """The d-point unitary Fourier matrix, d a power of two (F^4 = I)."""
    if d < 1 or d & (d - 1):
        raise ParameterError(f"dimension must be a power of two, got {d}")
    k = np.arange(d)
    return np.exp(2j * np.pi * np.outer(k, k) / d) / np.sqrt(d)


def matrix_to_json(matrix: np.ndarray) -> dict:
    """Dense complex matrix as {"dim": d, "entries": [[[re, im], ...], ...]}."""
    d = matrix.shape[0]
    return {
        "dim": d,
        "entries": [
            [[float(matrix[i, j].real), float(matrix[i, j].imag)] for j in range(d)]
            for i in range(d)
        ],
    }


def omega_matrix(label: IrrepLabel) -> np.ndarray:
    """Diagonal phase factor diag(w_s^(r k)), k = 0..d-1."""
    _require_canonical(label)
    N = 1 << label.s
    k = np.arange(label.dim)
    return np.diag(np.exp(2j * np.pi * label.r * k / N))


def fourier_FD(label: IrrepLabel) -> np.ndarray:
    """F_D = Omega_r * F; its columns are the eigenvectors of y_D.

    For p = 0 the representation is 1-dimensional and F_D = [[1]].
    """
    _require_canonical(label)
    return omega_matrix(label) @ standard_fourier(label.dim)


@dataclass(frozen=True)
class EigenSystem:
    """Eigenvalues and eigenvector columns of the twisted shift y_D."""

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray


def eigensystem_y(label: IrrepLabel) -> EigenSystem:
    """lambda_k = w_s^r w_(s-t)^k with the plane-wave columns of F_D."""
    _require_canonical(label)
    N = 1 << label.s
    d = label.dim
    t = label.t
    k = np.arange(d)
    eigenvalues = np.exp(2j * np.pi * (label.r + (1 << t) * k) / N)
    return EigenSystem(eigenvalues=eigenvalues, eigenvectors=fourier_FD(label))


def _require_canonical(label: IrrepLabel) -> None:
    if not label.is_canonical:
        from .errors import NonCanonicalLabelError

        raise NonCanonicalLabelError(
            f"label {label} is not canonical; canonical form is {label.canonical()}"
        )


def _offdiag_max(A: np.ndarray) -> float:
    return float(np.max(np.abs(A - np.diag(np.diag(A))))) if A.shape[0] > 1 else 0.0


def verify_fourier_relations(label: IrrepLabel, tolerance: float = TOLERANCE) -> dict:
    """Residual report for unitarity, F^4 = I, the eigen-system, and the
    conjugation relation, with the orientation determined numerically.

    Gated residuals (must all be < tolerance to pass): unitarity of F_D,
    F^4 = I, eigen residuals, diagonality of F_D^-1 y_D F_D, and the exact
    conjugation relation F_D^-1 y_D^u F_D = w^(ru-q) x_D.  The literal
    x_D^-1 reading is reported but not gated; it fails whenever q or r is
    nonzero.
    """
    _require_canonical(label)
    N = 1 << label.s
    d = label.dim
    u = label.u if label.u is not None else 1

    z, x, y = generator_matrices(label)
    xc = x.to_complex()
    yc = y.to_complex()
    F = fourier_FD(label)
    Fi = F.conj().T

    eye = np.eye(d)
    res_unitary = float(np.max(np.abs(F @ Fi - eye)))

    Fstd = standard_fourier(d)
    res_f4 = float(np.max(np.abs(np.linalg.matrix_power(Fstd, 4) - eye)))

    eig = eigensystem_y(label)
    res_eigen = 0.0
    for k in range(d):
        psi = eig.eigenvectors[:, k]
        res_eigen = max(res_eigen, float(np.max(np.abs(yc @ psi - eig.eigenvalues[k] * psi))))
    res_eigen_power = float(
        np.max(np.abs(eig.eigenvalues**d - np.exp(2j * np.pi * d * label.r / N)))
    )

    conj_forward = Fi @ yc @ F
    conj_backward = F @ yc @ Fi
    res_diag_forward = _offdiag_max(conj_forward)
    res_diag_backward = _offdiag_max(conj_backward)

    yu = y.power(u).to_complex()
    phase = np.exp(2j * np.pi * ((label.r * u - label.q) % N) / N)
    xinv = x.inverse().to_complex()
    res_conj_exact = float(np.max(np.abs(Fi @ yu @ F - phase * xc)))
    res_conj_xinv = float(np.max(np.abs(Fi @ yu @ F - phase * xinv)))
    res_conj_reverse = float(np.max(np.abs(F @ yu @ Fi - phase * xinv)))

    gated = {
        "unitarity_FD": res_unitary,
        "fourier_fourth_power": res_f4,
        "eigen_residual": res_eigen,
        "eigen_value_power": res_eigen_power,
        "diagonalization": res_diag_forward,
        "conjugation": res_conj_exact,
    }
    return {
        "label": str(label),
        "s": label.s,
        "dim": d,
        "u": u,
        "orientation": "F_inv_y_F",
        "conjugation_rhs": "w^(r*u - q) * x_D",
        "residuals": gated,
        "informational": {
            "offdiag_F_y_F_inv": res_diag_backward,
            "conjugation_to_x_inverse": res_conj_xinv,
            "conjugation_reverse_orientation_to_x_inverse": res_conj_reverse,
        },
        "tolerance": tolerance,
        "passed": bool(max(gated.values()) < tolerance),
    }
