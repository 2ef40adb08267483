"""Dense matrix primitives used by every other module.

Matrices are plain numpy arrays of dtype float64 or complex128; integer or
lower-precision input is promoted on entry.  ``vec`` stacks columns (Fortran
order), so ``vec(A)[ (j-1)*rows + i - 1 ] == A[i-1, j-1]`` with 1-based
indices, and ``unvec`` is its exact inverse.  Factorizations are delegated to
LAPACK through numpy/scipy; failures surface as package exceptions instead of
library-specific ones.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import scipy.linalg as _sla

from .errors import ConvergenceError, SingularMatrixError

__all__ = [
    "Svd",
    "as_matrix",
    "vec",
    "unvec",
    "kron",
    "frobenius_norm",
    "spectral_norm",
    "svd",
    "pinv",
    "solve",
    "qr",
    "schur_complex",
    "eig_hermitian",
]


def as_matrix(a) -> np.ndarray:
    """Coerce ``a`` to a 2-D float64 or complex128 array."""
    arr = np.asarray(a)
    if arr.ndim != 2:
        raise ValueError(f"expected a 2-D array, got ndim={arr.ndim}")
    if np.iscomplexobj(arr):
        return arr.astype(np.complex128, copy=False)
    return arr.astype(np.float64, copy=False)


def vec(a) -> np.ndarray:
    """Stack the columns of ``a`` into a single vector."""
    return as_matrix(a).reshape(-1, order="F")


def unvec(v, rows: int, cols: int) -> np.ndarray:
    """Inverse of :func:`vec`; fails if ``len(v) != rows*cols``."""
    v = np.asarray(v)
    if v.ndim != 1:
        raise ValueError("unvec expects a 1-D vector")
    if v.size != rows * cols:
        raise ValueError(f"cannot reshape length {v.size} into {rows}x{cols}")
    return v.reshape((rows, cols), order="F")


def kron(a, b) -> np.ndarray:
    """Kronecker product with block (i,j) equal to a[i,j]*b."""
    return np.kron(as_matrix(a), as_matrix(b))


def frobenius_norm(a) -> float:
    return float(np.linalg.norm(as_matrix(a)))


def spectral_norm(a) -> float:
    """Largest singular value of ``a``."""
    a = as_matrix(a)
    if a.size == 0:
        return 0.0
    try:
        return float(np.linalg.svd(a, compute_uv=False)[0])
    except np.linalg.LinAlgError as exc:
        raise ConvergenceError(f"singular value iteration failed: {exc}") from exc


@dataclass(frozen=True)
class Svd:
    """Thin SVD ``a = u @ diag(s) @ v.conj().T`` with ``s`` non-increasing."""

    u: np.ndarray
    s: np.ndarray
    v: np.ndarray


def svd(a) -> Svd:
    a = as_matrix(a)
    try:
        u, s, vh = np.linalg.svd(a, full_matrices=False)
    except np.linalg.LinAlgError as exc:
        raise ConvergenceError(f"SVD did not converge: {exc}") from exc
    return Svd(u=u, s=s, v=vh.conj().T)


def pinv(a, tol: float | None = None) -> np.ndarray:
    """Moore-Penrose pseudoinverse via the SVD.

    Singular values at or below ``tol`` are treated as zero; the default is
    ``max(rows, cols) * eps * s_max``.
    """
    a = as_matrix(a)
    f = svd(a)
    if f.s.size == 0 or f.s[0] == 0.0:
        return np.zeros((a.shape[1], a.shape[0]), dtype=a.dtype)
    if tol is None:
        tol = max(a.shape) * np.finfo(np.float64).eps * float(f.s[0])
    keep = f.s > tol
    inv_s = 1.0 / f.s[keep]
    return (f.v[:, keep] * inv_s) @ f.u[:, keep].conj().T


def solve(a, b) -> np.ndarray:
    """Solve ``a @ x = b`` for square nonsingular ``a``."""
    a = as_matrix(a)
    b_arr = np.asarray(b)
    try:
        return np.linalg.solve(a, b_arr)
    except np.linalg.LinAlgError as exc:
        raise SingularMatrixError(f"linear solve failed: {exc}") from exc


def qr(a) -> tuple[np.ndarray, np.ndarray]:
    """Reduced QR factorization; q has orthonormal columns, r is upper triangular."""
    a = as_matrix(a)
    q, r = np.linalg.qr(a, mode="reduced")
    return q, r


def schur_complex(a) -> tuple[np.ndarray, np.ndarray]:
    """Complex Schur factorization ``a = q @ t @ q.conj().T``.

    Returns ``(t, q)`` with ``t`` upper triangular.  The input is promoted
    to complex, so the factor is triangular even for real ``a``; the
    eigenvalues sit on the diagonal of ``t``.
    """
    a = as_matrix(a)
    if a.shape[0] != a.shape[1]:
        raise ValueError("schur_complex expects a square matrix")
    if not np.all(np.isfinite(a)):
        raise ValueError("schur_complex expects finite entries")
    try:
        t, q = _sla.schur(a.astype(np.complex128, copy=False), output="complex")
    except _sla.LinAlgError as exc:
        raise ConvergenceError(f"QR iteration failed to converge: {exc}") from exc
    return t, q


def eig_hermitian(a, tol: float = 1e-12) -> np.ndarray:
    """Eigenvalues of a Hermitian matrix in ascending order.

    The input must be Hermitian up to ``tol`` relative to its norm; it is
    symmetrized before the solve so the result is exactly real.
    """
    a = as_matrix(a)
    if a.shape[0] != a.shape[1]:
        raise ValueError("eig_hermitian expects a square matrix")
    herm_defect = float(np.linalg.norm(a - a.conj().T))
    if herm_defect > tol * (1.0 + float(np.linalg.norm(a))):
        raise ValueError(
            f"matrix is not Hermitian: defect {herm_defect:.3e} exceeds tolerance"
        )
    try:
        w = np.linalg.eigvalsh(0.5 * (a + a.conj().T))
    except np.linalg.LinAlgError as exc:
        raise ConvergenceError(f"Hermitian eigensolver failed: {exc}") from exc
    return w
