"""Built-in benchmark matrices for the triangular-factor experiment.

Thirteen small matrices (a1 .. a13) known to stress matrix-exponential
algorithms -- nonnormal, badly scaled, or nearly defective -- plus six
classic closed-form test matrices (frank, grcar, clement, lesp, redheff,
smoke) at size 10.  The experiment driver triangularizes each matrix via a
complex Schur decomposition and bounds the condition numbers of the
triangular factor.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

__all__ = [
    "BenchmarkMatrix",
    "benchmark_set",
    "frank_matrix",
    "grcar_matrix",
    "clement_matrix",
    "lesp_matrix",
    "redheffer_matrix",
    "smoke_matrix",
]

_GALLERY_N = 10


@dataclass(frozen=True)
class BenchmarkMatrix:
    """A named test matrix.

    ``scale_by_norm`` marks matrices whose entries are rescaled by
    10/||A||_1 before use so that the exponential does not overflow; none of
    the built-in set needs it, the flag exists for callers adding their own
    growth-prone matrices.
    """

    name: str
    a: np.ndarray
    scale_by_norm: bool = False

    @property
    def n(self) -> int:
        return self.a.shape[0]

    def matrix(self) -> np.ndarray:
        if self.scale_by_norm:
            nrm = np.linalg.norm(self.a, 1)
            return self.a * (10.0 / nrm)
        return self.a.copy()


def frank_matrix(n: int) -> np.ndarray:
    """Upper Hessenberg, a(i,j) = n+1-max(i,j) for j >= i-1 (1-based)."""
    a = np.zeros((n, n))
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if j >= i - 1:
                a[i - 1, j - 1] = n + 1 - max(i, j)
    return a


def grcar_matrix(n: int, k: int = 3) -> np.ndarray:
    """-1 on the subdiagonal, 1 on the diagonal and first k superdiagonals."""
    a = np.zeros((n, n))
    for i in range(n):
        for j in range(n):
            if j == i - 1:
                a[i, j] = -1.0
            elif i <= j <= i + k:
                a[i, j] = 1.0
    return a


def clement_matrix(n: int) -> np.ndarray:
    """Tridiagonal, zero diagonal, sub = 1..n-1, super = n-1..1."""
    a = np.zeros((n, n))
    for i in range(1, n):
        a[i, i - 1] = float(i)
        a[i - 1, i] = float(n - i)
    return a


def lesp_matrix(n: int) -> np.ndarray:
    """Tridiagonal with sensitive real eigenvalues near -(2k+3)."""
    a = np.zeros((n, n))
    for i in range(1, n + 1):
        a[i - 1, i - 1] = -(2.0 * i + 3.0)
    for i in range(1, n):
        a[i - 1, i] = float(i + 1)
        a[i, i - 1] = 1.0 / (i + 1)
    return a


def redheffer_matrix(n: int) -> np.ndarray:
    """a(i,j) = 1 if j = 1 or i divides j, else 0 (1-based)."""
    a = np.zeros((n, n))
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if j == 1 or j % i == 0:
                a[i - 1, j - 1] = 1.0
    return a


def smoke_matrix(n: int) -> np.ndarray:
    """Complex: roots of unity on the diagonal, 1s above, corner closing 1."""
    w = np.exp(2j * np.pi / n)
    a = np.zeros((n, n), dtype=complex)
    for k in range(1, n + 1):
        a[k - 1, k - 1] = w**k
    for i in range(n - 1):
        a[i, i + 1] = 1.0
    a[n - 1, 0] = 1.0
    return a


def _a1() -> np.ndarray:
    return np.array(
        [
            [-131.0, 19.0, 18.0],
            [-390.0, 56.0, 54.0],
            [-387.0, 57.0, 52.0],
        ]
    )


def _a2() -> np.ndarray:
    a = np.zeros((10, 10))
    for i in range(9):
        a[i, i + 1] = 1.0
    a[9, 0] = 1e-10
    return a


def _a3() -> np.ndarray:
    a = np.zeros((8, 8))
    a[:4, :4] = 1.3
    a[:4, 4:] = 1e6
    a[4:, 4:] = -1.3
    return a / 8.0


def _a4() -> np.ndarray:
    e = np.exp(0.1)
    return np.array([[e, 1e6 * e], [0.0, 1e-8 + e]])


def _a5() -> np.ndarray:
    return np.array(
        [
            [48.0, -49.0, 50.0, 49.0],
            [0.0, -2.0, 100.0, 0.0],
            [0.0, -1.0, -2.0, 1.0],
            [-50.0, 50.0, 50.0, -52.0],
        ]
    )


def _a6() -> np.ndarray:
    diag = np.array([-3.5, -2.5, -1.5, -0.5, 0.5, 1.5, 2.5, 3.5]) * 1j
    a = np.triu(np.ones((8, 8), dtype=complex), k=1)
    np.fill_diagonal(a, diag)
    super_diag = [-12.0, -8.0, -4.0, 0.0, 4.0, 8.0, 12.0]
    for i, v in enumerate(super_diag):
        a[i, i + 1] = v
    return a


def _a7() -> np.ndarray:
    diag = [-3.5, -2.5, -1.5, -0.5, 0.5, 1.5, 2.5, 3.0]
    a = np.diag(np.array(diag))
    for i in range(7):
        a[i, i + 1] = 1.0
    return a


def _a8() -> np.ndarray:
    return np.array(
        [
            [-149.0, -50.0, -154.0],
            [537.0, 180.0, 546.0],
            [-27.0, -9.0, -25.0],
        ]
    )


def _a9() -> np.ndarray:
    return np.array(
        [
            [1.0 + 1e-7, 1e5, 1e4],
            [0.0, 1.0 + 1e-1, 1e5],
            [0.0, 0.0, 11.0],
        ]
    )


def _near_pi_pair(offdiag: float, defective: bool) -> np.ndarray:
    top = np.exp(1j * (np.pi - 1e-7))
    if defective:
        bottom = (1.0 + 1e-7j) * np.exp(1j * (np.pi - 1e-7))
    else:
        bottom = np.exp(1j * (np.pi + 1e-7))
    return np.array([[top, offdiag], [0.0, bottom]], dtype=complex)


def benchmark_set() -> list[BenchmarkMatrix]:
    """The deterministic list of built-in benchmark matrices."""
    items = [
        BenchmarkMatrix("A1", _a1()),
        BenchmarkMatrix("A2", _a2()),
        BenchmarkMatrix("A3", _a3()),
        BenchmarkMatrix("A4", _a4()),
        BenchmarkMatrix("A5", _a5()),
        BenchmarkMatrix("A6", _a6()),
        BenchmarkMatrix("A7", _a7()),
        BenchmarkMatrix("A8", _a8()),
        BenchmarkMatrix("A9", _a9()),
        BenchmarkMatrix("A10", _near_pi_pair(1.0, defective=False)),
        BenchmarkMatrix("A11", _near_pi_pair(1000.0, defective=False)),
        BenchmarkMatrix("A12", _near_pi_pair(1.0, defective=True)),
        BenchmarkMatrix("A13", _near_pi_pair(1000.0, defective=True)),
        BenchmarkMatrix("frank", frank_matrix(_GALLERY_N)),
        BenchmarkMatrix("grcar", grcar_matrix(_GALLERY_N)),
        BenchmarkMatrix("clement", clement_matrix(_GALLERY_N)),
        BenchmarkMatrix("lesp", lesp_matrix(_GALLERY_N)),
        BenchmarkMatrix("redheff", redheffer_matrix(_GALLERY_N)),
        BenchmarkMatrix("smoke", smoke_matrix(_GALLERY_N)),
    ]
    return items
