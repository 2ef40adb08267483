"""First and second Frechet derivatives of matrix functions.

Both derivatives are read off blocks of f evaluated at an augmented block
matrix: with

    X1 = [[A, E],        X2 = [[A, E1, E2, 0 ],
          [0, A]]              [0, A,  0,  E2],
                               [0, 0,  A,  E1],
                               [0, 0,  0,  A ]]

the top-right n x n block of f(X1) is L(A, E), and the top-right block of
f(X2) (rows 1..n, columns 3n+1..4n) is the symmetric bilinear second
derivative L2(A, E1, E2).  The Kronecker representations below stack these
blocks columnwise over canonical directions; no function-specific derivative
formulas are used anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .linalg import as_matrix, unvec, vec
from .matfun import FunctionId, apply

__all__ = [
    "KroneckerForm1",
    "KroneckerForm2",
    "frechet1",
    "frechet2",
    "kron_form1",
    "kron_form1_dir",
    "kron_form2",
]


def _conforming(a, *mats) -> tuple[np.ndarray, ...]:
    a = as_matrix(a)
    n = a.shape[0]
    if a.shape[1] != n:
        raise ValueError("base point must be square")
    out = [a]
    for m in mats:
        m = as_matrix(m)
        if m.shape != (n, n):
            raise ValueError(f"direction shape {m.shape} does not match base {a.shape}")
        out.append(m)
    dtype = np.complex128 if any(np.iscomplexobj(m) for m in out) else np.float64
    return tuple(m.astype(dtype, copy=False) for m in out)


def frechet1(f: FunctionId, a, e) -> np.ndarray:
    """First Frechet derivative L(a, e) of the function ``f``."""
    a, e = _conforming(a, e)
    n = a.shape[0]
    x = np.zeros((2 * n, 2 * n), dtype=a.dtype)
    x[:n, :n] = a
    x[:n, n:] = e
    x[n:, n:] = a
    return apply(f, x)[:n, n:]


def frechet2(f: FunctionId, a, e1, e2) -> np.ndarray:
    """Second Frechet derivative L2(a, e1, e2); symmetric in e1, e2."""
    a, e1, e2 = _conforming(a, e1, e2)
    n = a.shape[0]
    x = np.zeros((4 * n, 4 * n), dtype=a.dtype)
    for k in range(4):
        x[k * n : (k + 1) * n, k * n : (k + 1) * n] = a
    x[:n, n : 2 * n] = e1
    x[:n, 2 * n : 3 * n] = e2
    x[n : 2 * n, 3 * n :] = e2
    x[2 * n : 3 * n, 3 * n :] = e1
    return apply(f, x)[:n, 3 * n :]


@dataclass(frozen=True)
class KroneckerForm1:
    """Matrix k with k @ vec(E) = vec(L(A, E)); shape n^2 x n^2."""

    k: np.ndarray
    function: FunctionId
    base_dim: int


@dataclass(frozen=True)
class KroneckerForm2:
    """Matrix k with k @ vec(Z) = vec(K1(A, Z)); shape n^4 x n^2.

    Here K1(A, Z) is the n^2 x n^2 matrix satisfying
    K1(A, Z) @ vec(E) = vec(L2(A, E, Z)).
    """

    k: np.ndarray
    function: FunctionId
    base_dim: int


def kron_form1(f: FunctionId, a) -> KroneckerForm1:
    """Kronecker representation of the first derivative at ``a``."""
    a = as_matrix(a)
    n = a.shape[0]
    cols = []
    for i in range(n * n):
        e = np.zeros(n * n)
        e[i] = 1.0
        cols.append(vec(frechet1(f, a, unvec(e, n, n))))
    # column_stack promotes to complex if any derivative stayed complex
    return KroneckerForm1(k=np.column_stack(cols), function=f, base_dim=n)


def kron_form1_dir(f: FunctionId, a, z) -> np.ndarray:
    """The matrix K1(A, Z): column i is vec(L2(A, unvec(e_i), Z))."""
    a, z = _conforming(a, z)
    n = a.shape[0]
    cols = []
    for i in range(n * n):
        e = np.zeros(n * n)
        e[i] = 1.0
        cols.append(vec(frechet2(f, a, unvec(e, n, n), z)))
    return np.column_stack(cols)


def kron_form2(f: FunctionId, a) -> KroneckerForm2:
    """Kronecker representation of the second derivative at ``a``."""
    a = as_matrix(a)
    n = a.shape[0]
    cols = []
    for j in range(n * n):
        z = np.zeros(n * n)
        z[j] = 1.0
        cols.append(vec(kron_form1_dir(f, a, unvec(z, n, n))))
    return KroneckerForm2(k=np.column_stack(cols), function=f, base_dim=n)
