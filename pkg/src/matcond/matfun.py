"""Matrix functions: exponential, principal logarithm, principal square root.

``expm`` uses scaling-and-squaring with diagonal Pade approximants; the
degree table and the corresponding 1-norm thresholds are the module constants
below.  ``sqrtm`` and ``logm`` always route through the complex Schur form,
even for real input, and drop imaginary parts that are negligible relative to
the result when the input was real.  Both require the spectrum to stay off
the closed negative real axis (principal branch).
"""

from __future__ import annotations

import enum
import math

import numpy as np

from .errors import ConvergenceError, DomainError, MatrixOverflowError
from .linalg import as_matrix, frobenius_norm, schur_complex, solve

__all__ = ["FunctionId", "expm", "sqrtm", "logm", "apply"]


class FunctionId(enum.Enum):
    """Functions the condition-number machinery knows how to apply."""

    EXP = "exp"
    LOG = "log"
    SQRT = "sqrt"
    SQUARE = "square"
    INVERSE = "inverse"

    @classmethod
    def parse(cls, name: str) -> "FunctionId":
        try:
            return cls(name.strip().lower())
        except ValueError:
            valid = ", ".join(m.value for m in cls)
            raise ValueError(f"unknown function {name!r}; expected one of {valid}")


# Pade numerator coefficients b_0..b_m for exp, indexed by degree.
_EXP_PADE_COEFFS = {
    3: (120.0, 60.0, 12.0, 1.0),
    5: (30240.0, 15120.0, 3360.0, 420.0, 30.0, 1.0),
    7: (17297280.0, 8648640.0, 1995840.0, 277200.0, 25200.0, 1512.0, 56.0, 1.0),
    9: (
        17643225600.0,
        8821612800.0,
        2075673600.0,
        302702400.0,
        30270240.0,
        2162160.0,
        110880.0,
        3960.0,
        90.0,
        1.0,
    ),
    13: (
        64764752532480000.0,
        32382376266240000.0,
        7771770303897600.0,
        1187353796428800.0,
        129060195264000.0,
        10559470521600.0,
        670442572800.0,
        33522128640.0,
        1323241920.0,
        40840800.0,
        960960.0,
        16380.0,
        182.0,
        1.0,
    ),
}

# Largest 1-norm for which the degree-m approximant is used without scaling.
_EXP_PADE_THETA = {
    3: 1.495585217958292e-2,
    5: 2.539398330063230e-1,
    7: 9.504178996162932e-1,
    9: 2.097847961257068,
    13: 5.371920351148152,
}

# Inverse scaling-and-squaring for log: square-root until the triangular
# factor satisfies ||T - I||_1 <= theta, then apply the degree-7 diagonal
# Pade approximant of log(I + X).
_LOG_PADE_DEGREE = 7
_LOG_PADE_THETA = 0.2879093714241194
_LOG_MAX_SQRTS = 64

# Nodes/weights of Gauss-Legendre quadrature on [0, 1]; the m-point rule
# applied to log(I+X) = int_0^1 X (I + t X)^{-1} dt reproduces the [m/m]
# diagonal Pade approximant exactly.
_gl_nodes, _gl_weights = np.polynomial.legendre.leggauss(_LOG_PADE_DEGREE)
_LOG_PADE_NODES = 0.5 * (_gl_nodes + 1.0)
_LOG_PADE_WEIGHTS = 0.5 * _gl_weights


def _square_input(a) -> np.ndarray:
    a = as_matrix(a)
    if a.shape[0] != a.shape[1]:
        raise ValueError("matrix function input must be square")
    return a


def _exp_pade(a: np.ndarray, m: int) -> np.ndarray:
    """Evaluate the degree-m diagonal Pade approximant of exp at ``a``."""
    b = _EXP_PADE_COEFFS[m]
    n = a.shape[0]
    ident = np.eye(n, dtype=a.dtype)
    a2 = a @ a
    if m == 13:
        a4 = a2 @ a2
        a6 = a2 @ a4
        u = a @ (
            a6 @ (b[13] * a6 + b[11] * a4 + b[9] * a2)
            + b[7] * a6
            + b[5] * a4
            + b[3] * a2
            + b[1] * ident
        )
        v = (
            a6 @ (b[12] * a6 + b[10] * a4 + b[8] * a2)
            + b[6] * a6
            + b[4] * a4
            + b[2] * a2
            + b[0] * ident
        )
    else:
        powers = {0: ident, 2: a2}
        for k in range(4, m, 2):
            powers[k] = powers[k - 2] @ a2
        u = np.zeros_like(a)
        v = np.zeros_like(a)
        for k in range(0, m + 1, 2):
            v = v + b[k] * powers[k]
        usum = np.zeros_like(a)
        for k in range(1, m + 1, 2):
            usum = usum + b[k] * powers[k - 1]
        u = a @ usum
    return solve(v - u, v + u)


def expm(a) -> np.ndarray:
    """Matrix exponential via scaling-and-squaring."""
    a = _square_input(a)
    if not np.all(np.isfinite(a)):
        raise MatrixOverflowError("expm input contains non-finite entries")
    nrm = float(np.linalg.norm(a, 1)) if a.size else 0.0
    for m in (3, 5, 7, 9):
        if nrm <= _EXP_PADE_THETA[m]:
            return _exp_pade(a, m)
    s = 0
    if nrm > _EXP_PADE_THETA[13]:
        s = int(math.ceil(math.log2(nrm / _EXP_PADE_THETA[13])))
    f = _exp_pade(a / (2.0**s), 13)
    for _ in range(s):
        f = f @ f
    if not np.all(np.isfinite(f)):
        raise MatrixOverflowError("expm overflowed during squaring")
    return f


def _check_spectrum_off_negative_axis(tdiag: np.ndarray, scale: float, what: str):
    tol = 1e-13 * (1.0 + scale)
    for lam in tdiag:
        if abs(lam) <= tol:
            raise DomainError(f"{what} undefined: eigenvalue {lam:.3e} is (numerically) zero")
        if lam.real < 0.0 and abs(lam.imag) <= tol:
            raise DomainError(
                f"{what} undefined: eigenvalue {lam:.3e} lies on the negative real axis"
            )


def _sqrtm_triu(t: np.ndarray) -> np.ndarray:
    """Principal square root of an upper triangular matrix (column sweep)."""
    n = t.shape[0]
    s = np.zeros_like(t)
    d = np.sqrt(np.diag(t).astype(np.complex128))
    for j in range(n):
        s[j, j] = d[j]
        for i in range(j - 1, -1, -1):
            num = t[i, j] - s[i, i + 1 : j] @ s[i + 1 : j, j]
            den = s[i, i] + s[j, j]
            if abs(den) <= 1e-14 * (abs(d[i]) + abs(d[j])) or den == 0.0:
                raise ConvergenceError(
                    "square-root recurrence broke down: s_ii + s_jj vanished"
                )
            s[i, j] = num / den
    return s


def _demote_if_real(a_was_real: bool, x: np.ndarray) -> np.ndarray:
    if not a_was_real:
        return x
    scale = frobenius_norm(x)
    if float(np.linalg.norm(x.imag)) <= 1e-12 * scale:
        return np.ascontiguousarray(x.real)
    return x


def sqrtm(a) -> np.ndarray:
    """Principal matrix square root via the complex Schur form."""
    a = _square_input(a)
    was_real = not np.iscomplexobj(a)
    t, q = schur_complex(a)
    _check_spectrum_off_negative_axis(np.diag(t), frobenius_norm(a), "sqrtm")
    s = _sqrtm_triu(t)
    x = q @ s @ q.conj().T
    return _demote_if_real(was_real, x)


def _log_pade(x: np.ndarray) -> np.ndarray:
    """Degree-7 diagonal Pade approximant of log(I + x), partial fractions."""
    n = x.shape[0]
    ident = np.eye(n, dtype=np.complex128)
    out = np.zeros((n, n), dtype=np.complex128)
    for node, weight in zip(_LOG_PADE_NODES, _LOG_PADE_WEIGHTS):
        out = out + weight * solve(ident + node * x, x)
    return out


def logm(a) -> np.ndarray:
    """Principal matrix logarithm via inverse scaling-and-squaring."""
    a = _square_input(a)
    was_real = not np.iscomplexobj(a)
    t, q = schur_complex(a)
    _check_spectrum_off_negative_axis(np.diag(t), frobenius_norm(a), "logm")
    n = t.shape[0]
    ident = np.eye(n, dtype=np.complex128)
    k = 0
    while float(np.linalg.norm(t - ident, 1)) > _LOG_PADE_THETA:
        if k >= _LOG_MAX_SQRTS:
            raise ConvergenceError("logm: square-root iteration cap exceeded")
        t = _sqrtm_triu(t)
        k += 1
    x = (2.0**k) * _log_pade(t - ident)
    out = q @ x @ q.conj().T
    return _demote_if_real(was_real, out)


def apply(f: FunctionId, a) -> np.ndarray:
    """Evaluate the matrix function named by ``f`` at ``a``."""
    a = _square_input(a)
    if f is FunctionId.EXP:
        return expm(a)
    if f is FunctionId.LOG:
        return logm(a)
    if f is FunctionId.SQRT:
        return sqrtm(a)
    if f is FunctionId.SQUARE:
        return a @ a
    if f is FunctionId.INVERSE:
        return solve(a, np.eye(a.shape[0], dtype=a.dtype))
    raise ValueError(f"unsupported function id: {f!r}")
