"""Level-1 and level-2 condition numbers, structured and unstructured.

All quantities live in the Frobenius-norm setting: the level-1 condition
number of f at A is the spectral norm of the Kronecker form K1 of the first
Frechet derivative, and the reported level-2 quantities bound the spectral
norm of the derivative of the level-1 condition number.

Unstructured level-2 upper bound: ||K2||_2 with K2 the Kronecker form of the
second derivative.  Structured upper bound with tangent basis B (orthonormal
columns): the spectral norm of the matrix Omega whose column i stacks
vec(L2(A, E_i, E_j)) over j, E_k = unvec(B e_k); this equals
||(B B^+ (x) I) K2 B B^+||_2 by bilinearity and symmetry of L2 but costs
only p^2 second-derivative evaluations.  Lower bounds come from maximizing a
finite-difference quotient of the level-1 condition number over unit-norm
perturbation directions with a multi-start simplex search.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import (
    ConvergenceError,
    DomainError,
    MatrixOverflowError,
    MembershipError,
    SingularMatrixError,
)
from .frechet import frechet1, frechet2, kron_form1, kron_form2
from .linalg import as_matrix, eig_hermitian, qr, schur_complex, spectral_norm, svd, unvec, vec
from .matfun import FunctionId
from .optim import NmOptions, nelder_mead
from .structures import (
    StructureClass,
    TangentBasis,
    basis_automorphism,
    basis_jordan_lie,
    basis_quasitriangular,
    membership,
)

__all__ = [
    "UNSTRUCTURED_EXP_SKEWHERM_LEVEL2",
    "CondReport",
    "ReportOptions",
    "cond1_unstructured",
    "cond1_structured",
    "cond2_upper_unstructured",
    "cond2_upper_structured",
    "cond2_lower",
    "cond2_exact_exp_hermitian",
    "cond2_exact_exp_skewherm",
    "cond1_exp_normal_spectral",
    "full_report",
]

# Spectral-norm level-2 condition number of exp at any skew-Hermitian point
# without the structure restriction (the structured value is exactly 0).
UNSTRUCTURED_EXP_SKEWHERM_LEVEL2 = 1.0

_COMPUTE_ERRORS = (
    DomainError,
    ConvergenceError,
    MatrixOverflowError,
    SingularMatrixError,
)


def _orthonormal_columns(basis: TangentBasis) -> np.ndarray:
    """Orthonormal matrix with the same column span as the basis."""
    if basis.orthonormal:
        return basis.b
    q, _ = qr(basis.b)
    return q


def _frechet1_columns(f: FunctionId, a: np.ndarray, cols: np.ndarray) -> np.ndarray:
    """Matrix whose column i is vec(L(a, unvec(cols[:, i])))."""
    n = a.shape[0]
    # column_stack promotes to complex when a derivative keeps a residual
    # imaginary part (log/sqrt near a branch cut on real input)
    return np.column_stack(
        [vec(frechet1(f, a, unvec(cols[:, i], n, n))) for i in range(cols.shape[1])]
    )


def cond1_unstructured(f: FunctionId, a) -> float:
    """Frobenius-norm level-1 condition number: ||K1||_2."""
    a = as_matrix(a)
    return spectral_norm(kron_form1(f, a).k)


def cond1_structured(f: FunctionId, a, basis: TangentBasis) -> float:
    """Structured level-1 condition number ||K1 b b^+||_2.

    Evaluated as ||K1 Q||_2 for an orthonormal Q spanning the basis columns,
    which is the same number but needs only p derivative evaluations.
    """
    a = as_matrix(a)
    q = _orthonormal_columns(basis)
    return spectral_norm(_frechet1_columns(f, a, q))


def cond2_upper_unstructured(f: FunctionId, a) -> float:
    """Upper bound for the unstructured level-2 condition number: ||K2||_2."""
    a = as_matrix(a)
    return spectral_norm(kron_form2(f, a).k)


def cond2_upper_structured(f: FunctionId, a, basis: TangentBasis) -> float:
    """Structured level-2 upper bound from p^2 second-derivative blocks.

    A non-orthonormal basis is replaced by the Q-factor of its QR
    factorization first (same span), which the stacked-column evaluation
    requires.
    """
    a = as_matrix(a)
    n = a.shape[0]
    q = _orthonormal_columns(basis)
    p = q.shape[1]
    dirs = [unvec(q[:, i], n, n) for i in range(p)]
    columns = []
    for i in range(p):
        psi = np.column_stack(
            [vec(frechet2(f, a, dirs[i], dirs[j])) for j in range(p)]
        )
        columns.append(psi.reshape(-1, order="F"))
    return spectral_norm(np.column_stack(columns))


def _cond2_lower_impl(
    f: FunctionId,
    a: np.ndarray,
    basis: TangentBasis | None,
    eps: float,
    opt: NmOptions,
) -> tuple[float, np.ndarray, int]:
    n = a.shape[0]
    if basis is None:
        bmat = None
        dim = n * n
        q = np.eye(n * n)
    else:
        bmat = basis.b
        dim = basis.p
        q = _orthonormal_columns(basis)
    base = spectral_norm(_frechet1_columns(f, a, q))
    evals = [0]

    def direction(y: np.ndarray) -> np.ndarray | None:
        z = unvec(bmat @ y, n, n) if bmat is not None else unvec(y, n, n)
        nz = float(np.linalg.norm(z))
        if not nz > 1e-14 * (1.0 + float(np.linalg.norm(y))):
            return None  # all-zero proposal; the quotient is undefined at Z = 0
        return z / nz

    def gain(y: np.ndarray) -> float:
        evals[0] += 1
        z = direction(np.asarray(y, dtype=float))
        if z is None:
            return 0.0
        try:
            pert = spectral_norm(_frechet1_columns(f, a + eps * z, q))
        except _COMPUTE_ERRORS:
            return 0.0  # outside the domain of f: score as no observed variation
        return abs(pert - base) / eps

    rng = np.random.default_rng(opt.seed)
    best_val = -math.inf
    best_y = None
    for _ in range(max(1, opt.restarts)):
        y0 = rng.standard_normal(dim)
        y_opt, neg_val = nelder_mead(lambda y: -gain(y), y0, opt)
        if -neg_val > best_val:
            best_val = -neg_val
            best_y = y_opt
    z_best = direction(best_y) if best_y is not None else None
    if z_best is None:
        z_best = np.zeros((n, n))
    return max(best_val, 0.0), z_best, evals[0]


def cond2_lower(
    f: FunctionId,
    a,
    basis: TangentBasis | None = None,
    eps: float = 1e-3,
    opt: NmOptions | None = None,
) -> tuple[float, np.ndarray]:
    """Lower bound for the level-2 condition number by direct search.

    Maximizes |cond1(f, a + eps*Z) - cond1(f, a)| / eps over unit Frobenius
    norm directions Z, restricted to the span of ``basis`` when one is given
    (in which case cond1 means the structured variant with that same basis).
    Runs ``opt.restarts`` seeded simplex searches and returns the best value
    together with the maximizing direction.
    """
    a = as_matrix(a)
    if eps <= 0.0:
        raise ValueError("eps must be positive")
    value, z_best, _ = _cond2_lower_impl(f, a, basis, eps, opt or NmOptions())
    return value, z_best


def cond2_exact_exp_hermitian(a) -> float:
    """Exact spectral-norm level-2 condition number of exp at Hermitian a."""
    w = eig_hermitian(as_matrix(a))
    return float(np.exp(w[-1]))


def cond2_exact_exp_skewherm(a) -> float:
    """Exact structured level-2 condition number of exp at skew-Hermitian a.

    The structured value is exactly 0; the unstructured spectral-norm value
    at the same points is the constant
    :data:`UNSTRUCTURED_EXP_SKEWHERM_LEVEL2`.
    """
    a = as_matrix(a)
    defect = float(np.linalg.norm(a + a.conj().T))
    if defect > 1e-12 * (1.0 + float(np.linalg.norm(a))):
        raise ValueError(f"matrix is not skew-Hermitian: defect {defect:.3e}")
    return 0.0


def cond1_exp_normal_spectral(a) -> float:
    """Spectral-norm level-1 condition number of exp at a normal matrix.

    Equals exp(alpha(a)) with alpha the spectral abscissa; the input must be
    normal to tolerance 1e-10 * ||a||_F^2.
    """
    a = as_matrix(a)
    defect = float(np.linalg.norm(a.conj().T @ a - a @ a.conj().T))
    if defect > 1e-10 * float(np.linalg.norm(a)) ** 2:
        raise ValueError(f"matrix is not normal: defect {defect:.3e}")
    t, _ = schur_complex(a)
    alpha = float(np.max(np.diag(t).real)) if a.size else 0.0
    return float(np.exp(alpha))


@dataclass
class ReportOptions:
    """Knobs for :func:`full_report`."""

    eps: float = 1e-3
    nm: NmOptions = field(default_factory=NmOptions)
    compute_lower: bool = True
    membership_tol: float = 1e-8


@dataclass
class CondReport:
    """All condition-number quantities for one (function, matrix, class).

    Entries that could not be computed (for example a domain violation of f
    at the base point) are None rather than aborting the whole report.
    """

    function: FunctionId
    n: int
    structure: str
    kappa2: float
    cond1_unstructured: float | None
    cond1_structured: float | None
    lvl2_upper_unstructured: float | None
    lvl2_upper_structured: float | None
    lvl2_lower_unstructured: float | None
    lvl2_lower_structured: float | None
    epsilon_used: float
    optimizer_iters: int


def _basis_for(a: np.ndarray, cls: StructureClass) -> TangentBasis:
    n = a.shape[0]
    if cls.kind in ("jordan", "lie"):
        return basis_jordan_lie(cls, n)
    if cls.kind == "automorphism":
        return basis_automorphism(a, cls.scalar_product)
    return basis_quasitriangular(cls.pattern_d, n)


def full_report(
    f: FunctionId,
    a,
    cls: StructureClass,
    opts: ReportOptions | None = None,
) -> CondReport:
    """Compute every bound of the report for ``a`` in class ``cls``."""
    opts = opts or ReportOptions()
    a = as_matrix(a)
    n = a.shape[0]
    ok, residual = membership(a, cls, tol=opts.membership_tol)
    if not ok:
        raise MembershipError(
            f"matrix is not in class {cls.label()}: residual {residual:.3e}"
        )
    basis = _basis_for(a, cls)

    s = svd(a).s
    kappa2 = float(s[0] / s[-1]) if s[-1] > 0.0 else math.inf

    def attempt(fn):
        try:
            return fn()
        except _COMPUTE_ERRORS:
            return None

    c1u = attempt(lambda: cond1_unstructured(f, a))
    c1s = attempt(lambda: cond1_structured(f, a, basis))
    ub_u = attempt(lambda: cond2_upper_unstructured(f, a))
    ub_s = attempt(lambda: cond2_upper_structured(f, a, basis))

    lb_u = lb_s = None
    iters = 0
    if opts.compute_lower:
        try:
            lb_u, _, used = _cond2_lower_impl(f, a, None, opts.eps, opts.nm)
            iters += used
        except _COMPUTE_ERRORS:
            lb_u = None
        try:
            lb_s, _, used = _cond2_lower_impl(f, a, basis, opts.eps, opts.nm)
            iters += used
        except _COMPUTE_ERRORS:
            lb_s = None

    return CondReport(
        function=f,
        n=n,
        structure=cls.label(),
        kappa2=kappa2,
        cond1_unstructured=c1u,
        cond1_structured=c1s,
        lvl2_upper_unstructured=ub_u,
        lvl2_upper_structured=ub_s,
        lvl2_lower_unstructured=lb_u,
        lvl2_lower_structured=lb_s,
        epsilon_used=opts.eps,
        optimizer_iters=iters,
    )
