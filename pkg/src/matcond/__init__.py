"""Condition numbers of matrix functions under structured perturbations.

The package computes the (Frobenius-norm) level-1 condition number of
f in {exp, log, sqrt} at a matrix A, upper and lower bounds for the level-2
condition number (the sensitivity of the condition number itself), and the
structured counterparts of both where perturbations are restricted to an
automorphism group, a Lie or Jordan algebra of a scalar product, or an upper
quasi-triangular pattern algebra.
"""

from .condition import (
    UNSTRUCTURED_EXP_SKEWHERM_LEVEL2,
    CondReport,
    ReportOptions,
    cond1_exp_normal_spectral,
    cond1_structured,
    cond1_unstructured,
    cond2_exact_exp_hermitian,
    cond2_exact_exp_skewherm,
    cond2_lower,
    cond2_upper_structured,
    cond2_upper_unstructured,
    full_report,
)
from .errors import (
    ConvergenceError,
    DomainError,
    MatcondError,
    MatrixOverflowError,
    MembershipError,
    PatternError,
    SingularMatrixError,
)
from .frechet import (
    KroneckerForm1,
    KroneckerForm2,
    frechet1,
    frechet2,
    kron_form1,
    kron_form1_dir,
    kron_form2,
)
from .linalg import (
    Svd,
    eig_hermitian,
    frobenius_norm,
    kron,
    pinv,
    qr,
    schur_complex,
    solve,
    spectral_norm,
    svd,
    unvec,
    vec,
)
from .matfun import FunctionId, apply, expm, logm, sqrtm
from .optim import NmOptions, nelder_mead
from .structures import (
    ScalarProduct,
    StructureClass,
    TangentBasis,
    adjoint,
    automorphism_class,
    basis_automorphism,
    basis_jordan_lie,
    basis_quasitriangular,
    detect_pattern,
    gen_quasitriangular,
    gen_structured,
    identity_product,
    jordan_class,
    lie_class,
    membership,
    quasi_triangular_class,
    reverse_product,
    sigma_product,
    symplectic_product,
)

__version__ = "0.1.0"
