"""Scalar products, structured matrix classes, tangent bases and generators.

A scalar product is defined by a nonsingular matrix M; the adjoint of A with
respect to it is M^{-1} A^T M (bilinear form) or M^{-1} A^* M (sesquilinear).
Supported M:

    identity    M = I_n
    sigma       M = diag(I_p, -I_q)          (p + q = n)
    reverse     M = R_n, the flip permutation (anti-identity)
    symplectic  M = J = [[0, I_m], [-I_m, 0]] (n = 2m)

All four are orthogonal, and their inverses are known in closed form
(I, Sigma and R are involutory, J^{-1} = -J), so adjoints never require a
generic inversion.  mu denotes the sign in M = mu * M^T: +1 for identity,
sigma and reverse, -1 for the symplectic form.

Structure classes: the Jordan algebra (A* = A), the Lie algebra (A* = -A) and
the automorphism group (A* = A^{-1}) of a scalar product, plus the algebra of
upper quasi-triangular matrices with subdiagonal pattern d (d_i = 1 allows a
nonzero (i+1, i) entry; no two consecutive ones).
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import MembershipError, PatternError
from .linalg import as_matrix, pinv, unvec, vec
from .matfun import expm

__all__ = [
    "ScalarProduct",
    "identity_product",
    "sigma_product",
    "reverse_product",
    "symplectic_product",
    "StructureClass",
    "jordan_class",
    "lie_class",
    "automorphism_class",
    "quasi_triangular_class",
    "TangentBasis",
    "adjoint",
    "membership",
    "basis_jordan_lie",
    "basis_automorphism",
    "basis_quasitriangular",
    "gen_structured",
    "gen_quasitriangular",
    "detect_pattern",
]

_GENERATOR_KINDS = ("skew_symmetric", "hamiltonian", "orthogonal", "symplectic", "perplectic")


@dataclass(frozen=True)
class ScalarProduct:
    """One of the four supported scalar products on R^n (or C^n)."""

    kind: str  # 'identity' | 'sigma' | 'reverse' | 'symplectic'
    n: int
    p: int = 0  # sigma splitting, p + q = n
    q: int = 0
    form: str = "bilinear"  # 'bilinear' | 'sesquilinear'

    def __post_init__(self):
        if self.kind not in ("identity", "sigma", "reverse", "symplectic"):
            raise ValueError(f"unknown scalar product kind {self.kind!r}")
        if self.form not in ("bilinear", "sesquilinear"):
            raise ValueError(f"unknown form {self.form!r}")
        if self.n < 1:
            raise ValueError("scalar product dimension must be positive")
        if self.kind == "sigma" and self.p + self.q != self.n:
            raise ValueError("sigma product needs p + q = n")
        if self.kind == "symplectic" and self.n % 2 != 0:
            raise ValueError("symplectic product needs even dimension")

    @property
    def mu(self) -> int:
        """Sign in M = mu * M^T."""
        return -1 if self.kind == "symplectic" else 1

    def matrix(self) -> np.ndarray:
        if self.kind == "identity":
            return np.eye(self.n)
        if self.kind == "sigma":
            return np.diag(np.concatenate([np.ones(self.p), -np.ones(self.q)]))
        if self.kind == "reverse":
            return np.eye(self.n)[::-1].copy()
        m = self.n // 2
        j = np.zeros((self.n, self.n))
        j[:m, m:] = np.eye(m)
        j[m:, :m] = -np.eye(m)
        return j

    def inverse_matrix(self) -> np.ndarray:
        """Closed-form M^{-1} (no generic inversion)."""
        if self.kind == "symplectic":
            return -self.matrix()
        return self.matrix()


def identity_product(n: int, form: str = "bilinear") -> ScalarProduct:
    return ScalarProduct(kind="identity", n=n, form=form)


def sigma_product(p: int, q: int, form: str = "bilinear") -> ScalarProduct:
    return ScalarProduct(kind="sigma", n=p + q, p=p, q=q, form=form)


def reverse_product(n: int, form: str = "bilinear") -> ScalarProduct:
    return ScalarProduct(kind="reverse", n=n, form=form)


def symplectic_product(n: int, form: str = "bilinear") -> ScalarProduct:
    return ScalarProduct(kind="symplectic", n=n, form=form)


def adjoint(a, sp: ScalarProduct) -> np.ndarray:
    """Adjoint of ``a`` with respect to the scalar product ``sp``."""
    a = as_matrix(a)
    if a.shape != (sp.n, sp.n):
        raise ValueError(f"matrix shape {a.shape} does not match product dimension {sp.n}")
    at = a.conj().T if sp.form == "sesquilinear" else a.T
    return sp.inverse_matrix() @ at @ sp.matrix()


def _validate_pattern(d) -> tuple[int, ...]:
    d = tuple(int(x) for x in d)
    if any(x not in (0, 1) for x in d):
        raise PatternError("pattern entries must be 0 or 1")
    if any(d[i] == 1 and d[i + 1] == 1 for i in range(len(d) - 1)):
        raise PatternError("pattern must not contain consecutive ones")
    return d


@dataclass(frozen=True)
class StructureClass:
    """A structured matrix class the bounds can be restricted to."""

    kind: str  # 'jordan' | 'lie' | 'automorphism' | 'quasi_triangular'
    scalar_product: ScalarProduct | None = None
    pattern_d: tuple[int, ...] | None = None

    def __post_init__(self):
        if self.kind in ("jordan", "lie", "automorphism"):
            if self.scalar_product is None:
                raise ValueError(f"{self.kind} class needs a scalar product")
        elif self.kind == "quasi_triangular":
            if self.pattern_d is None:
                raise ValueError("quasi_triangular class needs a pattern")
            object.__setattr__(self, "pattern_d", _validate_pattern(self.pattern_d))
        else:
            raise ValueError(f"unknown structure kind {self.kind!r}")

    @property
    def s(self) -> int | None:
        """Sign in A* = s A: +1 for Jordan, -1 for Lie."""
        if self.kind == "jordan":
            return 1
        if self.kind == "lie":
            return -1
        return None

    def label(self) -> str:
        if self.kind == "quasi_triangular":
            return "quasi_triangular"
        return f"{self.kind}:{self.scalar_product.kind}"


def jordan_class(sp: ScalarProduct) -> StructureClass:
    return StructureClass(kind="jordan", scalar_product=sp)


def lie_class(sp: ScalarProduct) -> StructureClass:
    return StructureClass(kind="lie", scalar_product=sp)


def automorphism_class(sp: ScalarProduct) -> StructureClass:
    return StructureClass(kind="automorphism", scalar_product=sp)


def quasi_triangular_class(d) -> StructureClass:
    return StructureClass(kind="quasi_triangular", pattern_d=tuple(d))


def _forbidden_mask(n: int, d: tuple[int, ...]) -> np.ndarray:
    """Boolean mask of entries that must vanish for pattern ``d``."""
    mask = np.tril(np.ones((n, n), dtype=bool), k=-1)
    for i, di in enumerate(d):
        if di == 1:
            mask[i + 1, i] = False
    return mask


def membership(a, cls: StructureClass, tol: float = 1e-8) -> tuple[bool, float]:
    """Test ``a`` for membership in ``cls``.

    Returns ``(ok, residual)`` where the residual is the Frobenius norm of
    the defining equation's defect and ``ok`` means
    ``residual <= tol * (1 + ||a||_F)``.
    """
    a = as_matrix(a)
    n = a.shape[0]
    if a.shape[1] != n:
        raise ValueError("membership expects a square matrix")
    if cls.kind == "quasi_triangular":
        d = cls.pattern_d
        if len(d) != n - 1:
            raise PatternError(f"pattern length {len(d)} does not fit size {n}")
        residual = float(np.linalg.norm(a[_forbidden_mask(n, d)]))
    else:
        star = adjoint(a, cls.scalar_product)
        if cls.kind == "jordan":
            residual = float(np.linalg.norm(star - a))
        elif cls.kind == "lie":
            residual = float(np.linalg.norm(star + a))
        else:
            residual = float(np.linalg.norm(star @ a - np.eye(n)))
    ok = residual <= tol * (1.0 + float(np.linalg.norm(a)))
    return ok, residual


@dataclass(frozen=True)
class TangentBasis:
    """Basis matrix b (n^2 x p) whose columns span vec'd structured directions."""

    b: np.ndarray
    orthonormal: bool
    pinv_b: np.ndarray = field(repr=False)

    @property
    def p(self) -> int:
        return self.b.shape[1]

    @property
    def dim(self) -> int:
        return self.b.shape[1]


def _pair_columns(n: int, sign: int) -> np.ndarray:
    """Columns (e_{(i-1)n+j} + sign * e_{(j-1)n+i})/sqrt(2), 1 <= i < j <= n,
    plus the diagonal columns e_{(i-1)n+i} when sign = +1."""
    cols = []
    inv_sqrt2 = 1.0 / np.sqrt(2.0)
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            v = np.zeros(n * n)
            v[(i - 1) * n + j - 1] = inv_sqrt2
            v[(j - 1) * n + i - 1] += sign * inv_sqrt2
            cols.append(v)
    if sign == 1:
        for i in range(1, n + 1):
            v = np.zeros(n * n)
            v[(i - 1) * n + i - 1] = 1.0
            cols.append(v)
    return np.column_stack(cols) if cols else np.zeros((n * n, 0))


def _left_multiply_columns(m: np.ndarray, d: np.ndarray, n: int) -> np.ndarray:
    """Apply vec(X) -> vec(M X) to every column of ``d``."""
    out = np.empty_like(d)
    for k in range(d.shape[1]):
        out[:, k] = vec(m @ unvec(d[:, k], n, n))
    return out


def basis_jordan_lie(cls: StructureClass, n: int) -> TangentBasis:
    """Orthonormal basis of the Jordan or Lie algebra of a scalar product."""
    if cls.kind not in ("jordan", "lie"):
        raise ValueError("basis_jordan_lie expects a jordan or lie class")
    sp = cls.scalar_product
    if sp.form != "bilinear":
        raise ValueError("tangent bases are implemented for bilinear forms only")
    if sp.n != n:
        raise ValueError(f"dimension {n} does not match scalar product ({sp.n})")
    sign = sp.mu * cls.s
    d = _pair_columns(n, sign)
    b = _left_multiply_columns(sp.inverse_matrix(), d, n)
    return TangentBasis(b=b, orthonormal=True, pinv_b=b.T.copy())


def basis_automorphism(a, sp: ScalarProduct, tol: float = 1e-8) -> TangentBasis:
    """Basis of the tangent space of the automorphism group at ``a``.

    Columns are vec(A M^{-1} X) over the Lie-algebra basis directions
    vec(M^{-1} X); not orthonormal in general.
    """
    a = as_matrix(a)
    n = sp.n
    ok, residual = membership(a, automorphism_class(sp), tol=tol)
    if not ok:
        raise MembershipError(
            f"matrix is not in the automorphism group: residual {residual:.3e}"
        )
    sign = -sp.mu  # mu * s with s = -1 for the Lie algebra
    d = _pair_columns(n, sign)
    b = _left_multiply_columns(a @ sp.inverse_matrix(), d, n)
    return TangentBasis(b=b, orthonormal=False, pinv_b=pinv(b))


def basis_quasitriangular(d, n: int) -> TangentBasis:
    """Canonical orthonormal basis of the quasi-triangular pattern algebra."""
    d = _validate_pattern(d)
    if len(d) != n - 1:
        raise PatternError(f"pattern length {len(d)} does not fit size {n}")
    cols = []
    for j in range(1, n + 1):
        for i in range(1, j + 1):
            v = np.zeros(n * n)
            v[(j - 1) * n + i - 1] = 1.0
            cols.append(v)
    for j in range(1, n):
        if d[j - 1] == 1:
            v = np.zeros(n * n)
            v[(j - 1) * n + j] = 1.0  # entry (j+1, j)
            cols.append(v)
    b = np.column_stack(cols)
    return TangentBasis(b=b, orthonormal=True, pinv_b=b.T.copy())


def _haar_orthogonal(n: int, rng: np.random.Generator) -> np.ndarray:
    g = rng.standard_normal((n, n))
    q, r = np.linalg.qr(g)
    signs = np.sign(np.diag(r))
    signs[signs == 0] = 1.0
    return q * signs


def _rotation_composed_orthogonal(n: int, angle: float, rng: np.random.Generator) -> np.ndarray:
    """Orthogonal matrix with rotation angles spread up to ``angle``."""
    v = _haar_orthogonal(n, rng)
    core = np.eye(n)
    m = n // 2
    for k in range(m):
        theta = angle * (k + 1) / m
        c, s = np.cos(theta), np.sin(theta)
        core[2 * k : 2 * k + 2, 2 * k : 2 * k + 2] = [[c, -s], [s, c]]
    return v @ core @ v.T


def gen_structured(
    kind: str,
    n: int,
    seed: int,
    tau: float = 1.0,
    angle: float | None = None,
) -> np.ndarray:
    """Seeded generator of structured test matrices.

    kinds: skew_symmetric, hamiltonian (Lie-algebra elements, scaled by
    ``tau``), orthogonal (Haar by default; with ``angle`` set, a composition
    of plane rotations whose largest angle is ``angle``), symplectic and
    perplectic (exponentials of Lie-algebra elements scaled by ``tau``).

    The symplectic and perplectic exponents are chosen with real spectrum
    (symmetric-positive-definite group elements), so log and sqrt stay
    defined along the whole conditioning sweep while kappa_2 grows like
    exp(2 * tau * sigma_max).  Identical seeds give bitwise-identical output.
    """
    if kind not in _GENERATOR_KINDS:
        raise ValueError(f"unknown generator kind {kind!r}; valid: {_GENERATOR_KINDS}")
    if n < 2:
        raise ValueError("generators need n >= 2")
    rng = np.random.default_rng(seed)
    if kind == "skew_symmetric":
        g = rng.standard_normal((n, n))
        return tau * (g - g.T)
    if kind == "hamiltonian":
        if n % 2 != 0:
            raise ValueError("hamiltonian matrices need even n")
        m = n // 2
        x = rng.standard_normal((m, m))
        g0 = rng.standard_normal((m, m))
        f0 = rng.standard_normal((m, m))
        g = 0.5 * (g0 + g0.T)
        f = 0.5 * (f0 + f0.T)
        h = np.zeros((n, n))
        h[:m, :m] = x
        h[:m, m:] = g
        h[m:, :m] = f
        h[m:, m:] = -x.T
        return tau * h
    if kind == "orthogonal":
        if angle is not None:
            if not 0.0 < angle < np.pi:
                raise ValueError("rotation angle must lie in (0, pi)")
            return _rotation_composed_orthogonal(n, angle, rng)
        return _haar_orthogonal(n, rng)
    if kind == "symplectic":
        if n % 2 != 0:
            raise ValueError("symplectic matrices need even n")
        m = n // 2
        g0 = rng.standard_normal((m, m))
        f0 = rng.standard_normal((m, m))
        g = g0 @ g0.T + 0.1 * np.eye(m)
        f = f0 @ f0.T + 0.1 * np.eye(m)
        h = np.zeros((n, n))
        h[:m, m:] = g
        h[m:, :m] = f
        return expm(tau * h)
    # perplectic: exponential of a symmetric element of the Lie algebra of R
    # (a symmetric matrix anticommuting with the flip R), built in R's
    # eigenbasis so the exponent has real spectrum.
    k_plus = (n + 1) // 2
    k_minus = n // 2
    u_plus = np.zeros((n, k_plus))
    u_minus = np.zeros((n, k_minus))
    inv_sqrt2 = 1.0 / np.sqrt(2.0)
    for i in range(k_minus):
        u_plus[i, i] = inv_sqrt2
        u_plus[n - 1 - i, i] = inv_sqrt2
        u_minus[i, i] = inv_sqrt2
        u_minus[n - 1 - i, i] = -inv_sqrt2
    if n % 2 == 1:
        u_plus[n // 2, k_plus - 1] = 1.0
    block = rng.standard_normal((k_plus, k_minus))
    t = u_plus @ block @ u_minus.T
    t = t + t.T
    return expm(tau * t)


def gen_quasitriangular(
    n: int, c: float, seed: int, block_prob: float = 0.4
) -> tuple[np.ndarray, tuple[int, ...]]:
    """Seeded upper quasi-triangular test matrix with conditioning knob ``c``.

    Eigenvalues are placed equidistantly in [-c, -1].  A seeded subset of
    adjacent eigenvalue pairs is merged into 2 x 2 blocks [[alpha, beta],
    [-beta, alpha]] with eigenvalues alpha +/- i*beta (alpha the pair mean,
    beta the half gap); the least-negative eigenvalue -1 always stays in a
    1 x 1 block.  Entries strictly above the block diagonal are Gaussian
    scaled by the mean eigenvalue magnitude, so the off-diagonal mass grows
    with ``c``.  Returns the matrix and its pattern d.
    """
    if n < 2:
        raise ValueError("gen_quasitriangular needs n >= 2")
    if c < 1.0:
        raise ValueError("conditioning knob c must be >= 1")
    rng = np.random.default_rng(seed)
    lam = -1.0 - (c - 1.0) * np.arange(n) / (n - 1)
    d = [0] * (n - 1)
    # lam[0] = -1 never joins a block: pairing it with lam[1] would shift its
    # real part to ~ -c/(n-1), and exp-like sweeps would underflow to zero.
    k = 1
    while k < n - 1:
        if rng.random() < block_prob and lam[k] != lam[k + 1]:
            d[k] = 1
            k += 2
        else:
            k += 1
    scale = 0.5 * (1.0 + c)
    u = np.triu(rng.standard_normal((n, n)), k=1) * scale
    np.fill_diagonal(u, lam)
    for i, di in enumerate(d):
        if di == 1:
            alpha = 0.5 * (lam[i] + lam[i + 1])
            beta = 0.5 * abs(lam[i] - lam[i + 1])
            u[i, i] = alpha
            u[i + 1, i + 1] = alpha
            u[i, i + 1] = beta
            u[i + 1, i] = -beta
    return u, tuple(d)


def detect_pattern(u, tol: float = 1e-12) -> tuple[int, ...]:
    """Recover the quasi-triangularity pattern of ``u``.

    d_i = 1 iff |u[i+1, i]| > tol * (1 + ||u||_F).  Entries below the first
    subdiagonal above the same threshold, or two consecutive subdiagonal
    entries, raise :class:`PatternError`.
    """
    u = as_matrix(u)
    n = u.shape[0]
    if u.shape[1] != n:
        raise ValueError("detect_pattern expects a square matrix")
    thresh = tol * (1.0 + float(np.linalg.norm(u)))
    below = np.tril(np.ones((n, n), dtype=bool), k=-2)
    if np.any(np.abs(u[below]) > thresh):
        raise PatternError("matrix has entries below the first subdiagonal")
    d = tuple(int(abs(u[i + 1, i]) > thresh) for i in range(n - 1))
    if any(d[i] == 1 and d[i + 1] == 1 for i in range(n - 2)):
        raise PatternError("consecutive nonzero subdiagonal entries")
    return d
