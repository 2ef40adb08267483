"""Tests for the condition-number bounds and the full report."""

import math

import numpy as np
import pytest

from matcond.condition import (
    UNSTRUCTURED_EXP_SKEWHERM_LEVEL2,
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
from matcond.errors import MembershipError
from matcond.matfun import FunctionId
from matcond.optim import NmOptions
from matcond.structures import (
    basis_jordan_lie,
    gen_structured,
    identity_product,
    jordan_class,
    lie_class,
    symplectic_product,
)


def _unvec(y, n):
    return np.asarray(y).reshape((n, n), order="F")


def _member(cls, n, seed):
    # Random member of a Jordan/Lie tangent class via its orthonormal basis.
    basis = basis_jordan_lie(cls, n)
    rng = np.random.default_rng(seed)
    return _unvec(basis.b @ rng.standard_normal(basis.p), n)


# -- scalar collapse: every bound has a closed form at n = 1 -----------------


def test_scalar_exp():
    a = np.array([[2.0]])
    want1 = math.exp(2.0)  # |f'(2)|
    want2 = math.exp(2.0)  # |f''(2)|
    assert abs(cond1_unstructured(FunctionId.EXP, a) - want1) < 1e-10 * want1
    assert abs(cond2_upper_unstructured(FunctionId.EXP, a) - want2) < 1e-10 * want2


def test_scalar_log():
    a = np.array([[2.0]])
    assert abs(cond1_unstructured(FunctionId.LOG, a) - 0.5) < 1e-10
    assert abs(cond2_upper_unstructured(FunctionId.LOG, a) - 0.25) < 1e-10


def test_scalar_sqrt():
    a = np.array([[2.0]])
    want1 = 0.5 / math.sqrt(2.0)
    want2 = 0.25 / 2.0**1.5
    assert abs(cond1_unstructured(FunctionId.SQRT, a) - want1) < 1e-10 * want1
    assert abs(cond2_upper_unstructured(FunctionId.SQRT, a) - want2) < 1e-10 * want2


def test_scalar_structured_matches_unstructured():
    # The only 1-dimensional structured class here is Jordan(identity): the
    # tangent space is all of R, so structured and unstructured agree.
    a = np.array([[2.0]])
    basis = basis_jordan_lie(jordan_class(identity_product(1)), 1)
    for f in (FunctionId.EXP, FunctionId.LOG, FunctionId.SQRT):
        u1 = cond1_unstructured(f, a)
        assert abs(cond1_structured(f, a, basis) - u1) < 1e-12 * u1
        u2 = cond2_upper_unstructured(f, a)
        assert abs(cond2_upper_structured(f, a, basis) - u2) < 1e-12 * u2


# -- exact oracles at normal base points --------------------------------------


def test_cond1_exp_normal_spectral_diagonal():
    a = np.diag([1.0, -4.0, 0.3])
    assert abs(cond1_exp_normal_spectral(a) - math.exp(1.0)) < 1e-12 * math.e


def test_cond1_exp_normal_rejects_nonnormal():
    with pytest.raises(ValueError):
        cond1_exp_normal_spectral(np.array([[1.0, 1e3], [0.0, 2.0]]))


def test_cond2_exact_exp_hermitian():
    rng = np.random.default_rng(7)
    x = rng.standard_normal((4, 4))
    a = (x + x.T) / 2.0
    lam_max = float(np.linalg.eigvalsh(a)[-1])
    assert abs(cond2_exact_exp_hermitian(a) - math.exp(lam_max)) < 1e-12 * math.exp(lam_max)


def test_cond2_exact_exp_skewherm():
    rng = np.random.default_rng(8)
    x = rng.standard_normal((4, 4))
    a = (x - x.T) / 2.0
    assert cond2_exact_exp_skewherm(a) == 0.0
    assert UNSTRUCTURED_EXP_SKEWHERM_LEVEL2 == 1.0
    with pytest.raises(ValueError):
        cond2_exact_exp_skewherm(np.eye(3))


# -- projector orderings on generic members -----------------------------------


def test_structured_never_exceeds_unstructured():
    rng_seeds = range(3)
    n = 4
    for cls in (jordan_class(identity_product(n)), lie_class(symplectic_product(n))):
        basis = basis_jordan_lie(cls, n)
        for seed in rng_seeds:
            a = _member(cls, n, seed)
            c1u = cond1_unstructured(FunctionId.EXP, a)
            c1s = cond1_structured(FunctionId.EXP, a, basis)
            assert c1s <= c1u * (1.0 + 1e-10)
            u2u = cond2_upper_unstructured(FunctionId.EXP, a)
            u2s = cond2_upper_structured(FunctionId.EXP, a, basis)
            assert u2s <= u2u * (1.0 + 1e-10)


def test_lower_bound_below_its_upper_bound():
    # On a generic Jordan matrix the finite-eps search stays below the true
    # level-2 value, which the upper bound dominates.
    n = 3
    cls = jordan_class(identity_product(n))
    basis = basis_jordan_lie(cls, n)
    a = _member(cls, n, seed=5)
    opt = NmOptions(restarts=2, max_iters=80, seed=0)
    lb_u, z_u = cond2_lower(FunctionId.EXP, a, basis=None, eps=1e-3, opt=opt)
    lb_s, z_s = cond2_lower(FunctionId.EXP, a, basis=basis, eps=1e-3, opt=opt)
    assert 0.0 <= lb_u <= cond2_upper_unstructured(FunctionId.EXP, a) * (1.0 + 1e-6)
    assert 0.0 <= lb_s <= cond2_upper_structured(FunctionId.EXP, a, basis) * (1.0 + 1e-6)
    assert abs(np.linalg.norm(z_u) - 1.0) < 1e-12
    assert abs(np.linalg.norm(z_s) - 1.0) < 1e-12


def test_lower_bound_direction_stays_in_span():
    n = 3
    cls = lie_class(identity_product(n))
    basis = basis_jordan_lie(cls, n)
    a = _member(cls, n, seed=11)
    _, z = cond2_lower(
        FunctionId.EXP, a, basis=basis, eps=1e-3, opt=NmOptions(restarts=1, max_iters=40)
    )
    # Skew-symmetric span: direction must be skew-symmetric too.
    assert np.linalg.norm(z + z.T) < 1e-12


def test_cond2_lower_rejects_bad_eps():
    with pytest.raises(ValueError):
        cond2_lower(FunctionId.EXP, np.eye(2), eps=0.0)


def test_cond2_lower_deterministic():
    a = _member(jordan_class(identity_product(3)), 3, seed=2)
    opt = NmOptions(restarts=2, max_iters=60, seed=42)
    v1, z1 = cond2_lower(FunctionId.EXP, a, eps=1e-3, opt=opt)
    v2, z2 = cond2_lower(FunctionId.EXP, a, eps=1e-3, opt=opt)
    assert v1 == v2
    assert np.array_equal(z1, z2)


# -- full_report ---------------------------------------------------------------


def test_full_report_fields_and_ordering():
    n = 4
    cls = lie_class(identity_product(n))
    a = _member(cls, n, seed=3)
    opts = ReportOptions(nm=NmOptions(restarts=2, max_iters=60, seed=0))
    rep = full_report(FunctionId.EXP, a, cls, opts)
    assert rep.function is FunctionId.EXP
    assert rep.n == n
    assert rep.structure == cls.label()
    assert rep.kappa2 >= 1.0
    assert rep.cond1_structured <= rep.cond1_unstructured * (1.0 + 1e-10)
    assert rep.lvl2_upper_structured <= rep.lvl2_upper_unstructured * (1.0 + 1e-10)
    assert rep.lvl2_lower_unstructured >= 0.0
    assert rep.lvl2_lower_structured >= 0.0
    assert rep.epsilon_used == 1e-3
    assert rep.optimizer_iters > 0


def test_full_report_skew_exp_anchors():
    # exp on skew-symmetric matrices: unstructured cond1 is exactly 1 and the
    # structured level-2 lower bound is numerically zero.
    n = 4
    cls = lie_class(identity_product(n))
    a = _member(cls, n, seed=9)
    opts = ReportOptions(nm=NmOptions(restarts=2, max_iters=60, seed=0))
    rep = full_report(FunctionId.EXP, a, cls, opts)
    assert abs(rep.cond1_unstructured - 1.0) < 1e-7
    assert rep.lvl2_lower_structured < 1e-6


def test_full_report_no_lower():
    n = 3
    cls = jordan_class(identity_product(n))
    a = _member(cls, n, seed=4)
    rep = full_report(FunctionId.EXP, a, cls, ReportOptions(compute_lower=False))
    assert rep.lvl2_lower_unstructured is None
    assert rep.lvl2_lower_structured is None
    assert rep.optimizer_iters == 0
    assert rep.lvl2_upper_unstructured is not None


def test_full_report_rejects_nonmember():
    cls = lie_class(identity_product(3))
    with pytest.raises(MembershipError) as exc:
        full_report(FunctionId.EXP, np.eye(3), cls)
    assert "residual" in str(exc.value)


def test_full_report_domain_violation_gives_none():
    # log is undefined on a matrix with an eigenvalue on the closed negative
    # real axis; the report records None instead of raising.
    n = 2
    cls = jordan_class(identity_product(n))
    a = np.diag([-1.0, 2.0])
    rep = full_report(FunctionId.LOG, a, cls, ReportOptions(compute_lower=False))
    assert rep.cond1_unstructured is None
    assert rep.lvl2_upper_structured is None


def test_full_report_automorphism_member():
    # Generated orthogonal matrix through the automorphism route end to end.
    a = gen_structured("orthogonal", 4, seed=12)
    from matcond.structures import automorphism_class

    cls = automorphism_class(identity_product(4))
    rep = full_report(FunctionId.SQRT, a, cls, ReportOptions(compute_lower=False))
    assert rep.cond1_structured <= rep.cond1_unstructured * (1.0 + 1e-10)
    assert rep.lvl2_upper_structured <= rep.lvl2_upper_unstructured * (1.0 + 1e-10)
