import numpy as np
import pytest

from matcond.frechet import frechet1, frechet2, kron_form1, kron_form1_dir, kron_form2
from matcond.linalg import unvec, vec
from matcond.matfun import FunctionId, apply


def in_domain_matrix(n, seed, shift=2.0):
    # positive shift keeps log/sqrt away from the closed negative axis
    rng = np.random.default_rng(seed)
    return 0.3 * rng.standard_normal((n, n)) + shift * np.eye(n)


def test_frechet1_square_is_anticommutator_with_direction():
    rng = np.random.default_rng(1)
    a = rng.standard_normal((4, 4))
    e = rng.standard_normal((4, 4))
    np.testing.assert_allclose(
        frechet1(FunctionId.SQUARE, a, e), a @ e + e @ a, atol=1e-12
    )


def test_frechet2_square_is_symmetrized_product():
    rng = np.random.default_rng(2)
    for n in (2, 3, 5):
        a = rng.standard_normal((n, n))
        e1 = rng.standard_normal((n, n))
        e2 = rng.standard_normal((n, n))
        np.testing.assert_allclose(
            frechet2(FunctionId.SQUARE, a, e1, e2), e1 @ e2 + e2 @ e1, atol=1e-12
        )


@pytest.mark.parametrize("fid", [FunctionId.EXP, FunctionId.LOG, FunctionId.SQRT])
def test_frechet1_finite_difference(fid):
    a = in_domain_matrix(4, 5)
    rng = np.random.default_rng(6)
    e = rng.standard_normal((4, 4))
    e /= np.linalg.norm(e)
    h = 1e-7
    fd = (apply(fid, a + h * e) - apply(fid, a - h * e)) / (2 * h)
    np.testing.assert_allclose(frechet1(fid, a, e), fd, atol=1e-6)


@pytest.mark.parametrize("fid", [FunctionId.EXP, FunctionId.LOG, FunctionId.SQRT])
def test_frechet2_is_derivative_of_frechet1(fid):
    a = in_domain_matrix(4, 7)
    rng = np.random.default_rng(8)
    e1 = rng.standard_normal((4, 4))
    e2 = rng.standard_normal((4, 4))
    h = 1e-6
    fd = (frechet1(fid, a + h * e2, e1) - frechet1(fid, a - h * e2, e1)) / (2 * h)
    np.testing.assert_allclose(frechet2(fid, a, e1, e2), fd, atol=1e-5)


def test_frechet2_symmetric_in_directions():
    a = in_domain_matrix(4, 9)
    rng = np.random.default_rng(10)
    e1 = rng.standard_normal((4, 4))
    e2 = rng.standard_normal((4, 4))
    np.testing.assert_allclose(
        frechet2(FunctionId.EXP, a, e1, e2),
        frechet2(FunctionId.EXP, a, e2, e1),
        atol=1e-12,
    )


def test_frechet1_linear_in_direction():
    a = in_domain_matrix(3, 11)
    rng = np.random.default_rng(12)
    e1 = rng.standard_normal((3, 3))
    e2 = rng.standard_normal((3, 3))
    lhs = frechet1(FunctionId.EXP, a, 2.0 * e1 - 3.0 * e2)
    rhs = 2.0 * frechet1(FunctionId.EXP, a, e1) - 3.0 * frechet1(FunctionId.EXP, a, e2)
    np.testing.assert_allclose(lhs, rhs, atol=1e-11)


def test_frechet_shape_mismatch_raises():
    with pytest.raises(ValueError):
        frechet1(FunctionId.EXP, np.eye(3), np.eye(2))
    with pytest.raises(ValueError):
        frechet2(FunctionId.EXP, np.eye(2), np.eye(2), np.eye(3))


def test_kron_form1_reproduces_directional_action():
    a = in_domain_matrix(3, 13)
    rng = np.random.default_rng(14)
    e = rng.standard_normal((3, 3))
    k = kron_form1(FunctionId.LOG, a)
    assert k.k.shape == (9, 9)
    np.testing.assert_allclose(
        unvec(k.k @ vec(e), 3, 3), frechet1(FunctionId.LOG, a, e), atol=1e-11
    )


def test_kron_form1_dir_columns_are_second_derivatives():
    a = in_domain_matrix(3, 15)
    rng = np.random.default_rng(16)
    z = rng.standard_normal((3, 3))
    kd = kron_form1_dir(FunctionId.EXP, a, z)
    e = np.zeros(9)
    e[4] = 1.0
    np.testing.assert_allclose(
        unvec(kd @ e, 3, 3), frechet2(FunctionId.EXP, a, unvec(e, 3, 3), z), atol=1e-12
    )


def test_kron_form2_acts_as_stacked_bilinear_map():
    a = in_domain_matrix(2, 17)
    rng = np.random.default_rng(18)
    e = rng.standard_normal((2, 2))
    z = rng.standard_normal((2, 2))
    k2 = kron_form2(FunctionId.EXP, a)
    assert k2.k.shape == (16, 4)
    # unvec(K2 vec(Z), n^2, n^2) vec(E) = vec(L2(A, E, Z))
    k1z = unvec(k2.k @ vec(z), 4, 4)
    np.testing.assert_allclose(
        unvec(k1z @ vec(e), 2, 2), frechet2(FunctionId.EXP, a, e, z), atol=1e-12
    )


def test_kron_form2_complex_base_point():
    rng = np.random.default_rng(19)
    a = np.eye(2) * 2 + 0.2 * (rng.standard_normal((2, 2)) + 1j * rng.standard_normal((2, 2)))
    k2 = kron_form2(FunctionId.LOG, a)
    assert np.iscomplexobj(k2.k)
    assert k2.base_dim == 2
