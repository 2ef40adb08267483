import numpy as np
import pytest

from matcond.errors import SingularMatrixError
from matcond.linalg import (
    as_matrix,
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


def test_vec_is_column_major():
    a = np.array([[1.0, 3.0], [2.0, 4.0]])
    np.testing.assert_array_equal(vec(a), [1.0, 2.0, 3.0, 4.0])


def test_vec_unvec_roundtrip():
    rng = np.random.default_rng(3)
    a = rng.standard_normal((4, 7))
    np.testing.assert_array_equal(unvec(vec(a), 4, 7), a)


def test_unvec_rejects_wrong_length():
    with pytest.raises(ValueError):
        unvec(np.zeros(5), 2, 2)


def test_kron_identity_action():
    # (I (x) A) vec(X) = vec(A X)
    rng = np.random.default_rng(0)
    a = rng.standard_normal((3, 3))
    x = rng.standard_normal((3, 3))
    lhs = kron(np.eye(3), a) @ vec(x)
    np.testing.assert_allclose(lhs, vec(a @ x), atol=1e-14)


def test_norms_on_known_matrix():
    a = np.array([[3.0, 0.0], [0.0, -4.0]])
    assert frobenius_norm(a) == pytest.approx(5.0)
    assert spectral_norm(a) == pytest.approx(4.0)


def test_spectral_norm_empty():
    assert spectral_norm(np.zeros((0, 0))) == 0.0


def test_svd_reconstructs():
    rng = np.random.default_rng(1)
    a = rng.standard_normal((5, 3))
    f = svd(a)
    np.testing.assert_allclose(f.u @ np.diag(f.s) @ f.v.conj().T, a, atol=1e-12)
    assert np.all(np.diff(f.s) <= 0)


def test_pinv_moore_penrose_rank_deficient():
    rng = np.random.default_rng(2)
    b = rng.standard_normal((6, 2))
    a = np.column_stack([b, b[:, :1]])  # rank 2, three columns
    ap = pinv(a)
    np.testing.assert_allclose(a @ ap @ a, a, atol=1e-12)
    np.testing.assert_allclose(ap @ a @ ap, ap, atol=1e-12)
    np.testing.assert_allclose((a @ ap).T, a @ ap, atol=1e-12)
    np.testing.assert_allclose((ap @ a).T, ap @ a, atol=1e-12)


def test_solve_matches_inverse():
    rng = np.random.default_rng(4)
    a = rng.standard_normal((4, 4)) + 4 * np.eye(4)
    b = rng.standard_normal((4, 2))
    np.testing.assert_allclose(a @ solve(a, b), b, atol=1e-12)


def test_solve_singular_raises():
    with pytest.raises(SingularMatrixError):
        solve(np.zeros((3, 3)), np.eye(3))


def test_qr_reduced_shapes():
    rng = np.random.default_rng(5)
    a = rng.standard_normal((6, 4))
    q, r = qr(a)
    assert q.shape == (6, 4) and r.shape == (4, 4)
    np.testing.assert_allclose(q.T @ q, np.eye(4), atol=1e-12)
    np.testing.assert_allclose(q @ r, a, atol=1e-12)


def test_schur_complex_factorization():
    rng = np.random.default_rng(6)
    a = rng.standard_normal((5, 5))
    t, q = schur_complex(a)
    assert np.iscomplexobj(t)
    np.testing.assert_allclose(np.tril(t, -1), 0, atol=1e-12)
    np.testing.assert_allclose(q @ t @ q.conj().T, a, atol=1e-11)
    np.testing.assert_allclose(q @ q.conj().T, np.eye(5), atol=1e-12)


def test_schur_complex_rejects_nonfinite():
    a = np.array([[1.0, np.nan], [0.0, 1.0]])
    with pytest.raises(ValueError):
        schur_complex(a)


def test_eig_hermitian_sorted_and_real():
    rng = np.random.default_rng(7)
    b = rng.standard_normal((4, 4))
    a = b + b.T
    w = eig_hermitian(a)
    assert np.all(np.diff(w) >= 0)
    assert not np.iscomplexobj(w)
    np.testing.assert_allclose(sorted(np.linalg.eigvals(a).real), w, atol=1e-10)


def test_eig_hermitian_rejects_nonhermitian():
    a = np.array([[0.0, 1.0], [0.0, 0.0]])
    with pytest.raises(ValueError):
        eig_hermitian(a)


def test_as_matrix_rejects_vector():
    with pytest.raises(ValueError):
        as_matrix(np.zeros(4))
