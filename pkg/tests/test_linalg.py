import numpy as np
import pytest

from orbitpick.errors import InputError
from orbitpick.linalg import (
    HermitianMatrix,
    brute_force_psd_3x3,
    jacobi_eigenvalues,
    min_eig,
    psd_check,
)


def random_hermitian(rng, n):
    a = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
    return 0.5 * (a + a.conj().T)


def test_min_eig_identity():
    assert min_eig(np.eye(3)) == pytest.approx(1.0, abs=1e-13)


def test_min_eig_rank_one():
    assert min_eig([[1, 1], [1, 1]]) == pytest.approx(0.0, abs=1e-13)


def test_min_eig_shifted():
    assert min_eig([[2, 1], [1, 2]]) == pytest.approx(1.0, abs=1e-13)


def test_min_eig_complex_matrix():
    a = np.array([[2.0, 1j], [-1j, 2.0]])
    assert min_eig(a) == pytest.approx(1.0, abs=1e-12)


def test_jacobi_matches_lapack():
    rng = np.random.default_rng(5)
    for n in (1, 2, 3, 5, 8, 12):
        a = random_hermitian(rng, n)
        mine = jacobi_eigenvalues(a)
        ref = np.linalg.eigvalsh(a)
        assert np.max(np.abs(mine - ref)) <= 1e-12 * (1 + np.max(np.abs(ref)))


def test_jacobi_and_lapack_paths_agree_in_min_eig():
    rng = np.random.default_rng(6)
    a = random_hermitian(rng, 10)
    assert min_eig(a, method="jacobi") == pytest.approx(
        min_eig(a, method="lapack"), abs=1e-12
    )


def test_shift_invariance():
    rng = np.random.default_rng(9)
    a = random_hermitian(rng, 6)
    base = min_eig(a)
    for c in (-2.0, 0.5, 3.25):
        assert min_eig(a + c * np.eye(6)) == pytest.approx(base + c, abs=1e-12)


def test_min_eig_below_smallest_diagonal():
    rng = np.random.default_rng(13)
    for _ in range(25):
        a = random_hermitian(rng, 5)
        assert min_eig(a) <= np.min(a.diagonal().real) + 1e-12


def test_eigenvalue_sum_matches_trace():
    rng = np.random.default_rng(21)
    a = random_hermitian(rng, 7)
    eigs = jacobi_eigenvalues(a)
    assert np.sum(eigs) == pytest.approx(np.trace(a).real, abs=1e-12 * 7)


def test_psd_check_examples():
    rep = psd_check([[1, 1], [1, 1]])
    assert rep.is_psd and rep.min_eigenvalue == pytest.approx(0.0, abs=1e-12)

    rep = psd_check([[1, 1], [1, 0.19 * 4 / 3]])
    assert not rep.is_psd
    assert rep.min_eigenvalue < -0.3  # det is about -0.7467

    rep = psd_check([[-1e-15]])
    assert rep.is_psd  # within the default tolerance


def test_psd_report_semantics():
    rep = psd_check([[1, 0], [0, -1]])
    assert rep.is_psd == (rep.min_eigenvalue >= -rep.tolerance_used)
    assert not rep.is_psd


def test_brute_force_examples():
    assert brute_force_psd_3x3(np.eye(3))
    assert not brute_force_psd_3x3(np.diag([1.0, -1.0]))
    szego = np.array(
        [[1, 1, 1], [1, 4 / 3, 0.8], [1, 0.8, 4 / 3]], dtype=complex
    )
    assert brute_force_psd_3x3(szego)
    assert min_eig(szego) >= -1e-12


def test_brute_force_catches_non_leading_defect():
    # leading minors are fine; the trailing 2x2 principal minor is not
    a = np.array([[1.0, 0.0, 0.0], [0.0, 0.0, 1.0], [0.0, 1.0, 0.0]])
    assert not brute_force_psd_3x3(a)


def test_oracle_agreement_on_random_matrices():
    rng = np.random.default_rng(2024)
    checked = 0
    while checked < 300:
        a = random_hermitian(rng, 3)
        lo = min_eig(a)
        if abs(lo) < 1e-8:
            continue
        assert psd_check(a).is_psd == brute_force_psd_3x3(a)
        checked += 1


def test_hermitian_validation():
    with pytest.raises(InputError):
        HermitianMatrix([[0, 1], [0, 0]])
    with pytest.raises(InputError):
        HermitianMatrix(np.ones((2, 3)))
    with pytest.raises(InputError):
        HermitianMatrix([[np.inf]])
    with pytest.raises(InputError):
        psd_check([[1.0]], tol=-1.0)
