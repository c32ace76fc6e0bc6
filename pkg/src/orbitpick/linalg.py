"""Dense Hermitian eigenvalue and positivity checks.

The primary solver is a cyclic Jacobi iteration on the real symmetric
embedding [[X, -Y], [Y, X]] of a Hermitian matrix X + iY, whose
spectrum is that of the Hermitian matrix with doubled multiplicities.
Jacobi is deterministic and accurate to a tiny multiple of the norm,
which is what the positivity verdicts need.  Matrices larger than
``JACOBI_SIZE_LIMIT`` are routed to LAPACK's symmetric eigensolver
(numpy.linalg.eigvalsh), an equivalent iteration that keeps the big
orbit-block checks at interactive speed; the 3x3 principal-minor
routine below stays available as an independent cross-check.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import InputError, NoConvergence

JACOBI_SIZE_LIMIT = 16
_MAX_SWEEPS = 100
_OFF_TARGET = 1e-14


@dataclass(frozen=True)
class PsdReport:
    """Positivity verdict: is_psd holds iff min_eigenvalue >= -tolerance_used."""

    min_eigenvalue: float
    is_psd: bool
    tolerance_used: float


class HermitianMatrix:
    """Validated dense Hermitian matrix.

    Accepts any square array whose conjugate-transpose defect is below
    1e-10 * (1 + max|entry|); stores the entries as given.
    """

    def __init__(self, entries):
        a = np.array(entries, dtype=complex)
        if a.ndim != 2 or a.shape[0] != a.shape[1]:
            raise InputError(f"expected a square matrix, got shape {a.shape}")
        if not np.all(np.isfinite(a.real)) or not np.all(np.isfinite(a.imag)):
            raise InputError("matrix entries must be finite")
        scale = 1.0 + (np.max(np.abs(a)) if a.size else 0.0)
        defect = np.max(np.abs(a - a.conj().T)) if a.size else 0.0
        if defect > 1e-10 * scale:
            raise InputError(
                f"matrix is not Hermitian: defect {defect:.3e} vs scale {scale:.3e}"
            )
        self.entries = a

    @property
    def n(self) -> int:
        return self.entries.shape[0]

    def __repr__(self):
        return f"HermitianMatrix(n={self.n})"


def _as_matrix(a) -> np.ndarray:
    if isinstance(a, HermitianMatrix):
        return a.entries
    return HermitianMatrix(a).entries


def _real_embedding(a: np.ndarray) -> np.ndarray:
    # Symmetrize first so the embedding is exactly symmetric.
    h = 0.5 * (a + a.conj().T)
    x = h.real
    y = h.imag
    top = np.hstack([x, -y])
    bot = np.hstack([y, x])
    return np.vstack([top, bot])


def _jacobi_sweeps(m: np.ndarray, max_sweeps: int) -> np.ndarray:
    """Run cyclic Jacobi rotations on a real symmetric matrix in place
    until the off-diagonal Frobenius norm falls below
    1e-14 * ||m||_F.  Returns the diagonal."""
    n = m.shape[0]
    frob = float(np.linalg.norm(m))
    if frob == 0.0:
        return np.diag(m).copy()
    # the embedding doubles the squared norm; anchor the target to the
    # Frobenius norm of the original Hermitian matrix
    target = _OFF_TARGET * frob / math.sqrt(2.0)
    for _ in range(max_sweeps):
        hollow = m.copy()
        np.fill_diagonal(hollow, 0.0)
        if float(np.linalg.norm(hollow)) <= target:
            return np.diag(m).copy()
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = m[p, q]
                if abs(apq) <= 1e-300:
                    continue
                theta = (m[q, q] - m[p, p]) / (2.0 * apq)
                if abs(theta) > 1e100:
                    t = 0.5 / theta  # asymptotic rotation, avoids theta**2 overflow
                else:
                    t = math.copysign(1.0, theta) / (
                        abs(theta) + math.sqrt(theta * theta + 1.0)
                    )
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                rp = m[p, :].copy()
                rq = m[q, :].copy()
                m[p, :] = c * rp - s * rq
                m[q, :] = s * rp + c * rq
                cp = m[:, p].copy()
                cq = m[:, q].copy()
                m[:, p] = c * cp - s * cq
                m[:, q] = s * cp + c * cq
                m[p, q] = 0.0
                m[q, p] = 0.0
    raise NoConvergence(
        f"Jacobi iteration did not converge within {max_sweeps} sweeps"
    )


def jacobi_eigenvalues(a, max_sweeps: int = _MAX_SWEEPS) -> np.ndarray:
    """All eigenvalues of a Hermitian matrix by cyclic Jacobi, ascending.

    The real embedding doubles every eigenvalue; the doubled list is
    sorted and decimated back to length n.
    """
    h = _as_matrix(a)
    if h.shape[0] == 0:
        return np.empty(0)
    diag = _jacobi_sweeps(_real_embedding(h), max_sweeps)
    return np.sort(diag)[::2]


def min_eig(a, method: str = "auto") -> float:
    """Smallest eigenvalue of a Hermitian matrix.

    ``method`` is "jacobi", "lapack", or "auto" (jacobi up to
    ``JACOBI_SIZE_LIMIT``, LAPACK beyond).
    """
    h = _as_matrix(a)
    n = h.shape[0]
    if n == 0:
        raise InputError("empty matrix has no eigenvalues")
    if n > 2000:
        raise InputError(f"matrix dimension {n} exceeds the supported 2000")
    if method not in ("auto", "jacobi", "lapack"):
        raise InputError(f"unknown eigenvalue method {method!r}")
    if method == "jacobi" or (method == "auto" and n <= JACOBI_SIZE_LIMIT):
        return float(np.min(_jacobi_sweeps(_real_embedding(h), _MAX_SWEEPS)))
    return float(np.linalg.eigvalsh(0.5 * (h + h.conj().T))[0])


def default_psd_tolerance(a) -> float:
    h = _as_matrix(a)
    dmax = float(np.max(h.diagonal().real)) if h.size else 0.0
    return 1e-10 * (1.0 + max(dmax, 0.0))


def psd_check(a, tol: float | None = None, method: str = "auto") -> PsdReport:
    """Positive-semidefiniteness verdict with an explicit tolerance.

    The default tolerance 1e-10 * (1 + max diagonal) is anchored to the
    diagonal because the matrices arising here scale with kernel
    magnitudes near the boundary.
    """
    h = _as_matrix(a)
    if tol is None:
        tol = default_psd_tolerance(h)
    if not (tol > 0.0 and math.isfinite(tol)):
        raise InputError("tolerance must be positive and finite")
    lo = min_eig(h, method=method)
    return PsdReport(min_eigenvalue=lo, is_psd=lo >= -tol, tolerance_used=tol)


def brute_force_psd_3x3(a, tol: float = 1e-12) -> bool:
    """Positivity of a Hermitian matrix of dimension <= 3 by direct
    expansion of every principal minor.

    Checking all principal minors (not only the leading ones) settles
    the semidefinite boundary as well.  Independent of the eigenvalue
    path; used as its oracle.
    """
    h = _as_matrix(a)
    n = h.shape[0]
    if n > 3:
        raise InputError("brute-force check is limited to 3x3 matrices")

    def det(idx: tuple[int, ...]) -> float:
        sub = h[np.ix_(idx, idx)]
        if len(idx) == 1:
            d = sub[0, 0]
        elif len(idx) == 2:
            d = sub[0, 0] * sub[1, 1] - sub[0, 1] * sub[1, 0]
        else:
            d = (
                sub[0, 0] * (sub[1, 1] * sub[2, 2] - sub[1, 2] * sub[2, 1])
                - sub[0, 1] * (sub[1, 0] * sub[2, 2] - sub[1, 2] * sub[2, 0])
                + sub[0, 2] * (sub[1, 0] * sub[2, 1] - sub[1, 1] * sub[2, 0])
            )
        return float(d.real)

    for size in range(1, n + 1):
        for idx in _subsets(n, size):
            if det(idx) < -tol:
                return False
    return True


def _subsets(n: int, size: int):
    import itertools

    return itertools.combinations(range(n), size)
