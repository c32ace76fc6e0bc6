"""Reproducing kernels on the disk and their Gram matrices.

Three kernel variants are exposed:

* ``SzegoKernel``           -- K(z, w) = 1 / (1 - conj(w) z);
* ``ComposedInnerKernel``   -- K(z, w) = 1 / (1 - phi(z) conj(phi(w)))
  for phi an inner function vanishing at 0, given as a Blaschke product
  raised to an integer power; this is the kernel of the closed span of
  the powers of phi;
* ``OrbitGramKernel``       -- the block kernel [K(g(z), h(w))] indexed
  by truncated group orbits of the two arguments; it has no scalar
  evaluation, only blocks.

Gram matrices are assembled upper-triangle-first and mirrored, so they
are conjugate-symmetric exactly.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import blaschke as bl
from .errors import DuplicatePoints, InputError, UnsupportedVariant
from .linalg import HermitianMatrix, PsdReport, psd_check
from .mobius import disk_point, pseudo_hyperbolic
from .orbits import GroupPresentation, enumerate_orbit

# Orbit points beyond this radius are excluded from kernel blocks: the
# kernel diagonal 1/(1-|p|^2) past it overwhelms double precision and
# the excluded rows carry no usable positivity information.  Matches
# the Blaschke evaluation radius.
KERNEL_POINT_RADIUS = bl.EVAL_RADIUS_LIMIT

_DISTINCT_TOL = 1e-10

# Interior circle used for the analytic part of the boundary Gram
# integrals; any radius in (0, 1) gives the same mean, and 1/2 keeps
# the equispaced rule's aliasing terms at 0.5**n_quad, i.e. zero.
INTERIOR_MEAN_RADIUS = 0.5


@dataclass(frozen=True)
class SzegoKernel:
    pass


@dataclass(frozen=True)
class ComposedInnerKernel:
    inner: bl.BlaschkeProduct
    power: int = 1

    def __post_init__(self):
        if self.power < 1:
            raise InputError("composition power must be at least 1")
        if self.inner.origin_multiplicity < 1:
            raise InputError(
                "the inner function must vanish at the origin"
            )

    def value(self, z: complex) -> complex:
        """phi(z) = B(z)^power with the clamped interior evaluation."""
        v, _ = bl.evaluate(self.inner, z)
        return v**self.power


@dataclass(frozen=True)
class OrbitGramKernel:
    group: GroupPresentation
    depth: int

    def __post_init__(self):
        if self.depth < 0:
            raise InputError("orbit depth must be nonnegative")


KernelSpec = SzegoKernel | ComposedInnerKernel | OrbitGramKernel


@dataclass(frozen=True, eq=False)
class GramMatrix:
    points: tuple[complex, ...]
    entries: np.ndarray
    truncation_note: float | None = None


def szego(z: complex, w: complex) -> complex:
    return 1.0 / (1.0 - w.conjugate() * z)


def kernel_eval(spec: KernelSpec, z: complex, w: complex) -> complex:
    """Kernel value K(z, w); Hermitian in its arguments."""
    z = disk_point(z)
    w = disk_point(w)
    if isinstance(spec, SzegoKernel):
        return szego(z, w)
    if isinstance(spec, ComposedInnerKernel):
        return szego(spec.value(z), spec.value(w))
    raise UnsupportedVariant(
        "the orbit kernel has no scalar evaluation; use orbit_block"
    )


def _check_distinct(points) -> list[complex]:
    pts = [disk_point(p) for p in points]
    for i in range(len(pts)):
        for j in range(i + 1, len(pts)):
            if pseudo_hyperbolic(pts[i], pts[j]) <= _DISTINCT_TOL:
                raise DuplicatePoints(
                    f"points {i} and {j} coincide within {_DISTINCT_TOL}"
                )
    return pts


def gram(spec: KernelSpec, points) -> GramMatrix:
    """Gram matrix [K(z_i, z_j)] over pairwise distinct points.

    For the orbit variant the result is the block matrix over the
    truncated orbits of every point, in deterministic orbit order.
    """
    pts = _check_distinct(points)
    if not pts:
        raise InputError("at least one point is required")
    if isinstance(spec, OrbitGramKernel):
        flat: list[complex] = []
        notes: list[float] = []
        certified = True
        for p in pts:
            orbit = enumerate_orbit(spec.group, p, spec.depth)
            flat.extend(q for q in orbit.points if abs(q) <= KERNEL_POINT_RADIUS)
            if orbit.tail_bound is None:
                certified = False
            else:
                notes.append(orbit.tail_bound)
        note = max(notes) if certified and notes else None
        return GramMatrix(tuple(pts), _szego_gram(flat), note)
    if isinstance(spec, ComposedInnerKernel):
        vals = [spec.value(p) for p in pts]
        errs = [bl.evaluate(spec.inner, p)[1] for p in pts]
        note = spec.power * max(errs)
        return GramMatrix(tuple(pts), _szego_gram(vals), note)
    return GramMatrix(tuple(pts), _szego_gram(pts), None)


def _szego_gram(points: list[complex]) -> np.ndarray:
    n = len(points)
    g = np.empty((n, n), dtype=complex)
    for i in range(n):
        for j in range(i, n):
            v = szego(points[i], points[j])
            g[i, j] = v
            g[j, i] = v.conjugate()
    return g


def _orbit_points(group: GroupPresentation, depth: int, z: complex) -> list[complex]:
    """Orbit of ``z`` truncated to depth, restricted to the radius where
    kernel rows are numerically meaningful."""
    orbit = enumerate_orbit(group, z, depth)
    return [p for p in orbit.points if abs(p) <= KERNEL_POINT_RADIUS]


def orbit_block(
    group: GroupPresentation, depth: int, z: complex, w: complex
) -> np.ndarray:
    """Matrix [K(g(z), h(w))] over the truncated orbits of z and w.

    Rows and columns follow the deterministic orbit entry order, so the
    depth-N block is the leading principal submatrix of the
    depth-(N+1) block.
    """
    zs = _orbit_points(group, depth, disk_point(z))
    ws = _orbit_points(group, depth, disk_point(w))
    zs_arr = np.array(zs, dtype=complex).reshape(-1, 1)
    ws_arr = np.array(ws, dtype=complex).reshape(1, -1)
    return 1.0 / (1.0 - ws_arr.conjugate() * zs_arr)


def dominance_check(
    k_sigma: KernelSpec,
    b_gamma: bl.BlaschkeProduct,
    c: float,
    points,
    tol: float | None = None,
) -> PsdReport:
    """Positivity of c^2 K(B(z_i), B(z_j)) - K_sigma(z_i, z_j).

    K is the unweighted disk kernel evaluated at the images under the
    product ``b_gamma``; the difference is positive semidefinite
    whenever every basis multiplier of the invariant space is bounded
    by ``c`` in modulus.
    """
    if isinstance(k_sigma, OrbitGramKernel):
        raise UnsupportedVariant("dominance is defined for scalar kernels only")
    pts = _check_distinct(points)
    bvals = [bl.evaluate(b_gamma, p)[0] for p in pts]
    n = len(pts)
    d = np.empty((n, n), dtype=complex)
    for i in range(n):
        for j in range(i, n):
            v = c * c * szego(bvals[i], bvals[j]) - kernel_eval(
                k_sigma, pts[i], pts[j]
            )
            d[i, j] = v
            d[j, i] = v.conjugate()
    return psd_check(HermitianMatrix(d), tol=tol)


def boundary_gram_quadrature(
    b: bl.BlaschkeProduct,
    max_power: int,
    n_quad: int,
    interior_radius: float = INTERIOR_MEAN_RADIUS,
) -> GramMatrix:
    """Gram matrix of the even powers B^0, B^2, ..., B^(2 max_power)
    against normalized arclength on the unit circle.

    The product must vanish at the origin, and ``n_quad`` must be a
    power of two at least 1024.  Two facts make the entries computable
    at full accuracy even when the zeros of B pile up at the boundary,
    where the raw integrand oscillates faster than any fixed node count
    can sample:

    * a finite Blaschke product is exactly unimodular on the circle, so
      the diagonal integrands |B|^(4n) are constant 1 there and the
      off-diagonal integrands reduce to the analytic functions
      B^(2(n-m));
    * the circle average of an analytic function is radius independent,
      so the off-diagonal means may be taken over an interior circle,
      where the equispaced rule's aliasing terms carry the factor
      interior_radius**n_quad and vanish at double precision.

    The diagonal is the plain equispaced boundary average of |B|^(4n);
    the worst deviation of |B| from 1 over the boundary nodes is
    reported as ``truncation_note``, certifying the unimodularity the
    off-diagonal reduction relies on.
    """
    if b.origin_multiplicity < 1:
        raise InputError("the product must vanish at the origin")
    if n_quad < 1024 or (n_quad & (n_quad - 1)) != 0:
        raise InputError("n_quad must be a power of two, at least 1024")
    if max_power < 0:
        raise InputError("max_power must be nonnegative")
    if not 0.0 < interior_radius < 1.0:
        raise InputError("interior_radius must lie in (0, 1)")
    angles = 2.0 * np.pi * np.arange(n_quad) / n_quad
    nodes = np.exp(1j * angles)
    moduli = np.abs(bl.product_values(b, nodes))
    note = float(np.max(np.abs(moduli - 1.0)))
    inner_sq = bl.product_values(b, interior_radius * nodes) ** 2
    # means of B^(2d) for d = 0 .. max_power over the interior circle
    means = np.empty(max_power + 1, dtype=complex)
    power = np.ones(n_quad, dtype=complex)
    means[0] = 1.0
    for d in range(1, max_power + 1):
        power = power * inner_sq
        means[d] = np.sum(power) / n_quad
    g = np.empty((max_power + 1, max_power + 1), dtype=complex)
    mod_pow = np.ones(n_quad)
    mod_sq = moduli**4
    for n in range(max_power + 1):
        if n > 0:
            mod_pow = mod_pow * mod_sq
        g[n, n] = complex(float(np.sum(mod_pow) / n_quad))
        for m in range(n):
            v = means[n - m]
            g[n, m] = v
            g[m, n] = v.conjugate()
    return GramMatrix((), g, truncation_note=note)
