"""Disk automorphisms in canonical (a, lambda) form.

Every automorphism of the open unit disk can be written uniquely as

    phi(z) = lam * (a - z) / (1 - conj(a) * z),   |a| < 1, |lam| = 1,

and the parameters are recovered from any concrete map through
a = phi^{-1}(0) and lam = phi'(0) / (|a|^2 - 1).  In this convention the
identity map is (a=0, lam=-1) and the half-turn z -> -z is (a=0, lam=1).
All operations renormalize immediately so that |lam| cannot drift off
the unit circle in long composition chains.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .errors import NotDiskAutomorphism, NotInDisk

# Open-disk points are rejected closer to the boundary than this margin;
# nearer points are not resolvable at double precision for the orbit
# computations built on top of this module.
DISK_BOUNDARY_MARGIN = 1e-14

_UNIT_CIRCLE_TOL = 1e-12
_PARAM_CLAMP = math.nextafter(1.0, 0.0)  # largest float strictly below 1

# Fixed deterministic probe grid used for map-equality checks.
PROBE_GRID = tuple(
    r * cmath.exp(2j * cmath.pi * k / 8) for r in (0.1, 0.6) for k in range(8)
)


def disk_point(value) -> complex:
    """Validate a point of the open unit disk and return it as ``complex``.

    Raises ``NotInDisk`` for non-finite values and for points with
    |z| >= 1 - 1e-14.
    """
    z = complex(value)
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise NotInDisk(f"non-finite point {value!r}")
    if abs(z) >= 1.0 - DISK_BOUNDARY_MARGIN:
        raise NotInDisk(f"|z| = {abs(z):.17g} is not inside the open unit disk")
    return z


def pseudo_hyperbolic(z: complex, w: complex) -> float:
    """Automorphism-invariant distance |z - w| / |1 - conj(w) z|."""
    return abs(z - w) / abs(1.0 - w.conjugate() * z)


@dataclass(frozen=True)
class DiskAutomorphism:
    """The map phi(z) = lam (a - z) / (1 - conj(a) z).

    ``a`` is the preimage of 0 and ``lam`` a unimodular factor.  Values
    are immutable; every operation returns a fresh canonical instance.
    """

    a: complex
    lam: complex

    def __post_init__(self):
        a = complex(self.a)
        lam = complex(self.lam)
        if not all(
            math.isfinite(v) for v in (a.real, a.imag, lam.real, lam.imag)
        ):
            raise NotDiskAutomorphism("non-finite parameters")
        if abs(a) >= 1.0:
            raise NotDiskAutomorphism(f"pole parameter |a| = {abs(a):.17g} >= 1")
        if abs(abs(lam) - 1.0) > _UNIT_CIRCLE_TOL:
            raise NotDiskAutomorphism(f"|lam| = {abs(lam):.17g} is not unimodular")
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "lam", lam)

    @classmethod
    def identity(cls) -> "DiskAutomorphism":
        return cls(0j, complex(-1.0))

    def __call__(self, z: complex) -> complex:
        return self.lam * (self.a - z) / (1.0 - self.a.conjugate() * z)

    def derivative(self, z: complex) -> complex:
        den = 1.0 - self.a.conjugate() * z
        return self.lam * (abs(self.a) ** 2 - 1.0) / (den * den)

    def inverse(self) -> "DiskAutomorphism":
        # phi^{-1} has preimage-of-0 equal to phi(0) = lam*a and
        # unimodular factor conj(lam).
        return DiskAutomorphism(self.lam * self.a, self.lam.conjugate())

    def compose(self, other: "DiskAutomorphism") -> "DiskAutomorphism":
        """self after other: (self.compose(other))(z) = self(other(z))."""
        a = _clamp_inside(other.inverse()(self.a))
        num = self.derivative(other(0j)) * other.derivative(0j)
        lam = num / (abs(a) ** 2 - 1.0)
        return _normalized(a, lam)

    def is_identity(self, tol: float = 1e-12) -> bool:
        return abs(self.a) <= tol and abs(self.lam + 1.0) <= tol


def _clamp_inside(a: complex) -> complex:
    """Pull a parameter that rounded onto the unit circle back inside;
    anything farther out is a genuine error."""
    m = abs(a)
    if m >= 1.0:
        if m > 1.0 + 1e-12:
            raise NotDiskAutomorphism(f"pole parameter |a| = {m:.17g} >= 1")
        a = a * (_PARAM_CLAMP / m)
    return a


def _normalized(a: complex, lam: complex) -> DiskAutomorphism:
    """Build an automorphism, renormalizing |lam| to 1."""
    r = abs(lam)
    if not (math.isfinite(r) and r > 0.0):
        raise NotDiskAutomorphism("degenerate unimodular factor")
    return DiskAutomorphism(_clamp_inside(a), lam / r)


def canonicalize(p, q, r, s) -> DiskAutomorphism:
    """Canonical form of the fractional-linear map z -> (pz+q)/(rz+s).

    The map must send the unit disk onto itself; this is checked by
    requiring |f(0)| < 1, boundary modulus 1 at eight sample points on
    the circle, and agreement of the canonical form with f to 1e-12 on
    the fixed probe grid.  Raises ``NotDiskAutomorphism`` otherwise.
    """
    coeffs = [complex(v) for v in (p, q, r, s)]
    if not all(
        math.isfinite(c.real) and math.isfinite(c.imag) for c in coeffs
    ):
        raise NotDiskAutomorphism("non-finite coefficients")
    cp, cq, cr, cs = coeffs
    scale = max(abs(c) for c in coeffs)
    if scale == 0.0:
        raise NotDiskAutomorphism("zero map")

    def f(z: complex) -> complex:
        den = cr * z + cs
        if abs(den) < 1e-300:
            raise NotDiskAutomorphism("pole at a probe point")
        return (cp * z + cq) / den

    if abs(f(0j)) >= 1.0:
        raise NotDiskAutomorphism("map does not send 0 into the disk")
    for k in range(8):
        b = cmath.exp(2j * cmath.pi * k / 8)
        if abs(abs(f(b)) - 1.0) > 1e-8:
            raise NotDiskAutomorphism(
                f"boundary modulus {abs(f(b)):.17g} at sample {k} is not 1"
            )
    if abs(cp) < 1e-14 * scale:
        raise NotDiskAutomorphism("degenerate map: leading coefficient vanishes")
    a = -cq / cp
    if abs(a) >= 1.0:
        raise NotDiskAutomorphism("preimage of 0 lies outside the disk")
    d0 = (cp * cs - cq * cr) / (cs * cs)
    phi = _normalized(a, d0 / (abs(a) ** 2 - 1.0))
    for z in PROBE_GRID:
        if abs(phi(z) - f(z)) > 1e-12:
            raise NotDiskAutomorphism(
                "canonical form does not reproduce the map on the probe grid"
            )
    return phi


def iterate_cyclic(a: float, n: int) -> DiskAutomorphism:
    """n-th iterate of z -> (z - a)/(1 - a z), a in (-1, 1).

    The iterate is again of the same form with translation parameter
    a_n = tanh(n * atanh(a)); the tanh form is algebraically identical
    to the quotient of binomial powers and does not overflow for large
    n.  For |n| large enough that a_n is not representable below 1 the
    parameter is clamped to the largest float strictly inside the disk.
    """
    a = float(a)
    if not -1.0 < a < 1.0:
        raise NotDiskAutomorphism(f"translation parameter {a!r} not in (-1, 1)")
    if abs(n) <= 1:
        an = n * a  # avoid the last-bit wobble of tanh(atanh(a))
    else:
        an = math.tanh(n * math.atanh(a))
        if abs(an) >= 1.0:
            an = math.copysign(_PARAM_CLAMP, an)
    return DiskAutomorphism(complex(an), complex(-1.0))
