"""Quaternion arithmetic and slice geometry.

Quaternions are immutable four-component values with the Hamilton product
(i*i = j*j = k*k = -1, i*j = k = -j*i, j*k = i, k*i = j).  Every function
in this module is pure, so concurrent use needs no coordination.

A "slice plane" L_I is the copy of the complex plane spanned by 1 and an
imaginary unit I (a quaternion with zero real part and unit modulus).
`split_complex` / `embed_complex` translate between quaternions in a slice
plane and ordinary Python complex numbers, which is how the quadrature and
Jacobian code does its in-plane arithmetic.
"""

import math
from dataclasses import dataclass

from .errors import DegenerateSphere
from .tolerances import EPS_UNIT, zero_guard


@dataclass(frozen=True, slots=True)
class Quaternion:
    """A quaternion w + x*i + y*j + z*k with float components."""

    w: float
    x: float
    y: float
    z: float

    def __post_init__(self):
        object.__setattr__(self, "w", float(self.w))
        object.__setattr__(self, "x", float(self.x))
        object.__setattr__(self, "y", float(self.y))
        object.__setattr__(self, "z", float(self.z))

    @classmethod
    def from_list(cls, values) -> "Quaternion":
        if len(values) != 4:
            raise ValueError(f"quaternion needs 4 components, got {len(values)}")
        return cls(*values)

    def to_list(self) -> list:
        return [self.w, self.x, self.y, self.z]

    @property
    def re(self) -> float:
        return self.w

    @property
    def im(self) -> "Quaternion":
        return Quaternion(0.0, self.x, self.y, self.z)

    def im_norm(self) -> float:
        return math.sqrt(self.x * self.x + self.y * self.y + self.z * self.z)

    def conj(self) -> "Quaternion":
        return Quaternion(self.w, -self.x, -self.y, -self.z)

    def norm_sq(self) -> float:
        return self.w * self.w + self.x * self.x + self.y * self.y + self.z * self.z

    def __abs__(self) -> float:
        return math.sqrt(self.norm_sq())

    def inverse(self) -> "Quaternion":
        n2 = self.norm_sq()
        if math.sqrt(n2) <= zero_guard(math.sqrt(n2)):
            raise ZeroDivisionError("quaternion inverse of (near-)zero value")
        return Quaternion(self.w / n2, -self.x / n2, -self.y / n2, -self.z / n2)

    def __add__(self, other):
        if isinstance(other, Quaternion):
            return Quaternion(self.w + other.w, self.x + other.x,
                              self.y + other.y, self.z + other.z)
        if isinstance(other, (int, float)):
            return Quaternion(self.w + other, self.x, self.y, self.z)
        return NotImplemented

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, Quaternion):
            return Quaternion(self.w - other.w, self.x - other.x,
                              self.y - other.y, self.z - other.z)
        if isinstance(other, (int, float)):
            return Quaternion(self.w - other, self.x, self.y, self.z)
        return NotImplemented

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __neg__(self):
        return Quaternion(-self.w, -self.x, -self.y, -self.z)

    def __mul__(self, other):
        if isinstance(other, Quaternion):
            a, b = self, other
            return Quaternion(
                a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
                a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
                a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
                a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w,
            )
        if isinstance(other, (int, float)):
            return Quaternion(self.w * other, self.x * other,
                              self.y * other, self.z * other)
        return NotImplemented

    def __rmul__(self, other):
        # Only reals reach here; they commute with everything.
        if isinstance(other, (int, float)):
            return self.__mul__(other)
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, (int, float)):
            return Quaternion(self.w / other, self.x / other,
                              self.y / other, self.z / other)
        return NotImplemented

    def is_real(self, eps: float = EPS_UNIT) -> bool:
        return self.im_norm() <= eps * (1.0 + abs(self))

    def __repr__(self):
        return f"Quaternion({self.w!r}, {self.x!r}, {self.y!r}, {self.z!r})"


ZERO = Quaternion(0.0, 0.0, 0.0, 0.0)
ONE = Quaternion(1.0, 0.0, 0.0, 0.0)
UNIT_I = Quaternion(0.0, 1.0, 0.0, 0.0)
UNIT_J = Quaternion(0.0, 0.0, 1.0, 0.0)
UNIT_K = Quaternion(0.0, 0.0, 0.0, 1.0)

# Any quaternion with Re = 0 and modulus 1 squares to -1 and may serve as
# the imaginary unit of a slice plane.
ImaginaryUnit = Quaternion


def is_imaginary_unit(u: Quaternion, eps: float = EPS_UNIT) -> bool:
    return abs(u.w) <= eps and abs(u.norm_sq() - 1.0) <= 2.0 * eps


def require_imaginary_unit(u: Quaternion, eps: float = EPS_UNIT) -> Quaternion:
    if not is_imaginary_unit(u, eps):
        raise ValueError(f"{u!r} is not an imaginary unit (need Re=0, |u|=1)")
    return u


@dataclass(frozen=True, slots=True)
class Sphere:
    """The 2-sphere x0 + y0*S of quaternions with Re = x0, |Im| = y0.

    y0 = 0 is allowed and denotes the degenerate sphere {x0}.
    """

    x0: float
    y0: float

    def __post_init__(self):
        object.__setattr__(self, "x0", float(self.x0))
        object.__setattr__(self, "y0", float(self.y0))
        if self.y0 < 0.0:
            raise ValueError("sphere radius y0 must be >= 0")

    def point(self, unit: Quaternion) -> Quaternion:
        """The point x0 + unit*y0 of the sphere in the plane of `unit`."""
        require_imaginary_unit(unit)
        return Quaternion(self.x0, unit.x * self.y0, unit.y * self.y0,
                          unit.z * self.y0)

    def contains(self, q: Quaternion, eps: float = 1e-9) -> bool:
        scale = 1.0 + abs(self.x0) + self.y0
        return (abs(q.re - self.x0) <= eps * scale
                and abs(q.im_norm() - self.y0) <= eps * scale)

    @classmethod
    def through(cls, q: Quaternion) -> "Sphere":
        return cls(q.re, q.im_norm())


def slice_decompose(q: Quaternion) -> tuple[float, float, Quaternion]:
    """Write q = x + I*y with y >= 0 and I an imaginary unit.

    Real points have no preferred plane; they report I = i by convention.
    """
    y = q.im_norm()
    if y <= zero_guard(abs(q)):
        return q.re, 0.0, UNIT_I
    return q.re, y, Quaternion(0.0, q.x / y, q.y / y, q.z / y)


def coordinate_extract(q: Quaternion) -> tuple[float, float, float, float]:
    """Recover the four real coordinates of q by quaternion arithmetic only.

    Each coordinate is an algebraic combination of q conjugated by the
    basis units; the combinations are evaluated literally rather than read
    off the components, so this doubles as a self-test of the product.
    """
    iqi = UNIT_I * q * UNIT_I
    jqj = UNIT_J * q * UNIT_J
    kqk = UNIT_K * q * UNIT_K
    x0 = (q - iqi - jqj - kqk) * 0.25
    x1 = (UNIT_I * 4.0).inverse() * (q - iqi + jqj + kqk)
    x2 = (UNIT_J * 4.0).inverse() * (q + iqi - jqj + kqk)
    x3 = (UNIT_K * 4.0).inverse() * (q + iqi + jqj - kqk)
    return x0.re, x1.re, x2.re, x3.re


def same_slice_plane(p: Quaternion, q: Quaternion, eps: float = EPS_UNIT) -> bool:
    """True when p and q lie in a common plane L_I.

    Holds when either imaginary part vanishes or the two imaginary parts
    are parallel (cross product negligible); anti-parallel counts, since
    L_I and L_{-I} are the same plane.
    """
    np_, nq = p.im_norm(), q.im_norm()
    if np_ <= eps * (1.0 + abs(p)) or nq <= eps * (1.0 + abs(q)):
        return True
    cx = p.y * q.z - p.z * q.y
    cy = p.z * q.x - p.x * q.z
    cz = p.x * q.y - p.y * q.x
    return math.sqrt(cx * cx + cy * cy + cz * cz) <= eps * np_ * nq


def sigma_distance(p: Quaternion, q: Quaternion) -> float:
    """The sigma metric: Euclidean within a slice plane, omega across planes.

    omega(q, p) adds the two imaginary magnitudes instead of subtracting
    the imaginary parts, so sigma(p, q) >= |p - q| always.
    """
    if same_slice_plane(p, q):
        return abs(q - p)
    dre = q.re - p.re
    dim = q.im_norm() + p.im_norm()
    return math.sqrt(dre * dre + dim * dim)


def orthogonal_unit(unit: Quaternion) -> Quaternion:
    """A deterministic imaginary unit J with J perpendicular to `unit`.

    Gram-Schmidt against the fixed candidate list (i, j, k); the first
    candidate that is safely non-parallel wins, so the choice is stable.
    """
    require_imaginary_unit(unit)
    for cand in (UNIT_I, UNIT_J, UNIT_K):
        dot = cand.x * unit.x + cand.y * unit.y + cand.z * unit.z
        v = cand - unit * dot
        n = v.im_norm()
        if n > 0.5:
            return v / n
    raise AssertionError("unreachable: some basis unit is non-parallel")


def split_complex(q: Quaternion, unit_i: Quaternion,
                  unit_j: Quaternion) -> tuple[complex, complex]:
    """Components (F, G) of q = F + G*J over the orthonormal basis
    (1, I, J, IJ), with F and G returned as complex numbers in L_I."""
    ij = unit_i * unit_j
    c0 = q.w
    c1 = q.x * unit_i.x + q.y * unit_i.y + q.z * unit_i.z
    c2 = q.x * unit_j.x + q.y * unit_j.y + q.z * unit_j.z
    c3 = q.x * ij.x + q.y * ij.y + q.z * ij.z
    return complex(c0, c1), complex(c2, c3)


def embed_complex(c: complex, unit: Quaternion) -> Quaternion:
    """The quaternion Re(c) + Im(c)*unit in the slice plane of `unit`."""
    return Quaternion(c.real, c.imag * unit.x, c.imag * unit.y, c.imag * unit.z)


def off_plane_norm(q: Quaternion, unit: Quaternion) -> float:
    """Distance of q from the slice plane spanned by 1 and `unit`."""
    c1 = q.x * unit.x + q.y * unit.y + q.z * unit.z
    rx = q.x - c1 * unit.x
    ry = q.y - c1 * unit.y
    rz = q.z - c1 * unit.z
    return math.sqrt(rx * rx + ry * ry + rz * rz)


def representation_eval(q1: Quaternion, f1: Quaternion,
                        q2: Quaternion, f2: Quaternion,
                        sphere: Sphere, q: Quaternion) -> Quaternion:
    """Value at q of the affine sphere restriction through (q1,f1), (q2,f2).

    Reconstructs a slice-regular function on the whole sphere from its
    values at two distinct points of the sphere; the result does not
    depend on which pair was sampled.
    """
    if abs(q1 - q2) <= zero_guard(abs(q1) + abs(q2)):
        raise DegenerateSphere("need two distinct points on the sphere")
    for name, pt in (("q1", q1), ("q2", q2), ("q", q)):
        if not sphere.contains(pt, eps=1e-6):
            raise ValueError(f"{name}={pt!r} does not lie on {sphere!r}")
    d = (q2 - q1).inverse()
    return d * (q1.conj() * f1 - q2.conj() * f2) + q * (d * (f2 - f1))
