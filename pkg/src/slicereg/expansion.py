"""Series expansion at a sphere, its convergence set, and related geometry.

A slice-regular polynomial f expands around the sphere x0 + y0*S as

    f(q) = sum_n [(q-x0)^2 + y0^2]^n * (A_{2n} + (q - q0) A_{2n+1})

where q0 is any chosen base point on the sphere.  The coefficients come
from iterating remainder division alternately at q0 and its conjugate.
An equivalent family C_n, independent of the base point, replaces the
(q - q0) correction with a bare q; odd-index coefficients of the two
families coincide.

The natural domain of such a series is the symmetric set
U(x0+y0*S, R) = {q : |(q-x0)^2 + y0^2| < R^2}, whose slice sections are
bounded by polynomial lemniscates: two loops for R < y0, a figure-eight
at R = y0, a single loop beyond.
"""

import cmath
import enum
import math
from dataclasses import dataclass
from typing import Optional, Sequence

from .errors import DegenerateSphere
from .polynomial import SlicePoly
from .quaternion import (Quaternion, Sphere, embed_complex,
                         require_imaginary_unit)
from .tolerances import EPS_BOUNDARY, EPS_COEFF, EPS_PAIR, EPS_UNIT


class Region(enum.Enum):
    INSIDE = "inside"
    BOUNDARY = "boundary"
    OUTSIDE = "outside"


class Shape(enum.Enum):
    TWO_COMPONENTS = "two_components"
    FIGURE_EIGHT = "figure_eight"
    CONNECTED = "connected"


@dataclass(frozen=True, slots=True)
class LemniscateDomain:
    """The symmetric set U(x0 + y0*S, R) with lemniscate slice boundary."""

    x0: float
    y0: float
    radius: float

    def __post_init__(self):
        object.__setattr__(self, "x0", float(self.x0))
        object.__setattr__(self, "y0", float(self.y0))
        object.__setattr__(self, "radius", float(self.radius))
        if self.y0 < 0.0:
            raise ValueError("y0 must be >= 0")
        if self.radius <= 0.0:
            raise ValueError("radius must be > 0")

    @property
    def sphere(self) -> Sphere:
        return Sphere(self.x0, self.y0)

    def quadratic_modulus(self, q: Quaternion) -> float:
        """|(q - x0)^2 + y0^2|, the quantity compared against R^2."""
        shifted = q - self.x0
        return abs(shifted * shifted + Quaternion(self.y0 * self.y0, 0, 0, 0))

    def classify(self, q: Quaternion, eps: Optional[float] = None) -> Region:
        r2 = self.radius * self.radius
        tol = EPS_BOUNDARY * (1.0 + r2) if eps is None else eps
        m = self.quadratic_modulus(q)
        if abs(m - r2) <= tol:
            return Region.BOUNDARY
        return Region.INSIDE if m < r2 else Region.OUTSIDE

    def shape(self, eps: Optional[float] = None) -> Shape:
        tol = EPS_BOUNDARY * (1.0 + self.y0 + self.radius) if eps is None else eps
        if self.radius < self.y0 - tol:
            return Shape.TWO_COMPONENTS
        if self.radius <= self.y0 + tol:
            return Shape.FIGURE_EIGHT
        return Shape.CONNECTED

    @property
    def is_slice_domain(self) -> bool:
        """True when the set meets the real axis (R > y0) and is therefore
        a symmetric slice domain."""
        return self.radius > self.y0


@dataclass(frozen=True)
class SphericalExpansion:
    """Expansion coefficients of a polynomial at a sphere.

    `coeffs` lists the base-point family (pair n multiplies
    [(q-x0)^2+y0^2]^n and its (q-q0) correction); `sphere_coeffs`, when
    present, lists the base-point-free family with a bare q correction.
    Odd entries of the two families agree up to roundoff.
    """

    sphere: Sphere
    base_point: Quaternion
    coeffs: tuple
    sphere_coeffs: Optional[tuple] = None

    def __post_init__(self):
        if not self.sphere.contains(self.base_point, eps=EPS_UNIT * 1e3):
            raise ValueError("base point does not lie on the sphere")
        if self.sphere_coeffs is not None:
            scale = 1.0 + max((abs(c) for c in self.coeffs), default=0.0)
            for n in range(1, min(len(self.coeffs), len(self.sphere_coeffs)), 2):
                if abs(self.coeffs[n] - self.sphere_coeffs[n]) > 1e-9 * scale:
                    raise ValueError(
                        f"odd coefficient {n} differs between the two families")

    def __len__(self):
        return len(self.coeffs)


def expand_at(f: SlicePoly, q0: Quaternion, order: int) -> SphericalExpansion:
    """Coefficients 0..order of the expansion of f at the sphere through q0.

    Alternates remainder division at q0 and conj(q0); each round yields
    one even and one odd coefficient and strips one full quadratic factor.
    At a real q0 the conjugate pair collapses and the result is the
    classical Taylor expansion, with no special casing.
    """
    if order < 0:
        raise ValueError("order must be >= 0")
    q0c = q0.conj()
    out = []
    g = f
    for _ in range(order // 2 + 1):
        even, r1 = g.remainder_div(q0)
        odd, g = r1.remainder_div(q0c)
        out.append(even)
        out.append(odd)
    return SphericalExpansion(Sphere.through(q0), q0, tuple(out[:order + 1]))


def expand_pair(f: SlicePoly, sphere: Sphere, q1: Quaternion, q2: Quaternion,
                order: int) -> SphericalExpansion:
    """Expansion with both coefficient families, sampling the quadratic
    remainder iterates at two distinct sphere points q1, q2.

    The base-point family uses q1 as its base point.  The two-point
    family is built from the affine sphere-restriction combinations and
    depends only on f and the sphere, not on the sampled pair.
    """
    if order < 0:
        raise ValueError("order must be >= 0")
    if abs(q1 - q2) <= EPS_PAIR * (1.0 + abs(q1) + abs(q2)):
        # Coefficients divide by the separation; pairs this close are
        # numerically degenerate even when not exactly equal.
        raise DegenerateSphere("expansion pair needs well-separated points")
    for name, pt in (("q1", q1), ("q2", q2)):
        if not sphere.contains(pt, eps=1e-6):
            raise ValueError(f"{name} does not lie on the sphere")
    d = (q2 - q1).inverse()
    q1c, q2c = q1.conj(), q2.conj()
    base, pair = [], []
    g = f
    for _ in range(order // 2 + 1):
        v1, v2 = g(q1), g(q2)
        pair.append(d * (q1c * v1 - q2c * v2))
        pair.append(d * (v2 - v1))
        even, r1 = g.remainder_div(q1)
        odd, g = r1.remainder_div(q1c)
        base.append(even)
        base.append(odd)
    return SphericalExpansion(sphere, q1, tuple(base[:order + 1]),
                              tuple(pair[:order + 1]))


def eval_expansion(expansion: SphericalExpansion, q: Quaternion,
                   up_to: Optional[int] = None, form: str = "base") -> Quaternion:
    """Partial sum of the expansion through coefficient index `up_to`.

    `form="base"` uses the (q - q0) correction terms, `form="pair"` the
    bare-q ones (requires sphere_coeffs).  Defaults to all coefficients.
    """
    if form == "base":
        coeffs = expansion.coeffs
        correction = q - expansion.base_point
    elif form == "pair":
        if expansion.sphere_coeffs is None:
            raise ValueError("expansion carries no two-point coefficients")
        coeffs = expansion.sphere_coeffs
        correction = q
    else:
        raise ValueError(f"unknown form {form!r}")
    last = len(coeffs) - 1 if up_to is None else up_to
    if last >= len(coeffs):
        raise ValueError(f"up_to={last} exceeds available coefficients")
    shifted = q - expansion.sphere.x0
    quad = shifted * shifted + expansion.sphere.y0 ** 2
    total = Quaternion(0.0, 0.0, 0.0, 0.0)
    power = Quaternion(1.0, 0.0, 0.0, 0.0)
    for n in range(0, last + 1, 2):
        total = total + power * coeffs[n]
        if n + 1 <= last:
            total = total + power * (correction * coeffs[n + 1])
        power = power * quad
    return total


def radius_of_convergence(coeffs: Sequence[Quaternion],
                          truncated: bool = True) -> float:
    """Radius R with limsup |a_n|^(1/n) = 1/R.

    `truncated=True` treats the list as the leading window of an infinite
    sequence and estimates the limsup as max |a_n|^(1/n) over the top half
    of the indices (ignoring entries below the trim threshold); the top
    half avoids contamination by initial transients.  `truncated=False`
    declares the list complete (a polynomial), whose radius is infinite.
    """
    if not truncated:
        return math.inf
    mags = [abs(c) for c in coeffs]
    if not mags:
        return math.inf
    trim = EPS_COEFF * (1.0 + max(mags))
    best = 0.0
    for n in range(len(mags) // 2, len(mags)):
        if n > 0 and mags[n] > trim:
            best = max(best, mags[n] ** (1.0 / n))
    return math.inf if best == 0.0 else 1.0 / best


def modulus_bounds(q: Quaternion, sphere: Sphere) -> tuple[float, float]:
    """Bounds on |q - q0| valid for every q0 on the sphere.

    With r^2 = |(q-x0)^2 + y0^2| the distance lies in
    [sqrt(r^2+y0^2) - y0, sqrt(r^2+y0^2) + y0].
    """
    shifted = q - sphere.x0
    r2 = abs(shifted * shifted + Quaternion(sphere.y0 * sphere.y0, 0, 0, 0))
    root = math.sqrt(r2 + sphere.y0 * sphere.y0)
    return root - sphere.y0, root + sphere.y0


def boundary_parameterization(domain: LemniscateDomain,
                              count: int) -> list[tuple[float, complex, int]]:
    """(theta, z, loop) samples of the slice boundary lemniscate, as
    complex numbers z with |(z - x0)^2 + y0^2| = R^2.

    Solves (z - x0)^2 = R^2 e^(i theta) - y0^2 with a square root followed
    continuously in theta.  For R > y0 the right-hand side winds once
    around 0, so the two branch chains concatenate into a single closed
    loop; for R < y0 each branch closes by itself around one of the
    conjugate sphere points, giving loops 0 and 1.  Within each loop the
    points are ordered by the curve parameter, so consecutive points are
    adjacent on the curve.
    """
    if count < 8:
        raise ValueError("need at least 8 boundary points")
    if count % 2:
        raise ValueError("boundary point count must be even")
    half = count // 2
    r2 = domain.radius * domain.radius
    y2 = domain.y0 * domain.y0

    # Oversample the argument tracking so branch continuity survives
    # coarse requested grids.
    oversample = 16
    fine = half * oversample
    ws, args = [], []
    prev_arg = None
    prev_w = None
    for m in range(fine):
        theta = 2.0 * math.pi * m / fine
        w = r2 * cmath.exp(1j * theta) - y2
        if prev_arg is None:
            # At the pinch radius w(0) = 0; the continuous branch enters
            # with argument pi/2 (w ~ i * R^2 * theta for small theta).
            a = cmath.phase(w) if w != 0 else math.pi / 2.0
        else:
            if w == 0:
                step = 0.0
            elif prev_w == 0:
                # Leaving the pinch: anchor on the principal argument so
                # the zero crossing does not bias the tracked branch.
                step = cmath.phase(w) - prev_arg
            else:
                step = cmath.phase(w / prev_w)
            a = prev_arg + step
        ws.append(w)
        args.append(a)
        prev_arg, prev_w = a, w

    roots = []
    for m in range(half):
        w = ws[m * oversample]
        a = args[m * oversample]
        roots.append(math.sqrt(abs(w)) * cmath.exp(0.5j * a))

    connected = domain.radius >= domain.y0
    samples = []
    for m in range(half):
        theta = 2.0 * math.pi * m / half
        samples.append((theta, domain.x0 + roots[m], 0))
    for m in range(half):
        theta = 2.0 * math.pi * m / half
        samples.append((theta, domain.x0 - roots[m], 0 if connected else 1))
    return samples


def boundary_points(domain: LemniscateDomain, unit: Quaternion,
                    count: int) -> list[Quaternion]:
    """Boundary lemniscate samples embedded in the slice plane of `unit`."""
    require_imaginary_unit(unit)
    return [embed_complex(z, unit)
            for _, z, _ in boundary_parameterization(domain, count)]
