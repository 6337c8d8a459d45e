"""Noncommutative contour integrals in a slice plane.

The integral of g(s) ds f(s) along a curve in L_I is defined by splitting
f = F + G*J with J perpendicular to I: the kernel values here always lie
in L_I, so the whole computation reduces to two classical complex contour
integrals, one against F and one against G, with the J reattached on the
right afterwards.

Quadrature nodes carry tangent weights w_m ~ z'(t_m) dt, so every
integral is the plain weighted sum  sum_m g(z_m) w_m f(z_m).  Circle
contours use exact tangents (spectral accuracy); lemniscate contours
differentiate the boundary parameterization by central differences,
which is second order in the node count.  Sums are accumulated pairwise
in node order, so results are reproducible bit for bit.
"""

import cmath
import math
from dataclasses import dataclass
from typing import Callable, Optional

from .errors import KernelOffSlice, PinchedContour, PointOnContour
from .expansion import (LemniscateDomain, SphericalExpansion,
                        boundary_parameterization, expand_at)
from .polynomial import SlicePoly
from .quaternion import (Quaternion, embed_complex, off_plane_norm,
                         orthogonal_unit, require_imaginary_unit,
                         slice_decompose, split_complex)
from .tolerances import EPS_UNIT


def _pairwise_sum(values: list) -> complex:
    """Deterministic pairwise summation (order fixed by the node order)."""
    n = len(values)
    if n == 0:
        return 0j
    work = list(values)
    while len(work) > 1:
        nxt = [work[m] + work[m + 1] for m in range(0, len(work) - 1, 2)]
        if len(work) % 2:
            nxt.append(work[-1])
        work = nxt
    return work[0]


@dataclass(frozen=True)
class Contour:
    """A closed quadrature curve in one slice plane.

    `points` and `weights` are stored as in-plane complex numbers; the
    quaternion views are available via `nodes()`.  `total_length` is the
    sum of the weight moduli.
    """

    unit: Quaternion
    points: tuple
    weights: tuple
    total_length: float

    def __post_init__(self):
        require_imaginary_unit(self.unit)

    def nodes(self) -> list[tuple[Quaternion, Quaternion]]:
        return [(embed_complex(z, self.unit), embed_complex(w, self.unit))
                for z, w in zip(self.points, self.weights)]

    def __len__(self):
        return len(self.points)


def circle_contour(center: float, radius: float, unit: Quaternion,
                   count: int) -> Contour:
    """Equispaced nodes on the circle of the given real center; weights are
    the exact tangents times the parameter step."""
    require_imaginary_unit(unit)
    if radius <= 0.0:
        raise ValueError("radius must be > 0")
    if count < 16:
        raise ValueError("need at least 16 nodes")
    step = 2.0 * math.pi / count
    points, weights = [], []
    for m in range(count):
        rot = cmath.exp(1j * step * m)
        points.append(center + radius * rot)
        weights.append(1j * radius * rot * step)
    return Contour(unit, tuple(points), tuple(weights),
                   sum(abs(w) for w in weights))


def lemniscate_contour(domain: LemniscateDomain, unit: Quaternion,
                       count: int) -> Contour:
    """Quadrature nodes on the boundary lemniscate of `domain`.

    Weights are central differences (z_{m+1} - z_{m-1})/2 taken cyclically
    within each loop; both loops are included when R < y0.  Refuses the
    pinched radius R = y0 where the boundary is not smooth.
    """
    require_imaginary_unit(unit)
    if abs(domain.radius - domain.y0) <= 1e-9 * (1.0 + domain.radius + domain.y0):
        raise PinchedContour("boundary degenerates to a figure-eight at R = y0")
    samples = boundary_parameterization(domain, count)
    loops: dict[int, list[complex]] = {}
    for _, z, loop in samples:
        loops.setdefault(loop, []).append(z)
    points, weights = [], []
    for loop in sorted(loops):
        zs = loops[loop]
        n = len(zs)
        for m in range(n):
            points.append(zs[m])
            weights.append((zs[(m + 1) % n] - zs[(m - 1) % n]) / 2.0)
    return Contour(unit, tuple(points), tuple(weights),
                   sum(abs(w) for w in weights))


def _integrate_split(kernel_c: Callable[[complex], complex], f: SlicePoly,
                     contour: Contour) -> tuple[complex, complex]:
    """The two complex integrals (against F and against G) of
    kernel(s) ds f(s) over the contour."""
    unit_j = orthogonal_unit(contour.unit)
    terms_f, terms_g = [], []
    for z, w in zip(contour.points, contour.weights):
        value = f(embed_complex(z, contour.unit))
        comp_f, comp_g = split_complex(value, contour.unit, unit_j)
        factor = kernel_c(z) * w
        terms_f.append(factor * comp_f)
        terms_g.append(factor * comp_g)
    return _pairwise_sum(terms_f), _pairwise_sum(terms_g)


def slice_integral(kernel: Callable[[Quaternion], Quaternion], f: SlicePoly,
                   contour: Contour) -> Quaternion:
    """Integral of kernel(s) ds f(s) with a kernel taking values in L_I."""

    def kernel_c(z: complex) -> complex:
        value = kernel(embed_complex(z, contour.unit))
        if off_plane_norm(value, contour.unit) > EPS_UNIT * (1.0 + abs(value)):
            raise KernelOffSlice(f"kernel value at {z} leaves the slice plane")
        return complex(value.w, value.x * contour.unit.x
                       + value.y * contour.unit.y + value.z * contour.unit.z)

    sum_f, sum_g = _integrate_split(kernel_c, f, contour)
    unit_j = orthogonal_unit(contour.unit)
    return (embed_complex(sum_f, contour.unit)
            + embed_complex(sum_g, contour.unit) * unit_j)


def _assemble(sum_f: complex, sum_g: complex, contour: Contour) -> Quaternion:
    # 1/(2*pi*I) multiplies from the left; it lives in L_I, so it acts on
    # both complex components as division by 2*pi*i.
    scale = 1.0 / (2.0j * math.pi)
    unit_j = orthogonal_unit(contour.unit)
    return (embed_complex(scale * sum_f, contour.unit)
            + embed_complex(scale * sum_g, contour.unit) * unit_j)


def _in_plane_complex(q: Quaternion, contour: Contour, what: str) -> complex:
    if off_plane_norm(q, contour.unit) > 1e-9 * (1.0 + abs(q)):
        raise ValueError(f"{what} must lie in the contour's slice plane")
    return complex(q.w, q.x * contour.unit.x + q.y * contour.unit.y
                   + q.z * contour.unit.z)


def _guard_distance(contour: Contour, pole: complex, what: str) -> None:
    tol = 1e-9 * (1.0 + abs(pole))
    if min(abs(z - pole) for z in contour.points) <= tol:
        raise PointOnContour(f"{what} coincides with a quadrature node")


def cauchy_eval(f: SlicePoly, z: Quaternion, contour: Contour) -> Quaternion:
    """Reproduce f(z) from boundary data via the slicewise Cauchy formula.

    z must lie strictly inside the contour in its slice plane.
    """
    zc = _in_plane_complex(z, contour, "evaluation point")
    _guard_distance(contour, zc, "evaluation point")
    sum_f, sum_g = _integrate_split(lambda s: 1.0 / (s - zc), f, contour)
    return _assemble(sum_f, sum_g, contour)


def coefficient_integral(f: SlicePoly, q0: Quaternion, index: int,
                         contour: Contour) -> Quaternion:
    """Expansion coefficient of f at the sphere through q0, by quadrature.

    Integrates f against 1/((s-q0) [(s-x0)^2+y0^2]^n) for even index 2n
    and against 1/[(s-x0)^2+y0^2]^(n+1) for odd index 2n+1; agrees with
    the algebraic coefficients from `expand_at`.  q0 (and its conjugate
    sphere point) must lie inside the contour, in its plane.
    """
    if index < 0:
        raise ValueError("coefficient index must be >= 0")
    x0, y0, unit = slice_decompose(q0)
    if y0 > 0.0:
        gap = abs(unit - contour.unit)
        if min(gap, abs(unit + contour.unit)) > 1e-9:
            raise ValueError("q0 does not lie in the contour's slice plane")
        if gap > 1e-9:
            y0 = -y0  # q0 sits in the lower half of the contour's plane
    z0 = complex(x0, y0)
    z0c = z0.conjugate()
    _guard_distance(contour, z0, "sphere point")
    _guard_distance(contour, z0c, "conjugate sphere point")
    n = index // 2
    if index % 2 == 0:
        def kernel_c(s: complex) -> complex:
            return 1.0 / ((s - z0) * ((s - x0) ** 2 + y0 * y0) ** n)
    else:
        def kernel_c(s: complex) -> complex:
            return 1.0 / ((s - x0) ** 2 + y0 * y0) ** (n + 1)
    sum_f, sum_g = _integrate_split(kernel_c, f, contour)
    return _assemble(sum_f, sum_g, contour)


@dataclass(frozen=True)
class CoefficientBoundReport:
    """Cauchy-estimate check: |A_n| <= C * max|f| / R^n for n <= order."""

    domain: LemniscateDomain
    constant: float
    boundary_max: float
    boundary_length: float
    coeff_mags: tuple
    bounds: tuple
    margins: tuple

    @property
    def min_margin(self) -> float:
        return min(self.margins)


def coefficient_bound_report(f: SlicePoly, domain: LemniscateDomain,
                             unit: Quaternion, order: int,
                             samples: int = 4096,
                             expansion: Optional[SphericalExpansion] = None
                             ) -> CoefficientBoundReport:
    """Check the coefficient growth bound on the given lemniscate domain.

    The constant is length(boundary slice) / (2 pi (sqrt(R^2+y0^2) - y0)),
    with the lengths of both loops counted when the boundary has two.
    max |f| is taken over `samples` boundary points and therefore slightly
    underestimates the true maximum; the bound being checked is
    conservative enough that margins still come out nonnegative (up to
    quadrature error).
    """
    require_imaginary_unit(unit)
    contour = lemniscate_contour(domain, unit, samples)
    boundary_max = max(abs(f(embed_complex(z, unit))) for z in contour.points)
    y0, radius = domain.y0, domain.radius
    denom = math.sqrt(radius * radius + y0 * y0) - y0
    constant = contour.total_length / (2.0 * math.pi * denom)
    if expansion is None:
        q0 = embed_complex(complex(domain.x0, y0), unit)
        expansion = expand_at(f, q0, order)
    mags = tuple(abs(c) for c in expansion.coeffs[:order + 1])
    bounds = tuple(constant * boundary_max / radius ** n
                   for n in range(len(mags)))
    margins = tuple(b - m for b, m in zip(bounds, mags))
    return CoefficientBoundReport(domain, constant, boundary_max,
                                  contour.total_length, mags, bounds, margins)
