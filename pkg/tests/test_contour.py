import cmath
import math
import random

import pytest

from slicereg import (ONE, UNIT_I, UNIT_J, UNIT_K, Quaternion, SlicePoly,
                      KernelOffSlice, LemniscateDomain,
                      PinchedContour, PointOnContour, Region, cauchy_eval,
                      circle_contour, coefficient_bound_report,
                      coefficient_integral, embed_complex, expand_at,
                      lemniscate_contour, slice_integral)
from oracles import quat_close, random_poly

QSQ = SlicePoly([0.0, 0.0, 1.0])


def test_circle_nodes():
    contour = circle_contour(0.0, 1.0, UNIT_I, 16)
    assert len(contour) == 16
    # quarter-turn nodes sit at 1, i, -1, -i
    for index, want in ((0, 1 + 0j), (4, 1j), (8, -1 + 0j), (12, -1j)):
        assert abs(contour.points[index] - want) <= 1e-15


def test_circle_length():
    contour = circle_contour(0.5, 2.5, UNIT_J, 64)
    assert abs(contour.total_length - 2 * math.pi * 2.5) <= 1e-10


def test_circle_nodes_in_plane():
    contour = circle_contour(0.0, 1.0, UNIT_K, 32)
    for point, weight in contour.nodes():
        assert abs(point.x) <= 1e-15 and abs(point.y) <= 1e-15
        assert abs(weight.x) <= 1e-15 and abs(weight.y) <= 1e-15


def test_circle_validation():
    with pytest.raises(ValueError):
        circle_contour(0.0, 1.0, UNIT_I, 8)
    with pytest.raises(ValueError):
        circle_contour(0.0, -1.0, UNIT_I, 32)


def test_lemniscate_contour_single_loop():
    domain = LemniscateDomain(0, 1, 2)
    contour = lemniscate_contour(domain, UNIT_I, 64)
    assert len(contour) == 64
    for z in contour.points:
        assert domain.classify(embed_complex(z, UNIT_I)) == Region.BOUNDARY


def test_lemniscate_contour_two_loops():
    domain = LemniscateDomain(0, 1, 0.5)
    contour = lemniscate_contour(domain, UNIT_I, 64)
    assert len(contour) == 64
    upper = [z for z in contour.points if z.imag > 0]
    lower = [z for z in contour.points if z.imag < 0]
    assert len(upper) == 32 and len(lower) == 32


def test_lemniscate_degenerate_circle_length():
    domain = LemniscateDomain(0, 0, 1.5)
    contour = lemniscate_contour(domain, UNIT_I, 16384)
    assert abs(contour.total_length - 2 * math.pi * 1.5) <= 1e-6


def test_pinched_contour_rejected():
    with pytest.raises(PinchedContour):
        lemniscate_contour(LemniscateDomain(0, 1, 1), UNIT_I, 64)


def test_slice_integral_zero_kernel():
    contour = circle_contour(0.0, 1.0, UNIT_I, 64)
    zero = Quaternion(0, 0, 0, 0)
    got = slice_integral(lambda s: zero, SlicePoly.constant(1.0), contour)
    assert abs(got) == 0


def test_slice_integral_residue():
    # classical residue in L_i: integral of s^-1 ds over |s| = 1 is 2*pi*i
    contour = circle_contour(0.0, 1.0, UNIT_I, 64)
    got = slice_integral(lambda s: s.inverse(), SlicePoly.constant(1.0),
                         contour)
    assert quat_close(got, UNIT_I * (2 * math.pi), 1e-12)


def test_slice_integral_kernel_off_slice():
    contour = circle_contour(0.0, 1.0, UNIT_I, 64)
    with pytest.raises(KernelOffSlice):
        slice_integral(lambda s: UNIT_J, SlicePoly.constant(1.0), contour)


def test_slice_integral_additive_in_f():
    rng = random.Random(40)
    contour = circle_contour(0.0, 2.0, UNIT_I, 64)
    f = random_poly(rng, 4)
    g = random_poly(rng, 4)
    kernel = lambda s: (s - embed_complex(0.5j, UNIT_I)).inverse()
    lhs = slice_integral(kernel, f + g, contour)
    rhs = slice_integral(kernel, f, contour) + slice_integral(kernel, g, contour)
    assert quat_close(lhs, rhs, 1e-10 * (1 + abs(lhs)))


def test_slice_integral_left_linear_in_kernel():
    rng = random.Random(41)
    contour = circle_contour(0.0, 2.0, UNIT_I, 64)
    f = random_poly(rng, 4)
    factor = embed_complex(0.7 - 0.3j, UNIT_I)  # an element of L_I
    kernel = lambda s: (s - embed_complex(0.5 + 0.1j, UNIT_I)).inverse()
    scaled = lambda s: factor * kernel(s)
    lhs = slice_integral(scaled, f, contour)
    rhs = factor * slice_integral(kernel, f, contour)
    assert quat_close(lhs, rhs, 1e-10 * (1 + abs(lhs)))


def test_cauchy_eval_square():
    contour = circle_contour(0.0, 2.0, UNIT_I, 256)
    got = cauchy_eval(QSQ, UNIT_I, contour)
    assert quat_close(got, QSQ(UNIT_I), 1e-10)


def test_cauchy_eval_constant():
    contour = circle_contour(0.0, 2.0, UNIT_I, 256)
    c = Quaternion(0.5, -1, 2, 0.25)
    got = cauchy_eval(SlicePoly.constant(c), UNIT_I * 0.5, contour)
    assert quat_close(got, c, 1e-12)


def test_cauchy_eval_identity():
    contour = circle_contour(0.0, 2.0, UNIT_I, 256)
    z = embed_complex(0.5 + 0.5j, UNIT_I)
    got = cauchy_eval(SlicePoly.variable(), z, contour)
    assert quat_close(got, z, 1e-10)


def test_cauchy_eval_point_on_contour():
    contour = circle_contour(0.0, 1.0, UNIT_I, 64)
    with pytest.raises(PointOnContour):
        cauchy_eval(QSQ, ONE, contour)


def test_cauchy_eval_rejects_off_plane_point():
    contour = circle_contour(0.0, 1.0, UNIT_I, 64)
    with pytest.raises(ValueError):
        cauchy_eval(QSQ, UNIT_J * 0.5, contour)


def test_quadrature_error_decays_geometrically():
    rng = random.Random(42)
    f = random_poly(rng, 5)
    z = embed_complex(cmath.rect(0.9, 0.7), UNIT_I)
    exact = f(z)
    errors = {}
    for count in (64, 128):
        contour = circle_contour(0.0, 1.0, UNIT_I, count)
        errors[count] = abs(cauchy_eval(f, z, contour) - exact)
    if errors[128] > 1e-12:
        assert errors[64] / errors[128] >= 10.0
    else:
        assert errors[64] <= 1e-10


def test_value_plus_remainder_kernel_identity():
    # f(z) = f(z0) + (z - z0) * (1/2 pi I) integral of f against the
    # double-pole kernel 1/((s-z)(s-z0)), exercised through the public
    # quaternion kernel interface
    rng = random.Random(46)
    f = random_poly(rng, 6)
    contour = circle_contour(0.0, 2.0, UNIT_I, 256)
    z = embed_complex(0.4 + 0.9j, UNIT_I)
    z0 = embed_complex(-0.2 + 0.5j, UNIT_I)

    def kernel(s):
        return ((s - z).inverse()) * ((s - z0).inverse())

    integral = slice_integral(kernel, f, contour)
    prefactor = UNIT_I * (-1.0 / (2.0 * math.pi))  # (2 pi I)^-1
    got = f(z0) + (z - z0) * (prefactor * integral)
    assert quat_close(got, f(z), 1e-10 * (1 + abs(f(z))))


def test_coefficient_integral_square():
    contour = circle_contour(0.0, 2.0, UNIT_I, 256)
    reference = expand_at(QSQ, UNIT_I, 5)
    # even index 2 carries the quadratic coefficient 1
    assert quat_close(coefficient_integral(QSQ, UNIT_I, 2, contour),
                      reference.coeffs[2], 1e-8)
    # odd index 1 vanishes for q^2 at i
    assert abs(coefficient_integral(QSQ, UNIT_I, 1, contour)) <= 1e-8
    # indices beyond the degree vanish
    assert abs(coefficient_integral(QSQ, UNIT_I, 5, contour)) <= 1e-8


def test_coefficient_integral_matches_expansion_on_circles():
    rng = random.Random(43)
    for _ in range(8):
        f = random_poly(rng, 8, scale=2.0)
        x0 = rng.uniform(-2, 2)
        y0 = rng.uniform(0.0, 2.0)
        q0 = Quaternion(x0, y0, 0, 0)
        contour = circle_contour(x0, 2 * y0 + 1, UNIT_I, 256)
        reference = expand_at(f, q0, max(int(f.degree), 0))
        for n, want in enumerate(reference.coeffs):
            got = coefficient_integral(f, q0, n, contour)
            assert quat_close(got, want, 1e-8 * (1 + abs(want)))


def test_coefficient_integral_lemniscate_contours():
    # central-difference weights are second order, so fidelity to the
    # algebraic coefficients at 1e-8 needs a dense contour
    rng = random.Random(44)
    f = random_poly(rng, 4)
    q0 = UNIT_I
    reference = expand_at(f, q0, 4)
    contour = lemniscate_contour(LemniscateDomain(0, 1, 2), UNIT_I, 65536)
    for n, want in enumerate(reference.coeffs):
        got = coefficient_integral(f, q0, n, contour)
        assert quat_close(got, want, 1e-8 * (1 + abs(want)))
    # two-loop boundary: poles sit in different loops
    contour = lemniscate_contour(LemniscateDomain(0, 1, 0.5), UNIT_I, 65536)
    for n in (0, 1, 2):
        got = coefficient_integral(f, q0, n, contour)
        assert quat_close(got, reference.coeffs[n],
                          1e-8 * (1 + abs(reference.coeffs[n])))


def test_coefficient_integral_plane_mismatch():
    contour = circle_contour(0.0, 2.0, UNIT_I, 64)
    with pytest.raises(ValueError):
        coefficient_integral(QSQ, UNIT_J, 0, contour)


def test_coefficient_integral_conjugate_unit():
    # q0 in the lower half of the contour plane is still in the plane
    contour = circle_contour(0.0, 2.0, UNIT_I, 256)
    q0 = Quaternion(0.3, -0.8, 0, 0)
    reference = expand_at(QSQ, q0, 2)
    for n, want in enumerate(reference.coeffs):
        got = coefficient_integral(QSQ, q0, n, contour)
        assert quat_close(got, want, 1e-8 * (1 + abs(want)))


def test_bound_report_zero_polynomial():
    report = coefficient_bound_report(SlicePoly.zero(),
                                      LemniscateDomain(0, 1, 2), UNIT_I, 4)
    assert all(m >= 0 for m in report.margins)


def test_bound_report_square():
    report = coefficient_bound_report(QSQ, LemniscateDomain(0, 1, 2),
                                      UNIT_I, 4)
    # |A_2| = 1 against C * max|f| / R^2
    assert abs(report.coeff_mags[2] - 1.0) <= 1e-12
    assert report.bounds[2] >= 1.0
    assert report.min_margin >= -1e-9


def test_bound_report_random_margins():
    rng = random.Random(45)
    for _ in range(20):
        f = random_poly(rng, 8, scale=2.0)
        radius = rng.choice((0.5, 1.5, 3.0))
        report = coefficient_bound_report(f, LemniscateDomain(0, 1, radius),
                                          UNIT_I, int(f.degree) + 2,
                                          samples=1024)
        assert report.min_margin >= -1e-9


def test_bound_report_rejects_pinched():
    with pytest.raises(PinchedContour):
        coefficient_bound_report(QSQ, LemniscateDomain(0, 1, 1), UNIT_I, 4)
