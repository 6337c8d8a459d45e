import math
import random

import pytest

from slicereg import (ONE, UNIT_I, UNIT_J, UNIT_K, Quaternion, SlicePoly,
                      Sphere, ZeroFunction, analyze_sphere,
                      classical_multiplicity,
                      expand_at, expansion_multiplicity,
                      isolated_multiplicity, spherical_multiplicity,
                      zero_on_sphere)
from oracles import (oracle_convolution, poly_close, quat_close, random_poly,
                     random_unit, sphere_point)

QSQ_PLUS_1 = SlicePoly([1.0, 0.0, 1.0])
TWO_FACTOR = SlicePoly.linear_factor(UNIT_I) * SlicePoly.linear_factor(UNIT_J)
UNIT_SPHERE = Sphere(0, 1)


def test_classical_multiplicity_known_examples():
    # q^2+1 has classical multiplicity 1 at every imaginary unit
    assert classical_multiplicity(QSQ_PLUS_1, UNIT_I) == 1
    assert classical_multiplicity(QSQ_PLUS_1, UNIT_K) == 1
    u = (UNIT_I + UNIT_J) / math.sqrt(2)
    assert classical_multiplicity(QSQ_PLUS_1, u) == 1
    # (q-I)*(q-J) with I != J also has multiplicity 1 at I, despite degree 2
    assert classical_multiplicity(TWO_FACTOR, UNIT_I) == 1


def test_classical_multiplicity_non_zero_point():
    assert classical_multiplicity(SlicePoly([0.0, 0.0, 1.0]), ONE) == 0
    assert classical_multiplicity(TWO_FACTOR, UNIT_J) == 0


def test_classical_multiplicity_repeated_factor():
    f = SlicePoly.linear_factor(UNIT_I) ** 3
    assert classical_multiplicity(f, UNIT_I) == 3


def test_classical_multiplicity_zero_function():
    with pytest.raises(ZeroFunction):
        classical_multiplicity(SlicePoly.zero(), UNIT_I)


def test_spherical_multiplicity_known_examples():
    two_m, cofactor = spherical_multiplicity(QSQ_PLUS_1, UNIT_SPHERE)
    assert two_m == 2
    assert cofactor == SlicePoly.constant(1.0)

    two_m, cofactor = spherical_multiplicity(TWO_FACTOR, UNIT_SPHERE)
    assert two_m == 0
    assert cofactor == TWO_FACTOR


def test_spherical_multiplicity_constructed():
    # (q^2+1)^2 * (q-3): divide back out and compare by convolution oracle
    f = QSQ_PLUS_1 * QSQ_PLUS_1 * SlicePoly([-3.0, 1.0])
    two_m, cofactor = spherical_multiplicity(f, UNIT_SPHERE)
    assert two_m == 4
    assert poly_close(cofactor, SlicePoly([-3.0, 1.0]), 1e-12)
    recon = oracle_convolution(
        oracle_convolution(QSQ_PLUS_1.coeffs, QSQ_PLUS_1.coeffs),
        cofactor.coeffs)
    assert poly_close(SlicePoly(recon), f, 1e-12)


def test_zero_on_sphere_golden():
    found = zero_on_sphere(TWO_FACTOR, UNIT_SPHERE)
    assert found.kind == "point"
    assert quat_close(found.point, UNIT_I, 1e-12)

    assert zero_on_sphere(QSQ_PLUS_1, UNIT_SPHERE).kind == "whole_sphere"
    assert zero_on_sphere(SlicePoly([-3.0, 1.0]), UNIT_SPHERE).kind == "none"


def test_zero_on_sphere_degenerate():
    f = SlicePoly.linear_factor(Quaternion(2, 0, 0, 0))
    found = zero_on_sphere(f, Sphere(2, 0))
    assert found.kind == "point" and found.point == Quaternion(2, 0, 0, 0)
    assert zero_on_sphere(f, Sphere(1, 0)).kind == "none"


def test_isolated_multiplicity_known_example():
    result = isolated_multiplicity(TWO_FACTOR, UNIT_SPHERE)
    assert result.count == 2
    assert quat_close(result.point, UNIT_I, 1e-12)
    assert quat_close(result.factors[0], UNIT_I, 1e-12)
    assert quat_close(result.factors[1], UNIT_J, 1e-12)
    assert result.residual.degree == 0


def test_isolated_multiplicity_no_zero():
    result = isolated_multiplicity(SlicePoly.constant(1.0), UNIT_SPHERE)
    assert result.count == 0 and result.point is None

    result = isolated_multiplicity(SlicePoly.linear_factor(UNIT_I),
                                   UNIT_SPHERE)
    assert result.count == 1
    assert quat_close(result.point, UNIT_I, 1e-12)


def test_isolated_multiplicity_rejects_spherical_part():
    with pytest.raises(ValueError):
        isolated_multiplicity(QSQ_PLUS_1, UNIT_SPHERE)


def test_analyze_sphere_known_examples():
    report = analyze_sphere(QSQ_PLUS_1, UNIT_SPHERE)
    assert report.spherical_mult == 2
    assert report.isolated_mult == 0
    assert report.isolated_point is None
    # degree accounting: 2 = 2 + 0 + 0
    assert QSQ_PLUS_1.degree == report.spherical_mult + report.isolated_mult \
        + report.residual.degree

    report = analyze_sphere(TWO_FACTOR, UNIT_SPHERE)
    assert report.spherical_mult == 0
    assert report.isolated_mult == 2
    assert quat_close(report.isolated_point, UNIT_I, 1e-12)


def test_degree_accounting_random_products():
    rng = random.Random(60)
    for _ in range(25):
        sphere = Sphere(rng.uniform(-1, 1), rng.uniform(0.3, 1.5))
        m = rng.randint(0, 2)
        n = rng.randint(0, 3)
        f = SlicePoly.sphere_quadratic(sphere) ** m
        # chain of on-sphere roots; consecutive conjugates would collapse
        # into a quadratic factor, so steer away from them
        prev = None
        for _ in range(n):
            p = sphere_point(rng, sphere)
            if prev is not None and abs(p - prev.conj()) < 0.3:
                p = prev
            f = f * SlicePoly.linear_factor(p)
            prev = p
        # residual with no zero on the sphere: a product of factors on a
        # far-away sphere
        residual_deg = rng.randint(0, 2)
        far = Sphere(5.0, 1.0)
        for _ in range(residual_deg):
            f = f * SlicePoly.linear_factor(sphere_point(rng, far))
        report = analyze_sphere(f, sphere)
        assert report.spherical_mult + report.isolated_mult \
            + report.residual.degree == f.degree
        assert report.spherical_mult >= 2 * m


def test_multiplicity_reconstruction():
    rng = random.Random(61)
    for _ in range(20):
        sphere = Sphere(rng.uniform(-1, 1), rng.uniform(0.3, 1.5))
        f = SlicePoly.sphere_quadratic(sphere) ** rng.randint(0, 2)
        for _ in range(rng.randint(0, 2)):
            f = f * SlicePoly.linear_factor(sphere_point(rng, sphere))
        f = f * random_poly(rng, 2, scale=1.0)
        if f.is_zero() or zero_on_sphere(f, sphere).kind == "whole_sphere" \
                and f.degree < 2:
            continue
        try:
            report = analyze_sphere(f, sphere)
        except ValueError:
            continue  # random tail happened to vanish on the sphere
        recon = SlicePoly.sphere_quadratic(sphere) ** (report.spherical_mult // 2)
        for p in report.factors:
            recon = recon * SlicePoly.linear_factor(p)
        recon = recon * report.residual
        assert poly_close(recon, f, 1e-10 * (1 + f.max_coeff_norm()))


def test_expansion_multiplicity_golden():
    result = expansion_multiplicity(QSQ_PLUS_1, UNIT_SPHERE)
    assert result.spherical_mult == 2
    assert not result.has_isolated
    assert result.routes_agree

    result = expansion_multiplicity(TWO_FACTOR, UNIT_SPHERE)
    assert result.spherical_mult == 0
    assert result.has_isolated
    assert quat_close(result.isolated_point, UNIT_I, 1e-12)
    assert result.routes_agree  # x0 = 0: the two routes coincide

    result = expansion_multiplicity(SlicePoly([-3.0, 1.0]), UNIT_SPHERE)
    assert result.spherical_mult == 0
    assert not result.has_isolated


def test_expansion_multiplicity_sign_discrepancy_logged():
    # Off-centered sphere: the literal criterion flips the real part, so
    # the verdicts disagree and the report says so.
    sphere = Sphere(1.0, 1.0)
    p1 = Quaternion(1, 1, 0, 0)
    p2 = Quaternion(1, 0, 1, 0)
    f = SlicePoly.linear_factor(p1) * SlicePoly.linear_factor(p2)
    result = expansion_multiplicity(f, sphere)
    assert result.has_isolated
    assert quat_close(result.isolated_point, p1, 1e-10)
    assert result.quotient_criterion is False
    assert not result.routes_agree


def test_expansion_multiplicity_matches_division_route():
    rng = random.Random(62)
    for _ in range(25):
        sphere = Sphere(rng.uniform(-1, 1), rng.uniform(0.3, 1.5))
        f = SlicePoly.sphere_quadratic(sphere) ** rng.randint(0, 2)
        f = f * random_poly(rng, 3, scale=1.0)
        if f.is_zero():
            continue
        result = expansion_multiplicity(f, sphere)
        two_m, _ = spherical_multiplicity(f, sphere)
        assert result.spherical_mult == two_m


def test_expansion_multiplicity_degenerate_sphere():
    f = SlicePoly.linear_factor(Quaternion(1, 0, 0, 0)) ** 3
    result = expansion_multiplicity(f, Sphere(1, 0))
    assert result.spherical_mult == 2
    assert result.has_isolated


def test_base_point_family_multiplicity_readout():
    # first nonvanishing coefficient index 2n gives spherical multiplicity
    # 2n; the base point is a zero iff the even coefficient vanishes
    cases = [
        (QSQ_PLUS_1, UNIT_I, 2, False),            # A_2 != 0: no isolated
        (TWO_FACTOR, UNIT_I, 0, True),             # A_0 = 0, A_1 != 0
        (TWO_FACTOR, UNIT_J, 0, False),            # A_0 = f(J) != 0
        (QSQ_PLUS_1 * SlicePoly.linear_factor(UNIT_I), UNIT_I, 2, True),
    ]
    for f, q0, expected_spherical, isolated_at_q0 in cases:
        expansion = expand_at(f, q0, int(f.degree) + 1)
        thr = 1e-10 * (1 + f.max_coeff_norm())
        first = next(n for n, c in enumerate(expansion.coeffs)
                     if abs(c) > thr)
        assert 2 * (first // 2) == expected_spherical
        assert (first % 2 == 1) == isolated_at_q0
        # cross-check against the factorization route
        report = analyze_sphere(f, Sphere.through(q0))
        assert report.spherical_mult == expected_spherical
        point_is_q0 = report.isolated_point is not None and \
            quat_close(report.isolated_point, q0, 1e-9)
        assert point_is_q0 == isolated_at_q0


def test_zero_set_structure_by_dense_sampling():
    # zeros on a sphere are the whole sphere or a single point, never arcs
    rng = random.Random(63)
    units = [random_unit(rng) for _ in range(400)]
    for unit in units:
        assert abs(QSQ_PLUS_1(unit)) <= 1e-12  # whole sphere
    hits = sum(1 for unit in units if abs(TWO_FACTOR(unit)) <= 1e-6)
    assert hits == 0  # the lone zero I is a measure-zero target
    near = [unit for unit in units if abs(TWO_FACTOR(unit)) <= 0.1]
    for unit in near:
        assert abs(unit - UNIT_I) <= 0.2  # small values cluster at the zero


def test_zero_threshold_override():
    # a coefficient-sized tolerance decides what counts as zero
    noisy = QSQ_PLUS_1 + SlicePoly.constant(Quaternion(1e-6, 0, 0, 0))
    assert spherical_multiplicity(noisy, UNIT_SPHERE)[0] == 0
    assert spherical_multiplicity(noisy, UNIT_SPHERE, tol=1e-4)[0] == 2
