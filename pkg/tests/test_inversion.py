"""Group layer, orbital characters, and both inversion pipelines.

Quadrature-free assertions are exact; everything numeric is compared
against independent quadrature oracles or known closed forms.
"""

from fractions import Fraction

import numpy as np
import pytest

from nilharm.catalog import free_two_step, heisenberg
from nilharm.gaussians import GaussianTestFunction
from nilharm.inversion import (GroupPoint, factor_point, flat_constant,
                               flatness_identity_gap, fourier,
                               fourier_quadrature, group_multiply,
                               invert_flat, invert_stepwise,
                               orbit_space_quadrature_check,
                               orbital_character,
                               orbital_character_quadrature,
                               right_translate, translation_matrix)
from nilharm.stepwise import decompose


def rand_coords(rng, dim):
    return [Fraction(rng.integers(-4, 5).item(), rng.integers(1, 4).item())
            for _ in range(dim)]


def test_group_multiply_is_associative_and_inverts():
    alg = free_two_step(3, "R")
    rng = np.random.default_rng(51)
    zero = tuple([Fraction(0)] * alg.dim)
    for _ in range(15):
        x = rand_coords(rng, alg.dim)
        y = rand_coords(rng, alg.dim)
        z = rand_coords(rng, alg.dim)
        lhs = group_multiply(alg, group_multiply(alg, x, y), z)
        rhs = group_multiply(alg, x, group_multiply(alg, y, z))
        assert lhs == rhs
        neg = [-c for c in x]
        assert group_multiply(alg, x, neg).coords == zero


def test_group_point_wrapper():
    alg = heisenberg(1, "C")
    p = GroupPoint(alg, [Fraction(1), Fraction(2), Fraction(3)])
    q = p.inverse()
    assert q.coords == (-1, -2, -3)
    assert GroupPoint.zero(alg).coords == (0, 0, 0)


def test_translation_matrix_realizes_right_translation():
    alg = heisenberg(2, "C")
    rng = np.random.default_rng(52)
    x = rand_coords(rng, alg.dim)
    M = translation_matrix(alg, x)
    for _ in range(10):
        y = rand_coords(rng, alg.dim)
        prod = group_multiply(alg, y, x).coords
        lin = [sum(Fraction(M[i][j]) * y[j] for j in range(alg.dim))
               + Fraction(x[i]) for i in range(alg.dim)]
        assert [float(a) for a in prod] == pytest.approx(
            [float(b) for b in lin])


def test_right_translate_pointwise():
    alg = heisenberg(1, "C")
    f = GaussianTestFunction.standard(3)
    x = [Fraction(1, 2), Fraction(-1, 3), Fraction(1, 5)]
    g = right_translate(alg, f, x)
    rng = np.random.default_rng(53)
    for _ in range(10):
        y = rng.normal(size=3)
        prod = group_multiply(alg, [Fraction(c).limit_denominator(10 ** 12)
                                    for c in y], x).coords
        expect = f.evaluate(np.array([[float(c) for c in prod]]))[0]
        got = np.real(g.evaluate(y[None, :]))
        assert np.isclose(got, expect, rtol=1e-10)


def test_fourier_against_quadrature():
    f = GaussianTestFunction(np.diag([1.0, 2.0]), np.array([0.3, -0.1]))
    ghat = fourier(f)
    for xi in ([0.0, 0.0], [1.0, -0.5], [0.4, 2.0]):
        oracle = fourier_quadrature(f, np.array(xi), rtol=1e-11)
        closed = ghat.evaluate(np.array([xi]))[0]
        assert abs(closed - oracle) < 1e-8 * max(1.0, abs(oracle))


def test_flat_constant_values():
    # d! 2^d for d = dim(v)/2
    assert flat_constant(heisenberg(1, "C")) == 2          # d = 1
    assert flat_constant(heisenberg(2, "C")) == 8          # d = 2
    assert flat_constant(heisenberg(1, "H")) == 8          # d = 2
    assert flat_constant(heisenberg(1, "O")) == 384        # d = 4


def test_orbital_character_matches_quadrature():
    alg = heisenberg(1, "C")
    f = GaussianTestFunction(np.diag([1.0, 0.8, 1.1]),
                             np.array([0.1, 0.0, -0.2]))
    g = f.lift()
    for lam in ([1.0], [-0.7], [2.3]):
        closed = orbital_character(alg, lam, g)
        oracle = orbital_character_quadrature(alg, lam, g, rtol=1e-10)
        assert abs(closed - oracle) < 1e-7 * max(1.0, abs(oracle))


def test_orbital_character_rejects_singular_lambda():
    alg = heisenberg(1, "C")
    g = GaussianTestFunction.standard(3).lift()
    with pytest.raises(ValueError):
        orbital_character(alg, [0.0], g)


def test_invert_flat_heisenberg_complex():
    alg = heisenberg(1, "C")
    f = GaussianTestFunction(np.diag([1.0, 0.7, 1.3]),
                             np.array([0.1, -0.2, 0.3]), amp=2.0)
    report = invert_flat(alg, f, [0.0, 0.0, 0.0])
    assert report.entries[0]["rel_error"] < 1e-10
    report = invert_flat(alg, f, [0.2, -0.1, 0.4])
    assert report.entries[0]["rel_error"] < 1e-10


def test_invert_flat_quaternionic():
    alg = heisenberg(1, "H")
    f = GaussianTestFunction.standard(alg.dim)
    report = invert_flat(alg, f, [0.0] * alg.dim)
    assert report.entries[0]["rel_error"] < 1e-8


def test_invert_flat_abelian_is_classical():
    # v = 0: the formula degenerates to plain Fourier inversion
    from nilharm.catalog import abelian
    alg = abelian(2)
    f = GaussianTestFunction(np.diag([1.0, 0.5]), np.array([0.2, 0.1]))
    report = invert_flat(alg, f, [0.3, -0.2])
    assert report.entries[0]["rel_error"] < 1e-9


def test_flatness_identity_gap_is_tiny():
    alg = heisenberg(1, "C")
    f = GaussianTestFunction(np.diag([1.0, 0.7, 1.3]),
                             np.array([0.1, -0.2, 0.3]))
    gap, lhs, rhs = flatness_identity_gap(alg, f, [0.0, 0.0, 0.0])
    assert gap < 1e-12
    assert abs(lhs) > 0 and abs(rhs) > 0


def test_factor_point_recomposes():
    dec = decompose("case1")
    alg = dec.algebra
    rng = np.random.default_rng(54)
    for _ in range(10):
        x = rand_coords(rng, alg.dim)
        x1, x2 = factor_point(alg, dec, x)
        back = group_multiply(alg, x1, x2)
        assert back.coords == tuple(x)
        assert all(x1.coords[k] == 0 for k in dec.l2_indices)
        assert all(x2.coords[k] == 0 for k in dec.l1_indices)


def test_invert_stepwise_case1_origin_and_general():
    f = GaussianTestFunction.standard(6)
    rep = invert_stepwise("case1", f, [0.0] * 6)
    assert rep.entries[0]["rel_error"] < 1e-9
    rep = invert_stepwise("case1", f,
                          [0.1, -0.2, 0.15, 0.3, -0.1, 0.2])
    assert rep.entries[0]["rel_error"] < 1e-9


def test_invert_stepwise_strategies_agree():
    f = GaussianTestFunction.standard(6)
    x = [0.1, -0.2, 0.15, 0.3, -0.1, 0.2]
    settings = {"rtol": 1e-9}
    vals = {}
    for strat in ("tensor", "closed"):
        s = dict(settings, inner_strategy=strat)
        rep = invert_stepwise("case1", f, x, quad_settings=s)
        vals[strat] = rep.entries[0]["reconstructed_re"]
        assert strat in rep.entries[0]["inner_strategies"]
    assert np.isclose(vals["tensor"], vals["closed"], rtol=1e-7)


def test_invert_stepwise_rejects_unverified_split():
    f = GaussianTestFunction.standard(6)
    with pytest.raises(ValueError):
        invert_stepwise("case2", f, [0.0] * 6)


def test_orbit_space_quadrature_check_quaternionic():
    alg = heisenberg(1, "H")
    out = orbit_space_quadrature_check(alg, radius=6.0, rtol=1e-8)
    assert out["rel_diff"] < 1e-6
    assert out["value_cartesian"] > 0


def test_orbit_space_check_needs_three_dim_center():
    with pytest.raises(ValueError):
        orbit_space_quadrature_check(heisenberg(1, "C"))
