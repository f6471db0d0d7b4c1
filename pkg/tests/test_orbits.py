"""Skew spectra, Darboux bases, and orbit normal forms."""

import math
from fractions import Fraction

import numpy as np
import pytest

from nilharm.catalog import free_two_step, lambda_a, octonion_double
from nilharm.orbits import (darboux_basis, l1_complement_indices,
                            orbit_representative, pf_nonsingular,
                            skew_spectrum, wedge_matrix)


def rand_skew_float(rng, n):
    A = rng.normal(size=(n, n))
    return A - A.T


def test_skew_spectrum_matches_eigenvalues():
    rng = np.random.default_rng(20)
    for n in (2, 3, 4, 6):
        for _ in range(10):
            M = rand_skew_float(rng, n)
            positive, kernel = skew_spectrum(M)
            assert 2 * len(positive) + kernel == n
            eigs = sorted(abs(np.imag(e))
                          for e in np.linalg.eigvals(M) if np.imag(e) > 1e-9)
            assert np.allclose(positive, eigs, atol=1e-9)


def test_skew_spectrum_orthogonal_invariance():
    rng = np.random.default_rng(21)
    for _ in range(10):
        M = rand_skew_float(rng, 5)
        Q, _ = np.linalg.qr(rng.normal(size=(5, 5)))
        a1, k1 = skew_spectrum(M)
        a2, k2 = skew_spectrum(Q.T @ M @ Q)
        assert k1 == k2
        assert np.allclose(a1, a2, atol=1e-8)


def test_skew_spectrum_rejects_nonskew():
    with pytest.raises(ValueError):
        skew_spectrum(np.eye(3))


def test_darboux_basis_block_diagonalizes():
    M = [[0, 2, 0, 1], [-2, 0, 3, 0], [0, -3, 0, 0], [-1, 0, 0, 0]]
    basis = darboux_basis(M)
    assert basis.radical_dim == 0
    assert len(basis.block_values) == 2
    Mf = [[Fraction(x) for x in row] for row in M]

    def form(x, y):
        return sum(x[i] * Mf[i][j] * y[j]
                   for i in range(4) for j in range(4))

    vecs = basis.vectors
    for a in range(4):
        for b in range(4):
            val = form(vecs[a], vecs[b])
            same_pair = a // 2 == b // 2
            if same_pair and a < b:
                assert val == basis.block_values[a // 2]
            elif same_pair and a > b:
                assert val == -basis.block_values[b // 2]
            elif not same_pair:
                assert val == 0


def test_darboux_radical_detected():
    M = [[0, 1, 0], [-1, 0, 0], [0, 0, 0]]
    basis = darboux_basis(M)
    assert basis.radical_dim == 1
    assert basis.block_values == [Fraction(1)]


def test_wedge_matrix_real_layout():
    alg = free_two_step(3, "R")
    pairs = [tuple(pq) for pq in alg.meta["wedge_pairs"]]
    coeffs = [Fraction(0)] * 3
    coeffs[pairs.index((0, 1))] = Fraction(4)
    M = wedge_matrix(alg, coeffs)
    assert M[0, 1] == 4 and M[1, 0] == -4
    assert np.count_nonzero(M) == 2


def test_case1_representative_reads_off_lambda_a():
    alg = free_two_step(5, "R")
    rep = orbit_representative(alg, lambda_a(alg, [2, 3]))
    assert rep.case_tag == "case1"
    assert rep.kernel_dim == 1
    assert np.allclose(rep.invariants, [2.0, 3.0])


def test_case1_rotation_invariance():
    alg = free_two_step(4, "R")
    pairs = [tuple(pq) for pq in alg.meta["wedge_pairs"]]
    rng = np.random.default_rng(14)
    coeffs = [Fraction(int(c)) for c in rng.integers(-5, 6, size=len(pairs))]
    M = wedge_matrix(alg, coeffs)
    rep0 = orbit_representative(alg, coeffs)
    Q, _ = np.linalg.qr(rng.normal(size=(4, 4)))
    rotated = Q.T @ M @ Q
    new_coeffs = [rotated[p, q] for (p, q) in pairs]
    rep1 = orbit_representative(
        alg, [Fraction(float(c)).limit_denominator(10 ** 9)
              for c in new_coeffs])
    assert rep0.kernel_dim == rep1.kernel_dim
    assert np.allclose(rep0.invariants, rep1.invariants, atol=1e-6)


def test_case6_representative_sigma_and_phase():
    alg = free_two_step(3, "C")
    rep = orbit_representative(alg, lambda_a(alg, [(3, 4)]))
    assert rep.case_tag == "case6"
    assert rep.kernel_dim == 1
    (sigma, phase) = rep.invariants[-1]
    assert math.isclose(sigma, 5.0, rel_tol=1e-9)
    assert len(rep.invariants) == 1


def test_case3_representative_support_rule():
    alg = octonion_double()
    rep = orbit_representative(alg, lambda_a(alg, [1, 2, 3]))
    assert rep.case_tag == "case3"
    assert rep.invariants == [1.0, 2.0, 3.0]
    bad = [Fraction(1)] * 7
    with pytest.raises(ValueError):
        orbit_representative(alg, bad)


def test_pf_nonsingular_uses_the_right_pfaffian():
    sq = free_two_step(3, "R")
    # full Pf vanishes identically, so the l1 restriction decides
    assert pf_nonsingular(sq, lambda_a(sq, [1]))
    zero = [Fraction(0)] * len(sq.center_indices)
    assert not pf_nonsingular(sq, zero)

    from nilharm.catalog import heisenberg
    h = heisenberg(1, "H")
    assert pf_nonsingular(h, [1, 0, 0])
    assert not pf_nonsingular(h, [0, 0, 0])


def test_l1_complement_indices_families():
    assert l1_complement_indices(free_two_step(3, "R")) is not None
    assert l1_complement_indices(free_two_step(4, "R")) is None
    oct_v1 = l1_complement_indices(octonion_double())
    assert len(oct_v1) == 6
