"""Symbolic Pfaffians, square integrability, and the exact recursion."""

import random
from fractions import Fraction

import numpy as np
import pytest

from nilharm.catalog import (abelian, free_two_step, heisenberg, lambda_a,
                             octonion_double)
from nilharm.pfaffian import (b_matrix, b_matrix_poly, is_square_integrable,
                              pf_at, pf_polynomial, pfaffian)
from nilharm.polynomials import Poly


def rand_skew(rng, n, lo=-9, hi=9):
    M = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            M[i][j] = Fraction(rng.randint(lo, hi), rng.randint(1, 5))
            M[j][i] = -M[i][j]
    return M


def test_pfaffian_base_cases():
    assert pfaffian([]) == 1
    two = [[Fraction(0), Fraction(7)], [Fraction(-7), Fraction(0)]]
    assert pfaffian(two) == 7


def test_pfaffian_squares_to_determinant():
    rng = random.Random(41)
    for n in (2, 4, 6, 8):
        for _ in range(30):
            M = rand_skew(rng, n)
            pf = pfaffian(M)
            det = np.linalg.det(np.array(M, dtype=float))
            assert abs(float(pf * pf) - det) < 1e-6 * max(1.0, abs(det))


def test_pfaffian_odd_dimension_is_zero():
    rng = random.Random(42)
    for n in (3, 5):
        M = rand_skew(rng, n)
        assert pfaffian(M) == 0


def test_congruence_scales_by_determinant():
    # Pf(Q^T M Q) = det(Q) Pf(M)
    rng = random.Random(43)
    for n in (4, 6):
        for _ in range(10):
            M = rand_skew(rng, n)
            Q = [[Fraction(rng.randint(-3, 3)) for _ in range(n)]
                 for _ in range(n)]
            QtMQ = [[sum(Q[k][i] * M[k][l] * Q[l][j] for k in range(n)
                         for l in range(n))
                     for j in range(n)] for i in range(n)]
            detQ = Fraction(
                round(np.linalg.det(np.array(Q, dtype=float))))
            assert pfaffian(QtMQ) == detQ * pfaffian(M)


def test_heisenberg_complex_closed_form():
    # Pf = (-t1)^n
    for n in (1, 2, 3):
        pf = pf_polynomial(heisenberg(n, "C"))
        expect = Poly.constant(1, 1)
        for _ in range(n):
            expect = expect * (-Poly.variable(1, 0))
        assert pf == expect


def test_heisenberg_quaternionic_closed_form():
    # Pf = (t1^2 + t2^2 + t3^2)^n for h_{n;H}
    t = [Poly.variable(3, k) for k in range(3)]
    q = t[0] * t[0] + t[1] * t[1] + t[2] * t[2]
    assert pf_polynomial(heisenberg(1, "H")) == q
    assert pf_polynomial(heisenberg(2, "H")) == q * q


def test_octonion_heisenberg_value_is_norm_power():
    # Pf has degree dim(v)/2 = 4, so it is |lambda|^4 up to sign
    alg = heisenberg(1, "O")
    rng = random.Random(9)
    for _ in range(10):
        lam = [Fraction(rng.randint(-3, 3)) for _ in range(7)]
        norm2 = sum(c * c for c in lam)
        assert abs(pf_at(alg, lam)) == norm2 ** 2


def test_free_two_step_pfaffian_vanishes():
    for n, F in ((3, "R"), (5, "R"), (3, "C")):
        pf = pf_polynomial(free_two_step(n, F))
        assert pf.is_zero()


def test_octonion_double_pfaffian_vanishes():
    assert pf_polynomial(octonion_double()).is_zero()


def test_square_integrability_decisions():
    for alg in (heisenberg(1, "C"), heisenberg(3, "C"),
                heisenberg(1, "H"), heisenberg(1, "O")):
        res = is_square_integrable(alg)
        assert res
        assert pf_at(alg, res.witness) != 0
    for alg in (free_two_step(3, "R"), free_two_step(3, "C"),
                octonion_double()):
        assert not is_square_integrable(alg)
    # degenerate but consistent: v = 0 means Pf = 1, never zero
    assert is_square_integrable(abelian(2))


def test_restricted_pfaffian_via_v_indices():
    # dropping one generator of free2step(3, R) leaves Pf = +-t1 on the pair
    alg = free_two_step(3, "R")
    v = list(alg.complement_indices)[:2]
    pf = pf_polynomial(alg, v_indices=v)
    assert pf.degree() == 1
    assert not pf.is_zero()


def test_b_matrix_entries_are_bracket_pairings():
    alg = heisenberg(1, "C")
    from nilharm.pfaffian import LinearFunctional
    lam = LinearFunctional(alg, coeffs=[Fraction(5)])
    form = b_matrix(alg, lam)
    assert form.matrix[0][1] == -form.matrix[1][0]
    assert abs(form.matrix[0][1]) == 5


def test_b_matrix_poly_substitutes_center_polynomials():
    # plugging a one-parameter family into the form matches pf_at pointwise
    alg = free_two_step(3, "R")
    zdim = len(alg.center_indices)
    coeffs = lambda_a(alg, [Fraction(1)])
    idx = next(t for t, c in enumerate(coeffs) if c != 0)
    coeff_polys = [Poly.variable(1, 0) if t == idx else Poly.constant(1, 0)
                   for t in range(zdim)]
    v = list(alg.complement_indices)[:2]
    pf = pfaffian(b_matrix_poly(alg, coeff_polys, v_indices=v))
    for val in (Fraction(2), Fraction(-3)):
        direct = pf_at(alg, [val * c for c in coeffs], v_indices=v)
        assert pf.evaluate([val]) == direct


def test_pf_at_rejects_wrong_length():
    with pytest.raises(ValueError):
        pf_at(heisenberg(1, "C"), [1, 2])
