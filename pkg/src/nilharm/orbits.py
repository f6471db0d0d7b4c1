"""Coadjoint orbit representatives via skew normal forms.

Case 1 (free 2-step over R): a functional on Lambda^2 R^n is a real
skew matrix; its K = SO(n) orbit is classified by the skew spectrum.
Case 6 (over C): complex skew matrix under unitary congruence; the
invariants are the paired singular values with the residual
determinant phase folded into the last entry.  Case 3 (octonion
double): only functionals supported on the (e3, e6, e2) coordinates
are in implemented normal-form reach.
"""

import cmath
import math
from fractions import Fraction

import numpy as np

from . import pfaffian
from .linalg import frac_matrix

SKEW_INPUT_TOL = 1e-12
RANK_TOL = 1e-10


def skew_spectrum(M):
    """Invariants (a_1 <= ... <= a_m, kernel_dim) of a real skew matrix.

    The eigenvalues of M are {+-i a_j} plus zeros; i*M is hermitian,
    which is what actually gets diagonalized.
    """
    M = np.asarray(M, dtype=float)
    if M.ndim != 2 or M.shape[0] != M.shape[1]:
        raise ValueError("skew_spectrum needs a square matrix")
    scale = max(1.0, np.abs(M).max())
    if np.abs(M + M.T).max() > SKEW_INPUT_TOL * scale:
        raise ValueError("matrix is not antisymmetric within 1e-12")
    eigs = np.linalg.eigvalsh(1j * M)
    positive = sorted(float(e) for e in eigs if e > RANK_TOL * scale)
    kernel_dim = M.shape[0] - 2 * len(positive)
    return positive, kernel_dim


class DarbouxBasis:
    """Exact congruence data: B^T M B = diag{(0,s_j; -s_j,0), ..., 0}.

    vectors holds the new basis (pairs first, then the radical); the
    block values s_j are exact rationals, not normalized to be
    positive, since square roots leave Q.
    """

    __slots__ = ("vectors", "block_values", "radical_dim")

    def __init__(self, vectors, block_values, radical_dim):
        self.vectors = vectors
        self.block_values = block_values
        self.radical_dim = radical_dim


def darboux_basis(M):
    """Symplectic Gram-Schmidt over Q for an exact skew matrix."""
    M = frac_matrix(M)
    n = len(M)
    for i in range(n):
        if M[i][i] != 0 or any(M[i][j] != -M[j][i] for j in range(n)):
            raise ValueError("darboux_basis needs an exact skew matrix")

    def form(x, y):
        return sum((x[i] * M[i][j] * y[j]
                    for i in range(n) for j in range(n) if M[i][j] != 0),
                   Fraction(0))

    remaining = [[Fraction(1) if j == i else Fraction(0) for j in range(n)]
                 for i in range(n)]
    pairs = []
    values = []
    while True:
        found = None
        for a in range(len(remaining)):
            for b in range(a + 1, len(remaining)):
                if form(remaining[a], remaining[b]) != 0:
                    found = (a, b)
                    break
            if found:
                break
        if not found:
            break
        a, b = found
        u, v = remaining[a], remaining[b]
        s = form(u, v)
        pairs.extend([u, v])
        values.append(s)
        reduced = []
        for k, w in enumerate(remaining):
            if k in (a, b):
                continue
            cu = form(w, v) / s
            cv = form(w, u) / s
            reduced.append([w[t] - cu * u[t] + cv * v[t] for t in range(n)])
        remaining = reduced
    return DarbouxBasis(pairs + remaining, values, len(remaining))


class OrbitRepresentative:
    """Orbit invariants for one of the three exceptional cases."""

    __slots__ = ("case_tag", "invariants", "kernel_dim")

    def __init__(self, case_tag, invariants, kernel_dim):
        self.case_tag = case_tag
        self.invariants = list(invariants)
        self.kernel_dim = kernel_dim

    def __repr__(self):
        return (f"OrbitRepresentative({self.case_tag}, a={self.invariants}, "
                f"kernel={self.kernel_dim})")


def wedge_matrix(alg, coeffs):
    """Functional on Lambda^2 F^n as an n x n skew matrix over R or C."""
    family = alg.meta.get("family")
    if family != "free2step":
        raise ValueError("wedge_matrix needs a free 2-step algebra")
    n = alg.meta["n"]
    pairs = [tuple(pq) for pq in alg.meta["wedge_pairs"]]
    if alg.meta["F"] == "R":
        M = np.zeros((n, n))
        for t, (p, q) in enumerate(pairs):
            M[p, q] = float(coeffs[t])
            M[q, p] = -float(coeffs[t])
    else:
        M = np.zeros((n, n), dtype=complex)
        for t, (p, q) in enumerate(pairs):
            val = float(coeffs[2 * t]) + 1j * float(coeffs[2 * t + 1])
            M[p, q] = val
            M[q, p] = -val
    return M


def _complex_pfaffian(M):
    # float cofactor expansion; fine at the sizes used here (<= 6)
    n = M.shape[0]
    if n == 0:
        return 1.0 + 0j
    if n % 2:
        return 0.0 + 0j
    total = 0.0 + 0j
    rest = list(range(1, n))
    for t, j in enumerate(rest):
        if M[0, j] == 0:
            continue
        sub = [k for k in rest if k != j]
        term = M[0, j] * _complex_pfaffian(M[np.ix_(sub, sub)])
        total += term if t % 2 == 0 else -term
    return total


def orbit_representative(alg, coeffs):
    """Canonical orbit invariants of a concrete functional.

    Dispatches on the algebra family.  Case 6's phase is computed in a
    fixed eigenbasis gauge (eigenvectors of M M^H, first nonzero
    component made real positive); it is authoritative on the
    normal-form family lambda_a and reproducible across runs.
    """
    family = alg.meta.get("family")
    if family == "free2step" and alg.meta["F"] == "R":
        M = wedge_matrix(alg, coeffs)
        positive, kernel_dim = skew_spectrum(M)
        return OrbitRepresentative("case1", positive, kernel_dim)
    if family == "free2step" and alg.meta["F"] == "C":
        return _case6_representative(alg, coeffs)
    if family == "octdouble":
        return _case3_representative(alg, coeffs)
    raise ValueError(f"no orbit normal form implemented for {alg.name}")


def _case6_representative(alg, coeffs):
    M = wedge_matrix(alg, coeffs)
    n = M.shape[0]
    H = M @ M.conj().T
    scale = max(1.0, np.abs(M).max() ** 2)
    eigvals, eigvecs = np.linalg.eigh(H)
    support = [k for k in range(n) if eigvals[k] > RANK_TOL * scale]
    kernel_dim = n - len(support)
    if not support:
        return OrbitRepresentative("case6", [], n)
    # paired singular values: sqrt of the doubled eigenvalues of M M^H
    sigmas_all = sorted(math.sqrt(float(eigvals[k])) for k in support)
    if len(sigmas_all) % 2:
        raise ValueError("odd support for a skew form; input is not skew")
    sigmas = sigmas_all[::2]
    W = eigvecs[:, support]
    for col in range(W.shape[1]):
        vec = W[:, col]
        idx = int(np.argmax(np.abs(vec) > 1e-8))
        phase = vec[idx] / abs(vec[idx])
        W[:, col] = vec / phase
    pf_val = _complex_pfaffian(W.T @ M @ W)
    phase = cmath.phase(pf_val)
    invariants = list(sigmas[:-1]) + [(sigmas[-1], phase)]
    return OrbitRepresentative("case6", invariants, kernel_dim)


_CASE3_SUPPORT = (2, 5, 1)   # center coords of (e3,0)*, (e6,0)*, (e2,0)*


def _case3_representative(alg, coeffs):
    coeffs = [Fraction(c) for c in coeffs]
    support = {k for k, c in enumerate(coeffs) if c != 0}
    if not support <= set(_CASE3_SUPPORT):
        raise ValueError(
            "functional is not in implemented normal-form reach: case 3 "
            "representatives are computed only on the (e3, e6, e2)* span")
    invariants = [float(coeffs[k]) for k in _CASE3_SUPPORT]
    form = pfaffian.b_matrix(
        alg, pfaffian.LinearFunctional(alg, coeffs),
        v_indices=list(alg.complement_indices[:6]))
    kernel_dim = _exact_skew_kernel(form.matrix)
    return OrbitRepresentative("case3", invariants, kernel_dim)


def _exact_skew_kernel(matrix):
    from . import linalg
    n = len(matrix)
    return n - linalg.rank(matrix)


def pf_nonsingular(alg, coeffs):
    """Pf(lambda) != 0, on the relevant Pfaffian for the algebra.

    Square integrable algebras use the full Pfaffian on n/z; the three
    exceptional families use the restriction to their l1 split.
    """
    full = pfaffian.pf_polynomial(alg)
    if not full.is_zero():
        return full.evaluate(coeffs) != 0
    v_indices = l1_complement_indices(alg)
    if v_indices is None:
        return False
    value = pfaffian.pf_at(alg, coeffs, v_indices=v_indices)
    return value != 0


def l1_complement_indices(alg):
    """The v_1 part of the standard l1 split, when the family has one."""
    family = alg.meta.get("family")
    comp = list(alg.complement_indices)
    if family == "free2step":
        if alg.meta["n"] % 2 == 0:
            return None
        drop = 1 if alg.meta["F"] == "R" else 2  # one u, or its re/im pair
        return comp[:-drop]
    if family == "octdouble":
        return comp[:-1]   # drop (0, e7)
    return None
