"""Closed-form calculus for Gaussians with complex phase.

Everything the inversion pipeline does to a test function (affine
pullback, Fourier transform, marginalization, partial Fourier along a
coordinate block) keeps it inside one family:

    g(Y) = exp(-1/2 Y^T A Y + u^T Y + v)

with A real symmetric positive definite and u, v complex.  A stays
real through the whole pipeline; phases live in u and v.
"""

import cmath
import math

import numpy as np

_SYM_TOL = 1e-10


class ComplexGaussian:

    __slots__ = ("A", "u", "v")

    def __init__(self, A, u, v):
        A = np.asarray(A, dtype=float)
        u = np.asarray(u, dtype=complex)
        n = A.shape[0]
        if A.shape != (n, n) or u.shape != (n,):
            raise ValueError("shape mismatch")
        if n and np.abs(A - A.T).max() > _SYM_TOL * max(1.0, np.abs(A).max()):
            raise ValueError("A must be symmetric")
        self.A = (A + A.T) / 2.0
        self.u = u
        self.v = complex(v)

    @property
    def dim(self):
        return self.A.shape[0]

    def evaluate(self, points):
        """Vectorized evaluation; points is (npts, dim) or (dim,)."""
        pts = np.asarray(points, dtype=float)
        single = pts.ndim == 1
        if single:
            pts = pts[None, :]
        quad = -0.5 * np.einsum("ni,ij,nj->n", pts, self.A, pts)
        lin = pts @ self.u
        out = np.exp(quad + lin + self.v)
        return out[0] if single else out

    def scaled(self, factor):
        """Multiply by a nonzero complex constant."""
        return ComplexGaussian(self.A, self.u, self.v + cmath.log(factor))

    def pullback(self, M, m0):
        """g(M Y + m0) as a Gaussian in Y.  M may be rectangular."""
        M = np.asarray(M, dtype=float)
        m0 = np.asarray(m0, dtype=float)
        A2 = M.T @ self.A @ M
        u2 = M.T @ (self.u - self.A @ m0)
        v2 = self.v + self.u @ m0 - 0.5 * m0 @ self.A @ m0
        return ComplexGaussian(A2, u2, v2)

    def fourier(self):
        """g^(xi) = integral g(Y) exp(-i<xi,Y>) dY, plain Lebesgue."""
        n = self.dim
        Ainv = np.linalg.inv(self.A)
        sign, logdet = np.linalg.slogdet(self.A)
        if sign <= 0:
            raise ValueError("form is not positive definite")
        A2 = Ainv
        u2 = -1j * (Ainv @ self.u)
        v2 = (self.v + 0.5 * self.u @ Ainv @ self.u
              + 0.5 * (n * math.log(2 * math.pi) - logdet))
        return ComplexGaussian(A2, u2, v2)

    def marginalize(self, out_indices):
        """Integrate out the listed coordinates, plain Lebesgue."""
        out = list(out_indices)
        keep = [i for i in range(self.dim) if i not in set(out)]
        A_kk = self.A[np.ix_(keep, keep)]
        A_ko = self.A[np.ix_(keep, out)]
        A_oo = self.A[np.ix_(out, out)]
        sign, logdet = np.linalg.slogdet(A_oo)
        if sign <= 0:
            raise ValueError("marginalized block is not positive definite")
        Aoo_inv = np.linalg.inv(A_oo)
        u_k = self.u[keep]
        u_o = self.u[out]
        A2 = A_kk - A_ko @ Aoo_inv @ A_ko.T
        u2 = u_k - A_ko @ Aoo_inv @ u_o
        v2 = (self.v + 0.5 * u_o @ Aoo_inv @ u_o
              + 0.5 * (len(out) * math.log(2 * math.pi) - logdet))
        return ComplexGaussian(A2, u2, v2)

    def partial_fourier(self, t_indices, xi):
        """Transform in a coordinate block only, at frequency xi.

        Returns the Gaussian in the remaining coordinates:
        integral g(Y_keep, T) exp(-i<xi,T>) dT.
        """
        xi = np.asarray(xi, dtype=float)
        shifted = ComplexGaussian(self.A, self.u.copy(), self.v)
        shifted.u[list(t_indices)] -= 1j * xi
        return shifted.marginalize(t_indices)

    def restrict(self, fix_indices, values):
        """Substitute fixed values for a coordinate block."""
        fix = list(fix_indices)
        keep = [i for i in range(self.dim) if i not in set(fix)]
        vals = np.asarray(values, dtype=float)
        A_kk = self.A[np.ix_(keep, keep)]
        A_kf = self.A[np.ix_(keep, fix)]
        A_ff = self.A[np.ix_(fix, fix)]
        u2 = self.u[keep] - A_kf @ vals
        v2 = self.v + self.u[fix] @ vals - 0.5 * vals @ A_ff @ vals
        return ComplexGaussian(A_kk, u2, v2)

    def total_integral(self):
        """integral over R^dim, closed form."""
        n = self.dim
        if n == 0:
            return cmath.exp(self.v)
        sign, logdet = np.linalg.slogdet(self.A)
        if sign <= 0:
            raise ValueError("form is not positive definite")
        Ainv = np.linalg.inv(self.A)
        return cmath.exp(self.v + 0.5 * self.u @ Ainv @ self.u
                         + 0.5 * (n * math.log(2 * math.pi) - logdet))

    def envelope(self):
        """(mean, per-axis sigma) of the |g| envelope, for truncation."""
        Ainv = np.linalg.inv(self.A)
        mean = Ainv @ np.real(self.u)
        sigma = np.sqrt(np.diag(Ainv))
        return mean, sigma

    def is_diagonal(self, tol=1e-13):
        off = self.A - np.diag(np.diag(self.A))
        return np.abs(off).max() <= tol * max(1.0, np.abs(self.A).max())


class GaussianTestFunction:
    """f1(Y) = amp * exp(-1/2 (Y-b)^T Q (Y-b)), the Schwartz test data.

    Q must pass a Cholesky factorization; amp > 0 is stored as a log.
    """

    __slots__ = ("Q", "b", "log_amp")

    def __init__(self, Q, b, amp=1.0):
        Q = np.asarray(Q, dtype=float)
        b = np.asarray(b, dtype=float)
        if Q.shape != (b.size, b.size):
            raise ValueError("Q/b shape mismatch")
        np.linalg.cholesky(Q)   # raises unless positive definite
        if amp <= 0:
            raise ValueError("amplitude must be positive")
        self.Q = (Q + Q.T) / 2.0
        self.b = b
        self.log_amp = math.log(amp)

    @classmethod
    def standard(cls, dim):
        return cls(np.eye(dim), np.zeros(dim))

    def lift(self):
        A = self.Q
        u = self.Q @ self.b
        v = self.log_amp - 0.5 * self.b @ self.Q @ self.b
        return ComplexGaussian(A, u.astype(complex), v)

    def evaluate(self, points):
        return np.real(self.lift().evaluate(points))
