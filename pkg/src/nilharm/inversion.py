"""Numerical verification of the Fourier inversion formulas.

Flat case: f(x) = c * integral over the dual center of
Theta(r_x f)(lam) |Pf(lam)| dlam, with c = d! 2^d, 2d = dim(n/z).

Stepwise case: factor x = x1 * x2, partial Fourier transform along l2,
flat inversion on L1 per frequency, then the outer integral against
chi_xi(x2).

Measure convention used throughout: the Fourier kernel e^{-i<xi,Y>}
integrates against plain Lebesgue dY, and every k-dimensional dual
integration carries (2pi)^{-k} * Lebesgue.  The partial transform along
l2 and the outer integral split their (2pi)-power evenly, which is the
unique allocation that matches the displayed inversion constants for
the three exceptional cases.
"""

import math
import time
from fractions import Fraction

import numpy as np

from .algebra import bracket
from .gaussians import ComplexGaussian, GaussianTestFunction
from .pfaffian import is_square_integrable, pf_polynomial
from .quadrature import (DEFAULT_MAX_EVALS, DEFAULT_RTOL, DEFAULT_SIGMAS,
                         radial_integrate, separable_integrate,
                         tensor_integrate)
from .stepwise import decompose


class GroupPoint:
    """A group element in exponential coordinates."""

    __slots__ = ("algebra", "coords")

    def __init__(self, algebra, coords):
        coords = tuple(coords)
        if len(coords) != algebra.dim:
            raise ValueError("coordinate length mismatch")
        self.algebra = algebra
        self.coords = coords

    @classmethod
    def zero(cls, algebra):
        return cls(algebra, [Fraction(0)] * algebra.dim)

    def float_coords(self):
        return np.array([float(c) for c in self.coords])

    def inverse(self):
        return GroupPoint(self.algebra, [-c for c in self.coords])

    def __eq__(self, other):
        return (isinstance(other, GroupPoint)
                and self.algebra is other.algebra
                and all(a == b for a, b in zip(self.coords, other.coords)))

    def __repr__(self):
        return f"GroupPoint({self.coords})"


def group_multiply(alg, X, Y):
    """BCH product X + Y + [X,Y]/2; exact on rational coordinates."""
    xs = X.coords if isinstance(X, GroupPoint) else tuple(X)
    ys = Y.coords if isinstance(Y, GroupPoint) else tuple(Y)
    br = bracket(alg, list(xs), list(ys))
    half = Fraction(1, 2)
    zs = [x + y + half * b if isinstance(b, Fraction)
          else x + y + 0.5 * b
          for x, y, b in zip(xs, ys, br)]
    return GroupPoint(alg, zs)


def _unit_fracs(dim, idx):
    vec = [Fraction(0)] * dim
    vec[idx] = Fraction(1)
    return vec


def translation_matrix(alg, x):
    """A_x with (r_x f)_1(Y) = f_1(A_x Y + X); unipotent, det 1."""
    xs = list(x.coords if isinstance(x, GroupPoint) else x)
    dim = alg.dim
    B = np.zeros((dim, dim))
    for j in range(dim):
        col = bracket(alg, _unit_fracs(dim, j), xs)
        B[:, j] = [float(c) for c in col]
    return np.eye(dim) + 0.5 * B


def right_translate(alg, f, x):
    """(r_x f)(y) = f(y x) as a closed-form Gaussian with phase."""
    xs = x.coords if isinstance(x, GroupPoint) else tuple(x)
    M = translation_matrix(alg, xs)
    m0 = np.array([float(c) for c in xs])
    g = f.lift() if isinstance(f, GaussianTestFunction) else f
    return g.pullback(M, m0)


def fourier(g):
    """Closed-form transform, f^(xi) = integral g(Y) e^{-i<xi,Y>} dY."""
    if isinstance(g, GaussianTestFunction):
        g = g.lift()
    return g.fourier()


def fourier_quadrature(g, xi, rtol=DEFAULT_RTOL, max_evals=DEFAULT_MAX_EVALS):
    """Direct quadrature of the transform at one frequency (oracle)."""
    if isinstance(g, GaussianTestFunction):
        g = g.lift()
    xi = np.asarray(xi, dtype=float)
    mean, sigma = g.envelope()

    def integrand(pts):
        return g.evaluate(pts) * np.exp(-1j * (pts @ xi))

    value, _ = tensor_integrate(integrand, mean, sigma, rtol=rtol,
                                max_evals=max_evals)
    return value


def flat_constant(alg):
    """c = d! 2^d with 2d = dim n/z, read off the algebra."""
    vdim = len(alg.complement_indices)
    if vdim % 2:
        raise ValueError("dim n/z is odd; no flat Plancherel constant")
    d = vdim // 2
    return math.factorial(d) * 2 ** d


def _character_core(alg, g):
    """Marginal of g^ over the dual complement, as a Gaussian on z*.

    Carries the (2pi)^{-dim v} orbit-measure normalization, so the
    orbital character is c^{-1}|Pf(lam)|^{-1} times this evaluated
    at lam.
    """
    comp = list(alg.complement_indices)
    ghat = fourier(g)
    core = ghat.marginalize(comp) if comp else ghat
    return core.scaled((2 * math.pi) ** (-len(comp)))


def orbital_character(alg, lam, g):
    """Theta_{pi_lam}(g) for Gaussian g; raises on singular lam."""
    lam = np.asarray(lam, dtype=float)
    pf = pf_polynomial(alg)
    pf_val = pf.evaluate_float(lam[None, :])[0]
    if pf_val == 0.0:
        raise ValueError("singular lam: Pf(lam) = 0")
    core = _character_core(alg, g)
    c = flat_constant(alg)
    return complex(core.evaluate(lam)) / (c * abs(pf_val))


def orbital_character_quadrature(alg, lam, g, rtol=DEFAULT_RTOL,
                                 max_evals=DEFAULT_MAX_EVALS):
    """Quadrature cross-check of the character along the flat orbit."""
    lam = np.asarray(lam, dtype=float)
    pf = pf_polynomial(alg)
    pf_val = pf.evaluate_float(lam[None, :])[0]
    if pf_val == 0.0:
        raise ValueError("singular lam: Pf(lam) = 0")
    comp = list(alg.complement_indices)
    cent = list(alg.center_indices)
    ghat = fourier(g)
    if not comp:
        return complex(ghat.evaluate(lam)) / flat_constant(alg)
    # integrate ghat over the affine slice v* + lam
    fixed = ghat.restrict(cent, lam)
    mean, sigma = fixed.envelope()
    value, _ = tensor_integrate(lambda pts: fixed.evaluate(pts), mean, sigma,
                                rtol=rtol, max_evals=max_evals)
    value *= (2 * math.pi) ** (-len(comp))
    c = flat_constant(alg)
    return complex(value) / (c * abs(pf_val))


class InversionReport:
    """Per-point reconstruction records plus the settings that made them."""

    def __init__(self, formula, settings):
        self.formula = formula
        self.settings = dict(settings)
        self.entries = []
        self.wall_time = 0.0

    def add_entry(self, x, f_x, reconstructed, extra=None):
        abs_err = abs(reconstructed - f_x)
        rel_err = abs_err / max(abs(f_x), 1e-300)
        entry = {
            "x": [float(c) for c in x],
            "f_x": float(f_x),
            "reconstructed_re": float(np.real(reconstructed)),
            "reconstructed_im": float(np.imag(reconstructed)),
            "abs_error": float(abs_err),
            "rel_error": float(rel_err),
        }
        if extra:
            entry.update(extra)
        self.entries.append(entry)
        return entry

    @property
    def max_rel_error(self):
        return max(e["rel_error"] for e in self.entries) if self.entries else 0.0

    def as_dict(self):
        return {
            "formula": self.formula,
            "settings": self.settings,
            "entries": self.entries,
            "max_rel_error": self.max_rel_error,
            "wall_time_s": self.wall_time,
        }


def _settings(quad_settings):
    s = {"rtol": DEFAULT_RTOL, "max_evals": DEFAULT_MAX_EVALS,
         "sigmas": DEFAULT_SIGMAS, "start_nodes": 8}
    if quad_settings:
        s.update(quad_settings)
    return s


def invert_flat(alg, f, x, quad_settings=None):
    """Reconstruct f at x via the flat inversion formula; reports error.

    The quadrature runs over z* with weight |Pf(lam)| against
    (2pi)^{-dim z} Lebesgue; the character values divide by the same
    |Pf(lam)|, so the integrand stays smooth across the Pf = 0 set.
    """
    sq = is_square_integrable(alg)
    if not sq:
        raise ValueError("algebra is not square integrable; "
                         "flat inversion does not apply")
    s = _settings(quad_settings)
    start = time.perf_counter()
    if not isinstance(x, GroupPoint):
        x = GroupPoint(alg, x)

    zdim = len(alg.center_indices)
    c = flat_constant(alg)
    g = right_translate(alg, f, x)
    core = _character_core(alg, g)
    pf = pf_polynomial(alg)

    if zdim == 0:
        recon = complex(core.evaluate(np.zeros(0)))
        info = {"nodes": 0}
    else:
        mean, sigma = core.envelope()

        def integrand(lams):
            pf_abs = np.abs(pf.evaluate_float(lams))
            if np.any(pf_abs == 0.0):
                raise ValueError("quadrature node hit Pf(lam) = 0")
            theta = core.evaluate(lams) / (c * pf_abs)
            return theta * pf_abs

        value, info = tensor_integrate(integrand, mean, sigma,
                                       rtol=s["rtol"],
                                       max_evals=s["max_evals"],
                                       sigmas_out=s["sigmas"],
                                       start=s["start_nodes"])
        recon = c * (2 * math.pi) ** (-zdim) * value

    f_x = float(f.evaluate(x.float_coords()))
    report = InversionReport(f"flat:{alg.name}", s)
    report.add_entry(x.float_coords(), f_x, recon,
                     extra={"z_nodes": info.get("nodes", 0)})
    report.wall_time = time.perf_counter() - start
    return report


def factor_point(alg, dec, x):
    """x = x1 * x2 with x1 in L1, x2 in L2; exact on rationals."""
    if not isinstance(x, GroupPoint):
        x = GroupPoint(alg, x)
    l2 = set(dec.l2_indices)
    xs = list(x.coords)
    zero = Fraction(0) if isinstance(xs[0], Fraction) else 0.0
    x2 = [xs[i] if i in l2 else zero for i in range(alg.dim)]
    xl1 = [zero if i in l2 else xs[i] for i in range(alg.dim)]
    br = bracket(alg, xl1, x2)
    half = Fraction(1, 2)
    x1 = [a - (half * b if isinstance(b, Fraction) else 0.5 * b)
          for a, b in zip(xl1, br)]
    p1 = GroupPoint(alg, x1)
    p2 = GroupPoint(alg, x2)
    recomposed = group_multiply(alg, p1, p2)
    assert all(abs(float(a - b)) < 1e-12
               for a, b in zip(recomposed.coords, xs)), \
        "factorization failed to recompose"
    return p1, p2


def _stepwise_structure(dec):
    """Index bookkeeping for the split: global positions of z1, v1, l2."""
    sub = dec.l1_subalgebra()
    l1 = list(dec.l1_indices)
    z1_global = [l1[i] for i in sub.center_indices]
    v1_global = [l1[i] for i in sub.complement_indices]
    return sub, z1_global, v1_global, list(dec.l2_indices)


def invert_stepwise(case_tag, f, x, quad_settings=None, n=None):
    """Reconstruct f at x by the two-layer inversion for one case.

    Inner layer: flat inversion on L1 applied to the partial Fourier
    transform of the translated data along l2.  Outer layer: integral
    over the dual of l2 against chi_xi(x2).  Only the central slice of
    the L1 data enters the character, and there the joint dependence
    on (Z, T) is affine, so each frequency's integrand is again a
    closed-form Gaussian.
    """
    if isinstance(case_tag, str):
        dec = decompose(case_tag, n=n)
    else:
        dec = case_tag
    if not dec.verification or not all(dec.verification.values()):
        raise ValueError("decomposition failed verification")
    alg = dec.algebra
    s = _settings(quad_settings)
    start = time.perf_counter()
    if not isinstance(x, GroupPoint):
        x = GroupPoint(alg, x)

    sub, z1_global, v1_global, l2_global = _stepwise_structure(dec)
    n2 = len(l2_global)
    z1 = len(z1_global)
    d1 = len(v1_global) // 2
    c1 = math.factorial(d1) * 2 ** d1
    outer_const = (2 * math.pi) ** (-n2 / 2.0)
    pf1 = pf_polynomial(sub)

    x1, x2 = factor_point(alg, dec, x)
    X2 = np.array([float(x2.coords[i]) for i in l2_global])

    # joint Gaussian in (Z, T): f_1(Z + X1 + T + [X1,T]/2)
    dim = alg.dim
    M = np.zeros((dim, z1 + n2))
    for k, gz in enumerate(z1_global):
        M[gz, k] = 1.0
    x1_list = list(x1.coords)
    for k, gt in enumerate(l2_global):
        col = bracket(alg, x1_list, _unit_fracs(dim, gt))
        vec = np.array([float(c) for c in col]) * 0.5
        vec[gt] += 1.0
        M[:, z1 + k] = vec
    m0 = x1.float_coords()
    g_joint = (f.lift() if isinstance(f, GaussianTestFunction) else f
               ).pullback(M, m0)

    t_block = list(range(z1, z1 + n2))
    A_tt = g_joint.A[np.ix_(t_block, t_block)]
    xi_mean = np.imag(g_joint.u[t_block])
    xi_sigma = np.sqrt(np.diag(A_tt))

    inner_nodes = [0]
    strategies = set()

    def inner_value(xi):
        """Flat inversion of the xi-frequency slice on L1.

        Strategy: separable per-axis quadrature when the transform
        factorizes; full tensor quadrature of Theta |Pf| in low
        dimension; otherwise the closed-form Gaussian integral (the
        |Pf| weight cancels the character's 1/|Pf| identically, so
        the lam-integral of Theta |Pf| is integral of s_hat / c1).
        """
        s_xi = g_joint.partial_fourier(t_block, xi).scaled(outer_const)
        s_hat = s_xi.fourier()
        mean, sigma = s_hat.envelope()
        forced = s.get("inner_strategy", "auto")
        if forced == "auto":
            if s_hat.is_diagonal():
                strategy = "separable"
            elif z1 <= 4:
                strategy = "tensor"
            else:
                strategy = "closed"
        else:
            strategy = forced
        strategies.add(strategy)

        if strategy == "separable":
            aa = np.diag(s_hat.A)
            uu = s_hat.u
            funcs = []
            for k in range(z1):
                def axis(t, _a=aa[k], _u=uu[k]):
                    return np.exp(-0.5 * _a * t * t + _u * t)
                funcs.append(axis)
            value, info = separable_integrate(funcs, mean, sigma,
                                              rtol=s["rtol"],
                                              max_evals=s["max_evals"],
                                              sigmas_out=s["sigmas"],
                                              start=s["start_nodes"])
            value *= np.exp(s_hat.v) / c1
            # factorization sanity: the axis product must rebuild s_hat
            probes = mean + sigma * np.linspace(-1.5, 1.5, 3)[:, None]
            rebuilt = np.exp(s_hat.v) * np.prod(
                [funcs[k](probes[:, k]) for k in range(z1)], axis=0)
            assert np.allclose(rebuilt, s_hat.evaluate(probes), rtol=1e-9), \
                "separable factorization mismatch"
        elif strategy == "tensor":
            def integrand(lams):
                pf_abs = np.abs(pf1.evaluate_float(lams))
                if np.any(pf_abs == 0.0):
                    raise ValueError("quadrature node hit Pf(lam) = 0")
                theta = s_hat.evaluate(lams) / (c1 * pf_abs)
                return theta * pf_abs
            value, info = tensor_integrate(integrand, mean, sigma,
                                           rtol=s["rtol"],
                                           max_evals=s["max_evals"],
                                           sigmas_out=s["sigmas"],
                                           start=s["start_nodes"])
        elif strategy == "closed":
            value = s_hat.total_integral() / c1
            info = {"nodes": 0}
        else:
            raise ValueError(f"unknown inner strategy {strategy!r}")
        inner_nodes[0] += info["nodes"]
        return c1 * (2 * math.pi) ** (-z1) * value

    def outer_integrand(xi_pts):
        vals = np.empty(len(xi_pts), dtype=complex)
        for i, xi in enumerate(xi_pts):
            vals[i] = inner_value(xi)
        return vals * np.exp(1j * (xi_pts @ X2))

    outer_rtol = max(s["rtol"], 1e-9)
    value, outer_info = tensor_integrate(outer_integrand, xi_mean, xi_sigma,
                                         rtol=outer_rtol,
                                         max_evals=2 ** 14,
                                         sigmas_out=s["sigmas"],
                                         start=s["start_nodes"])
    recon = outer_const * value

    f_x = float(f.evaluate(x.float_coords()))
    tag = case_tag if isinstance(case_tag, str) else alg.name
    report = InversionReport(f"stepwise:{tag}", s)
    report.add_entry(x.float_coords(), f_x, recon,
                     extra={"outer_nodes": outer_info["nodes"],
                            "inner_nodes_total": inner_nodes[0],
                            "inner_strategies": sorted(strategies)})
    report.wall_time = time.perf_counter() - start
    return report


def flatness_identity_gap(alg, f, x):
    """Relative gap between the two closed-form routes to (r_x f)(e).

    Route 1: c * integral Theta(r_x f)|Pf| dlam over z* (telescoped in
    closed form).  Route 2: Euclidean Fourier inversion of (r_x f)_1
    at 0.  Both reduce to total integrals of explicit Gaussians.
    """
    if not isinstance(x, GroupPoint):
        x = GroupPoint(alg, x)
    g = right_translate(alg, f, x)
    zdim = len(alg.center_indices)

    # route 1: the lam-integral of the character core is itself a
    # closed-form Gaussian integral (the constant c cancels)
    core = _character_core(alg, g)
    lhs = core.total_integral() * (2 * math.pi) ** (-zdim)

    # route 2: (2pi)^{-dim n} * integral of g^ over all of n*
    ghat = fourier(g)
    rhs = ghat.total_integral() * (2 * math.pi) ** (-alg.dim)

    scale = max(abs(lhs), abs(rhs))
    return abs(lhs - rhs) / scale, lhs, rhs


def orbit_space_quadrature_check(alg, h=None, radius=8.0, rtol=DEFAULT_RTOL,
                                 seed=0):
    """Two independent quadratures of integral h(|lam|)|Pf(lam)| dlam.

    Requires dim z* = 3 and a rotation-invariant integrand; the
    Pfaffian factor is sampled under random rotations and the check
    refuses if it is not radial.  Reports a Richardson-style
    truncation estimate from halving the radius.
    """
    zdim = len(alg.center_indices)
    if zdim != 3:
        raise ValueError("orbit-space check requires dim z = 3")
    if h is None:
        h = lambda r: np.exp(-0.5 * r * r)
    pf = pf_polynomial(alg)

    rng = np.random.default_rng(seed)
    for _ in range(10):
        lam = rng.normal(size=3)
        q, _ = np.linalg.qr(rng.normal(size=(3, 3)))
        a = abs(pf.evaluate_float(lam[None, :])[0])
        b = abs(pf.evaluate_float((q @ lam)[None, :])[0])
        if abs(a - b) > 1e-9 * max(1.0, abs(a)):
            raise ValueError("integrand is not rotation-invariant; refusing")

    def cart(pts):
        r = np.sqrt(np.einsum("ni,ni->n", pts, pts))
        return h(r) * np.abs(pf.evaluate_float(pts))

    value_cart, cart_info = tensor_integrate(
        cart, np.zeros(3), np.ones(3), rtol=rtol, sigmas_out=radius)

    def radial(rs):
        pts = np.zeros((len(rs), 3))
        pts[:, 0] = rs
        return 4.0 * math.pi * rs * rs * h(rs) * np.abs(
            pf.evaluate_float(pts))

    value_rad, rad_info = radial_integrate(radial, radius, rtol=rtol)
    value_rad_half, _ = radial_integrate(radial, radius / 2.0, rtol=rtol)

    scale = max(abs(value_cart), abs(value_rad), 1e-300)
    return {
        "value_cartesian": float(np.real(value_cart)),
        "value_radial": float(np.real(value_rad)),
        "rel_diff": float(abs(value_cart - value_rad) / scale),
        "truncation_estimate": float(abs(value_rad - value_rad_half)),
        "radius": radius,
        "cartesian_nodes": cart_info["nodes"],
        "radial_nodes": rad_info["nodes"],
    }
