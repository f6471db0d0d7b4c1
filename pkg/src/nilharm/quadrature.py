"""Deterministic tensor-product quadrature with envelope truncation.

Gauss-Legendre nodes per axis on [mean - k*sigma, mean + k*sigma],
doubling the per-axis count until the value stabilizes.  Node counts
stay even so grids never land on a hyperplane through the envelope
center (where Pfaffian factors can vanish).
"""

import math

import numpy as np

DEFAULT_RTOL = 1e-8
DEFAULT_MAX_EVALS = 2 ** 20
DEFAULT_SIGMAS = 8.0

_rule_cache = {}


def gauss_legendre(n):
    if n not in _rule_cache:
        _rule_cache[n] = np.polynomial.legendre.leggauss(n)
    return _rule_cache[n]


def axis_rule(n, lo, hi):
    """Nodes/weights for [lo, hi]."""
    x, w = gauss_legendre(n)
    half = (hi - lo) / 2.0
    return lo + half * (x + 1.0), half * w


def tensor_integrate(func, means, sigmas, rtol=DEFAULT_RTOL,
                     max_evals=DEFAULT_MAX_EVALS, sigmas_out=DEFAULT_SIGMAS,
                     start=8):
    """integral of func over the truncated box, with per-axis doubling.

    func maps an (npts, dim) array to complex values.  Returns
    (value, info); info records node counts and the last relative
    change.  Raises if the budget is exhausted before convergence.
    """
    means = np.asarray(means, dtype=float)
    sigmas = np.asarray(sigmas, dtype=float)
    dim = means.size
    if dim == 0:
        return func(np.zeros((1, 0)))[0], {"nodes": 0, "converged": True,
                                           "last_change": 0.0}
    los = means - sigmas_out * sigmas
    his = means + sigmas_out * sigmas

    n = start
    prev = None
    while True:
        total = n ** dim
        if total > max_evals:
            raise RuntimeError(
                "quadrature budget exhausted before convergence "
                f"({n} nodes/axis, dim {dim})")
        axes = [axis_rule(n, los[k], his[k]) for k in range(dim)]
        grids = np.meshgrid(*[a[0] for a in axes], indexing="ij")
        pts = np.stack([g.reshape(-1) for g in grids], axis=-1)
        wgrids = np.meshgrid(*[a[1] for a in axes], indexing="ij")
        wts = np.ones(total)
        for wg in wgrids:
            wts = wts * wg.reshape(-1)
        value = np.sum(func(pts) * wts)
        if prev is not None:
            scale = max(abs(value), abs(prev), 1e-300)
            change = abs(value - prev) / scale
            if change < rtol:
                return value, {"nodes": total, "nodes_per_axis": n,
                               "converged": True, "last_change": change}
        prev = value
        n *= 2


def separable_integrate(axis_funcs, means, sigmas, rtol=DEFAULT_RTOL,
                        max_evals=DEFAULT_MAX_EVALS,
                        sigmas_out=DEFAULT_SIGMAS, start=8):
    """Product of one-dimensional integrals, for factorized integrands.

    axis_funcs[k] maps a node vector to values on axis k; the result is
    the product over k of the axis integrals.
    """
    means = np.asarray(means, dtype=float)
    sigmas = np.asarray(sigmas, dtype=float)
    value = 1.0 + 0.0j
    info = {"nodes": 0, "converged": True, "last_change": 0.0}
    for k, fk in enumerate(axis_funcs):
        def wrapped(pts, _fk=fk):
            return _fk(pts[:, 0])
        vk, ik = tensor_integrate(wrapped, means[k:k + 1], sigmas[k:k + 1],
                                  rtol=rtol, max_evals=max_evals,
                                  sigmas_out=sigmas_out, start=start)
        value *= vk
        info["nodes"] += ik["nodes"]
        info["last_change"] = max(info["last_change"], ik["last_change"])
    return value, info


def radial_integrate(func, r_max, rtol=DEFAULT_RTOL,
                     max_evals=DEFAULT_MAX_EVALS, start=16):
    """integral_0^{r_max} func(r) dr by doubling Gauss-Legendre."""
    n = start
    prev = None
    while True:
        if n > max_evals:
            raise RuntimeError("radial quadrature budget exhausted")
        x, w = axis_rule(n, 0.0, r_max)
        value = np.sum(func(x) * w)
        if prev is not None:
            scale = max(abs(value), abs(prev), 1e-300)
            change = abs(value - prev) / scale
            if change < rtol:
                return value, {"nodes": n, "converged": True,
                               "last_change": change}
        prev = value
        n *= 2
