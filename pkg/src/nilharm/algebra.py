"""Finite-dimensional real Lie algebras via exact structure constants.

A LieAlgebraData holds a basis, a sparse bracket table over the
rationals, and a designated center/complement split of the basis.  All
structural queries (Jacobi defect, derived subalgebra, center,
nilpotency class) run in exact arithmetic, so a zero really is a zero.
"""

from fractions import Fraction

from . import linalg


class LieAlgebraData:
    """Structure constants with a designated z + v basis split.

    structure maps (i, j) with i < j to the coefficient vector of
    [b_i, b_j]; the (j, i) value is implied by antisymmetry and
    diagonal brackets vanish.  Instances are immutable after
    construction.
    """

    __slots__ = ("dim", "basis_labels", "structure", "center_indices",
                 "complement_indices", "name", "meta")

    def __init__(self, dim, basis_labels, structure, center_indices,
                 complement_indices, name="", meta=None):
        if dim <= 0:
            raise ValueError("dim must be positive")
        if len(basis_labels) != dim:
            raise ValueError("basis_labels length mismatch")
        clean = {}
        for (i, j), vec in structure.items():
            if not (0 <= i < dim and 0 <= j < dim):
                raise ValueError(f"structure key ({i},{j}) out of range")
            if i >= j:
                raise ValueError("structure keys must have i < j")
            vec = tuple(Fraction(c) for c in vec)
            if len(vec) != dim:
                raise ValueError("structure value length mismatch")
            if any(c != 0 for c in vec):
                clean[(i, j)] = vec
        center_indices = tuple(center_indices)
        complement_indices = tuple(complement_indices)
        if sorted(center_indices + complement_indices) != list(range(dim)):
            raise ValueError("center/complement must partition the basis")
        self.dim = dim
        self.basis_labels = tuple(basis_labels)
        self.structure = clean
        self.center_indices = center_indices
        self.complement_indices = complement_indices
        self.name = name
        self.meta = dict(meta) if meta else {}

    def bracket_basis(self, i, j):
        """[b_i, b_j] as a coefficient vector."""
        if i == j:
            return [Fraction(0)] * self.dim
        if i < j:
            vec = self.structure.get((i, j))
            return list(vec) if vec else [Fraction(0)] * self.dim
        vec = self.structure.get((j, i))
        return [-c for c in vec] if vec else [Fraction(0)] * self.dim

    def __repr__(self):
        return f"LieAlgebraData({self.name or 'dim ' + str(self.dim)})"


def bracket(alg, x, y):
    """Bilinear extension of the structure constants; exact."""
    if len(x) != alg.dim or len(y) != alg.dim:
        raise ValueError("vector dimension mismatch")
    out = [Fraction(0)] * alg.dim
    for (i, j), vec in alg.structure.items():
        c = Fraction(x[i]) * Fraction(y[j]) - Fraction(x[j]) * Fraction(y[i])
        if c != 0:
            for k, v in enumerate(vec):
                if v != 0:
                    out[k] += c * v
    return out


def ad_matrix(alg, i):
    """Matrix of ad(b_i) acting on coefficient columns."""
    cols = []
    for j in range(alg.dim):
        cols.append(alg.bracket_basis(i, j))
    return linalg.transpose(cols)


def jacobi_defect(alg):
    """Max |coefficient| of the Jacobi cyclic sum over all basis triples."""
    worst = Fraction(0)
    n = alg.dim
    for i in range(n):
        for j in range(i + 1, n):
            bij = alg.bracket_basis(i, j)
            for k in range(j + 1, n):
                term = bracket(alg, bij, _unit(n, k))
                bjk = alg.bracket_basis(j, k)
                term2 = bracket(alg, bjk, _unit(n, i))
                bki = alg.bracket_basis(k, i)
                term3 = bracket(alg, bki, _unit(n, j))
                for a, b, c in zip(term, term2, term3):
                    mag = abs(a + b + c)
                    if mag > worst:
                        worst = mag
    return worst


def _unit(n, k):
    vec = [Fraction(0)] * n
    vec[k] = Fraction(1)
    return vec


def derived_subalgebra(alg):
    """Reduced-echelon basis of [n, n]."""
    rows = [vec for vec in alg.structure.values()]
    if not rows:
        return []
    ech, _ = linalg.rref(rows)
    return ech


def center(alg):
    """Reduced-echelon basis of the center: ker of every ad(b_i) at once."""
    stacked = []
    for i in range(alg.dim):
        stacked.extend(ad_matrix(alg, i))
    if not stacked:
        return linalg.identity(alg.dim)
    return linalg.kernel(stacked)


def nilpotency_class(alg):
    """Length of the lower central series (1 = abelian)."""
    current = linalg.identity(alg.dim)
    step = 0
    while current:
        rows = []
        for i in range(alg.dim):
            for v in current:
                w = bracket(alg, _unit(alg.dim, i), v)
                if any(c != 0 for c in w):
                    rows.append(w)
        nxt, _ = linalg.rref(rows) if rows else ([], [])
        step += 1
        if nxt and linalg.span_equal(current, nxt):
            raise ValueError("algebra is not nilpotent")
        current = nxt
        if step > alg.dim + 1:
            raise ValueError("lower central series did not terminate")
    return step


def is_two_step(alg):
    return nilpotency_class(alg) <= 2


def subalgebra(alg, indices, name=""):
    """Restrict to the span of the given basis indices.

    The span must be closed under the bracket.  The designated center
    of the restriction is its computed center, which must be spanned by
    restricted basis vectors (true for every split this package
    builds).
    """
    indices = list(indices)
    pos = {g: i for i, g in enumerate(indices)}
    structure = {}
    for a, gi in enumerate(indices):
        for b in range(a + 1, len(indices)):
            gj = indices[b]
            vec = alg.bracket_basis(gi, gj)
            restricted = [Fraction(0)] * len(indices)
            for k, c in enumerate(vec):
                if c == 0:
                    continue
                if k not in pos:
                    raise ValueError(
                        f"span not closed: [{alg.basis_labels[gi]},"
                        f"{alg.basis_labels[gj]}] leaves the subspace")
                restricted[pos[k]] = c
            structure[(a, b)] = restricted
    sub = LieAlgebraData(
        dim=len(indices),
        basis_labels=[alg.basis_labels[g] for g in indices],
        structure=structure,
        center_indices=range(len(indices)),   # provisional, fixed below
        complement_indices=[],
        name=name or f"{alg.name}|sub",
        meta=dict(alg.meta),
    )
    cen = center(sub)
    central = []
    for i in range(sub.dim):
        if linalg.in_span(cen, _unit(sub.dim, i)):
            central.append(i)
    if len(central) != len(cen):
        raise ValueError("computed center is not spanned by basis vectors")
    return LieAlgebraData(
        dim=sub.dim,
        basis_labels=sub.basis_labels,
        structure=structure,
        center_indices=central,
        complement_indices=[i for i in range(sub.dim) if i not in set(central)],
        name=sub.name,
        meta=sub.meta,
    )


def _frac_str(c):
    return f"{c.numerator}/{c.denominator}"


def to_json(alg):
    """JSON-ready dict; rationals as exact "p/q" strings."""
    brackets = []
    for (i, j) in sorted(alg.structure):
        brackets.append({
            "i": i,
            "j": j,
            "coeffs": [_frac_str(c) for c in alg.structure[(i, j)]],
        })
    doc = {
        "dim": alg.dim,
        "labels": list(alg.basis_labels),
        "center": list(alg.center_indices),
        "complement": list(alg.complement_indices),
        "brackets": brackets,
    }
    if alg.name:
        doc["name"] = alg.name
    if alg.meta:
        doc["meta"] = alg.meta
    return doc


def from_json(doc):
    structure = {}
    for entry in doc["brackets"]:
        structure[(entry["i"], entry["j"])] = [Fraction(s) for s in entry["coeffs"]]
    return LieAlgebraData(
        dim=doc["dim"],
        basis_labels=doc["labels"],
        structure=structure,
        center_indices=doc["center"],
        complement_indices=doc.get(
            "complement",
            [i for i in range(doc["dim"]) if i not in set(doc["center"])]),
        name=doc.get("name", ""),
        meta=doc.get("meta"),
    )
