"""Constructors and metadata for the catalog of 2-step algebras.

Constructible families:

  * heisenberg(n, F):  Im F + F^n, F in {C, H, O} (O only for n = 1)
  * free_two_step(n, F):  Lambda^2 F^n + F^n, F in {R, C}, as a real algebra
  * octonion_double():  Im O + Im O with [(0,u),(0,v)] = (-Im(uv), 0)
  * abelian(n), direct_sum(...):  plumbing for the composite entries

Every other table row ships as queryable metadata only; asking to
construct one raises CatalogError("bracket not specified in source").
"""

from fractions import Fraction

from . import composition
from .algebra import LieAlgebraData

HERMITIAN_CONVENTION = "<u,v> = sum_i u_i * conj(v_i)"


class CatalogError(ValueError):
    pass


def _structure_dict(dim, entries):
    # entries: (i, j, k, coeff) meaning [b_i, b_j] += coeff * b_k, i < j
    out = {}
    for i, j, k, coeff in entries:
        vec = out.setdefault((i, j), [Fraction(0)] * dim)
        vec[k] += Fraction(coeff)
    return out


def heisenberg(n, F):
    """Heisenberg algebra Im F + F^n with [(z,u),(w,v)] = (Im<u,v>, 0)."""
    if n <= 0:
        raise CatalogError("n must be positive")
    if F not in ("C", "H", "O"):
        raise CatalogError(f"heisenberg is defined over C, H, O, not {F!r}")
    if F == "O" and n != 1:
        raise CatalogError("octonionic Heisenberg appears only with n = 1")
    d = {"C": 2, "H": 4, "O": 8}[F]
    zdim = d - 1
    dim = zdim + n * d
    labels = [f"z{k}" for k in range(1, d)]
    for p in range(1, n + 1):
        labels.extend(f"u{p}e{k}" for k in range(d))
    entries = []
    units = [composition.CompositionElement.basis(F, k) for k in range(d)]
    for p in range(n):
        base = zdim + p * d
        for k in range(d):
            for l in range(k + 1, d):
                # [u_p e_k, u_p e_l] = Im(e_k * conj(e_l)) in the center
                prod = composition.im(
                    composition.multiply(units[k], composition.conj(units[l])))
                for m in range(1, d):
                    if prod.coeffs[m] != 0:
                        entries.append((base + k, base + l, m - 1, prod.coeffs[m]))
    return LieAlgebraData(
        dim=dim,
        basis_labels=labels,
        structure=_structure_dict(dim, entries),
        center_indices=range(zdim),
        complement_indices=range(zdim, dim),
        name=f"heisenberg:{n}:{F}",
        meta={"family": "heisenberg", "n": n, "F": F,
              "hermitian_convention": HERMITIAN_CONVENTION},
    )


def free_two_step(n, F):
    """Free 2-step algebra Lambda^2 F^n + F^n as a real Lie algebra.

    For F = C this is the underlying real algebra of the complex one:
    v gets real coordinates u_p, iu_p and the center gets re/im parts
    of each wedge, with the bracket extended complex-bilinearly.
    """
    if n < 2:
        raise CatalogError("free 2-step needs n >= 2")
    if F not in ("R", "C"):
        raise CatalogError(f"free 2-step is defined over R and C, not {F!r}")
    pairs = [(p, q) for p in range(n) for q in range(p + 1, n)]
    npairs = len(pairs)
    pair_index = {pq: t for t, pq in enumerate(pairs)}
    if F == "R":
        zdim, vdim = npairs, n
        labels = [f"u{p + 1}∧u{q + 1}" for p, q in pairs]
        labels += [f"u{p + 1}" for p in range(n)]
        entries = []
        for (p, q), t in pair_index.items():
            entries.append((zdim + p, zdim + q, t, 1))
    else:
        zdim, vdim = 2 * npairs, 2 * n
        labels = []
        for p, q in pairs:
            labels.append(f"u{p + 1}∧u{q + 1}")
            labels.append(f"i(u{p + 1}∧u{q + 1})")
        for p in range(n):
            labels.append(f"u{p + 1}")
            labels.append(f"iu{p + 1}")
        entries = []
        for (p, q), t in pair_index.items():
            re_z, im_z = 2 * t, 2 * t + 1
            pr, pi = zdim + 2 * p, zdim + 2 * p + 1
            qr, qi = zdim + 2 * q, zdim + 2 * q + 1
            entries.extend([
                (pr, qr, re_z, 1),    # [u_p, u_q] = u_p ^ u_q
                (pr, qi, im_z, 1),    # [u_p, iu_q] = i(u_p ^ u_q)
                (pi, qr, im_z, 1),
                (pi, qi, re_z, -1),   # [iu_p, iu_q] = -(u_p ^ u_q)
            ])
    dim = zdim + vdim
    return LieAlgebraData(
        dim=dim,
        basis_labels=labels,
        structure=_structure_dict(dim, entries),
        center_indices=range(zdim),
        complement_indices=range(zdim, dim),
        name=f"free2step:{n}:{F}",
        meta={"family": "free2step", "n": n, "F": F,
              "wedge_pairs": [list(pq) for pq in pairs]},
    )


def octonion_double():
    """Im O + Im O with bracket [(0,u),(0,v)] = (-Im(uv), 0).

    Basis: z1..z7 = (e_k, 0) then v1..v7 = (0, e_k).  The ordering
    v1,v2,v3,v5,v6,v4,v7 used for Pfaffian work is stored in meta.
    """
    dim = 14
    labels = [f"z{k}" for k in range(1, 8)] + [f"v{k}" for k in range(1, 8)]
    units = [composition.CompositionElement.basis("O", k) for k in range(8)]
    entries = []
    for i in range(1, 8):
        for j in range(i + 1, 8):
            prod = composition.multiply(units[i], units[j])
            for m in range(1, 8):
                if prod.coeffs[m] != 0:
                    entries.append((6 + i, 6 + j, m - 1, -prod.coeffs[m]))
    v_index = {k: 6 + k for k in range(1, 8)}
    return LieAlgebraData(
        dim=dim,
        basis_labels=labels,
        structure=_structure_dict(dim, entries),
        center_indices=range(7),
        complement_indices=range(7, 14),
        name="octdouble",
        meta={"family": "octdouble",
              "alt_orderings": {"pfaffian_v": [v_index[k] for k in
                                               (1, 2, 3, 5, 6, 4, 7)]}},
    )


def abelian(n):
    """R^n with zero bracket; everything is central."""
    if n <= 0:
        raise CatalogError("abelian needs n >= 1")
    return LieAlgebraData(
        dim=n,
        basis_labels=[f"a{k + 1}" for k in range(n)],
        structure={},
        center_indices=range(n),
        complement_indices=[],
        name=f"abelian:{n}",
        meta={"family": "abelian", "n": n},
    )


def direct_sum(*blocks, name=""):
    """Lie algebra direct sum with block-diagonal bracket.

    Center/complement designations concatenate.  Labels get a block
    prefix so they stay unique.
    """
    if not blocks:
        raise CatalogError("direct_sum of nothing")
    if len(blocks) == 1:
        return blocks[0]
    dim = sum(b.dim for b in blocks)
    labels, center, complement = [], [], []
    structure = {}
    offset = 0
    for bnum, blk in enumerate(blocks, start=1):
        labels.extend(f"{bnum}:{lab}" for lab in blk.basis_labels)
        center.extend(offset + i for i in blk.center_indices)
        complement.extend(offset + i for i in blk.complement_indices)
        for (i, j), vec in blk.structure.items():
            full = [Fraction(0)] * dim
            for k, c in enumerate(vec):
                full[offset + k] = c
            structure[(offset + i, offset + j)] = full
        offset += blk.dim
    return LieAlgebraData(
        dim=dim,
        basis_labels=labels,
        structure=structure,
        center_indices=center,
        complement_indices=complement,
        name=name or "+".join(b.name for b in blocks),
        meta={"family": "direct_sum", "blocks": [b.name for b in blocks]},
    )


def lambda_a(alg, a):
    """The special functionals lambda_a, as coefficients on the center basis.

    free2step over R: sum a_k (u_{2k-1} ^ u_{2k})*.
    free2step over C: same wedges, complex a_k given as (re, im) pairs
    (a bare number means real); coefficients land on the re/im pair.
    octdouble: a = (a1, a2, a3) on (e3,0)*, (e6,0)*, (e2,0)*.
    """
    family = alg.meta.get("family")
    zdim = len(alg.center_indices)
    coeffs = [Fraction(0)] * zdim
    if family == "free2step":
        pairs = [tuple(pq) for pq in alg.meta["wedge_pairs"]]
        pair_index = {pq: t for t, pq in enumerate(pairs)}
        n = alg.meta["n"]
        if 2 * len(a) > n:
            raise CatalogError(f"lambda_a needs 2*{len(a)} <= n = {n}")
        for k, val in enumerate(a):
            t = pair_index[(2 * k, 2 * k + 1)]
            if alg.meta["F"] == "R":
                coeffs[t] = Fraction(val)
            else:
                re_part, im_part = _split_complex(val)
                coeffs[2 * t] = re_part
                coeffs[2 * t + 1] = im_part
        return coeffs
    if family == "octdouble":
        if len(a) != 3:
            raise CatalogError("octdouble lambda_a takes exactly 3 coefficients")
        for val, unit in zip(a, (3, 6, 2)):
            coeffs[unit - 1] = Fraction(val)
        return coeffs
    raise CatalogError(f"lambda_a is not defined for family {family!r}")


def _split_complex(val):
    if isinstance(val, (tuple, list)):
        re_part, im_part = val
        return Fraction(re_part), Fraction(im_part)
    if isinstance(val, complex):
        return Fraction(val.real), Fraction(val.imag)
    return Fraction(val), Fraction(0)


# ---------------------------------------------------------------------------
# table metadata

class CatalogEntry:
    """One row of table 2.1 or 2.2.

    notes carries the U(1)/maximality column for 2.1 and the printed
    algebra decomposition for 2.2.  Constructible entries expose
    build(**params); params maps free parameters to their defaults.
    """

    __slots__ = ("table_id", "row", "group_K", "v_desc", "z_desc",
                 "constructible", "notes", "params", "_builder")

    def __init__(self, table_id, row, group_K, v_desc, z_desc,
                 notes="", params=None, builder=None):
        self.table_id = table_id
        self.row = row
        self.group_K = group_K
        self.v_desc = v_desc
        self.z_desc = z_desc
        self.notes = notes
        self.params = dict(params) if params else {}
        self._builder = builder
        self.constructible = builder is not None

    def build(self, **overrides):
        if not self.constructible:
            raise CatalogError(
                f"table {self.table_id} row {self.row}: bracket not specified "
                "in source; entry is metadata only")
        params = dict(self.params)
        for key, val in overrides.items():
            if key not in params:
                raise CatalogError(f"unknown parameter {key!r} for "
                                   f"table {self.table_id} row {self.row}")
            params[key] = int(val)
        return self._builder(**params)

    def as_dict(self):
        return {
            "table": self.table_id,
            "row": self.row,
            "K": self.group_K,
            "v": self.v_desc,
            "z": self.z_desc,
            "constructible": self.constructible,
            "notes": self.notes,
            "params": self.params,
        }


def _hsum(*blocks):
    # blocks: ("h", n, F) or ("ab", dim); builds the direct sum
    built = []
    for blk in blocks:
        if blk[0] == "h":
            built.append(heisenberg(blk[1], blk[2]))
        else:
            if blk[1] > 0:
                built.append(abelian(blk[1]))
    return direct_sum(*built)


_TABLE_21 = [
    # row, K, v, z, notes, params, builder
    (1, "SO(n)", "ℝ^n", "Λ²ℝ^n = 𝔰𝔬(n)", "", {"n": 3},
     lambda n: free_two_step(n, "R")),
    (2, "Spin(7)", "ℝ^8 = 𝕆", "ℝ^7 = Im 𝕆", "", {},
     lambda: heisenberg(1, "O")),
    (3, "G₂", "ℝ^7 = Im 𝕆", "ℝ^7 = Im 𝕆", "", {},
     lambda: octonion_double()),
    (4, "U(1)·SO(n)", "ℂ^n", "Im ℂ", "max: n ≠ 4", None, None),
    (5, "(U(1)·)SU(n)", "ℂ^n", "Λ²ℂ^n ⊕ Im ℂ", "U(1): n odd", None, None),
    (6, "SU(n), n odd", "ℂ^n", "Λ²ℂ^n", "", {"n": 3},
     lambda n: free_two_step(n, "C")),
    (7, "SU(n), n odd", "ℂ^n", "Im ℂ", "", None, None),
    (8, "U(n)", "ℂ^n", "Im ℂ^{n×n} = 𝔲(n)", "", None, None),
    (9, "(U(1)·)Sp(n)", "ℍ^n", "Re ℍ₀^{n×n} ⊕ Im ℍ", "", None, None),
    (10, "U(n)", "S²ℂ^n", "ℝ", "", None, None),
    (11, "(U(1)·)SU(n), n ≥ 3", "Λ²ℂ^n", "ℝ", "U(1): n even", None, None),
    (12, "U(1)·Spin(7)", "ℂ^8", "ℝ^7 ⊕ ℝ", "", None, None),
    (13, "U(1)·Spin(9)", "ℂ^16", "ℝ", "", None, None),
    (14, "(U(1)·)Spin(10)", "ℂ^16", "ℝ", "", None, None),
    (15, "U(1)·G₂", "ℂ^7", "ℝ", "", None, None),
    (16, "U(1)·E₆", "ℂ^27", "ℝ", "", None, None),
    (17, "Sp(1)×Sp(n)", "ℍ^n", "Im ℍ = 𝔰𝔭(1)", "max: n ≥ 2", None, None),
    (18, "Sp(2)×Sp(n)", "ℍ^{2×n}", "Im ℍ^{2×2} = 𝔰𝔭(2)", "", None, None),
    (19, "(U(1)·)SU(m)×SU(n), m,n ≥ 3", "ℂ^m ⊗ ℂ^n", "ℝ", "U(1): m = n",
     None, None),
    (20, "(U(1)·)SU(2)×SU(n)", "ℂ² ⊗ ℂ^n", "Im ℂ^{2×2} = 𝔲(2)", "U(1): n = 2",
     None, None),
    (21, "(U(1)·)Sp(2)×SU(n)", "ℍ² ⊗ ℂ^n", "ℝ", "U(1): n ≤ 4; max: n ≥ 3",
     None, None),
    (22, "U(2)×Sp(n)", "ℂ² ⊗ ℍ^n", "Im ℂ^{2×2} = 𝔲(2)", "", None, None),
    (23, "U(3)×Sp(n)", "ℂ³ ⊗ ℍ^n", "ℝ", "max: n ≥ 2", None, None),
]

_TABLE_22 = [
    # row, K, v, [n,n], algebra string, params, blocks (None = not constructible)
    (1, "U(n)", "ℂ^n ⊕ 𝔰𝔲(n)", "ℝ", "((h_{n;ℂ})) + 𝔰𝔲(n)", {"n": 2},
     lambda n: _hsum(("h", n, "C"), ("ab", n * n - 1))),
    (2, "U(4)", "ℂ⁴ ⊕ ℝ⁶", "Im ℂ ⊕ Λ²ℂ⁴", "((Im ℂ + Λ²ℂ⁴ + ℂ⁴)) + ℝ⁶",
     None, None),
    (3, "U(1)×U(n)", "ℂ^n ⊕ Λ²ℂ^n", "ℝ ⊕ ℝ",
     "((h_{n;ℂ})) + ((h_{n(n-1)/2;ℂ}))", {"n": 2},
     lambda n: _hsum(("h", n, "C"), ("h", n * (n - 1) // 2, "C"))),
    (4, "SU(4)", "ℂ⁴ ⊕ ℝ⁶", "Im ℂ ⊕ Re ℍ^{2×2}",
     "((Im ℂ + Re ℍ^{2×2} + ℂ⁴)) + ℝ⁶", None, None),
    (5, "U(2)×U(4)", "ℂ^{2×4} ⊕ ℝ⁶", "Im ℂ^{2×2}",
     "((Im ℂ^{2×2} + ℂ^{2×4})) + ℝ⁶", None, None),
    (6, "S(U(4)×U(m))", "ℂ^{4×m} ⊕ ℝ⁶", "ℝ", "((h_{4m;ℂ})) + ℝ⁶", {"m": 1},
     lambda m: _hsum(("h", 4 * m, "C"), ("ab", 6))),
    (7, "U(m)×U(n)", "ℂ^{m×n} ⊕ ℂ^m", "ℝ ⊕ ℝ", "((h_{mn;ℂ})) + ((h_{m;ℂ}))",
     {"m": 2, "n": 2},
     lambda m, n: _hsum(("h", m * n, "C"), ("h", m, "C"))),
    (8, "U(1)×Sp(n)×U(1)", "ℂ^{2n} ⊕ ℂ^{2n}", "ℝ ⊕ ℝ",
     "((h_{2n;ℂ})) + ((h_{2n;ℂ}))", {"n": 1},
     lambda n: _hsum(("h", 2 * n, "C"), ("h", 2 * n, "C"))),
    (9, "Sp(1)×Sp(n)×U(1)", "ℍ^n ⊕ ℍ^n", "Im ℍ ⊕ ℝ",
     "((h_{n;ℍ})) + ((h_{2n;ℂ}))", {"n": 1},
     lambda n: _hsum(("h", n, "H"), ("h", 2 * n, "C"))),
    (10, "Sp(1)×Sp(n)×Sp(1)", "ℍ^n ⊕ ℍ^n", "Im ℍ ⊕ Im ℍ",
     "((h_{n;ℍ})) + ((h_{n;ℍ}))", {"n": 1},
     lambda n: _hsum(("h", n, "H"), ("h", n, "H"))),
    (11, "Sp(n)×{Sp(1),U(1),1}×Sp(m)", "ℍ^n ⊕ ℍ^{n×m}", "Im ℍ",
     "((h_{n;ℍ})) + ℍ^{n×m}", {"n": 1, "m": 1},
     lambda n, m: _hsum(("h", n, "H"), ("ab", 4 * n * m))),
    (12, "Sp(n)×{Sp(1),U(1),1}", "ℍ^n ⊕ Re ℍ₀^{n×n}", "Im ℍ",
     "((h_{n;ℍ})) + Re ℍ₀^{n×n}", {"n": 2},
     lambda n: _hsum(("h", n, "H"), ("ab", 2 * n * n - n - 1))),
    (13, "Spin(7)×{SO(2),1}", "(ℝ⁸ = 𝕆) ⊕ ℝ^{7×2}", "ℝ^7 = Im 𝕆",
     "((h_{1;𝕆})) + ℝ^{7×2}", {},
     lambda: _hsum(("h", 1, "O"), ("ab", 14))),
    (14, "U(1)×Spin(7)", "ℂ⁷ ⊕ ℝ⁸", "ℝ", "((h_{7;ℂ})) + ℝ⁸", {},
     lambda: _hsum(("h", 7, "C"), ("ab", 8))),
    (15, "U(1)×Spin(7)", "ℂ⁸ ⊕ ℝ⁷", "ℝ", "((h_{8;ℂ})) + ℝ⁷", {},
     lambda: _hsum(("h", 8, "C"), ("ab", 7))),
    (16, "U(1)×U(1)×Spin(8)", "ℂ⁸₊ ⊕ ℂ⁸₋", "ℝ ⊕ ℝ",
     "((h_{8;ℂ})) + ((h_{8;ℂ}))", {},
     lambda: _hsum(("h", 8, "C"), ("h", 8, "C"))),
    (17, "U(1)×Spin(10)", "ℂ^16 ⊕ ℝ^10", "ℝ", "((h_{16;ℂ})) + ℝ^10", {},
     lambda: _hsum(("h", 16, "C"), ("ab", 10))),
    (18, "{SU(n),U(n),U(1)Sp(n/2)}×SU(2)", "ℂ^{n×2} ⊕ 𝔰𝔲(2)", "ℝ",
     "((h_{2n;ℂ})) + 𝔰𝔲(2)", {"n": 2},
     lambda n: _hsum(("h", 2 * n, "C"), ("ab", 3))),
    (19, "{SU(n),U(n),U(1)Sp(n/2)}×U(2)", "ℂ^{n×2} ⊕ ℂ²", "ℝ ⊕ ℝ",
     "((h_{2n;ℂ})) + ((h_{2;ℂ}))", {"n": 2},
     lambda n: _hsum(("h", 2 * n, "C"), ("h", 2, "C"))),
    (20, "{SU(n),U(n),U(1)Sp(n/2)}×SU(2)×{SU(m),U(m),U(1)Sp(m/2)}",
     "ℂ^{n×2} ⊕ ℂ^{2×m}", "ℝ ⊕ ℝ", "((h_{2n;ℂ})) + ((h_{2m;ℂ}))",
     {"n": 2, "m": 2},
     lambda n, m: _hsum(("h", 2 * n, "C"), ("h", 2 * m, "C"))),
    (21, "{SU(n),U(n),U(1)Sp(n/2)}×SU(2)×U(4)", "ℂ^{n×2} ⊕ ℂ^{2×4} ⊕ ℝ⁶",
     "ℝ ⊕ ℝ", "((h_{2n;ℂ})) + ((h_{8;ℂ})) + ℝ⁶", {"n": 2},
     lambda n: _hsum(("h", 2 * n, "C"), ("h", 8, "C"), ("ab", 6))),
    (22, "U(4)×U(2)", "ℝ⁶ ⊕ ℂ^{4×2} ⊕ 𝔰𝔲(2)", "ℝ",
     "ℝ⁶ + ((h_{8;ℂ})) + 𝔰𝔲(2)", {},
     lambda: _hsum(("ab", 6), ("h", 8, "C"), ("ab", 3))),
    (23, "U(4)×U(2)×U(4)", "ℝ⁶ ⊕ ℂ^{4×2} ⊕ ℂ^{2×4} ⊕ ℝ⁶", "ℝ ⊕ ℝ",
     "ℝ⁶ + ((h_{8;ℂ})) + ((h_{8;ℂ})) + ℝ⁶", {},
     lambda: _hsum(("ab", 6), ("h", 8, "C"), ("h", 8, "C"), ("ab", 6))),
    (24, "U(1)×U(1)×SU(4)", "ℂ⁴ ⊕ ℂ⁴ ⊕ ℝ⁶", "ℝ ⊕ ℝ",
     "((h_{4;ℂ})) + ((h_{4;ℂ})) + ℝ⁶", {},
     lambda: _hsum(("h", 4, "C"), ("h", 4, "C"), ("ab", 6))),
    (25, "(U(1)·)SU(4)(·SO(2))", "ℂ⁴ ⊕ ℝ^{6×2}", "ℝ",
     "((h_{4;ℂ})) + ℝ^{6×2}", {},
     lambda: _hsum(("h", 4, "C"), ("ab", 12))),
]


def _make_entries():
    entries = {}
    for row, K, v, z, notes, params, builder in _TABLE_21:
        entries[("2.1", row)] = CatalogEntry("2.1", row, K, v, z, notes,
                                             params, builder)
    for row, K, v, z, alg_desc, params, builder in _TABLE_22:
        entries[("2.2", row)] = CatalogEntry("2.2", row, K, v, z, alg_desc,
                                             params, builder)
    return entries


_ENTRIES = _make_entries()

assert sum(1 for key in _ENTRIES if key[0] == "2.1") == 23
assert sum(1 for key in _ENTRIES if key[0] == "2.2") == 25


def get_entry(table_id, row):
    try:
        return _ENTRIES[(str(table_id), int(row))]
    except KeyError:
        raise CatalogError(f"no row {row} in table {table_id}") from None


def list_entries(table_id=None, constructible=None):
    out = []
    for (tid, _row), entry in sorted(_ENTRIES.items()):
        if table_id is not None and tid != str(table_id):
            continue
        if constructible is not None and entry.constructible != constructible:
            continue
        out.append(entry)
    return out


_FAMILIES = "heisenberg:<n>:<C|H|O>, free2step:<n>:<R|C>, octdouble, abelian:<n>, table:<2.1|2.2>:<row>[:k=v...]"


def from_name(name):
    """Build an algebra from its CLI name, e.g. 'heisenberg:2:H'."""
    parts = name.split(":")
    family = parts[0]
    try:
        if family == "heisenberg" and len(parts) == 3:
            return heisenberg(int(parts[1]), parts[2])
        if family == "free2step" and len(parts) == 3:
            return free_two_step(int(parts[1]), parts[2])
        if family == "octdouble" and len(parts) == 1:
            return octonion_double()
        if family == "abelian" and len(parts) == 2:
            return abelian(int(parts[1]))
        if family == "table" and len(parts) >= 3:
            entry = get_entry(parts[1], int(parts[2]))
            overrides = {}
            for piece in parts[3:]:
                key, _, val = piece.partition("=")
                overrides[key] = val
            return entry.build(**overrides)
    except (ValueError, IndexError) as exc:
        if isinstance(exc, CatalogError):
            raise
        raise CatalogError(f"cannot parse algebra name {name!r}; "
                           f"known families: {_FAMILIES}") from exc
    raise CatalogError(f"unknown algebra name {name!r}; "
                       f"known families: {_FAMILIES}")
