"""Semidirect splits n = l1 (+) l2 certifying stepwise square integrability.

The three families with identically vanishing full Pfaffian each admit a
coordinate split where l1 = (center + v1) is an ideal carrying square
integrable representations and l2 is a small abelian complement.  The
split is verified by exact arithmetic, never assumed.
"""

from fractions import Fraction

from .algebra import bracket, subalgebra
from .catalog import free_two_step, octonion_double
from .pfaffian import is_square_integrable


class StepwiseDecomposition:
    """A coordinate split of the basis into l1 and l2 index sets."""

    __slots__ = ("algebra", "l1_indices", "l2_indices", "verification")

    def __init__(self, algebra, l1_indices, l2_indices, verification=None):
        l1 = tuple(sorted(l1_indices))
        l2 = tuple(sorted(l2_indices))
        if set(l1) & set(l2):
            raise ValueError("l1 and l2 overlap")
        if set(l1) | set(l2) != set(range(algebra.dim)):
            raise ValueError("l1 and l2 do not partition the basis")
        self.algebra = algebra
        self.l1_indices = l1
        self.l2_indices = l2
        self.verification = dict(verification) if verification else None

    def l1_subalgebra(self, name=""):
        return subalgebra(self.algebra, self.l1_indices,
                          name=name or (self.algebra.name + ".l1"))

    def as_dict(self):
        return {
            "algebra": self.algebra.name,
            "l1_indices": list(self.l1_indices),
            "l2_indices": list(self.l2_indices),
            "verification": dict(self.verification)
            if self.verification is not None else None,
        }


def _unit_fracs(dim, idx):
    vec = [Fraction(0)] * dim
    vec[idx] = Fraction(1)
    return vec


def verify(dec):
    """Exact verification flags for a candidate split.

    l1_is_ideal        [n, l1] inside span(l1)
    direct_sum         index sets partition the basis (by construction)
    l2_abelian_subalgebra   [l2, l2] = 0
    l1_square_integrable    Pf of l1 modulo its computed center != 0
    """
    alg = dec.algebra
    dim = alg.dim
    l1 = dec.l1_indices
    l2 = dec.l2_indices
    l1_set = set(l1)

    # l1 is a coordinate subspace, so span membership is a support check
    ideal = True
    for i in range(dim):
        for j in l1:
            br = bracket(alg, _unit_fracs(dim, i), _unit_fracs(dim, j))
            if any(br[k] != 0 for k in range(dim) if k not in l1_set):
                ideal = False
                break
        if not ideal:
            break

    abelian = True
    for a in range(len(l2)):
        for b in range(a + 1, len(l2)):
            br = bracket(alg, _unit_fracs(dim, l2[a]), _unit_fracs(dim, l2[b]))
            if any(br):
                abelian = False
                break
        if not abelian:
            break

    sqint = False
    if ideal:
        sub = dec.l1_subalgebra()
        sqint = bool(is_square_integrable(sub))

    flags = {
        "l1_is_ideal": ideal,
        "direct_sum": True,   # enforced by the constructor
        "l2_abelian_subalgebra": abelian,
        "l1_square_integrable": sqint,
    }
    dec.verification = flags
    return flags


def decompose(case_tag, n=None):
    """The documented split for one of the three exceptional families.

    case1: free_two_step(n, R), n odd; drop the last generator.
    case6: free_two_step(n, C), n odd; drop both real coordinates of
           the last complex generator.
    case3: octonion_double; l2 is the line through the seventh
           imaginary unit on the second summand.
    """
    tag = case_tag.lower().replace("_", "")
    if tag in ("case1", "1"):
        n = 3 if n is None else int(n)
        if n % 2 == 0 or n < 3:
            raise ValueError("case1 requires odd n >= 3")
        alg = free_two_step(n, "R")
        dropped = alg.complement_indices[-1:]
    elif tag in ("case6", "6"):
        n = 3 if n is None else int(n)
        if n % 2 == 0 or n < 3:
            raise ValueError("case6 requires odd n >= 3")
        alg = free_two_step(n, "C")
        dropped = alg.complement_indices[-2:]
    elif tag in ("case3", "3"):
        if n is not None:
            raise ValueError("case3 takes no size parameter")
        alg = octonion_double()
        dropped = alg.complement_indices[-1:]
    else:
        raise ValueError(f"unsupported case tag {case_tag!r}; "
                         "expected case1, case6, or case3")
    l2 = set(dropped)
    l1 = [i for i in range(alg.dim) if i not in l2]
    dec = StepwiseDecomposition(alg, l1, sorted(l2))
    verify(dec)
    return dec


def find_codim_split(alg):
    """Search coordinate-aligned complements for a verified split.

    Candidates drop one complement coordinate, then two; within each
    codimension the last coordinates are tried first (the documented
    splits drop trailing generators).  Returns None when no candidate
    passes; refuses when no split is needed.
    """
    if is_square_integrable(alg):
        raise ValueError("not applicable: algebra is already square "
                         "integrable without a split")
    comp = list(alg.complement_indices)
    candidates = [(i,) for i in reversed(comp)]
    pairs = []
    for a in range(len(comp)):
        for b in range(a + 1, len(comp)):
            pairs.append((comp[a], comp[b]))
    candidates.extend(reversed(pairs))

    for dropped in candidates:
        l2 = set(dropped)
        l1 = [i for i in range(alg.dim) if i not in l2]
        dec = StepwiseDecomposition(alg, l1, sorted(l2))
        try:
            flags = verify(dec)
        except ValueError:
            continue
        if all(flags.values()):
            return dec
    return None
