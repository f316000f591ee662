"""Group-order conclusions assembled into reports.

The stabilizer of the distinguished module class has index equal to the
orbit size, so the full automorphism-group order of the fixed-point
algebra is (stabilizer order) x (orbit size) whenever the stabilizer order
itself is known.  For rootless even lattices within the isometry-search
rank bound that order is 2^(n-1) |O(L)| -- a derived formula, validated
against the two worked rank-<=2 cases and recorded as derived in every
report that uses it.  Lattices with roots get no order claim at all: the
stabilizer then contains continuous factors this tool does not model.
"""

from dataclasses import dataclass
from fractions import Fraction

from .constrb import FrameCosets, decompose, frame_cosets
from .errors import NotOdd, NotUnimodular, RankBoundExceeded
from .lattice import (Coset, Lattice, canonicalize_coset,
                      orthogonal_group_order, require_even, sublattice_gram)
from .orbit import FusionSpace, OrbitReport, fusion_space, module_orbit
from . import intmat

NOTE_STABILIZER = ("stabilizer order for rootless lattices uses the derived "
                   "formula 2^(rank-1) * |O(L)|")
NOTE_TWISTED = ("twisted class multiplicities use the derived index "
                "|(L meet 2L*) / 2L|")


@dataclass(frozen=True)
class AutReport:
    lattice: Lattice
    rank: int
    det: int
    root_count: int
    is_2_elementary: bool
    is_totally_even: bool
    frame_coset_set: FrameCosets
    decompositions: tuple
    orbit: OrbitReport
    fusion: FusionSpace          # None when a structural condition holds
    orbit_size: int
    index_over_stabilizer: int   # equals orbit_size (orbit-stabilizer)
    isometry_order: int          # |O(L)|, None above the rank bound
    stabilizer_order: int        # None with a reason when unavailable
    stabilizer_reason: str
    aut_order: int               # None when stabilizer_order is
    exceeds_stabilizer: bool
    notes: tuple

    @property
    def cond_a(self):
        return self.orbit.cond_a

    @property
    def cond_b(self):
        return self.orbit.cond_b

    @property
    def cond_c(self):
        return self.orbit.cond_c


def stabilizer_order(lat, bound=None):
    """Order of the distinguished-class stabilizer, or (None, reason).

    Returns (order, None) for rootless lattices within the isometry rank
    bound, else (None, "roots present" | "rank bound").
    """
    require_even(lat)
    if lat.root_count > 0:
        return None, "roots present"
    try:
        o = orthogonal_group_order(lat, bound)
    except RankBoundExceeded:
        return None, "rank bound"
    return 2 ** (lat.rank - 1) * o, None


def aut_order(lat, bound=None):
    """Full automorphism-group order, when the stabilizer order is known."""
    h, reason = stabilizer_order(lat, bound)
    if h is None:
        return None
    return h * module_orbit(lat).size


def analyze(lat, bound=None):
    """Run the full even-lattice pipeline and assemble an AutReport."""
    require_even(lat)
    fc = frame_cosets(lat)
    decs = decompose(lat)
    orbit = module_orbit(lat, decs)
    fusion = None
    if not (orbit.cond_a or orbit.cond_b or orbit.cond_c):
        fusion = fusion_space(lat, orbit)
    try:
        isometry = orthogonal_group_order(lat, bound)
    except RankBoundExceeded:
        isometry = None
    h, reason = stabilizer_order(lat, bound)
    notes = [NOTE_TWISTED]
    if h is not None:
        notes.append(NOTE_STABILIZER)
    q = orbit.size
    return AutReport(
        lattice=lat,
        rank=lat.rank,
        det=lat.det,
        root_count=lat.root_count,
        is_2_elementary=lat.is_2_elementary,
        is_totally_even=lat.is_totally_even,
        frame_coset_set=fc,
        decompositions=decs,
        orbit=orbit,
        fusion=fusion,
        orbit_size=q,
        index_over_stabilizer=q,
        isometry_order=isometry,
        stabilizer_order=h,
        stabilizer_reason=reason,
        aut_order=None if h is None else h * q,
        exceeds_stabilizer=q > 1,
        notes=tuple(notes),
    )


@dataclass(frozen=True)
class UnimodularVerdict:
    rank: int
    orbit_size: int
    index: int
    description: str


def unimodular_report(lat, bound=None):
    """Index of the stabilizer inside the full group, for det-1 lattices."""
    require_even(lat)
    if lat.det != 1:
        raise NotUnimodular("determinant is %d, not 1" % lat.det)
    rep = analyze(lat, bound)
    q = rep.orbit_size
    if q == 2:
        desc = "Aut = Stab . Z2 (index 2)"
    elif q == 1:
        desc = "Aut = Stab (index 1)"
    else:  # would contradict the unimodular classification
        desc = "Aut : Stab = %d" % q
    return UnimodularVerdict(rank=lat.rank, orbit_size=q, index=q,
                             description=desc)


@dataclass(frozen=True)
class OddReport:
    lattice: Lattice
    even_part: Lattice
    even_basis: tuple            # rows over the original basis
    odd_rep: tuple               # a vector of odd norm, original coordinates
    odd_rep_norm: Fraction
    odd_coset: Coset             # class of the odd rep over the even part
    odd_coset_in_orbit: bool
    even_report: AutReport
    aut_order: int               # 2 * aut(even)/orbit when computable


def even_sublattice(lat):
    """The index-2 even sublattice of an odd integral lattice.

    Returns (sublattice, basis rows over lat's basis, odd representative).
    """
    if lat.is_even:
        raise NotOdd("lattice is even; no odd part to split off")
    n = lat.rank
    odd_idx = [i for i in range(n) if lat.gram[i][i] % 2]
    i0 = odd_idx[0]
    rows = []
    for i in range(n):
        if i == i0:
            continue
        r = [0] * n
        r[i] = 1
        if i in odd_idx:
            r[i0] = 1
        rows.append(r)
    r = [0] * n
    r[i0] = 2
    rows.append(r)
    basis = intmat.hnf(rows, n)
    sub = Lattice(sublattice_gram(lat, basis))
    alpha = tuple(Fraction(1 if i == i0 else 0) for i in range(n))
    return sub, tuple(tuple(x) for x in basis), alpha


def odd_split(lat, bound=None):
    """Report on an odd lattice through its even sublattice.

    Verifies the split structurally (even part of index 2, doubled vectors
    inside it, integral odd norm), runs the even pipeline on the even part
    and, when the odd representative's class lies in the orbit and the even
    order is known, reports 2 * aut(even) / orbit as the total order.
    """
    sub, basis, alpha = even_sublattice(lat)
    n = lat.rank
    assert sub.is_even
    assert abs(intmat.det_bareiss([list(r) for r in basis])) == 2
    for i in range(n):
        doubled = [2 if j == i else 0 for j in range(n)]
        assert intmat.solve_integral([list(r) for r in basis], doubled) is not None
    alpha_norm = lat.norm(alpha)
    assert alpha_norm.denominator == 1 and int(alpha_norm) % 2 == 1

    binv = intmat.invert_fraction([list(r) for r in basis])
    alpha_sub = tuple(sum(Fraction(alpha[j]) * binv[j][i] for j in range(n))
                      for i in range(n))
    coset = canonicalize_coset(sub, alpha_sub)
    rep = analyze(sub, bound)
    in_orbit = coset in rep.frame_coset_set
    total = None
    if in_orbit and rep.aut_order is not None:
        total = 2 * rep.aut_order // rep.orbit_size
    return OddReport(lattice=lat, even_part=sub, even_basis=basis,
                     odd_rep=alpha, odd_rep_norm=alpha_norm, odd_coset=coset,
                     odd_coset_in_orbit=in_orbit, even_report=rep,
                     aut_order=total)
