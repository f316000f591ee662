"""Module-class bookkeeping and the orbit of the distinguished class.

Irreducible module classes of the fixed-point algebra attached to an even
lattice come in three shapes: plain untwisted classes [mu] for dual cosets
identified with their negatives, signed untwisted classes [lambda]^+/- for
order-<=2 cosets, and twisted classes [chi]^+/-, counted per sign but never
individually constructed.  The orbit of [0]^- consists of [0]^- itself,
both signed classes over every coset meeting the norm-2 bound, and -- only
when one of the three structural conditions below holds -- all twisted
classes of one sign.
"""

from dataclasses import dataclass

from . import intmat
from .codes import rm14_subcode
from .constrb import FrameCosets, decompose, frame_cosets, structural_cosets
from .errors import ConditionABC, CrossCheckFailed, NotPowerOfTwo
from .lattice import Coset, require_even


@dataclass(frozen=True)
class ModuleClass:
    kind: str              # "plain" | "signed" | "twisted"
    coset: Coset = None    # for plain/signed
    sign: str = None       # "+" or "-" for signed/twisted
    count: int = 1         # multiplicity; twisted classes are pooled

    def label(self):
        if self.kind == "plain":
            return "[%s]" % self.coset.label()
        if self.kind == "signed":
            return "[%s]^%s" % (self.coset.label(), self.sign)
        return "[chi]^%s x%d" % (self.sign, self.count)


@dataclass(frozen=True)
class ModuleCounts:
    untwisted_signed: int
    untwisted_plain: int
    twisted: int

    @property
    def total(self):
        return self.untwisted_signed + self.untwisted_plain + self.twisted


@dataclass(frozen=True)
class ConditionWitness:
    holds: bool
    coset: Coset = None
    detail: str = ""


@dataclass(frozen=True)
class OrbitReport:
    classes: tuple
    frame_coset_set: FrameCosets
    twisted_sign: str            # "+", "-" or None
    twisted_count: int           # 0 when no twisted classes in the orbit
    cond_a: bool                 # length-8 construction with all-one word
    cond_b: bool                 # length-16 construction with RM(1,4) subcode
    cond_c: bool                 # the even unimodular rank-8 lattice

    @property
    def size(self):
        return 1 + 2 * len(self.frame_coset_set.cosets) + self.twisted_count


def twisted_character_count(lat):
    """Number of twisted classes per sign: the index |(L meet 2L*)/2L|.

    Computed by exact integer linear algebra: a basis of
    {v integral : G v == 0 mod 2} via a kernel-and-project HNF, then the
    index of 2L inside it.
    """
    require_even(lat)
    n = lat.rank
    g = [list(r) for r in lat.gram]
    # rows (v | w) with v*G + 2w == 0  <=>  v*G == 0 mod 2
    stacked = g + [[2 if i == j else 0 for j in range(n)] for i in range(n)]
    ker = intmat.left_kernel(stacked, n)
    proj = intmat.hnf([row[:n] for row in ker], n)
    det = intmat.det_bareiss(proj)
    return (2 ** n) // abs(det)


def twisted_character_count_mod2(lat):
    """Cross-check route: 2^(n - rank of G over F_2)."""
    require_even(lat)
    n = lat.rank
    rows = []
    for r in lat.gram:
        w = 0
        for j, x in enumerate(r):
            if x % 2:
                w |= 1 << j
        if w:
            rows.append(w)
    rank = 0
    pivots = []
    for w in rows:
        for p in pivots:
            if w & (p & -p):
                w ^= p
        if w:
            pivots.append(w)
            rank += 1
    return 2 ** (n - rank)


def classify_modules(lat):
    """Counts of the three module-class shapes."""
    require_even(lat)
    disc = lat.discriminant
    torsion2 = len(disc.torsion2_reps)
    signed = 2 * torsion2
    plain = (disc.order - torsion2) // 2
    twisted = 2 * twisted_character_count(lat)
    return ModuleCounts(untwisted_signed=signed, untwisted_plain=plain,
                        twisted=twisted)


def condition_a(lat, decs=None):
    """Construction from a length-8 doubly even code with the all-one word.

    Checked frame by frame over every qualifying coset; each extracted
    code's all-one membership is cross-checked against the equivalent
    quarter-sum-offset coset test, and a hit implies the lattice is
    2-elementary totally even.
    """
    require_even(lat)
    if lat.rank != 8:
        return ConditionWitness(False, detail="rank != 8")
    decs = decompose(lat) if decs is None else decs
    fc = frame_cosets(lat)
    hit = None
    for dec in decs:
        has_allone = dec.code.contains_all_one
        sc = structural_cosets(lat, dec)
        marker_in = sc.twist_minus is not None and sc.twist_minus in fc
        if has_allone != marker_in:
            raise CrossCheckFailed(
                "all-one membership and quarter-offset coset disagree")
        if has_allone and hit is None:
            hit = dec
    if hit is not None and not (lat.is_2_elementary and lat.is_totally_even):
        raise CrossCheckFailed(
            "all-one construction on a lattice that is not "
            "2-elementary totally even")
    if hit is None:
        return ConditionWitness(False, detail="no frame code has the all-one word")
    return ConditionWitness(True, coset=hit.coset, detail="all-one codeword")


def condition_b(lat, decs=None):
    """Construction from a length-16 doubly even code with an RM(1,4) subcode.

    The witness subcode test is cross-checked against the quarter-sum
    coset criterion on every decomposition.
    """
    require_even(lat)
    if lat.rank != 16:
        return ConditionWitness(False, detail="rank != 16")
    decs = decompose(lat) if decs is None else decs
    fc = frame_cosets(lat)
    hit = None
    for dec in decs:
        witness = rm14_subcode(dec.code)
        sc = structural_cosets(lat, dec)
        marker_in = sc.twist_plus is not None and sc.twist_plus in fc
        if (witness is not None) != marker_in:
            raise CrossCheckFailed(
                "Reed-Muller subcode and quarter-sum coset disagree")
        if witness is not None and hit is None:
            hit = dec
    if hit is None:
        return ConditionWitness(False, detail="no frame code has an RM(1,4) subcode")
    return ConditionWitness(True, coset=hit.coset, detail="RM(1,4) subcode")


def condition_c(lat):
    """The unique even unimodular rank-8 lattice (by rank/det/evenness)."""
    require_even(lat)
    holds = lat.rank == 8 and lat.det == 1
    return ConditionWitness(holds, detail="rank 8, determinant 1"
                            if holds else "not even unimodular of rank 8")


def module_orbit(lat, decs=None):
    """The orbit of the distinguished class [0]^- as an OrbitReport."""
    require_even(lat)
    fc = frame_cosets(lat)
    if decs is None:
        decs = decompose(lat) if fc.cosets else ()
    ca = condition_a(lat, decs)
    cb = condition_b(lat, decs)
    cc = condition_c(lat)

    classes = [ModuleClass(kind="signed", coset=lat.trivial_coset, sign="-")]
    for coset in fc.cosets:
        classes.append(ModuleClass(kind="signed", coset=coset, sign="+"))
        classes.append(ModuleClass(kind="signed", coset=coset, sign="-"))

    twisted_sign = None
    twisted_count = 0
    if ca.holds or cc.holds:
        twisted_sign = "-"
    elif cb.holds:
        twisted_sign = "+"
    if twisted_sign is not None:
        twisted_count = twisted_character_count(lat)
        classes.append(ModuleClass(kind="twisted", sign=twisted_sign,
                                   count=twisted_count))
    return OrbitReport(classes=tuple(classes), frame_coset_set=fc,
                       twisted_sign=twisted_sign, twisted_count=twisted_count,
                       cond_a=ca.holds, cond_b=cb.holds, cond_c=cc.holds)


@dataclass(frozen=True)
class FusionSpace:
    size: int
    dim: int
    gl_order: int


def gl2_order(dim):
    order = 1
    for i in range(dim):
        order *= 2 ** dim - 2 ** i
    return order


def fusion_space(lat, orbit=None):
    """Size data of {[0]^+} plus the orbit, as an elementary abelian 2-group.

    Only defined when none of the three structural conditions holds; the
    size 2 + 2|R| must then be a power of two, asserted loudly.
    """
    orbit = module_orbit(lat) if orbit is None else orbit
    if orbit.cond_a or orbit.cond_b or orbit.cond_c:
        raise ConditionABC(
            "fusion 2-group route needs all structural conditions to fail")
    size = 2 + 2 * len(orbit.frame_coset_set.cosets)
    if size & (size - 1):
        raise NotPowerOfTwo("fusion set size %d is not a power of two" % size)
    dim = size.bit_length() - 1
    return FusionSpace(size=size, dim=dim, gl_order=gl2_order(dim))
