"""Construction B in both directions.

Forward: build the lattice generated by halved codewords of a doubly even
binary code over an orthogonal norm-2 frame, together with all sums of two
frame vectors.  Backward: detect such lattices through their distinguished
cosets -- an order-<=2 coset of the dual whose norm-2 vector count reaches
2n + |roots| always contains a frame, and the lattice is Construction B
exactly when some coset reaches the bound.  The count can never exceed the
bound; we assert that on every coset we touch, which turns a theoretical
equality into a free runtime oracle.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from . import intmat
from .codes import BinaryCode, make_code
from .errors import (CosetNotInR, EqualityViolated, Incomplete, NoSignPattern,
                     NotDoublyEven)
from .lattice import (Coset, Lattice, canonicalize_coset, count_norm,
                      require_even, same_lattice, vectors_of_norm)


@dataclass(frozen=True)
class FrameCosets:
    """Cosets whose norm-2 count meets the bound 2n + |roots| exactly."""
    cosets: tuple
    counts: tuple
    bound: int

    def __len__(self):
        return len(self.cosets)

    def __contains__(self, coset):
        return coset in self.cosets


@dataclass(frozen=True)
class FrameDecomposition:
    """A Construction-B witness: coset, orthogonal frame, code, signs.

    Rebuilding the lattice from (code, signs * frame) reproduced the
    original exactly; extract_code enforces that before returning.
    """
    coset: Coset
    frame: tuple
    code: BinaryCode
    signs: tuple


def construction_b_generators(frame, code, signs=None):
    """Generators of the Construction-B lattice over the given frame.

    The frame vectors may live in any coordinate system; generators are
    the halved signed codeword sums plus the span of all two-frame-vector
    sums (for which signs are irrelevant).
    """
    n = len(frame)
    signs = tuple([1] * n) if signs is None else tuple(signs)
    gens = []
    for word in code.basis:
        acc = [Fraction(0)] * len(frame[0])
        for i in range(n):
            if (word >> i) & 1:
                s = signs[i]
                acc = [a + s * Fraction(c) for a, c in zip(acc, frame[i])]
        gens.append(tuple(a / 2 for a in acc))
    gens.append(tuple(2 * Fraction(c) for c in frame[0]))
    for i in range(n - 1):
        gens.append(tuple(Fraction(a) + Fraction(b)
                          for a, b in zip(frame[i], frame[i + 1])))
    return gens


def build_construction_b(code, signs=None):
    """Lattice of a doubly even code over the standard norm-2 frame.

    Returns (lattice, frame_coords): the Gram matrix of the HNF basis of
    the generators (ambient form 2*I), and the frame vectors written in
    that basis as dual vectors.
    """
    if not code.is_doubly_even:
        raise NotDoublyEven("Construction B needs a doubly even code")
    n = code.length
    frame = [tuple(Fraction(1 if j == i else 0) for j in range(n))
             for i in range(n)]
    gens = construction_b_generators(frame, code, signs)
    rows, den = intmat.scaled_integer_rows(gens)
    basis = intmat.hnf(rows, n)
    if len(basis) != n:
        raise Incomplete("construction generators did not span full rank")
    bfrac = [[Fraction(x, den) for x in row] for row in basis]
    gram = [[2 * sum(bfrac[i][k] * bfrac[j][k] for k in range(n))
             for j in range(n)] for i in range(n)]
    if any(e.denominator != 1 for row in gram for e in row):
        raise NotDoublyEven("generators produced a non-integral form")
    lat = Lattice([[int(e) for e in row] for row in gram])
    # ambient frame vector u_i has basis coordinates u_i * B^-1 (row i)
    binv = intmat.invert_fraction(bfrac)
    frame_coords = [tuple(binv[i]) for i in range(n)]
    return lat, frame_coords


@lru_cache(maxsize=None)
def frame_cosets(lat):
    """Order-<=2 dual cosets meeting the norm-2 bound 2n + |roots|.

    The count is asserted to equal the bound exactly; an excess would
    contradict the frame-extraction argument and signals a bug.
    """
    require_even(lat)
    bound = 2 * lat.rank + lat.root_count
    kept = []
    counts = []
    for coset in lat.discriminant.torsion2_reps:
        c = count_norm(lat, coset, 2)
        if c >= bound:
            if c > bound:
                raise EqualityViolated(
                    "coset %s has %d norm-2 vectors, bound %d"
                    % (coset.label(), c, bound))
            kept.append(coset)
            counts.append(c)
    return FrameCosets(cosets=tuple(kept), counts=tuple(counts), bound=bound)


def is_construction_b(lat):
    """True iff some coset meets the bound; re-verified by decomposing."""
    fc = frame_cosets(lat)
    if not fc.cosets:
        return False
    extract_code(lat, extract_frame(lat, fc.cosets[0]), fc.cosets[0])
    return True


def _scaled(vecs):
    """Common-denominator integer views of rational vectors: (rows, den)."""
    den = 1
    for v in vecs:
        for c in v:
            d = Fraction(c).denominator
            den = den * d // _gcd_int(den, d)
    rows = [[int(Fraction(c) * den) for c in v] for v in vecs]
    return rows, den


def _gcd_int(a, b):
    while b:
        a, b = b, a % b
    return a


def _gram_times_int(gram, y):
    n = len(y)
    return [sum(gram[i][j] * y[j] for j in range(n)) for i in range(n)]


def extract_frame(lat, coset):
    """Greedy orthogonal frame inside a qualifying coset.

    Picks the lexicographically smallest norm-2 vector orthogonal to the
    ones already chosen; guaranteed to reach full rank for cosets meeting
    the bound.  Orthogonality is tested on integer-scaled coordinates.
    The membership precondition is checked on the coset itself (its count
    against the bound), not by sweeping the whole torsion subgroup.
    """
    require_even(lat)
    bound = 2 * lat.rank + lat.root_count
    count = count_norm(lat, coset, 2)
    if not coset.order2 or count < bound:
        raise CosetNotInR("coset %s does not meet the norm-2 bound"
                          % coset.label())
    if count > bound:
        raise EqualityViolated(
            "coset %s has %d norm-2 vectors, bound %d"
            % (coset.label(), count, bound))
    vecs = vectors_of_norm(lat, coset, 2)
    ys, _ = _scaled(vecs)
    gram = [list(r) for r in lat.gram]
    n = lat.rank
    frame = []
    chosen_gy = []
    for v, y in zip(vecs, ys):
        if all(sum(y[j] * gy[j] for j in range(n)) == 0 for gy in chosen_gy):
            frame.append(v)
            chosen_gy.append(_gram_times_int(gram, y))
            if len(frame) == n:
                return tuple(frame)
    raise Incomplete("frame extraction stalled at %d of %d vectors"
                     % (len(frame), lat.rank))


def _lexmin_f2_solution(equations, nvars):
    """Lexicographically smallest 0/1 solution of a linear system over F_2.

    equations: list of (mask, rhs).  Returns the assignment tuple or None.
    Fix variables left to right, preferring 0, keeping the residual system
    consistent (checked by elimination).
    """

    def consistent(eqs):
        rows = list(eqs)
        pivots = []
        for mask, rhs in rows:
            for pmask, prhs in pivots:
                if mask & (pmask & -pmask):
                    mask ^= pmask
                    rhs ^= prhs
            if mask == 0:
                if rhs:
                    return False
            else:
                pivots.append((mask, rhs))
        return True

    eqs = [(m, r) for m, r in equations]
    if not consistent(eqs):
        return None
    assign = []
    for i in range(nvars):
        bit = 1 << i
        for val in (0, 1):
            trial = []
            for mask, rhs in eqs:
                if mask & bit:
                    trial.append((mask & ~bit, rhs ^ val))
                else:
                    trial.append((mask, rhs))
            if consistent(trial):
                assign.append(val)
                eqs = trial
                break
        else:
            return None
    return tuple(assign)


def extract_code(lat, frame, coset):
    """Recover the code and sign pattern of an extracted frame.

    The code is the span of the mod-2 frame pairings of the generators of
    L extended by the coset representative.  The sign pattern is the
    lexicographically first one whose halved-codeword generators land in
    the lattice (a linear condition over F_2); the rebuild is then checked
    exactly against the lattice basis.
    """
    n = lat.rank
    rep = coset.rep
    scaled, q = _scaled(list(frame) + [rep])
    yframe, yrep = scaled[:n], scaled[n]
    gram = [list(r) for r in lat.gram]
    gy = [_gram_times_int(gram, y) for y in yframe]

    # pairing of e_i with the j-th basis vector is gy[i][j]/q, with the
    # coset representative it is <yrep, gy[i]>/q^2; both are integers.
    words = []
    for j in range(n):
        word = 0
        for i in range(n):
            p, r = divmod(gy[i][j], q)
            if r:
                raise Incomplete("frame pairing was not integral")
            if p % 2:
                word |= 1 << i
        words.append(word)
    word = 0
    for i in range(n):
        p, r = divmod(sum(yrep[j] * gy[i][j] for j in range(n)), q * q)
        if r:
            raise Incomplete("frame pairing was not integral")
        if p % 2:
            word |= 1 << i
    words.append(word)
    code = make_code(n, words)

    # sign conditions: for each basis codeword c, the halved sum over c
    # of +/-frame vectors lies in L iff the flip count on c has a forced
    # parity; determine that parity from the unsigned sum.
    equations = []
    for cword in code.basis:
        acc = [0] * n
        for i in range(n):
            if (cword >> i) & 1:
                acc = [a + y for a, y in zip(acc, yframe[i])]
        if all(a % (2 * q) == 0 for a in acc):
            parity = 0
        elif all((a - 2 * r) % (2 * q) == 0 for a, r in zip(acc, yrep)):
            parity = 1
        else:
            raise NoSignPattern("no flip parity embeds codeword generator")
        equations.append((cword, parity))
    flips = _lexmin_f2_solution(equations, n)
    if flips is None:
        raise NoSignPattern("sign parity system is inconsistent")
    signs = tuple(-1 if f else 1 for f in flips)

    rebuilt = construction_b_generators(frame, code, signs)
    unit = [tuple(Fraction(1 if j == i else 0) for j in range(n))
            for i in range(n)]
    if not same_lattice(rebuilt, unit):
        raise NoSignPattern("rebuilt lattice differs from the original")
    return FrameDecomposition(coset=coset, frame=tuple(frame), code=code,
                              signs=signs)


@lru_cache(maxsize=None)
def decompose(lat):
    """One FrameDecomposition per qualifying coset, in canonical order."""
    fc = frame_cosets(lat)
    return tuple(extract_code(lat, extract_frame(lat, c), c)
                 for c in fc.cosets)


@dataclass(frozen=True)
class StructuralCosets:
    """Quarter-frame-sum cosets marking the twisted-orbit conditions."""
    twist_plus: Coset
    twist_minus: Coset


def structural_cosets(lat, dec):
    """The quarter-sum coset and its first-frame-vector offset, when defined.

    plus = (sum_i s_i e_i)/4, minus = plus - s_1 e_1; each is returned as a
    coset only when it lies in the dual and has order <= 2, which happens
    exactly when the code contains the all-one word.
    """
    n = lat.rank
    quarter = [Fraction(0)] * n
    for s, e in zip(dec.signs, dec.frame):
        quarter = [a + s * c for a, c in zip(quarter, e)]
    plus_vec = tuple(a / 4 for a in quarter)
    minus_vec = tuple(a - dec.signs[0] * c
                      for a, c in zip(plus_vec, dec.frame[0]))

    def classify(vec):
        if not lat.in_dual(vec):
            return None
        if not lat.in_lattice(tuple(2 * x for x in vec)):
            return None
        return canonicalize_coset(lat, vec)

    return StructuralCosets(twist_plus=classify(plus_vec),
                            twist_minus=classify(minus_vec))
