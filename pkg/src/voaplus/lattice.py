"""Integral positive-definite lattices in exact arithmetic.

A lattice is its Gram matrix; every vector in the API is a coordinate tuple
over the lattice basis.  Lattice vectors have integer coordinates, dual
vectors rational ones (x lies in the dual iff G x is integral).  Cosets of
the lattice inside its dual carry a canonical representative derived from
the Smith form of the Gram matrix, so equality of cosets is equality of
representatives.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache, cached_property
from itertools import product

from . import intmat, kernels
from .errors import (NormNegative, NotDualVector, NotEven, NotIntegral,
                     NotPositiveDefinite, NotSymmetric, RankBoundExceeded)

DEFAULT_RANK_BOUND = 4


def _as_fraction_tuple(vec):
    return tuple(Fraction(x) for x in vec)


@dataclass(frozen=True)
class Coset:
    """An element of dual/lattice with its canonical representative."""
    rep: tuple
    order2: bool

    @property
    def is_trivial(self):
        return all(c == 0 for c in self.rep)

    def label(self):
        return "(" + ", ".join(str(c) for c in self.rep) + ")"


class Lattice:
    """Positive-definite integral lattice given by its Gram matrix."""

    def __init__(self, gram):
        rows = [list(r) for r in gram]
        n = len(rows)
        if n == 0 or any(len(r) != n for r in rows):
            raise NotPositiveDefinite("gram matrix must be square and nonempty")
        for r in rows:
            for x in r:
                if not isinstance(x, int) and not (
                        isinstance(x, Fraction) and x.denominator == 1):
                    raise NotIntegral("gram entries must be integers: %r" % (x,))
        rows = [[int(x) for x in r] for r in rows]
        for i in range(n):
            for j in range(i + 1, n):
                if rows[i][j] != rows[j][i]:
                    raise NotSymmetric("gram[%d][%d] != gram[%d][%d]" % (i, j, j, i))
        if not intmat.leading_minors_positive(rows):
            raise NotPositiveDefinite("gram matrix is not positive definite")
        self._gram = tuple(tuple(r) for r in rows)
        self._rank = n

    @property
    def gram(self):
        return self._gram

    @property
    def rank(self):
        return self._rank

    def __eq__(self, other):
        return isinstance(other, Lattice) and self._gram == other._gram

    def __hash__(self):
        return hash(self._gram)

    def __repr__(self):
        return "Lattice(%r)" % (list(map(list, self._gram)),)

    @cached_property
    def det(self):
        return intmat.det_bareiss([list(r) for r in self._gram])

    @cached_property
    def is_even(self):
        return all(self._gram[i][i] % 2 == 0 for i in range(self._rank))

    @property
    def is_odd(self):
        return not self.is_even

    @cached_property
    def dual_gram(self):
        """Gram matrix of the dual basis: the exact inverse of gram."""
        return tuple(tuple(r) for r in intmat.invert_fraction(self._gram))

    def inner(self, u, v):
        g = self._gram
        n = self._rank
        return sum(Fraction(u[i]) * g[i][j] * Fraction(v[j])
                   for i in range(n) for j in range(n))

    def norm(self, v):
        return self.inner(v, v)

    def gram_times(self, v):
        g = self._gram
        return tuple(sum(g[i][j] * Fraction(v[j]) for j in range(self._rank))
                     for i in range(self._rank))

    def in_lattice(self, v):
        return all(Fraction(x).denominator == 1 for x in v)

    def in_dual(self, v):
        return all(x.denominator == 1 for x in self.gram_times(v))

    @cached_property
    def discriminant(self):
        return DiscriminantGroup(self)

    @property
    def trivial_coset(self):
        return self.discriminant.trivial

    @cached_property
    def root_count(self):
        return len(vectors_of_norm(self, None, 2))

    @cached_property
    def is_2_elementary(self):
        return all(d in (1, 2) for d in self.discriminant.invariant_factors)

    @cached_property
    def is_totally_even(self):
        """True when both the lattice and its sqrt2-rescaled dual are even."""
        if not self.is_even:
            return False
        dg = self.dual_gram
        n = self._rank
        for i in range(n):
            if dg[i][i].denominator != 1:
                return False
            for j in range(i + 1, n):
                if (2 * dg[i][j]).denominator != 1:
                    return False
        return True


class DiscriminantGroup:
    """Structure of dual/lattice from the Smith form of the Gram matrix.

    With U * G * V = diag(d), the map x -> U(Gx) mod d identifies
    dual/lattice with the direct sum of Z/d_i; the canonical representative
    of a class a is G^-1 U^-1 a with each a_i reduced into [0, d_i).
    """

    def __init__(self, lat):
        self.lattice = lat
        diag, u, uinv = intmat.smith_with_left([list(r) for r in lat.gram])
        self.invariant_factors = tuple(diag)
        self._u = u
        self._uinv = uinv

    @property
    def order(self):
        p = 1
        for d in self.invariant_factors:
            p *= d
        return p

    def element_of(self, vec):
        """Group element (a_i mod d_i) of a dual vector."""
        gv = self.lattice.gram_times(vec)
        if any(x.denominator != 1 for x in gv):
            raise NotDualVector("vector is not in the dual lattice")
        y = [int(x) for x in gv]
        n = self.lattice.rank
        return tuple(
            sum(self._u[i][j] * y[j] for j in range(n)) % self.invariant_factors[i]
            for i in range(n))

    def rep_of_element(self, a):
        n = self.lattice.rank
        y = [sum(self._uinv[i][j] * a[j] for j in range(n)) for i in range(n)]
        dg = self.lattice.dual_gram
        return tuple(sum(dg[i][j] * y[j] for j in range(n)) for i in range(n))

    def coset_of_element(self, a):
        d = self.invariant_factors
        a = tuple(ai % di for ai, di in zip(a, d))
        order2 = all((2 * ai) % di == 0 for ai, di in zip(a, d))
        return Coset(rep=self.rep_of_element(a), order2=order2)

    def coset_of(self, vec):
        return self.coset_of_element(self.element_of(vec))

    @cached_property
    def trivial(self):
        zero = tuple([0] * self.lattice.rank)
        return self.coset_of_element(zero)

    @cached_property
    def torsion2_reps(self):
        """All cosets of order <= 2, the trivial one included, in canonical order."""
        choices = [(0, d // 2) if d % 2 == 0 else (0,)
                   for d in self.invariant_factors]
        cosets = [self.coset_of_element(a) for a in product(*choices)]
        return tuple(sorted(cosets, key=lambda c: c.rep))


def make_lattice(gram):
    """Validate a Gram matrix and wrap it as a Lattice."""
    return Lattice(gram)


def dual_and_discriminant(lat):
    return lat.discriminant


def canonicalize_coset(lat, vec):
    """Canonical Coset of an arbitrary dual vector."""
    return lat.discriminant.coset_of(_as_fraction_tuple(vec))


@lru_cache(maxsize=None)
def _cached_offsets(lat, rep, m):
    ginv_diag = [float(lat.dual_gram[i][i]) for i in range(lat.rank)]
    return tuple(kernels.enumerate_offsets(
        [list(r) for r in lat.gram], list(rep), m, ginv_diag))


def vectors_of_norm(lat, coset, m):
    """Every dual vector v in the coset with <v, v> == m, lex-sorted.

    ``coset`` may be a Coset or None for the lattice itself.  Enumeration is
    float-pruned but every returned vector passed an exact norm identity.
    """
    m = Fraction(m)
    if m < 0:
        raise NormNegative("norm target must be >= 0")
    rep = coset.rep if coset is not None else tuple([Fraction(0)] * lat.rank)
    rep = _as_fraction_tuple(rep)
    offsets = _cached_offsets(lat, rep, m)
    return [tuple(Fraction(x) + r for x, r in zip(off, rep)) for off in offsets]


def count_norm(lat, coset, m):
    return len(vectors_of_norm(lat, coset, m))


def orthogonal_group_order(lat, bound=None):
    """Order of the isometry group O(L) by depth-first backtracking.

    Candidate images of basis vector i are the vectors whose norm equals
    gram[i][i]; partial assignments must reproduce the Gram rows exactly.
    Refuses ranks above ``bound`` (default 4) since the search is
    exponential in principle.
    """
    bound = DEFAULT_RANK_BOUND if bound is None else bound
    n = lat.rank
    if n > bound:
        raise RankBoundExceeded(
            "rank %d exceeds the isometry search bound %d" % (n, bound))
    cands = []
    for i in range(n):
        vs = vectors_of_norm(lat, None, lat.gram[i][i])
        cands.append([tuple(int(c) for c in v) for v in vs])
    order = sorted(range(n), key=lambda i: len(cands[i]))
    g = lat.gram

    inner = {}

    def pair(u, v):
        key = (u, v)
        got = inner.get(key)
        if got is None:
            got = sum(u[i] * g[i][j] * v[j] for i in range(n) for j in range(n))
            inner[key] = got
        return got

    count = 0
    chosen = []

    def search(t):
        nonlocal count
        if t == n:
            count += 1
            return
        it = order[t]
        for v in cands[it]:
            ok = True
            for s in range(t):
                if pair(chosen[s], v) != g[order[s]][it]:
                    ok = False
                    break
            if ok:
                chosen.append(v)
                search(t + 1)
                chosen.pop()

    search(0)
    return count


def same_lattice(gens_a, gens_b):
    """True iff two full-rank generator lists span the same Z-module."""
    a = [_as_fraction_tuple(v) for v in gens_a]
    b = [_as_fraction_tuple(v) for v in gens_b]
    return intmat.same_row_lattice(a, b)


def direct_sum(lat_a, lat_b):
    na, nb = lat_a.rank, lat_b.rank
    gram = [[0] * (na + nb) for _ in range(na + nb)]
    for i in range(na):
        for j in range(na):
            gram[i][j] = lat_a.gram[i][j]
    for i in range(nb):
        for j in range(nb):
            gram[na + i][na + j] = lat_b.gram[i][j]
    return Lattice(gram)


def rescale(lat, k):
    """Multiply the Gram matrix by a positive integer k (k=2: sqrt2-scaling)."""
    if not isinstance(k, int) or k <= 0:
        raise NotIntegral("rescale factor must be a positive integer")
    return Lattice([[k * x for x in row] for row in lat.gram])


def is_2_elementary(lat):
    return lat.is_2_elementary


def is_totally_even(lat):
    return lat.is_totally_even


def require_even(lat):
    if not lat.is_even:
        raise NotEven("operation requires an even lattice")


def sublattice_gram(lat, basis_rows):
    """Gram matrix of the sublattice spanned by integer rows over lat's basis."""
    b = [list(r) for r in basis_rows]
    n = lat.rank
    g = lat.gram
    k = len(b)
    return [[sum(b[i][s] * g[s][t] * b[j][t] for s in range(n) for t in range(n))
             for j in range(k)] for i in range(k)]
