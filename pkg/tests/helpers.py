"""Independent oracles and generators used across the test suite.

Everything here is deliberately naive -- box enumeration, brute-force
products -- so that it shares no code path with the package internals it
checks.
"""

import math
import random
from fractions import Fraction
from itertools import product

from voaplus import make_code
from voaplus.intmat import det_bareiss, leading_minors_positive


def naive_vectors_of_norm(gram, rep, m, box=8):
    """All v = x + rep with |x_i| <= box and v' G v == m, sorted.

    Scaled-integer arithmetic: with rep = r/q the condition becomes
    (qx + r)' G (qx + r) * den(m) == num(m) * q^2.
    """
    n = len(gram)
    m = Fraction(m)
    rep = [Fraction(r) for r in rep]
    q = 1
    for c in rep:
        q = q * c.denominator // math.gcd(q, c.denominator)
    r = [int(c * q) for c in rep]
    target = m.numerator * q * q
    out = []
    for x in product(range(-box, box + 1), repeat=n):
        y = [q * xi + ri for xi, ri in zip(x, r)]
        s = sum(y[i] * gram[i][j] * y[j] for i in range(n) for j in range(n))
        if s * m.denominator == target:
            out.append(tuple(Fraction(yi, q) for yi in y))
    out.sort()
    return out


def naive_isometry_order(gram, box=8):
    """|O(L)| by unpruned brute force over candidate images (rank <= 3)."""
    n = len(gram)
    cands = [naive_vectors_of_norm(gram, [0] * n, gram[i][i], box)
             for i in range(n)]
    cands = [[tuple(int(c) for c in v) for v in cs] for cs in cands]

    def inner(u, v):
        return sum(u[i] * gram[i][j] * v[j] for i in range(n) for j in range(n))

    count = 0
    for imgs in product(*cands):
        if all(inner(imgs[i], imgs[j]) == gram[i][j]
               for i in range(n) for j in range(i, n)):
            count += 1
    return count


def random_posdef_gram(rng, n, lo=-4, hi=8, even=False):
    """A random symmetric positive-definite integer Gram matrix, or None."""
    g = [[0] * n for _ in range(n)]
    for i in range(n):
        g[i][i] = rng.randrange(2, hi + 1)
        if even and g[i][i] % 2:
            g[i][i] += 1
        for j in range(i + 1, n):
            g[i][j] = g[j][i] = rng.randrange(lo, 3)
    if leading_minors_positive(g) and det_bareiss(g) >= 1:
        return g
    return None


def random_doubly_even_code(rng, n, k):
    """A random doubly even code of length n with dimension <= k.

    Grows a basis from random weight-0-mod-4 words with even pairwise
    intersections; the span of such words is doubly even, so the result is
    doubly even by construction.
    """
    basis = []  # kept sorted by pivot, each word forward-reduced
    for _ in range(300):
        if len(basis) >= k:
            break
        w = rng.getrandbits(n)
        if w == 0 or w.bit_count() % 4:
            continue
        if any((w & b).bit_count() % 2 for b in basis):
            continue
        for b in basis:
            if w & (b & -b):
                w ^= b
        if w == 0:
            continue
        basis.append(w)
        basis.sort(key=lambda x: x & -x)
    return make_code(n, list(basis))


def doubly_even_sample(count=120, seed=20240613):
    """At least ``count`` doubly even codes with n <= 12, k <= 6."""
    rng = random.Random(seed)
    codes = []
    while len(codes) < count:
        n = rng.choice([4, 5, 6, 7, 8, 9, 10, 11, 12])
        k = rng.randrange(0, min(6, n // 2) + 1)
        codes.append(random_doubly_even_code(rng, n, k))
    return codes
