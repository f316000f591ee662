"""Exact integer and rational matrix routines.

Determinants (Bareiss), Hermite and Smith normal forms, left kernels and
dense Fraction inverses, all over plain Python arbitrary-precision numbers.
Matrices are lists of row lists.  Sizes in this package stay tiny
(rank <= 20), so the straightforward algorithms are the right ones.
"""

from fractions import Fraction

from .errors import RankDeficient


def xgcd(a, b):
    """Return (g, x, y) with g = gcd(a, b) = a*x + b*y and g >= 0."""
    x, nx = 1, 0
    y, ny = 0, 1
    g, ng = a, b
    while ng:
        q = g // ng
        x, nx = nx, x - q * nx
        y, ny = ny, y - q * ny
        g, ng = ng, g - q * ng
    if g < 0:
        x, y, g = -x, -y, -g
    return g, x, y


def identity(n):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def mat_mul(a, b):
    cols = len(b[0])
    return [[sum(ra[k] * b[k][j] for k in range(len(b))) for j in range(cols)]
            for ra in a]


def det_bareiss(mat):
    """Exact determinant of a square integer matrix."""
    n = len(mat)
    if n == 0:
        return 1
    m = [list(row) for row in mat]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def leading_minors_positive(mat):
    """True iff every leading principal minor is > 0 (positive definite)."""
    n = len(mat)
    return all(det_bareiss([row[: k + 1] for row in mat[: k + 1]]) > 0
               for k in range(n))


def _hnf_inplace(rows, ncols, trans=None):
    """Row-reduce ``rows`` to Hermite normal form in place.

    Pivots positive, entries above each pivot reduced into [0, pivot).
    Zero rows sink to the bottom.  If ``trans`` is given the same row
    operations are applied to it.
    """
    m = len(rows)
    r = 0
    for c in range(ncols):
        piv = None
        for i in range(r, m):
            if rows[i][c] != 0:
                piv = i
                break
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        if trans is not None:
            trans[r], trans[piv] = trans[piv], trans[r]
        for i in range(r + 1, m):
            while rows[i][c] != 0:
                a, b = rows[r][c], rows[i][c]
                if b % a == 0:
                    q = b // a
                    for j in range(ncols):
                        rows[i][j] -= q * rows[r][j]
                    if trans is not None:
                        for j in range(len(trans[i])):
                            trans[i][j] -= q * trans[r][j]
                else:
                    g, x, y = xgcd(a, b)
                    ag, bg = a // g, b // g
                    for j in range(ncols):
                        ra, ri = rows[r][j], rows[i][j]
                        rows[r][j] = x * ra + y * ri
                        rows[i][j] = -bg * ra + ag * ri
                    if trans is not None:
                        for j in range(len(trans[r])):
                            ta, ti = trans[r][j], trans[i][j]
                            trans[r][j] = x * ta + y * ti
                            trans[i][j] = -bg * ta + ag * ti
        if rows[r][c] < 0:
            rows[r] = [-v for v in rows[r]]
            if trans is not None:
                trans[r] = [-v for v in trans[r]]
        for i in range(r):
            q = rows[i][c] // rows[r][c]
            if q:
                for j in range(ncols):
                    rows[i][j] -= q * rows[r][j]
                if trans is not None:
                    for j in range(len(trans[i])):
                        trans[i][j] -= q * trans[r][j]
        r += 1
        if r == m:
            break
    return r


def hnf(rows, ncols=None):
    """Canonical HNF basis (nonzero rows only) of the row lattice."""
    if not rows:
        return []
    ncols = len(rows[0]) if ncols is None else ncols
    work = [list(r) for r in rows]
    rank = _hnf_inplace(work, ncols)
    return work[:rank]


def hnf_with_transform(rows, ncols):
    """Return (H, U, rank) with U * rows == H, U unimodular, H in HNF."""
    work = [list(r) for r in rows]
    u = identity(len(rows))
    rank = _hnf_inplace(work, ncols, trans=u)
    return work, u, rank


def left_kernel(rows, ncols):
    """Basis of {x integer row : x * rows == 0}."""
    h, u, rank = hnf_with_transform(rows, ncols)
    return hnf(u[rank:], len(rows))


def solve_integral(basis, target):
    """Integer coefficients expressing ``target`` over HNF ``basis`` rows.

    Returns the coefficient list, or None when target is outside the row
    lattice.  ``basis`` must be the output of hnf().
    """
    ncols = len(target)
    rem = list(target)
    coeffs = []
    for row in basis:
        p = next(j for j in range(ncols) if row[j] != 0)
        if rem[p] % row[p] != 0:
            return None
        q = rem[p] // row[p]
        coeffs.append(q)
        for j in range(ncols):
            rem[j] -= q * row[j]
    if any(rem):
        return None
    return coeffs


def common_denominator(vectors):
    d = 1
    for v in vectors:
        for x in v:
            fx = Fraction(x)
            d = d * fx.denominator // _gcd(d, fx.denominator)
    return d


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


def scaled_integer_rows(vectors, den=None):
    """Clear denominators: returns (int rows, den) with rows = den * vectors."""
    if den is None:
        den = common_denominator(vectors)
    rows = []
    for v in vectors:
        rows.append([int(Fraction(x) * den) for x in v])
    return rows, den


def same_row_lattice(gens_a, gens_b):
    """True iff two rational generator lists span the same full-rank Z-module.

    Raises RankDeficient when either list fails to span the ambient space.
    """
    if not gens_a or not gens_b:
        raise RankDeficient("empty generator list")
    ncols = len(gens_a[0])
    den = common_denominator(list(gens_a) + list(gens_b))
    rows_a, _ = scaled_integer_rows(gens_a, den)
    rows_b, _ = scaled_integer_rows(gens_b, den)
    ha = hnf(rows_a, ncols)
    hb = hnf(rows_b, ncols)
    if len(ha) < ncols or len(hb) < ncols:
        raise RankDeficient("generators do not span full rank")
    return ha == hb


def smith_with_left(mat):
    """Smith form of a nonsingular integer matrix, tracking left transforms.

    Returns (diag, U, Uinv) where U*mat*V == diag(d) for some untracked
    unimodular V, the d_i are positive with d_1 | d_2 | ... | d_n, and
    Uinv is the exact inverse of U.
    """
    n = len(mat)
    a = [list(row) for row in mat]
    u = identity(n)
    uinv = identity(n)

    def row_add(i, j, q):  # row_i += q * row_j ; uinv col_j -= q * col_i
        for c in range(n):
            a[i][c] += q * a[j][c]
            u[i][c] += q * u[j][c]
        for r in range(n):
            uinv[r][j] -= q * uinv[r][i]

    def row_swap(i, j):
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]
        for r in range(n):
            uinv[r][i], uinv[r][j] = uinv[r][j], uinv[r][i]

    def row_neg(i):
        a[i] = [-v for v in a[i]]
        u[i] = [-v for v in u[i]]
        for r in range(n):
            uinv[r][i] = -uinv[r][i]

    def col_add(j, i, q):  # col_j += q * col_i (right transform, untracked)
        for r in range(n):
            a[r][j] += q * a[r][i]

    def col_swap(i, j):
        for r in range(n):
            a[r][i], a[r][j] = a[r][j], a[r][i]

    def diagonalize():
        for k in range(n):
            while True:
                # move a minimal-magnitude nonzero entry to (k, k)
                best = None
                for i in range(k, n):
                    for j in range(k, n):
                        if a[i][j] != 0 and (
                                best is None
                                or abs(a[i][j]) < abs(a[best[0]][best[1]])):
                            best = (i, j)
                if best is None:
                    raise RankDeficient("singular matrix in Smith reduction")
                if best[0] != k:
                    row_swap(k, best[0])
                if best[1] != k:
                    col_swap(k, best[1])
                dirty = False
                for i in range(k + 1, n):
                    if a[i][k] != 0:
                        row_add(i, k, -(a[i][k] // a[k][k]))
                        if a[i][k] != 0:
                            dirty = True
                for j in range(k + 1, n):
                    if a[k][j] != 0:
                        col_add(j, k, -(a[k][j] // a[k][k]))
                        if a[k][j] != 0:
                            dirty = True
                if not dirty:
                    break
            if a[k][k] < 0:
                row_neg(k)

    # Diagonalize; whenever the divisibility chain d_i | d_{i+1} fails, fold
    # row i+1 into row i (putting gcd(d_i, d_{i+1}) within reach) and
    # re-diagonalize.  Each fold strictly shrinks d_i, so this terminates.
    diagonalize()
    while True:
        bad = next((i for i in range(n - 1)
                    if a[i + 1][i + 1] % a[i][i] != 0), None)
        if bad is None:
            break
        row_add(bad, bad + 1, 1)
        diagonalize()
    diag = [a[i][i] for i in range(n)]
    return diag, u, uinv


def invert_fraction(mat):
    """Exact inverse of a nonsingular matrix with int/Fraction entries."""
    n = len(mat)
    a = [[Fraction(x) for x in row] for row in mat]
    inv = [[Fraction(1 if i == j else 0) for j in range(n)] for i in range(n)]
    for c in range(n):
        piv = next((i for i in range(c, n) if a[i][c] != 0), None)
        if piv is None:
            raise RankDeficient("singular matrix")
        a[c], a[piv] = a[piv], a[c]
        inv[c], inv[piv] = inv[piv], inv[c]
        f = a[c][c]
        a[c] = [x / f for x in a[c]]
        inv[c] = [x / f for x in inv[c]]
        for i in range(n):
            if i != c and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[c])]
                inv[i] = [x - f * y for x, y in zip(inv[i], inv[c])]
    return inv
