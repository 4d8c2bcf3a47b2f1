"""Exact linear algebra: fraction-free rank, nullspaces, minors, subspaces.

Rank computations use Bareiss-style fraction-free elimination, which works
over any integral domain with exact division; we instantiate it for integers
(rational matrices after clearing denominators) and for Laurent-polynomial
matrices, where the generic rank over the function field certifies rank
conditions identically on a parametrized family.
"""

from fractions import Fraction
from itertools import combinations
from math import gcd

from .fields import QQ, PrimeField
from .laurent import LaurentPoly

try:  # compiled kernel for mod-p elimination, optional
    from . import _modrank as _modrank_impl

    HAVE_COMPILED_KERNEL = True
except ImportError:  # pragma: no cover - depends on build environment
    from . import _modrank_py as _modrank_impl

    HAVE_COMPILED_KERNEL = False


# -- rank over Q ---------------------------------------------------------


def _integer_rows(rows):
    """Scale each row by its denominator lcm; rank is unchanged."""
    out = []
    for r in rows:
        r = [Fraction(x) if not isinstance(x, Fraction) else x for x in r]
        den = 1
        for x in r:
            den = den * x.denominator // gcd(den, x.denominator)
        out.append([int(x * den) for x in r])
    return out

def rank_rational(rows):
    """Exact rank of a matrix with int/Fraction entries (Bareiss)."""
    if not rows or not rows[0]:
        return 0
    a = _integer_rows(rows)
    m, n = len(a), len(a[0])
    rank = 0
    prev = 1
    row = 0
    for col in range(n):
        piv = None
        for i in range(row, m):
            if a[i][col] != 0:
                piv = i
                break
        if piv is None:
            continue
        a[row], a[piv] = a[piv], a[row]
        p = a[row][col]
        for i in range(row + 1, m):
            for j in range(col + 1, n):
                a[i][j] = (a[i][j] * p - a[i][col] * a[row][j]) // prev
            a[i][col] = 0
        prev = p
        rank += 1
        row += 1
        if row == m:
            break
    return rank


def rank_mod_p(rows, p):
    """Rank of an integer matrix over F_p (compiled kernel when available)."""
    if not rows or not rows[0]:
        return 0
    flat = []
    for r in rows:
        flat.extend(x % p for x in r)
    return _modrank_impl.rank_mod_p(flat, len(rows), len(rows[0]), p)


def rank_over_field(rows, field):
    if isinstance(field, PrimeField):
        return rank_mod_p(rows, field.p)
    return rank_rational(rows)


# -- kernels and reduced forms over Q ------------------------------------


def rref(rows):
    """Reduced row-echelon form over Q; returns (rows, pivot_columns)."""
    a = [[Fraction(x) for x in r] for r in rows]
    m = len(a)
    n = len(a[0]) if m else 0
    pivots = []
    row = 0
    for col in range(n):
        piv = None
        for i in range(row, m):
            if a[i][col] != 0:
                piv = i
                break
        if piv is None:
            continue
        a[row], a[piv] = a[piv], a[row]
        inv = 1 / a[row][col]
        a[row] = [x * inv for x in a[row]]
        for i in range(m):
            if i != row and a[i][col] != 0:
                c = a[i][col]
                a[i] = [x - c * y for x, y in zip(a[i], a[row])]
        pivots.append(col)
        row += 1
        if row == m:
            break
    return a[:row], pivots


def nullspace(rows, ncols=None):
    """Basis of the right kernel {v : A v = 0}, as primitive integer vectors."""
    if not rows:
        if ncols is None:
            raise ValueError("need ncols for an empty matrix")
        return [[int(i == j) for j in range(ncols)] for i in range(ncols)]
    n = len(rows[0])
    red, pivots = rref(rows)
    free = [j for j in range(n) if j not in pivots]
    basis = []
    for j in free:
        v = [Fraction(0)] * n
        v[j] = Fraction(1)
        for r, pc in zip(red, pivots):
            v[pc] = -r[j]
        basis.append(primitive_vector(v))
    return basis


def left_nullspace(rows, nrows=None):
    """Basis of {w : w A = 0}, as primitive integer vectors."""
    if not rows:
        return []
    n = len(rows[0])
    transpose = [[rows[i][j] for i in range(len(rows))] for j in range(n)]
    return nullspace(transpose, ncols=len(rows))


def primitive_vector(v):
    """Scale a rational vector to coprime integers, first nonzero positive."""
    if all(isinstance(x, int) for x in v):
        w = list(v)
    else:
        den = 1
        for x in v:
            x = Fraction(x)
            den = den * x.denominator // gcd(den, x.denominator)
        w = [int(Fraction(x) * den) for x in v]
    g = 0
    for x in w:
        g = gcd(g, x)
    if g:
        w = [x // g for x in w]
    for x in w:
        if x != 0:
            if x < 0:
                w = [-y for y in w]
            break
    return w


# -- rational subspaces (row spans) --------------------------------------


def subspace_canonical(rows):
    """Canonical primitive-integer basis of a row span (RREF then saturate)."""
    red, _ = rref(rows)
    return tuple(tuple(primitive_vector(r)) for r in red)


def subspace_dim(rows):
    return rank_rational(rows) if rows else 0

def subspace_contains(space_rows, v):
    base = list(space_rows)
    return rank_rational(base + [list(v)]) == rank_rational(base)


def subspace_leq(a_rows, b_rows):
    """Is span(a) contained in span(b)?"""
    b = [list(r) for r in b_rows]
    rb = rank_rational(b)
    return rank_rational(b + [list(r) for r in a_rows]) == rb


def subspace_sum(a_rows, b_rows):
    return subspace_canonical([list(r) for r in a_rows] + [list(r) for r in b_rows])


def subspace_intersection(a_rows, b_rows):
    """Basis of span(a) & span(b)."""
    a = [list(r) for r in a_rows]
    b = [list(r) for r in b_rows]
    if not a or not b:
        return ()
    stacked = a + [[-x for x in r] for r in b]
    # coefficient vectors (x, y) with x*A = y*B
    coeffs = left_nullspace_of_rows(stacked)
    vecs = []
    for z in coeffs:
        v = [sum(z[i] * a[i][j] for i in range(len(a))) for j in range(len(a[0]))]
        if any(v):
            vecs.append(v)
    return subspace_canonical(vecs) if vecs else ()


def left_nullspace_of_rows(rows):
    """Basis of {z : z * rows = 0} for rows given as a list of row vectors."""
    n = len(rows[0])
    transpose = [[rows[i][j] for i in range(len(rows))] for j in range(n)]
    return nullspace(transpose, ncols=len(rows))


# -- determinants and minors over Laurent rings --------------------------


def poly_det(matrix):
    """Determinant of a square matrix of LaurentPoly, by cofactor expansion."""
    n = len(matrix)
    if n == 0:
        raise ValueError("empty determinant")
    sample = matrix[0][0]
    if n == 1:
        return matrix[0][0]
    det = LaurentPoly.zero(sample.nvars, sample.field)
    for j in range(n):
        entry = matrix[0][j]
        if entry.is_zero():
            continue
        sub = [[row[l] for l in range(n) if l != j] for row in matrix[1:]]
        cof = poly_det(sub)
        term = entry * cof
        det = det + term if j % 2 == 0 else det - term
    return det


def minors(matrix, size):
    """All size x size minors of a LaurentPoly matrix, normalized and deduplicated.

    These generate the determinantal ideals cutting out the characteristic
    varieties.  Zero minors are dropped.
    """
    m = len(matrix)
    n = len(matrix[0]) if m else 0
    if size < 1 or size > min(m, n):
        raise ValueError("minor size %d out of range for %dx%d matrix" % (size, m, n))
    out = []
    seen = set()
    for rows_idx in combinations(range(m), size):
        for cols_idx in combinations(range(n), size):
            sub = [[matrix[i][j] for j in cols_idx] for i in rows_idx]
            d = poly_det(sub)
            if d.is_zero():
                continue
            d = d.normalized()
            if d not in seen:
                seen.add(d)
                out.append(d)
    return out


def poly_exact_div(num, den):
    """Exact division of Laurent polynomials; raises if not divisible."""
    if den.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    field = num.field
    q = LaurentPoly.zero(num.nvars, field)
    r = num
    de, dc = den.leading()
    guard = 0
    while not r.is_zero():
        guard += 1
        if guard > 10000:
            raise ArithmeticError("exact division does not terminate")
        re, rc = r.leading()
        qe = tuple(a - b for a, b in zip(re, de))
        qc = field.mul(rc, field.inv(dc))
        t = LaurentPoly.monomial(num.nvars, qe, qc, field)
        q = q + t
        r = r - t * den
        if not r.is_zero() and r.leading()[0] >= re:
            raise ArithmeticError("inexact polynomial division")
    return q


def poly_rank_generic(matrix):
    """Generic rank of a LaurentPoly matrix over the rational function field.

    Bareiss elimination over the polynomial ring; all divisions are exact.
    Since rank is lower-semicontinuous, generic rank r certifies that all
    (r+1)-minors vanish identically.
    """
    a = [list(row) for row in matrix]
    m = len(a)
    n = len(a[0]) if m else 0
    if m == 0 or n == 0:
        return 0
    sample = a[0][0]
    prev = LaurentPoly.one(sample.nvars, sample.field)
    rank = 0
    row = 0
    for _ in range(min(m, n)):
        piv = None
        for i in range(row, m):
            for j in range(n):
                if not a[i][j].is_zero():
                    piv = (i, j)
                    break
            if piv:
                break
        if piv is None:
            break
        pi, pj = piv
        a[row], a[pi] = a[pi], a[row]
        p = a[row][pj]
        for i in range(row + 1, m):
            ci = a[i][pj]
            for j in range(n):
                if j == pj:
                    continue
                num = a[i][j] * p - ci * a[row][j]
                a[i][j] = poly_exact_div(num, prev)
            a[i][pj] = LaurentPoly.zero(sample.nvars, sample.field)
        prev = p
        rank += 1
        row += 1
        if row == m:
            break
    return rank


def evaluate_matrix(matrix, point):
    return [[entry.evaluate(point) for entry in row] for row in matrix]


def matrix_rank_at(matrix, point):
    """Exact rank of a LaurentPoly matrix evaluated at a character point."""
    if not matrix or not matrix[0]:
        return 0
    vals = evaluate_matrix(matrix, point)
    return rank_over_field(vals, point.field)
