"""Smith normal form of integer matrices, with arbitrary-precision entries.

Also the small IntMatrix/SmithForm containers used by abelianization code.
All arithmetic is exact Python int.
"""

from dataclasses import dataclass
from math import gcd


@dataclass(frozen=True)
class SmithForm:
    """Diagonal of the Smith normal form, with rank and torsion read off."""

    diag: tuple
    rank: int
    torsion: tuple

    def __post_init__(self):
        for a, b in zip(self.diag, self.diag[1:]):
            if a != 0 and b % a != 0:
                raise ValueError("diagonal violates divisibility chain: %s" % (self.diag,))


def smith_normal_form(rows):
    """Smith normal form diagonal of an integer matrix given as list of rows.

    Returns a SmithForm; the empty matrix gives an empty diagonal.
    """
    d, _, _ = smith_with_transforms(rows)
    return d


def smith_with_transforms(rows):
    """Compute (SmithForm, U, V) with U * A * V diagonal, U and V unimodular.

    U is m x m and V is n x n, both returned as lists of rows.
    """
    a = [list(map(int, r)) for r in rows]
    m = len(a)
    n = len(a[0]) if m else 0
    if any(len(r) != n for r in a):
        raise ValueError("ragged matrix")
    u = [[int(i == j) for j in range(m)] for i in range(m)]
    v = [[int(i == j) for j in range(n)] for i in range(n)]

    def row_op(i, j, q):  # row_i -= q * row_j
        for k in range(n):
            a[i][k] -= q * a[j][k]
        for k in range(m):
            u[i][k] -= q * u[j][k]

    def col_op(i, j, q):  # col_i -= q * col_j
        for r in a:
            r[i] -= q * r[j]
        for r in v:
            r[i] -= q * r[j]

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for r in a:
            r[i], r[j] = r[j], r[i]
        for r in v:
            r[i], r[j] = r[j], r[i]

    t = 0
    while t < m and t < n:
        # find a nonzero pivot in the remaining block
        piv = None
        for i in range(t, m):
            for j in range(t, n):
                if a[i][j] != 0:
                    if piv is None or abs(a[i][j]) < abs(a[piv[0]][piv[1]]):
                        piv = (i, j)
        if piv is None:
            break
        swap_rows(t, piv[0])
        swap_cols(t, piv[1])
        while True:
            dirty = False
            for i in range(t + 1, m):
                if a[i][t] != 0:
                    q = a[i][t] // a[t][t]
                    row_op(i, t, q)
                    if a[i][t] != 0:
                        swap_rows(t, i)
                    dirty = True
            for j in range(t + 1, n):
                if a[t][j] != 0:
                    q = a[t][j] // a[t][t]
                    col_op(j, t, q)
                    if a[t][j] != 0:
                        swap_cols(t, j)
                    dirty = True
            if not dirty:
                break
        # make the pivot divide the whole remaining block
        fixed = True
        for i in range(t + 1, m):
            for j in range(t + 1, n):
                if a[i][j] % a[t][t] != 0:
                    row_op(t, i, -1)  # add row i to row t, then restart
                    fixed = False
                    break
            if not fixed:
                break
        if not fixed:
            continue
        if a[t][t] < 0:
            for k in range(n):
                a[t][k] = -a[t][k]
            for k in range(m):
                u[t][k] = -u[t][k]
        t += 1

    diag = tuple(a[i][i] for i in range(min(m, n)))
    rank = sum(1 for d in diag if d != 0)
    torsion = tuple(d for d in diag if d > 1)
    return SmithForm(diag=diag, rank=rank, torsion=torsion), u, v


def gcd_of_matrix(rows):
    g = 0
    for r in rows:
        for x in r:
            g = gcd(g, x)
    return g
