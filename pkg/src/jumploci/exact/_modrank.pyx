# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled mod-p elimination kernel.

Entries are reduced residues of a prime p < 2^31, so products fit in a C
long long and all arithmetic stays exact.
"""

from libc.stdlib cimport free, malloc


cdef long long _inv_mod(long long a, long long p):
    # extended Euclid; a is nonzero mod p
    cdef long long t = 0, newt = 1, r = p, newr = a % p, q, tmp
    while newr != 0:
        q = r / newr
        tmp = t - q * newt
        t = newt
        newt = tmp
        tmp = r - q * newr
        r = newr
        newr = tmp
    if t < 0:
        t += p
    return t


def rank_mod_p(flat, int m, int n, long long p):
    """Rank over F_p of an m x n matrix given as a flat row-major list."""
    if m == 0 or n == 0:
        return 0
    cdef long long *a = <long long *> malloc(m * n * sizeof(long long))
    if a == NULL:
        raise MemoryError()
    cdef int i, j, col, row, piv
    cdef long long inv, f, c
    try:
        for i in range(m * n):
            a[i] = flat[i] % p
        row = 0
        for col in range(n):
            piv = -1
            for i in range(row, m):
                if a[i * n + col] != 0:
                    piv = i
                    break
            if piv < 0:
                continue
            if piv != row:
                for j in range(n):
                    c = a[row * n + j]
                    a[row * n + j] = a[piv * n + j]
                    a[piv * n + j] = c
            inv = _inv_mod(a[row * n + col], p)
            for i in range(row + 1, m):
                c = a[i * n + col]
                if c != 0:
                    f = (c * inv) % p
                    for j in range(col, n):
                        a[i * n + j] = (a[i * n + j] - f * a[row * n + j]) % p
                        if a[i * n + j] < 0:
                            a[i * n + j] += p
            row += 1
            if row == m:
                break
        return row
    finally:
        free(a)
