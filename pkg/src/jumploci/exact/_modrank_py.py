"""Pure-Python fallback for the mod-p elimination kernel.

Same interface as the compiled `_modrank` extension; selected at import time
when the extension is unavailable.
"""


def rank_mod_p(flat, m, n, p):
    """Rank over F_p of an m x n matrix given as a flat row-major list."""
    a = [flat[i * n:(i + 1) * n] for i in range(m)]
    rank = 0
    row = 0
    for col in range(n):
        piv = None
        for i in range(row, m):
            if a[i][col] % p:
                piv = i
                break
        if piv is None:
            continue
        a[row], a[piv] = a[piv], a[row]
        inv = pow(a[row][col], -1, p)
        ar = a[row]
        for i in range(row + 1, m):
            c = a[i][col] % p
            if c:
                f = c * inv % p
                ai = a[i]
                for j in range(col, n):
                    ai[j] = (ai[j] - f * ar[j]) % p
        rank += 1
        row += 1
        if row == m:
            break
    return rank
