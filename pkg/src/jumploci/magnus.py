"""Truncated Magnus expansions and the cup-product tensor.

The Magnus embedding sends generator x_i to 1 + X_i in noncommutative power
series; truncations are stored as sparse maps from index tuples to rational
coefficients.  The degree-2 coefficients of relators, antisymmetrized and
projected to a basis of H^2 of the presentation 2-complex, give the
structure constants of the cup product on H^1.
"""

from dataclasses import dataclass
from fractions import Fraction

from .exact.linalg import left_nullspace
from .presentations import abelianization

MAX_DEGREE = 6


# -- sparse noncommutative truncated series ------------------------------
# keys are tuples of generator indices (words in the letters X_i)


def nc_zero():
    return {}

def nc_one():
    return {(): Fraction(1)}


def nc_add(a, b, scale=Fraction(1)):
    out = dict(a)
    for k, c in b.items():
        s = out.get(k, Fraction(0)) + scale * c
        if s:
            out[k] = s
        else:
            out.pop(k, None)
    return out


def nc_mul(a, b, cap):
    out = {}
    for ka, ca in a.items():
        for kb, cb in b.items():
            if len(ka) + len(kb) > cap:
                continue
            k = ka + kb
            s = out.get(k, Fraction(0)) + ca * cb
            if s:
                out[k] = s
            else:
                out.pop(k, None)
    return out


def nc_degree_part(a, d):
    return {k: c for k, c in a.items() if len(k) == d}


def nc_generator_series(i, sign, cap):
    """Magnus image of x_i^sign truncated at degree cap."""
    if sign == 1:
        return {(): Fraction(1), (i,): Fraction(1)}
    out = {(): Fraction(1)}
    for d in range(1, cap + 1):
        out[(i,) * d] = Fraction((-1) ** d)
    return out


def magnus_of_word(word, cap):
    """Magnus expansion of a group word, truncated at total degree cap."""
    acc = nc_one()
    for g, s in word.letters():
        acc = nc_mul(acc, nc_generator_series(g, s, cap), cap)
    return acc


@dataclass(frozen=True)
class MagnusExpansion:
    """Per-relator truncated Magnus coefficients of (r - 1)."""

    degree_cap: int
    ngens: int
    coefficients: tuple  # one sparse dict per relator

    def degree_part(self, j, d):
        return nc_degree_part(self.coefficients[j], d)


def magnus_expand(pres, degree_cap=4):
    """Magnus expansion of all relators: coefficients of (r - 1) up to cap."""
    if not 2 <= degree_cap <= MAX_DEGREE:
        raise ValueError("degree cap must be between 2 and %d" % MAX_DEGREE)
    coeffs = []
    for r in pres.relators:
        series = magnus_of_word(r, degree_cap)
        series = nc_add(series, nc_one(), scale=Fraction(-1))
        coeffs.append(series)
    return MagnusExpansion(degree_cap=degree_cap, ngens=pres.ngens, coefficients=tuple(coeffs))


# -- cup product tensor ---------------------------------------------------


@dataclass(frozen=True)
class CupTensor:
    """Antisymmetric structure constants of the cup product H^1 x H^1 -> H^2.

    mu[i][j] is the coordinate vector (length h2_dim) of e_i cup e_j in the
    chosen basis of H^2 of the presentation 2-complex; the e_i are dual to
    the torus variables t_i.
    """

    b1: int
    h2_dim: int
    mu: tuple  # b1 x b1 tuple of tuples of length-h2 Fraction tuples

    def pairing(self, u, v):
        """mu(u, v) in H^2 coordinates for rational vectors u, v."""
        out = [Fraction(0)] * self.h2_dim
        for i in range(self.b1):
            if not u[i]:
                continue
            for j in range(self.b1):
                if not v[j]:
                    continue
                w = self.mu[i][j]
                for h in range(self.h2_dim):
                    out[h] += u[i] * v[j] * w[h]
        return out

    def mu_matrix(self, u):
        """The linear map v -> mu(u, v) as an h2_dim x b1 matrix."""
        m = [[Fraction(0)] * self.b1 for _ in range(self.h2_dim)]
        for i in range(self.b1):
            ui = u[i]
            if not ui:
                continue
            row = self.mu[i]
            for j in range(self.b1):
                w = row[j]
                for h in range(self.h2_dim):
                    if w[h]:
                        m[h][j] += ui * w[h]
        return m


def cup_tensor(pres):
    """Cup product structure constants on H^1 of the presentation 2-complex.

    H^1 is the kernel of the relator exponent matrix, in the basis dual to
    the torus variables (columns of the abelianization basis map); H^2 is the
    cokernel of the same matrix, with functionals a basis of its left kernel.
    The pairing is the antisymmetrized degree-2 Magnus coefficient.
    """
    ab = abelianization(pres)
    n = pres.ngens
    b1 = ab.b1
    rel = pres.relator_matrix()
    m = len(rel)
    if m:
        h2_functionals = left_nullspace([[Fraction(x) for x in row] for row in rel])
    else:
        h2_functionals = []
    h2 = len(h2_functionals)
    if not m:
        mu = tuple(tuple(() for _ in range(b1)) for _ in range(b1))
        return CupTensor(b1=b1, h2_dim=0, mu=mu)

    exp = magnus_expand(pres, 2)
    # degree-2 coefficient tables per relator
    tables = []
    for jrel in range(m):
        part = exp.degree_part(jrel, 2)
        tables.append({k: c for k, c in part.items()})

    basis = [tuple(Fraction(ab.basis_map[g][h]) for g in range(n)) for h in range(b1)]
    mu_rows = []
    for i in range(b1):
        row = []
        vi = basis[i]
        for j in range(b1):
            vj = basis[j]
            vals = []
            for h in range(h2):
                acc = Fraction(0)
                w = h2_functionals[h]
                for jrel in range(m):
                    if not w[jrel]:
                        continue
                    pair = Fraction(0)
                    for (a, b), c in tables[jrel].items():
                        if vi[a] and vj[b]:
                            pair += vi[a] * vj[b] * c
                        if vi[b] and vj[a]:
                            pair -= vi[b] * vj[a] * c
                    acc += Fraction(w[jrel]) * pair / 2
                vals.append(acc)
            row.append(tuple(vals))
        mu_rows.append(tuple(row))
    return CupTensor(b1=b1, h2_dim=h2, mu=tuple(mu_rows))
