"""Fox free differential calculus and abelianized Alexander matrices.

The Fox derivative d/dx_i is the derivation on the rational group ring of
the free group with dx_j/dx_i = delta_ij.  Abelianizing its values along the
map to the free part of H_1 produces the Alexander matrix over the Laurent
ring of the character torus; its rank at a character computes the twisted
first cohomology of the presentation 2-complex, hence of the group.
"""

from dataclasses import dataclass
from fractions import Fraction

from .exact.fields import QQ, PrimeField, prime_for_root_of_unity, primitive_root_of_unity
from .exact.laurent import CharacterPoint, LaurentPoly
from .exact.linalg import matrix_rank_at, rank_over_field
from .presentations import Word, abelianization


# -- group ring elements --------------------------------------------------


def group_ring_zero():
    return {}


def group_ring_add(a, b):
    out = dict(a)
    for w, c in b.items():
        s = out.get(w, Fraction(0)) + c
        if s:
            out[w] = s
        else:
            out.pop(w, None)
    return out


def group_ring_scale_word(a, w, c=Fraction(1)):
    """Left-multiply a group ring element by c * w."""
    out = {}
    for u, cu in a.items():
        key = (w * Word(u)).syllables
        s = out.get(key, Fraction(0)) + c * cu
        if s:
            out[key] = s
        else:
            out.pop(key, None)
    return out


def group_ring_of_word(w, c=Fraction(1)):
    return {w.syllables: Fraction(c)}


def fox_derivative(word, i):
    """Fox derivative of a word with respect to generator i.

    Satisfies d(uv) = du + u.dv, d(x_i) = 1, d(x_i^-1) = -x_i^-1.
    Returns a group ring element {word_syllables: rational}.
    """
    out = group_ring_zero()
    prefix = Word.identity()
    for g, s in word.letters():
        if g == i:
            if s == 1:
                term = group_ring_of_word(prefix)
            else:
                term = group_ring_of_word(prefix * Word.gen(g, -1), Fraction(-1))
            out = group_ring_add(out, term)
        prefix = prefix * Word.gen(g, s)
    return out


def fox_matrix(pres):
    """Free Fox Jacobian: (relators) x (generators) of group ring elements."""
    return [
        [fox_derivative(r, i) for i in range(pres.ngens)]
        for r in pres.relators
    ]


# -- abelianization of group ring elements --------------------------------


@dataclass(frozen=True)
class TorsionSpec:
    """Assignment of root-of-unity exponents to the torsion coordinates of H_1.

    order N is realized in F_p with p = 1 (mod N); exponents[h] applies to the
    h-th torsion coordinate.
    """

    order: int
    exponents: tuple

    def realize(self, lower_bound=10 ** 6):
        p = prime_for_root_of_unity(self.order, lower_bound)
        field = PrimeField(p)
        zeta = primitive_root_of_unity(field, self.order)
        return field, zeta


@dataclass(frozen=True)
class AlexanderMatrix:
    """Abelianized Fox Jacobian over the Laurent ring in b1 variables."""

    entries: tuple  # tuple of tuples of LaurentPoly
    ngens: int
    ab: object  # AbelianizationData
    torsion_spec: object = None

    @property
    def nrows(self):
        return len(self.entries)

    @property
    def nvars(self):
        return self.ab.b1

    def rows(self):
        return [list(r) for r in self.entries]


def abelianize_group_ring(elem, ab, ngens, field=QQ, torsion_values=None):
    """Image of a group ring element in the Laurent ring of the torus.

    torsion_values, when given, is the list of scalar values assigned to the
    torsion coordinates of H_1 (roots of unity in a prime field).
    """
    b1 = ab.b1
    poly = LaurentPoly.zero(b1, field)
    for syll, c in elem.items():
        w = Word(syll)
        exps = ab.free_image(w, ngens)
        coeff = field.coerce(c)
        if ab.torsion:
            tors = ab.torsion_image(w, ngens)
            if torsion_values is None:
                if any(tors):
                    raise ValueError(
                        "H_1 has torsion %s; supply a TorsionSpec to fix the torsion character"
                        % (ab.torsion,)
                    )
            else:
                for val, e, order in zip(torsion_values, tors, ab.torsion):
                    coeff = field.mul(coeff, field.pow(val, e % order))
        poly = poly + LaurentPoly.monomial(b1, exps, coeff, field)
    return poly


def alexander_matrix(pres, torsion_spec=None):
    """Alexander matrix of a presentation in the b1 torus variables.

    Torsion generators of H_1 are sent to 1 unless a TorsionSpec assigns
    them root-of-unity values (then all entries live over the corresponding
    prime field).
    """
    ab = abelianization(pres)
    field = QQ
    torsion_values = None
    if ab.torsion:
        if torsion_spec is None:
            torsion_spec = TorsionSpec(order=1, exponents=(0,) * len(ab.torsion))
        field, zeta = torsion_spec.realize() if torsion_spec.order > 1 else (QQ, None)
        if torsion_spec.order > 1:
            torsion_values = [
                field.pow(zeta, e) for e in torsion_spec.exponents
            ]
        else:
            torsion_values = [field.one for _ in ab.torsion]
    fm = fox_matrix(pres)
    entries = tuple(
        tuple(
            abelianize_group_ring(fm[j][i], ab, pres.ngens, field, torsion_values)
            for i in range(pres.ngens)
        )
        for j in range(len(pres.relators))
    )
    return AlexanderMatrix(entries=entries, ngens=pres.ngens, ab=ab, torsion_spec=torsion_spec)


# -- twisted cohomology dimensions ----------------------------------------


def h1_dim_at(amat, point):
    """dim H^1(G, L_rho) for a character rho of the torus coordinates.

    At the trivial character this is b1; away from it the cochain complex of
    the presentation 2-complex gives n - 1 - rank(A(rho)).
    """
    if len(point) != amat.nvars:
        raise ValueError("character has %d coordinates, expected %d" % (len(point), amat.nvars))
    if point.is_trivial() and not _has_nontrivial_torsion(amat):
        return amat.ab.b1
    if not amat.entries:
        return amat.ngens - 1
    rk = matrix_rank_at(amat.rows(), point)
    return amat.ngens - 1 - rk


def _has_nontrivial_torsion(amat):
    ts = amat.torsion_spec
    return ts is not None and ts.order > 1 and any(e % ts.order for e in ts.exponents)


def h1_dim_finite_character(pres, phi, order, power=1, lower_bound=10 ** 6):
    """dim H^1(G, L_rho^power) for rho(x_i) = zeta^phi[i], zeta of given order.

    Evaluates the Fox Jacobian directly at the finite-order character over
    F_p with p = 1 (mod order); exact, no cyclotomic arithmetic.
    """
    n = pres.ngens
    N = order
    if any(sum(e * phi[g] for g, e in r.syllables) % N for r in pres.relators):
        raise ValueError("phi does not define a character killing the relators")
    if all((power * phi[i]) % N == 0 for i in range(n)):
        return abelianization(pres).b1
    p = prime_for_root_of_unity(N, lower_bound)
    field = PrimeField(p)
    zeta = primitive_root_of_unity(field, N)

    def rho(word):
        e = sum(s * phi[g] for g, s in word.letters())
        return pow(zeta, (power * e) % N, p)

    if not pres.relators:
        return n - 1
    rows = []
    for r in pres.relators:
        row = []
        for i in range(n):
            acc = 0
            for syll, c in fox_derivative(r, i).items():
                acc = (acc + field.coerce(c) * rho(Word(syll))) % p
            row.append(acc)
        rows.append(row)
    return n - 1 - rank_over_field(rows, field)
