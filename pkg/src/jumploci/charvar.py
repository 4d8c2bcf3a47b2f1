"""Characteristic varieties: determinantal ideals, membership, subtori.

V^1_k is the locus of characters rho with dim H^1(G, L_rho) >= k.  Away from
the trivial character this is the vanishing of the (n-k)-minors of the
Alexander matrix; at the trivial character membership is the convention
b1 >= k.  Positive-dimensional components of interest are translated
subtori, verified by exact symbolic substitution of a monomial
parametrization (over F_p for torsion translates).
"""

from dataclasses import dataclass
from fractions import Fraction

from .exact.fields import QQ, PrimeField, prime_for_root_of_unity, primitive_root_of_unity
from .exact.laurent import CharacterPoint, LaurentPoly
from .exact.linalg import minors, rank_rational
from .fox import h1_dim_at


@dataclass(frozen=True)
class CharVarIdeal:
    """Generators of the determinantal ideal of V^1_k (canonical minors)."""

    k: int
    gens: tuple
    includes_identity: bool
    b1: int
    ngens: int

    def is_zero_ideal(self):
        return not self.gens


@dataclass(frozen=True)
class SubtorusComponent:
    """A subtorus with optional torsion translate: t |-> chi * s^directions.

    directions rows are integer exponent vectors of the monomial
    parametrization; translate is None or (order, exponents) describing a
    root-of-unity coordinate vector.
    """

    directions: tuple
    translate: object  # None or (order, tuple of exponents)
    dim: int
    k: int


def charvar_ideal(amat, k):
    """The ideal of V^1_k from the (n-k)-minors of the Alexander matrix."""
    if k < 1:
        raise ValueError("jump level k must be >= 1")
    n = amat.ngens
    b1 = amat.ab.b1
    size = n - k
    m = amat.nrows
    if size <= 0:
        # 0-minors generate the unit ideal: nothing away from the identity
        gens = (LaurentPoly.constant(b1, QQ.one, QQ),)
    elif size > min(m, n):
        gens = ()
    else:
        gens = tuple(minors(amat.rows(), size))
    return CharVarIdeal(k=k, gens=gens, includes_identity=(b1 >= k), b1=b1, ngens=n)


def charvar_member(ideal, point):
    """Membership of a character in V^1_k via the determinantal ideal."""
    if len(point) != ideal.b1:
        raise ValueError("character has %d coordinates, expected %d" % (len(point), ideal.b1))
    if point.is_trivial():
        return ideal.includes_identity
    field = point.field
    for g in ideal.gens:
        gf = g if g.field == field else g.map_to_field(field)
        if not field.is_zero(gf.evaluate(point)):
            return False
    return True


def exp_map(component):
    """Exponential of a resonance LinearComponent: the subtorus it spans.

    Integer basis rows become monomial directions; the translate is trivial.
    """
    return SubtorusComponent(
        directions=tuple(tuple(int(x) for x in row) for row in component.basis),
        translate=None,
        dim=component.dim,
        k=component.k_max,
    )


def _translate_scalars(translate, b1):
    """Field and per-coordinate scalars realizing a torsion translate."""
    if translate is None:
        return QQ, [Fraction(1)] * b1
    order, exponents = translate
    if len(exponents) != b1:
        raise ValueError("translate needs one exponent per torus coordinate")
    if order <= 1:
        return QQ, [Fraction(1)] * b1
    p = prime_for_root_of_unity(order)
    field = PrimeField(p)
    zeta = primitive_root_of_unity(field, order)
    return field, [pow(zeta, e % order, p) for e in exponents]


def subtorus_verify(ideal, subtorus):
    """Certify that the (translated) subtorus lies inside V^1_k.

    Substitutes the monomial parametrization into every ideal generator and
    checks identical vanishing in the free parameters; torsion translates are
    realized exactly over F_p with p = 1 (mod order).
    """
    dirs = [list(r) for r in subtorus.directions]
    if dirs and rank_rational(dirs) != len(dirs):
        raise ValueError("direction matrix must have full row rank")
    b1 = ideal.b1
    if any(len(r) != b1 for r in dirs):
        raise ValueError("direction vectors must have length b1 = %d" % b1)
    field, scalars = _translate_scalars(subtorus.translate, b1)
    d = len(dirs)
    if d == 0:
        # a single point: the translate itself
        point = CharacterPoint(scalars, field)
        return charvar_member(ideal, point)
    images = []
    for i in range(b1):
        exps = tuple(dirs[j][i] for j in range(d))
        images.append(LaurentPoly.monomial(d, exps, scalars[i], field))
    for g in ideal.gens:
        gf = g if g.field == field else g.map_to_field(field)
        if not gf.substitute(images).is_zero():
            return False
    return True


def subtorus_contains_identity(subtorus):
    if subtorus.translate is None:
        return True
    order, exponents = subtorus.translate
    return order <= 1 or all(e % order == 0 for e in exponents)


def torsion_point_candidates(ideal, order_bound=30, max_points=20000):
    """Isolated torsion characters in V^1_k, by bounded exhaustive scan.

    Enumerates characters whose coordinates are roots of unity of a common
    order N <= order_bound and keeps those where every generator vanishes.
    Only feasible for small b1; the scan is capped and makes no completeness
    claim beyond the enumerated orders.
    """
    b1 = ideal.b1
    found = []
    seen = set()
    for order in range(1, order_bound + 1):
        if order ** b1 > max_points:
            break
        if order == 1:
            if ideal.includes_identity:
                found.append((1, (0,) * b1))
            continue
        p = prime_for_root_of_unity(order)
        field = PrimeField(p)
        zeta = primitive_root_of_unity(field, order)
        gens_p = [g.map_to_field(field) for g in ideal.gens]
        from itertools import product

        for exps in product(range(order), repeat=b1):
            if not any(exps):
                continue
            key = tuple(Fraction(e, order) % 1 for e in exps)
            if key in seen:
                continue
            point = CharacterPoint(
                tuple(pow(zeta, e, field.p) for e in exps), field, torsion_order=order
            )
            if all(field.is_zero(g.evaluate(point)) for g in gens_p):
                seen.add(key)
                found.append((order, exps))
    return found


def translated_subtorus_scan(ideal, directions_list, order_bound=30, max_codim=2):
    """Heuristic scan for torsion-translated subtori on given direction sets.

    For each direction matrix, tries translates whose coordinates are roots
    of unity supported on the complementary coordinates, for each order up to
    the bound.  Verified components are returned; no completeness claim.
    """
    from itertools import product

    b1 = ideal.b1
    out = []
    for dirs in directions_list:
        dirs = [list(r) for r in dirs]
        d = len(dirs)
        support = [i for i in range(b1) if any(row[i] for row in dirs)]
        free_coords = [i for i in range(b1) if i not in support]
        if len(free_coords) > max_codim:
            continue
        for order in range(2, order_bound + 1):
            for exps_free in product(range(order), repeat=len(free_coords)):
                if not any(exps_free):
                    continue
                exps = [0] * b1
                for i, e in zip(free_coords, exps_free):
                    exps[i] = e
                cand = SubtorusComponent(
                    directions=tuple(tuple(r) for r in dirs),
                    translate=(order, tuple(exps)),
                    dim=d,
                    k=ideal.k,
                )
                if subtorus_verify(ideal, cand):
                    out.append(cand)
    return out


def consistency_check(ideal, amat, points):
    """Cross-check minors membership against the direct rank formula.

    For each character point, charvar_member must agree with
    h1_dim_at >= k; raises AssertionError on any disagreement.
    """
    for point in points:
        via_ideal = charvar_member(ideal, point)
        via_rank = h1_dim_at(amat, point) >= ideal.k
        if via_ideal != via_rank:
            raise AssertionError(
                "membership mismatch at %r: minors say %s, rank says %s"
                % (point, via_ideal, via_rank)
            )
    return True
