"""Finite cyclic covers against the equivariant cohomology oracle.

b1 of the kernel of phi: G -> Z/N equals the sum over j of
dim H^1(G, L_{rho^j}) for rho the order-N character determined by phi,
computed exactly over F_p with p = 1 (mod N).
"""

import pytest

from jumploci.fox import h1_dim_finite_character
from jumploci.presentations import (
    abelianization,
    cyclic_cover_presentation,
    free_presentation,
    parse_presentation,
    surface_presentation,
)


def cover_b1(pres, phi, order):
    cov = cyclic_cover_presentation(pres, phi, order)
    return abelianization(cov).b1


def oracle_b1(pres, phi, order):
    return sum(
        h1_dim_finite_character(pres, phi, order, power=j) for j in range(order)
    )


FIXTURES = [
    (free_presentation(2), (1, 0)),
    (free_presentation(3), (1, 1, 1)),
    (surface_presentation(2, 0), (1, 0, 0, 0)),
    (parse_presentation("gens: a b\nrels: [a,b]"), (1, 1)),
    (parse_presentation("gens: x y\nrels: x y x y^-1 x^-1 y^-1"), (1, 1)),  # trefoil
]


@pytest.mark.parametrize("order", [2, 3, 4])
@pytest.mark.parametrize("idx", range(len(FIXTURES)))
def test_cover_b1_matches_oracle(idx, order):
    pres, phi = FIXTURES[idx]
    assert cover_b1(pres, phi, order) == oracle_b1(pres, phi, order)


def test_cover_euler_characteristic():
    # index-N subgroups of F_n are free of rank N(n-1)+1
    for n in (2, 3):
        for order in (2, 3, 4):
            cov = cyclic_cover_presentation(free_presentation(n), (1,) * n, order)
            assert cov.ngens - len(cov.relators) == order * (n - 1) + 1


def test_cover_torsion():
    p = parse_presentation("gens: a\nrels: a^4")
    cov = cyclic_cover_presentation(p, (1,), 2)
    ab = abelianization(cov)
    assert ab.b1 == 0 and tuple(ab.torsion) == (2,)


def test_phi_must_be_surjective():
    with pytest.raises(ValueError):
        cyclic_cover_presentation(free_presentation(2), (2, 0), 4)
