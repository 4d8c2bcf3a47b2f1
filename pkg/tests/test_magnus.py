"""Magnus expansions and the cup-product tensor."""

from fractions import Fraction

import pytest

from jumploci.magnus import cup_tensor, magnus_expand, magnus_of_word, nc_mul, nc_one
from jumploci.presentations import (
    Word,
    free_presentation,
    parse_presentation,
    raag_presentation,
    surface_presentation,
)
from jumploci.graphs import parse_graph


def test_magnus_of_generator_and_inverse():
    x = Word.gen(0)
    m = magnus_of_word(x, 3)
    assert m[()] == 1 and m[(0,)] == 1
    inv = magnus_of_word(x.inverse(), 3)
    # (1+X)^-1 = 1 - X + X^2 - ...
    assert inv[(0,)] == -1 and inv[(0, 0)] == 1 and inv[(0, 0, 0)] == -1
    prod = nc_mul(m, inv, 3)
    assert prod == nc_one()


def test_magnus_is_multiplicative():
    u = Word(((0, 1), (1, -2)))
    v = Word(((1, 1), (0, 3)))
    cap = 4
    assert magnus_of_word(u * v, cap) == nc_mul(
        magnus_of_word(u, cap), magnus_of_word(v, cap), cap
    )


def test_magnus_expand_degree_bounds():
    p = free_presentation(2)
    with pytest.raises(ValueError):
        magnus_expand(p, degree_cap=1)
    with pytest.raises(ValueError):
        magnus_expand(p, degree_cap=7)


def test_cup_tensor_z2():
    p = parse_presentation("gens: a b\nrels: [a,b]")
    cup = cup_tensor(p)
    assert cup.b1 == 2 and cup.h2_dim == 1
    w = cup.pairing([Fraction(1), Fraction(0)], [Fraction(0), Fraction(1)])
    assert any(w)
    # antisymmetry
    wr = cup.pairing([Fraction(0), Fraction(1)], [Fraction(1), Fraction(0)])
    assert all(a == -b for a, b in zip(w, wr))
    assert all(x == 0 for x in cup.pairing([Fraction(1), Fraction(0)], [Fraction(1), Fraction(0)]))


def test_cup_tensor_free_is_zero():
    cup = cup_tensor(free_presentation(3))
    assert cup.h2_dim == 0


def test_cup_tensor_surface_symplectic():
    cup = cup_tensor(surface_presentation(2, 0))
    assert cup.b1 == 4 and cup.h2_dim == 1
    # a_i pairs with b_i only
    e = lambda i: [Fraction(int(j == i)) for j in range(4)]
    assert any(cup.pairing(e(0), e(1)))
    assert any(cup.pairing(e(2), e(3)))
    assert not any(cup.pairing(e(0), e(2)))
    assert not any(cup.pairing(e(0), e(3)))
    assert not any(cup.pairing(e(1), e(2)))


def test_cup_tensor_raag_edges():
    g = parse_graph("vertices: a b c\nedges:\na b\nb c")
    cup = cup_tensor(raag_presentation(g))
    assert cup.b1 == 3 and cup.h2_dim == 2
    e = lambda i: [Fraction(int(j == i)) for j in range(3)]
    assert any(cup.pairing(e(0), e(1)))  # edge ab
    assert any(cup.pairing(e(1), e(2)))  # edge bc
    assert not any(cup.pairing(e(0), e(2)))  # non-edge ac


def test_mu_matrix_matches_pairing():
    cup = cup_tensor(surface_presentation(2, 0))
    u = [Fraction(1), Fraction(2), Fraction(-1), Fraction(3)]
    m = cup.mu_matrix(u)
    for j in range(4):
        v = [Fraction(int(t == j)) for t in range(4)]
        col = cup.pairing(u, v)
        assert [m[h][j] for h in range(cup.h2_dim)] == col
