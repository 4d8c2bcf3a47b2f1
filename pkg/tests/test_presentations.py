"""Parser, word arithmetic, abelianization, and cyclic covers."""

import random

import pytest

from jumploci.presentations import (
    ParseError,
    commutator,
    Presentation,
    Word,
    abelianization,
    cyclic_cover_presentation,
    direct_product,
    free_presentation,
    parse_presentation,
    raag_presentation,
    surface_presentation,
    trivial_presentation,
)
from jumploci.graphs import parse_graph


def test_grammar_examples():
    p = parse_presentation("gens: a b\nrels: [a,b]")
    assert p.ngens == 2 and len(p.relators) == 1
    assert p.relators[0].exponent_vector(2) == [0, 0]

    free = parse_presentation("gens: a b\nrels:")
    assert free.ngens == 2 and not free.relators

    z3 = parse_presentation("gens: a\nrels: a^3")
    assert abelianization(z3).torsion == (3,)


def test_comments_and_parens():
    p = parse_presentation("# header\ngens: a b  # two\nrels:\n(a b)^2  # square\n")
    assert p.relators[0].letters() == [(0, 1), (1, 1), (0, 1), (1, 1)]


def test_parse_errors_have_positions():
    with pytest.raises(ParseError) as e:
        parse_presentation("gens: a\nrels: b")
    assert e.value.line == 2
    with pytest.raises(ParseError):
        parse_presentation("rels:")
    with pytest.raises(ParseError):
        parse_presentation("gens: a b\nrels: [a,b")


def test_word_arithmetic():
    w = Word(((0, 1), (1, 1)))
    assert (w * w.inverse()).is_identity()
    c = commutator(Word.gen(0), Word.gen(1))
    assert c.exponent_vector(2) == [0, 0]
    assert c.inverse().inverse() == c


def test_free_reduction_random_roundtrip():
    rng = random.Random(5)
    for _ in range(100):
        letters = [(rng.randrange(3), rng.choice([1, -1])) for _ in range(rng.randrange(12))]
        w = Word(tuple(letters))
        assert (w * w.inverse()).is_identity()
        # format/parse roundtrip through a presentation body
        p = Presentation(("a", "b", "c"), (w,) if not w.is_identity() else ())
        q = parse_presentation(p.format())
        assert q.relators == p.relators


def test_abelianization_fixtures():
    assert abelianization(free_presentation(4)).b1 == 4
    ab = abelianization(parse_presentation("gens: a\nrels: a^4"))
    assert (ab.b1, ab.torsion) == (0, (4,))
    ab = abelianization(parse_presentation("gens: a b\nrels:\na^2\nb^3"))
    assert ab.b1 == 0 and sorted(ab.torsion) == [6] or ab.torsion == (6,)
    s = surface_presentation(2, 0)
    assert abelianization(s).b1 == 4
    assert abelianization(surface_presentation(1, 1)).b1 == 2  # free of rank 2
    assert abelianization(trivial_presentation()).b1 == 0


def test_raag_and_product():
    g = parse_graph("vertices: a b c\nedges:\na b\nb c\n")
    p = raag_presentation(g)
    assert p.ngens == 3 and len(p.relators) == 2
    d = direct_product(free_presentation(2), free_presentation(2))
    ab = abelianization(d)
    assert ab.b1 == 4 and not ab.torsion
    assert len(d.relators) == 4  # cross commutators


def test_basis_map_kills_relators():
    # the abelianization basis map must send every relator exponent vector to 0
    rng = random.Random(9)
    for _ in range(30):
        n = rng.randint(1, 4)
        rels = []
        for _ in range(rng.randint(0, 3)):
            letters = [(rng.randrange(n), rng.choice([1, -1])) for _ in range(rng.randrange(1, 8))]
            w = Word(tuple(letters))
            if not w.is_identity():
                rels.append(w)
        p = Presentation(tuple("g%d" % i for i in range(n)), tuple(rels))
        ab = abelianization(p)
        for r in p.relators:
            assert ab.free_image(r, n) == (0,) * ab.b1


def test_cover_index_and_euler():
    # index-N subgroup of F_n is free of rank N(n-1)+1
    rng = random.Random(1)
    for n in (2, 3):
        for order in (2, 3, 4):
            phi = [1] + [rng.randrange(order) for _ in range(n - 1)]
            c = cyclic_cover_presentation(free_presentation(n), phi, order)
            assert not c.relators
            assert c.ngens == order * (n - 1) + 1


def test_cover_of_finite_cyclic():
    p = parse_presentation("gens: a\nrels: a^4")
    c = cyclic_cover_presentation(p, [1], 2)
    ab = abelianization(c)
    assert ab.b1 == 0 and ab.torsion == (2,)


def test_cover_requires_surjectivity():
    p = free_presentation(2)
    with pytest.raises(ValueError):
        cyclic_cover_presentation(p, [2, 2], 4)
    with pytest.raises(ValueError):
        cyclic_cover_presentation(p, [1], 2)  # wrong phi length
