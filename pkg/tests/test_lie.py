"""Free Lie algebra combinatorics and Malcev graded quotients."""

import pytest

from jumploci.lie import (
    DegreeVerdict,
    bracket_expand,
    free_lie_dims,
    lyndon_words,
    malcev_truncation,
    morgan_degree_check,
    relator_logs,
    standard_bracketing,
)
from jumploci.presentations import (
    free_presentation,
    parse_presentation,
    raag_presentation,
    surface_presentation,
)
from jumploci.graphs import parse_graph


def test_witt_dims_match_lyndon_counts():
    for n in (2, 3):
        dims = free_lie_dims(n, 5)
        for d in range(1, 6):
            assert dims[d - 1] == len(lyndon_words(n, d))
    assert free_lie_dims(2, 5) == [2, 1, 2, 3, 6]


def test_standard_bracketing_antisymmetry():
    # [x,y] expands to xy - yx
    t = standard_bracketing((0, 1))
    exp = bracket_expand(t)
    assert exp == {(0, 1): 1, (1, 0): -1}


def test_relator_logs_are_lie_elements():
    pres = surface_presentation(2, 0)
    logs = relator_logs(pres, degree_cap=4)
    assert len(logs.coords) == 1
    # the leading term of the surface relator log is in degree 2
    degrees = sorted(d for d, v in logs.coords[0].items() if any(v))
    assert degrees and degrees[0] == 2


def test_free_group_truncation():
    q = malcev_truncation(free_presentation(2), degree_cap=4)
    assert q.dims == tuple(free_lie_dims(2, 4))
    assert q.generator_degrees() == [1]
    assert q.relation_degrees() == []


def test_abelian_truncation():
    q = malcev_truncation(parse_presentation("gens: a b\nrels: [a,b]"), degree_cap=4)
    assert q.dims == (2, 0, 0, 0)
    assert q.generator_dims[1] == 2
    assert q.relation_dims.get(2, 0) == 1


def test_heisenberg_truncation():
    p = parse_presentation("gens: x y z\nrels:\n[x,y] z^-1\n[x,z]\n[y,z]")
    q = malcev_truncation(p, degree_cap=4)
    # gr_1 = <x, y>, gr_2 = <z>, nothing beyond
    assert q.dims == (2, 1, 0, 0)
    assert q.generator_degrees() == [1]
    # relations [x,[x,y]] and [y,[x,y]] in degree 3
    assert q.relation_dims.get(3, 0) == 2


def test_surface_truncation_quadratic():
    q = malcev_truncation(surface_presentation(2, 0), degree_cap=4)
    assert q.generator_degrees() == [1]
    assert q.relation_degrees() == [2]
    assert q.dims[0] == 4 and q.dims[1] == 5  # C(4,2) - 1


def test_raag_degree2_dims():
    for text in (
        "vertices: a b c\nedges:\na b",
        "vertices: a b c d\nedges:\na b\nb c\nc d",
    ):
        g = parse_graph(text)
        n = len(g.vertices)
        q = malcev_truncation(raag_presentation(g), degree_cap=4)
        assert q.dims[0] == n
        assert q.dims[1] == n * (n - 1) // 2 - len(g.edges)
        assert q.generator_degrees() == [1]
        assert q.relation_degrees() == [2]


def test_morgan_checks():
    surf = malcev_truncation(surface_presentation(2, 0), degree_cap=4)
    assert morgan_degree_check(surf, "projective").passed
    assert morgan_degree_check(surf, "quasiprojective").passed

    heis = malcev_truncation(
        parse_presentation("gens: x y z\nrels:\n[x,y] z^-1\n[x,z]\n[y,z]"),
        degree_cap=4,
    )
    v = morgan_degree_check(heis, "projective")
    assert not v.passed and v.witness == ("relation", 3)
    assert morgan_degree_check(heis, "quasiprojective").passed
    assert "degree 4" in v.annotation

    with pytest.raises(ValueError):
        morgan_degree_check(surf, "affine")


def test_degree_cap_bounds():
    with pytest.raises(ValueError):
        malcev_truncation(free_presentation(2), degree_cap=6)
    with pytest.raises(ValueError):
        morgan_degree_check(
            malcev_truncation(free_presentation(2), degree_cap=2), "projective"
        )
