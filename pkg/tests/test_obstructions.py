"""The obstruction battery on known fixtures."""

import json

from jumploci.graphs import parse_graph
from jumploci.obstructions import (
    raag_classify,
    run_battery,
)
from jumploci.presentations import (
    free_presentation,
    parse_presentation,
    surface_presentation,
)


def by_name(report):
    return {c.name: c for c in report.checks}


def test_surface_genus2_projective_passes():
    rep = run_battery(surface_presentation(2, 0), "projective", formal=True)
    assert rep.overall == "pass"
    for c in rep.checks:
        assert c.verdict != "fail", c.name


def test_free_odd_b1_projective_fails_parity():
    rep = run_battery(free_presentation(3), "projective")
    assert rep.overall == "fail"
    assert by_name(rep)["even_b1"].verdict == "fail"


def test_free_group_quasiprojective_passes():
    rep = run_battery(free_presentation(3), "quasiprojective")
    assert rep.overall == "pass"
    assert "even_b1" not in by_name(rep)  # parity applies to projective only


def test_heisenberg_projective_fails_morgan():
    p = parse_presentation("gens: x y z\nrels:\n[x,y] z^-1\n[x,z]\n[y,z]")
    rep = run_battery(p, "projective", formal=False)
    assert by_name(rep)["morgan_degrees"].verdict == "fail"
    assert rep.overall == "fail"


def test_path_raag_not_projective():
    g = parse_graph("vertices: a b c d\nedges:\na b\nb c\nc d")
    rep = run_battery(g, "quasiprojective")
    assert rep.overall == "fail"
    assert by_name(rep)["raag_classification"].verdict == "fail"


def test_complete_multipartite_raag_passes():
    # K_{2,2} = complement of 2K_2: product of free groups F_2 x F_2
    g = parse_graph("vertices: a b c d\nedges:\na c\na d\nb c\nb d")
    rep = run_battery(g, "quasiprojective")
    assert rep.overall == "pass"


def test_complete_graph_projective():
    g4 = parse_graph("vertices: a b c d\nedges:\na b\na c\na d\nb c\nb d\nc d")
    assert run_battery(g4, "projective").overall == "pass"
    # odd rank abelian fails parity
    g3 = parse_graph("vertices: a b c\nedges:\na b\na c\nb c")
    rep = run_battery(g3, "projective")
    assert rep.overall == "fail"
    assert by_name(rep)["even_b1"].verdict == "fail"


def test_raag_classify():
    assert raag_classify(
        parse_graph("vertices: a b c d\nedges:\na c\na d\nb c\nb d")
    ).realizable
    assert not raag_classify(
        parse_graph("vertices: a b c d\nedges:\na b\nb c\nc d")
    ).realizable


def test_report_json_schema_and_determinism():
    p = surface_presentation(2, 0)
    d1 = run_battery(p, "projective", formal=True).to_dict()
    d2 = run_battery(p, "projective", formal=True).to_dict()
    assert json.dumps(d1, sort_keys=True) == json.dumps(d2, sort_keys=True)
    for key in ("input", "b1", "torsion", "checks", "components", "overall",
                "seed", "truncation_degree"):
        assert key in d1, key
    assert d1["b1"] == 4
    for c in d1["checks"]:
        assert c["verdict"] in ("pass", "fail", "inconclusive")
    json.dumps(d1)  # must be serializable


def test_check_order_is_fixed():
    rep = run_battery(surface_presentation(2, 0), "projective", formal=True)
    names = [c.name for c in rep.checks]
    assert names == sorted(names, key=names.index)  # trivially true; now pin it
    assert names[0] == "even_b1"
    assert "resonance_components" in names and "isotropy" in names
    assert names.index("resonance_components") < names.index("isotropy")
    assert names.index("isotropy") < names.index("pairwise_intersections")
    assert names.index("tangent_cone") < names.index("curve_profiles")
    assert names.index("curve_profiles") < names.index("morgan_degrees")
