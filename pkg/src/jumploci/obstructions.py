"""The obstruction battery: necessary conditions for normal-variety groups.

Each check returns pass ("no obstruction found"), fail (a necessary
condition is definitively violated, with machine-readable evidence), or
inconclusive (a computation could not certify).  run_battery assembles the
checks in a fixed, cheap-first order into a stable report.
"""

import random
from dataclasses import dataclass
from fractions import Fraction

from .charvar import charvar_ideal, exp_map, subtorus_verify
from .exact.linalg import rank_rational, subspace_intersection
from .fox import alexander_matrix
from .graphs import complete_multipartite_decomposition
from .lie import malcev_truncation, morgan_degree_check
from .magnus import cup_tensor
from .presentations import abelianization, raag_presentation
from .resonance import (
    ResonanceLocus,
    SamplerConfig,
    resonance_components,
    resonance_member,
)

PASS = "pass"
FAIL = "fail"
INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class IsotropyClass:
    """Isotropy data of a resonance component E: rank p of cup(E x E) in H^2.

    pairing_nondegenerate is meaningful only when p = 1, where the image
    line induces a single skew form on E.
    """

    component: object
    p: int
    pairing_nondegenerate: bool


@dataclass(frozen=True)
class CheckResult:
    name: str
    verdict: str
    evidence: object


@dataclass(frozen=True)
class ObstructionReport:
    input_label: str
    variety_class: str
    b1: int
    torsion: tuple
    checks: tuple  # CheckResult, fixed order
    components: tuple  # JSON-ready component dicts
    overall: str
    seed: int
    truncation_degree: object  # int or None

    def to_dict(self):
        return {
            "input": self.input_label,
            "class": self.variety_class,
            "b1": self.b1,
            "torsion": list(self.torsion),
            "checks": [
                {"name": c.name, "verdict": c.verdict, "evidence": _jsonable(c.evidence)}
                for c in self.checks
            ],
            "components": [_jsonable(c) for c in self.components],
            "overall": self.overall,
            "seed": self.seed,
            "truncation_degree": self.truncation_degree,
        }


def _jsonable(x):
    """Recursively convert evidence to JSON-safe values (Fractions become strings)."""
    if isinstance(x, Fraction):
        return int(x) if x.denominator == 1 else "%d/%d" % (x.numerator, x.denominator)
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if isinstance(x, bool) or x is None or isinstance(x, (int, str)):
        return x
    return str(x)


# -- individual checks ----------------------------------------------------


def check_even_b1(pres, ab=None):
    """Projective normal varieties have even first Betti number."""
    if ab is None:
        ab = abelianization(pres)
    verdict = PASS if ab.b1 % 2 == 0 else FAIL
    return CheckResult("even_b1", verdict, {"b1": ab.b1})


def isotropy_class(component, cup):
    """p and pairing data of the restricted cup product on a component."""
    basis = [list(r) for r in component.basis]
    d = len(basis)
    images = []
    pairs = []
    for i in range(d):
        for j in range(i + 1, d):
            w = cup.pairing([Fraction(x) for x in basis[i]], [Fraction(x) for x in basis[j]])
            pairs.append(((i, j), w))
            if any(w):
                images.append(list(w))
    p = rank_rational(images) if images else 0
    nondeg = False
    if p == 1:
        ref = next(w for _, w in pairs if any(w))
        t = next(h for h, x in enumerate(ref) if x)
        lam = [[Fraction(0)] * d for _ in range(d)]
        for (i, j), w in pairs:
            c = Fraction(w[t], 1) / ref[t]
            lam[i][j] = c
            lam[j][i] = -c
        nondeg = rank_rational(lam) == d
    return IsotropyClass(component=component, p=p, pairing_nondegenerate=nondeg)


def check_isotropy(components, cup):
    """Every component must be p-isotropic, p in {0,1}, of dimension >= 2p+2."""
    classes = [isotropy_class(c, cup) for c in components]
    evidence = []
    verdict = PASS
    for cls in classes:
        ok = (
            cls.p in (0, 1)
            and cls.component.dim >= 2 * cls.p + 2
            and (cls.p != 1 or cls.pairing_nondegenerate)
        )
        evidence.append(
            {
                "basis": [list(r) for r in cls.component.basis],
                "dim": cls.component.dim,
                "p": cls.p,
                "pairing_nondegenerate": cls.pairing_nondegenerate,
                "ok": ok,
            }
        )
        if not ok:
            verdict = FAIL
    return classes, CheckResult("isotropy", verdict, evidence)


def check_pairwise_intersections(components):
    """Distinct components of the resonance variety must intersect in 0."""
    verdict = PASS
    offending = []
    for i in range(len(components)):
        for j in range(i + 1, len(components)):
            inter = subspace_intersection(
                [list(r) for r in components[i].basis],
                [list(r) for r in components[j].basis],
            )
            if inter:
                verdict = FAIL
                offending.append(
                    {
                        "pair": [i, j],
                        "intersection_dim": len(inter),
                        "intersection_basis": [list(r) for r in inter],
                    }
                )
    return CheckResult(
        "pairwise_intersections",
        verdict,
        {"n_components": len(components), "offending": offending},
    )


def check_tangent_cone(components, ideal, locus, formal=True, seed=20240901):
    """Resonance components must exponentiate into V^1_k, and conversely.

    exp(E) in V^1_k is certified by symbolic substitution; the converse
    takes each certified subtorus through 1 (those same exponentials) and
    checks its direction space inside R^1_k on a basis and on random
    rational combinations.  Without a 1-formality assumption the exp
    containment is only labeled partial, so a failure is inconclusive
    rather than definitive.
    """
    rng = random.Random(seed)
    verdict = PASS
    evidence = []
    for comp in components:
        sub = exp_map(comp)
        in_v = subtorus_verify(ideal, sub)
        dirs_ok = True
        base = [list(r) for r in comp.basis]
        probes = [list(r) for r in comp.basis]
        for _ in range(5):
            v = [Fraction(0)] * locus.b1
            for row in base:
                c = Fraction(rng.randint(-9, 9), rng.randint(1, 9))
                for t in range(locus.b1):
                    v[t] += c * row[t]
            if any(v):
                probes.append(v)
        for u in probes:
            if not resonance_member(locus, u):
                dirs_ok = False
                break
        evidence.append(
            {
                "basis": base,
                "exp_in_charvar": in_v,
                "directions_in_resonance": dirs_ok,
            }
        )
        if not dirs_ok:
            verdict = FAIL
        elif not in_v:
            verdict = FAIL if formal else INCONCLUSIVE
    return CheckResult(
        "tangent_cone",
        verdict,
        {"k": locus.k, "formal": bool(formal), "components": evidence},
    )


def curve_profiles(d, k):
    """Curve profiles (g, s) compatible with a dimension-d, level-k component.

    Punctured: d = 2g + s - 1, k = d - 1, E(C) = 2 - 2g - s <= 0;
    projective: d = 2g, k = 2g - 2, g >= 2.
    """
    out = []
    if k == d - 1 and d >= 2:
        g = 0
        while True:
            s = d + 1 - 2 * g
            if s < 0:
                break
            if 2 - 2 * g - s <= 0:
                out.append({"type": "punctured", "g": g, "s": s})
            g += 1
    if k == d - 2 and d % 2 == 0 and d >= 4:
        out.append({"type": "projective", "g": d // 2, "s": 0})
    return out


def check_curve_profiles(components):
    """Positive-dimensional components must match a pulled-back-curve profile."""
    verdict = PASS
    evidence = []
    for comp in components:
        profiles = curve_profiles(comp.dim, comp.k_max)
        evidence.append(
            {
                "dim": comp.dim,
                "k": comp.k_max,
                "profiles": profiles,
            }
        )
        if not profiles:
            verdict = FAIL
    return CheckResult("curve_profiles", verdict, evidence)


def check_morgan(pres, variety_class, degree=4):
    """Degree bounds on the graded Malcev quotient (generators and relations)."""
    quotient = malcev_truncation(pres, degree_cap=degree)
    v = morgan_degree_check(quotient, variety_class)
    return (
        quotient,
        CheckResult(
            "morgan_degrees",
            PASS if v.passed else FAIL,
            {
                "generator_degrees": quotient.generator_degrees(),
                "relation_degrees": quotient.relation_degrees(),
                "witness": list(v.witness) if v.witness else None,
                "annotation": v.annotation,
            },
        ),
    )


@dataclass(frozen=True)
class RaagClassification:
    realizable: bool
    witness: object
    projective_realizable: bool
    projective_witness: object


def raag_classify(graph):
    """Is the RAAG of the graph realizable as pi_1 of a normal variety?

    Realizable iff the graph is complete multipartite, i.e. the group is a
    finite product of free groups; the projective sub-case additionally
    needs a complete graph (free abelian group) of even rank.
    """
    parts, bad = complete_multipartite_decomposition(graph)
    if parts is None:
        witness = {"complement_path": list(bad)}
        return RaagClassification(False, witness, False, witness)
    sizes = sorted((len(p) for p in parts), reverse=True)
    product = " x ".join(
        ("Z" if s == 1 else "F_%d" % s) for s in sizes
    )
    witness = {
        "multipartition": [sorted(p) for p in parts],
        "product": product,
    }
    if all(s == 1 for s in sizes):
        rank = len(sizes)
        if rank % 2 == 0:
            return RaagClassification(True, witness, True, {"rank": rank})
        return RaagClassification(
            True, witness, False, {"rank": rank, "reason": "odd rank"}
        )
    return RaagClassification(
        True, witness, False, {"reason": "not a free abelian group"}
    )


def check_raag(graph, variety_class):
    cls = raag_classify(graph)
    if variety_class == "projective":
        ok = cls.projective_realizable
        witness = cls.projective_witness
    else:
        ok = cls.realizable
        witness = cls.witness
    return CheckResult(
        "raag_classification",
        PASS if ok else FAIL,
        {
            "realizable": cls.realizable,
            "projective_realizable": cls.projective_realizable,
            "witness": witness,
        },
    )


# -- battery --------------------------------------------------------------


def _component_dicts(components, k, uncertified):
    out = []
    for c in components:
        out.append(
            {
                "kind": "linear",
                "k": k,
                "dim": c.dim,
                "basis": [list(r) for r in c.basis],
                "translate": None,
                "certified": True,
            }
        )
    for sp in uncertified:
        out.append(
            {
                "kind": "linear",
                "k": k,
                "dim": len(sp),
                "basis": [list(r) for r in sp],
                "translate": None,
                "certified": False,
            }
        )
    return out


def run_battery(
    obj,
    variety_class,
    formal=None,
    label=None,
    config=None,
    degree=4,
    k=1,
):
    """Run the full obstruction battery on a presentation or a graph.

    obj is a Presentation or a SimpleGraph (the latter goes through its
    RAAG); one failing computation downgrades its own check to
    inconclusive without aborting the rest.
    """
    if variety_class not in ("projective", "quasiprojective"):
        raise ValueError("variety class must be projective or quasiprojective")
    graph = None
    if hasattr(obj, "vertices"):
        graph = obj
        pres = raag_presentation(graph)
        if formal is None:
            formal = True  # RAAGs are 1-formal
        if label is None:
            label = "raag(%s)" % ",".join(str(v) for v in graph.vertices)
    else:
        pres = obj
        if formal is None:
            formal = not pres.relators  # free groups are 1-formal
        if label is None:
            label = pres.format()
    if config is None:
        config = SamplerConfig()

    ab = abelianization(pres)
    checks = []
    components = []
    comp_dicts = []

    if variety_class == "projective":
        checks.append(check_even_b1(pres, ab))

    # resonance component discovery feeds most later checks
    locus = None
    try:
        cup = cup_tensor(pres)
        locus = ResonanceLocus(k=k, b1=ab.b1, cup=cup)
        components, uncertified = resonance_components(locus, config)
        comp_dicts = _component_dicts(components, k, uncertified)
        verdict = INCONCLUSIVE if uncertified else PASS
        checks.append(
            CheckResult(
                "resonance_components",
                verdict,
                {
                    "n_certified": len(components),
                    "n_uncertified": len(uncertified),
                    "dims": [c.dim for c in components],
                },
            )
        )
    except Exception as exc:  # noqa: BLE001 - check-level granularity
        checks.append(
            CheckResult("resonance_components", INCONCLUSIVE, {"error": str(exc)})
        )

    if locus is not None:
        _, c = check_isotropy(components, locus.cup)
        checks.append(c)
        checks.append(check_pairwise_intersections(components))
        try:
            ideal = charvar_ideal(alexander_matrix(pres), k)
            checks.append(
                check_tangent_cone(components, ideal, locus, formal=formal, seed=config.seed)
            )
        except Exception as exc:  # noqa: BLE001
            checks.append(CheckResult("tangent_cone", INCONCLUSIVE, {"error": str(exc)}))
        checks.append(check_curve_profiles(components))
    else:
        for name in ("isotropy", "pairwise_intersections", "tangent_cone", "curve_profiles"):
            checks.append(CheckResult(name, INCONCLUSIVE, {"error": "no resonance data"}))

    truncation_degree = None
    try:
        _, c = check_morgan(pres, variety_class, degree=degree)
        truncation_degree = degree
        checks.append(c)
    except Exception as exc:  # noqa: BLE001
        checks.append(CheckResult("morgan_degrees", INCONCLUSIVE, {"error": str(exc)}))

    if graph is not None:
        checks.append(check_raag(graph, variety_class))

    if any(c.verdict == FAIL for c in checks):
        overall = FAIL
    elif any(c.verdict == INCONCLUSIVE for c in checks):
        overall = INCONCLUSIVE
    else:
        overall = PASS

    return ObstructionReport(
        input_label=label,
        variety_class=variety_class,
        b1=ab.b1,
        torsion=tuple(ab.torsion),
        checks=tuple(checks),
        components=tuple(comp_dicts),
        overall=overall,
        seed=config.seed,
        truncation_degree=truncation_degree,
    )
