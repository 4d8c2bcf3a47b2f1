"""Command line interface.

Exit codes: 0 success, 1 parse/usage error, 2 internal computation
failure.  Verdicts never change the exit code.
"""

import argparse
import json
import sys

from .charvar import charvar_ideal, torsion_point_candidates
from .fox import alexander_matrix, h1_dim_finite_character
from .graphs import GraphError, parse_graph
from .lie import malcev_truncation, morgan_degree_check
from .magnus import cup_tensor
from .obstructions import raag_classify, run_battery
from .presentations import (
    ParseError,
    abelianization,
    cyclic_cover_presentation,
    parse_presentation,
)
from .resonance import ResonanceLocus, SamplerConfig, resonance_components

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INTERNAL = 2


class _Parser(argparse.ArgumentParser):
    # usage errors must exit 1, not argparse's default 2
    def error(self, message):
        self.print_usage(sys.stderr)
        sys.stderr.write("error: %s\n" % message)
        raise SystemExit(EXIT_USAGE)


def _emit(args, payload, text_lines):
    if args.json:
        print(json.dumps(payload, indent=2))
    else:
        for line in text_lines:
            print(line)


def _load_presentation(path):
    try:
        with open(path) as fh:
            text = fh.read()
    except OSError as exc:
        print("error: %s" % exc, file=sys.stderr)
        raise SystemExit(EXIT_USAGE)
    try:
        return parse_presentation(text)
    except ParseError as exc:
        print("parse error: %s" % exc, file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _load_graph(path):
    try:
        with open(path) as fh:
            text = fh.read()
    except OSError as exc:
        print("error: %s" % exc, file=sys.stderr)
        raise SystemExit(EXIT_USAGE)
    try:
        return parse_graph(text)
    except (ParseError, GraphError) as exc:
        print("parse error: %s" % exc, file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _cmd_resonance(args):
    pres = _load_presentation(args.file)
    ab = abelianization(pres)
    config = SamplerConfig(seed=args.seed, samples=args.samples)
    locus = ResonanceLocus(k=args.k, b1=ab.b1, cup=cup_tensor(pres))
    components, uncertified = resonance_components(locus, config)
    payload = {
        "input": args.file,
        "b1": ab.b1,
        "torsion": list(ab.torsion),
        "k": args.k,
        "seed": args.seed,
        "components": [
            {
                "kind": "linear",
                "k": args.k,
                "dim": c.dim,
                "basis": [list(r) for r in c.basis],
                "translate": None,
                "certified": True,
            }
            for c in components
        ]
        + [
            {
                "kind": "linear",
                "k": args.k,
                "dim": len(sp),
                "basis": [list(r) for r in sp],
                "translate": None,
                "certified": False,
            }
            for sp in uncertified
        ],
    }
    lines = ["b1 = %d, k = %d" % (ab.b1, args.k)]
    if not payload["components"]:
        lines.append("R^1_%d has no positive-dimensional components" % args.k)
    for c in payload["components"]:
        lines.append(
            "component dim %d%s: basis %s"
            % (c["dim"], "" if c["certified"] else " (uncertified)", c["basis"])
        )
    _emit(args, payload, lines)
    return EXIT_OK


def _cmd_charvar(args):
    pres = _load_presentation(args.file)
    amat = alexander_matrix(pres)
    ideal = charvar_ideal(amat, args.k)
    torsion_points = []
    if args.torsion_bound:
        torsion_points = torsion_point_candidates(ideal, order_bound=args.torsion_bound)
    payload = {
        "input": args.file,
        "b1": ideal.b1,
        "k": args.k,
        "seed": args.seed,
        "includes_identity": ideal.includes_identity,
        "generators": [g.format() for g in ideal.gens],
        "torsion_points": [
            {"order": pt.torsion_order, "coords": [str(c) for c in pt.coords]}
            for pt in torsion_points
        ],
    }
    lines = ["b1 = %d, k = %d" % (ideal.b1, args.k)]
    if ideal.is_zero_ideal():
        lines.append("V^1_%d is the whole character torus (zero ideal)" % args.k)
    else:
        lines.append("ideal generators (%d):" % len(ideal.gens))
        lines.extend("  " + g for g in payload["generators"])
    lines.append("identity in V^1_%d: %s" % (args.k, ideal.includes_identity))
    for pt in payload["torsion_points"]:
        lines.append("torsion point of order %d: %s" % (pt["order"], pt["coords"]))
    _emit(args, payload, lines)
    return EXIT_OK


def _cmd_malcev(args):
    pres = _load_presentation(args.file)
    q = malcev_truncation(pres, degree_cap=args.degree)
    verdicts = {}
    for klass in ("projective", "quasiprojective"):
        need = 3 if klass == "projective" else 4
        if args.degree >= need:
            v = morgan_degree_check(q, klass)
            verdicts[klass] = {"passed": v.passed, "witness": list(v.witness) if v.witness else None}
    payload = {
        "input": args.file,
        "truncation_degree": args.degree,
        "graded_dims": list(q.dims),
        "generator_degrees": q.generator_degrees(),
        "relation_degrees": q.relation_degrees(),
        "morgan": verdicts,
    }
    lines = [
        "graded dims (degrees 1..%d): %s" % (args.degree, list(q.dims)),
        "generator degrees: %s (up to degree %d)" % (q.generator_degrees(), args.degree),
        "relation degrees: %s (up to degree %d)" % (q.relation_degrees(), args.degree),
    ]
    for klass, v in verdicts.items():
        lines.append(
            "%s degree bounds: %s%s"
            % (
                klass,
                "PASS" if v["passed"] else "FAIL",
                "" if not v["witness"] else " (witness %s degree %s)" % tuple(v["witness"]),
            )
        )
    _emit(args, payload, lines)
    return EXIT_OK


def _cmd_obstruct(args):
    if (args.file is None) == (args.graph is None):
        print("error: provide exactly one of <file> or --graph", file=sys.stderr)
        return EXIT_USAGE
    if args.graph is not None:
        obj = _load_graph(args.graph)
        label = args.graph
    else:
        obj = _load_presentation(args.file)
        label = args.file
    config = SamplerConfig(seed=args.seed, samples=args.samples)
    report = run_battery(
        obj,
        args.variety_class,
        formal=True if args.formal else None,
        label=label,
        config=config,
        degree=args.degree,
    )
    payload = report.to_dict()
    lines = ["input: %s  (class %s, b1 = %d)" % (label, args.variety_class, report.b1)]
    for c in report.checks:
        lines.append("  %-24s %s" % (c.name, c.verdict))
    lines.append("overall: %s" % report.overall)
    _emit(args, payload, lines)
    return EXIT_OK


def _cmd_raag(args):
    graph = _load_graph(args.graph)
    cls = raag_classify(graph)
    payload = {
        "input": args.graph,
        "realizable": cls.realizable,
        "witness": cls.witness,
        "projective_realizable": cls.projective_realizable,
        "projective_witness": cls.projective_witness,
    }
    lines = ["realizable: %s" % cls.realizable]
    if cls.realizable:
        lines.append("product: %s" % cls.witness["product"])
    else:
        lines.append("complement induced path: %s" % (cls.witness["complement_path"],))
    lines.append("projective: %s" % cls.projective_realizable)
    _emit(args, payload, lines)
    return EXIT_OK


def _cmd_cover(args):
    pres = _load_presentation(args.file)
    try:
        phi = [int(x) for x in args.phi.split(",")]
    except ValueError:
        print("error: --phi wants comma-separated integers", file=sys.stderr)
        return EXIT_USAGE
    if len(phi) != pres.ngens:
        print(
            "error: --phi needs %d entries, got %d" % (pres.ngens, len(phi)),
            file=sys.stderr,
        )
        return EXIT_USAGE
    try:
        cover = cyclic_cover_presentation(pres, phi, args.order)
    except ValueError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_USAGE
    ab = abelianization(cover)
    decomposition = [
        h1_dim_finite_character(pres, phi, args.order, power=j) for j in range(args.order)
    ]
    payload = {
        "input": args.file,
        "phi": phi,
        "order": args.order,
        "cover_ngens": cover.ngens,
        "cover_nrels": len(cover.relators),
        "cover_presentation": cover.format(),
        "cover_b1": ab.b1,
        "cover_torsion": list(ab.torsion),
        "character_decomposition": decomposition,
    }
    lines = [
        "cover: %d generators, %d relators" % (cover.ngens, len(cover.relators)),
        "cover b1 = %d, torsion %s" % (ab.b1, list(ab.torsion)),
        "sum over order-%d characters of dim H^1 = %d  (%s)"
        % (args.order, sum(decomposition), decomposition),
    ]
    _emit(args, payload, lines)
    return EXIT_OK


def build_parser():
    p = _Parser(prog="jumploci", description="jump loci and obstruction battery")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, samples=True):
        if samples:
            sp.add_argument("--samples", type=int, default=200)
            sp.add_argument("--seed", type=int, default=20240901)
        sp.add_argument("--json", action="store_true")

    sp = sub.add_parser("resonance", help="resonance variety components")
    sp.add_argument("file")
    sp.add_argument("--k", type=int, default=1)
    common(sp)
    sp.set_defaults(func=_cmd_resonance)

    sp = sub.add_parser("charvar", help="characteristic variety ideal")
    sp.add_argument("file")
    sp.add_argument("--k", type=int, default=1)
    sp.add_argument("--torsion-bound", type=int, default=0)
    common(sp)
    sp.set_defaults(func=_cmd_charvar)

    sp = sub.add_parser("malcev", help="graded Malcev quotient and degree bounds")
    sp.add_argument("file")
    sp.add_argument("--degree", type=int, default=4)
    common(sp, samples=False)
    sp.set_defaults(func=_cmd_malcev)

    sp = sub.add_parser("obstruct", help="run the obstruction battery")
    sp.add_argument("file", nargs="?", default=None)
    sp.add_argument("--graph", default=None)
    sp.add_argument(
        "--class",
        dest="variety_class",
        required=True,
        choices=("projective", "quasiprojective"),
    )
    sp.add_argument("--formal", action="store_true")
    sp.add_argument("--degree", type=int, default=4)
    common(sp)
    sp.set_defaults(func=_cmd_obstruct)

    sp = sub.add_parser("raag", help="classify a right-angled Artin group")
    sp.add_argument("--graph", required=True)
    common(sp, samples=False)
    sp.set_defaults(func=_cmd_raag)

    sp = sub.add_parser("cover", help="cyclic cover presentation and b1")
    sp.add_argument("file")
    sp.add_argument("--phi", required=True)
    sp.add_argument("--order", type=int, required=True)
    common(sp, samples=False)
    sp.set_defaults(func=_cmd_cover)
    return p


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if exc.code is not None else EXIT_USAGE
    try:
        return args.func(args)
    except SystemExit as exc:
        return exc.code if exc.code is not None else EXIT_USAGE
    except ParseError as exc:
        print("parse error: %s" % exc, file=sys.stderr)
        return EXIT_USAGE
    except Exception as exc:  # noqa: BLE001 - internal failures exit 2
        print("internal error: %s" % exc, file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
