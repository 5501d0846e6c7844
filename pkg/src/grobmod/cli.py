"""Command-line front end: ideal files in, human tables / JSON reports out.

Exit codes: 0 all requested checks pass, 1 a check failed, 2 usage or
parse error.
"""

import argparse
import json
import sys
from fractions import Fraction

from .ring import RingError, ParseError, FieldSpec, parse_ring_decl
from .groebner import (Ideal, verify_buchberger, buchberger_complete,
                       initial_ideal, intersect_ideals, regular_sequence_tail,
                       krull_dimension, artinian_analysis,
                       GroebnerCertificate)
from .matalg import jacobian_rank_at
from .strata import (StratumIndex, JordanType, enumerate_strata, stratum_type,
                     count_type, orbit_census)
from .papermodels import (EigenvalueData, classify_banal_local_ring,
                          run_paper_suite)

USAGE_ERROR, CHECK_FAILED, ALL_PASS = 2, 1, 0


def read_ideal_file(path):
    with open(path) as fh:
        lines = [ln.strip() for ln in fh if ln.strip()
                 and not ln.strip().startswith("#")]
    if not lines or not lines[0].startswith("ring"):
        raise ParseError("ideal file must start with a ring declaration", 0)
    ctx = parse_ring_decl(lines[0])
    if len(lines) < 2 or lines[1] != "gens:":
        raise ParseError("expected 'gens:' after the ring declaration", 0)
    gens = [ctx.parse(text) for text in lines[2:]]
    return Ideal(ctx, [g for g in gens if not g.is_zero()])


def read_point_file(path, ctx):
    with open(path) as fh:
        text = fh.read()
    values = [v.strip() for v in text.replace("\n", ",").split(",")
              if v.strip()]
    if len(values) != len(ctx.variables):
        raise ParseError("point has %d coordinates, ring has %d variables"
                         % (len(values), len(ctx.variables)), 0)
    return tuple(ctx.field.coerce(Fraction(v)) for v in values)


def parse_shape(text):
    return tuple(int(v) for v in text.split(","))


def parse_stratum(text, shape):
    text = text.strip()
    if text.startswith("(") and text.endswith(")"):
        text = text[1:-1]
    rows = []
    if text:
        for part in text.split(";"):
            rows.append(tuple(int(v) for v in part.split(",")))
    return StratumIndex(shape, rows)


def parse_field(text):
    if text == "QQ":
        return FieldSpec.rationals()
    if text.startswith("F"):
        return FieldSpec.prime_field(int(text[1:]))
    raise ParseError("field must be QQ or F<p>", 0)


def _cmd_gb(args):
    ideal = read_ideal_file(args.ideal_file)
    if args.action == "verify":
        result = verify_buchberger(ideal.generators)
        if isinstance(result, GroebnerCertificate):
            print("Groebner basis verified: %s" % result.summary())
            return ALL_PASS
        print("not a Groebner basis: pair (%d, %d) leaves remainder %s"
              % (result.i + 1, result.j + 1, result.remainder))
        return CHECK_FAILED
    gb = buchberger_complete(ideal.generators)
    for g in gb.elements:
        print(g)
    return ALL_PASS


def _cmd_intersect(args):
    I = read_ideal_file(args.first)
    J = read_ideal_file(args.second)
    gb = intersect_ideals(I, J)
    for g in gb.elements:
        print(g)
    return ALL_PASS


def _cmd_regseq(args):
    ideal = read_ideal_file(args.ideal_file)
    gb = buchberger_complete(ideal.generators)
    n = len(ideal.ctx.variables)
    r = n - args.tail + 1
    ok = regular_sequence_tail(gb, r)
    tail = gb.ctx.order.variable_permutation[r - 1:]
    print("tail (%s) regular: %s" % (",".join(reversed(tail)), ok))
    return ALL_PASS if ok else CHECK_FAILED


def _cmd_dim(args):
    ideal = read_ideal_file(args.ideal_file)
    gb = buchberger_complete(ideal.generators)
    print(krull_dimension(initial_ideal(gb)))
    return ALL_PASS


def _cmd_artinian(args):
    ideal = read_ideal_file(args.ideal_file)
    gb = buchberger_complete(ideal.generators)
    report = artinian_analysis(gb)
    if not report.finite:
        print("quotient is infinite-dimensional")
        return CHECK_FAILED
    print("dimension: %d" % report.vector_space_dimension)
    print("socle dimension: %d" % report.socle_dimension)
    print("gorenstein: %s" % report.is_gorenstein())
    return ALL_PASS


def _cmd_strata(args):
    shape = parse_shape(args.shape)
    if args.action == "enum":
        for P in sorted(enumerate_strata(shape), key=lambda P: P.rows):
            print(P)
        return ALL_PASS
    if args.action == "type":
        if args.argument is None:
            raise ParseError("strata type needs an index argument", 0)
        P = parse_stratum(args.argument, shape)
        print(stratum_type(P))
        return ALL_PASS
    if args.argument is None:
        raise ParseError("strata count needs a type argument", 0)
    jtype = JordanType(parse_shape(args.argument))
    print(count_type(shape, jtype))
    return ALL_PASS


def _cmd_orbits(args):
    shape = parse_shape(args.shape)
    census = orbit_census(shape, args.p)
    print("orbits: %d" % census["orbit_count"])
    for key in sorted(census["fibers"]):
        print("  %s: %d points" % (key, census["fibers"][key]))
    ok = census["matches_delta"]
    print("orbit partition matches rank invariant: %s" % ok)
    return ALL_PASS if ok else CHECK_FAILED


def _cmd_jacobian(args):
    ideal = read_ideal_file(args.ideal_file)
    point = read_point_file(args.point_file, ideal.ctx)
    print(jacobian_rank_at(ideal.generators, point))
    return ALL_PASS


def _cmd_classify(args):
    with open(args.data_file) as fh:
        data = json.load(fh)
    chains = [(c["label"], tuple(c["shape"])) for c in data["chains"]]
    sigma = [JordanType(c.get("sigma", [1] * sum(c["shape"])))
             for c in data["chains"]]
    ev = EigenvalueData(data["ell"], data["q"], chains)
    report = classify_banal_local_ring(
        ev, sigma, JordanType(data["inertial_type"]))
    print(json.dumps(report.to_dict(), indent=2))
    return CHECK_FAILED if report.case == "zero" else ALL_PASS


def _cmd_paper_suite(args):
    field = parse_field(args.field)
    report = run_paper_suite(field)
    for item in report["items"]:
        print("%-40s %s" % (item["name"], item["status"]))
    print("all pass: %s  (%.2fs, field %s)"
          % (report["all_pass"], report["timing"], report["field"]))
    if args.json:
        with open(args.json, "w") as fh:
            json.dump(report, fh, indent=2, default=str)
    return ALL_PASS if report["all_pass"] else CHECK_FAILED


def build_parser():
    parser = argparse.ArgumentParser(
        prog="grobmod",
        description="exact Groebner-basis engine and reproduction suite")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gb", help="verify or complete a Groebner basis")
    p.add_argument("action", choices=["verify", "complete"])
    p.add_argument("ideal_file")
    p.set_defaults(func=_cmd_gb)

    p = sub.add_parser("intersect", help="intersect two ideals")
    p.add_argument("first")
    p.add_argument("second")
    p.set_defaults(func=_cmd_intersect)

    p = sub.add_parser("regseq", help="check a tail regular sequence")
    p.add_argument("ideal_file")
    p.add_argument("--tail", type=int, required=True,
                   help="number of trailing permutation variables")
    p.set_defaults(func=_cmd_regseq)

    p = sub.add_parser("dim", help="Krull dimension of the quotient")
    p.add_argument("ideal_file")
    p.set_defaults(func=_cmd_dim)

    p = sub.add_parser("artinian", help="standard monomials and socle")
    p.add_argument("ideal_file")
    p.set_defaults(func=_cmd_artinian)

    p = sub.add_parser("strata", help="stratum index combinatorics")
    p.add_argument("action", choices=["enum", "type", "count"])
    p.add_argument("shape", help="comma-separated shape, e.g. 1,2,1")
    p.add_argument("argument", nargs="?",
                   help="stratum index for 'type', Jordan type for 'count'")
    p.set_defaults(func=_cmd_strata)

    p = sub.add_parser("orbits", help="brute-force orbit census")
    p.add_argument("action", choices=["census"])
    p.add_argument("shape")
    p.add_argument("p", type=int)
    p.set_defaults(func=_cmd_orbits)

    p = sub.add_parser("jacobian", help="Jacobian rank at a point")
    p.add_argument("ideal_file")
    p.add_argument("point_file")
    p.set_defaults(func=_cmd_jacobian)

    p = sub.add_parser("classify", help="banal local-ring classifier")
    p.add_argument("data_file")
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("paper-suite", help="run the full reproduction suite")
    p.add_argument("--field", default="QQ", help="QQ or F<p>")
    p.add_argument("--json", help="write the full report to this file")
    p.set_defaults(func=_cmd_paper_suite)

    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return USAGE_ERROR if exc.code else ALL_PASS
    try:
        return args.func(args)
    except (ParseError, FileNotFoundError, json.JSONDecodeError, KeyError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return USAGE_ERROR
    except RingError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return USAGE_ERROR


if __name__ == "__main__":
    sys.exit(main())
