"""Command line interface.

Exit codes: 0 every check passed, 1 a mathematical check failed, 2 a resource
limit left a claim unverified, 3 the input was malformed.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .catalog import NAMED_IDEALS, named_ideal
from .errors import ParseError, PreconditionError, ResourceLimitError
from .field import default_field, field_from_name
from .monomial import parse_ideal

EXIT_OK, EXIT_FAIL, EXIT_LIMIT, EXIT_INPUT = 0, 1, 2, 3


def _read_ideal(text, n=None):
    """Ideal text, ``@path`` for a file, or ``name:<catalog entry>``."""
    if text.startswith("@"):
        text = Path(text[1:]).read_text()
    if text.startswith("name:"):
        key = text[5:]
        if key not in NAMED_IDEALS:
            raise PreconditionError(f"unknown named ideal {key!r}; choose from {sorted(NAMED_IDEALS)}")
        J = named_ideal(key)
        return J if n is None or n == J.n else J.embed(n)
    return parse_ideal(text, n)


def _read_json(path):
    try:
        return json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, exc.lineno, exc.colno) from None


def _matrix(args, J, field):
    from .lifting import lifting_matrix_from_config

    if getattr(args, "matrix", None):
        config = _read_json(args.matrix)
        config.setdefault("t", args.t)
    else:
        config = {"mode": "restricted", "t": args.t, "provenance": {"vandermonde": {}}}
    return lifting_matrix_from_config(config, J, field)


def _new_report(args, command, inputs):
    from .report import RunReport

    return RunReport(command, inputs, args.seed, args.field_obj.name)


def _emit(args, payload, script=None):
    if script is not None and args.export:
        if args.export_path:
            Path(args.export_path).write_text(script)
            if isinstance(payload, dict):
                payload.setdefault("artifacts", []).append(args.export_path)
        else:
            sys.stdout.write(script)
            return
    print(json.dumps(payload, indent=2, sort_keys=False))


# -- subcommands ---------------------------------------------------------------------


def cmd_lift(args):
    from .export import export_script
    from .lifting import (betti_agreement, check_genericity, lift_taylor_complex, lifted_ideal,
                          restriction_matches, taylor_complex, verify_complex, verify_exactness)

    J = _read_ideal(args.ideal, args.n)
    A = _matrix(args, J, args.field_obj)
    report = _new_report(args, "lift", {"ideal": str(J), "t": A.t, "matrix": A.to_json()})
    with report.timed("lift"):
        gens = lifted_ideal(J, A)
        C = lift_taylor_complex(J, A)
    report.results["generators"] = [str(g) for g in gens]
    report.results["shifts"] = [sorted(set(s)) for s in C.shifts]
    report.results["ranks"] = [C.rank(s) for s in range(C.length + 1)]
    if args.show_matrices:
        report.results["differentials"] = [C.differential(s).to_json() for s in range(1, C.length + 1)]
    with report.timed("genericity"):
        gen = check_genericity(A, J)
    report.add("genericity", gen.passed, details=gen.to_json())
    with report.timed("complex"):
        report.add("complex", verify_complex(C))
    with report.timed("restriction"):
        report.add("restriction_to_u_zero", restriction_matches(C, taylor_complex(J, args.field_obj)))
    D = args.degree_bound if args.degree_bound is not None else J.max_degree() + 4
    with report.timed("exactness"):
        ex = verify_exactness(C, D, seed=args.seed, trials=args.trials)
    report.add("generic_rank", ex.generic_rank_ok, "probabilistic", {"ranks": ex.generic_ranks},
               args.seed, args.trials)
    report.add("degreewise_exactness", ex.degreewise_ok, details={"degree_bound": D})
    with report.timed("betti"):
        report.add("betti_agreement", betti_agreement(J, A, D, args.field_obj), details={"degree_bound": D})
    script = export_script(args.export, A.ring, gens, J, C) if args.export else None
    payload = report.to_json()
    _emit(args, payload, script)
    return report.exit_code()


def cmd_betti(args):
    from .export import export_script
    from .ideals import graded_betti
    from .poly import Ring

    J = _read_ideal(args.ideal, args.n)
    table = graded_betti(J, args.field_obj)
    payload = dict(table.to_json(), ideal=str(J))
    script = None
    if args.export:
        ring = Ring(J.n, 0, args.field_obj)
        script = export_script(args.export, ring, [ring.monomial(g) for g in J.gens])
    _emit(args, payload, script)
    return EXIT_OK


def cmd_hilbert(args):
    from .ideals import hilbert_series

    J = _read_ideal(args.ideal, args.n)
    data = hilbert_series(J)
    payload = dict(data.to_json(), ideal=str(J), values=data.hilbert_values(args.degree_bound))
    _emit(args, payload)
    return EXIT_OK


def cmd_components(args):
    from .configuration import components_artinian, components_general
    from .monomial import is_artinian

    J = _read_ideal(args.ideal, args.n)
    if args.matrix:
        _matrix(args, J, args.field_obj)  # validates the configuration file
    if is_artinian(J):
        V = components_artinian(J, t=args.t)
    else:
        V = components_general(J, args.t)
    if args.ascii:
        print(V.render())
        return EXIT_OK
    payload = {"ideal": str(J), "configuration": V.to_json(), "count": len(V)}
    if V.is_grid:
        payload["slice_counts"] = V.slice_counts()
    payload["rendering"] = V.render().splitlines()
    _emit(args, payload)
    return EXIT_OK


def _read_configuration(path):
    from .configuration import Configuration

    try:
        return Configuration.from_json(_read_json(path))
    except (KeyError, TypeError) as exc:
        raise PreconditionError(f"malformed configuration file: {exc}") from None


def cmd_check_stick(args):
    from .configuration import is_generalized_stick_figure

    V = _read_configuration(args.configuration)
    rep = is_generalized_stick_figure(V, args.away_from_w)
    _emit(args, rep.to_json())
    return EXIT_OK if rep.passed else EXIT_FAIL


def cmd_check_conditions(args):
    from .configuration import check_condition2, check_condition3, condition2_witness

    V = _read_configuration(args.configuration)
    c2 = check_condition2(V)
    c3, witness = check_condition3(V)
    payload = {"condition2": c2, "condition3": c3,
               "witness": [list(w) for w in witness] if witness else None,
               "condition2_witness": [list(w) for w in condition2_witness(V)] if not c2 else None}
    _emit(args, payload)
    return EXIT_OK if c2 else EXIT_FAIL


def cmd_invert(args):
    from .configuration import components_artinian, monomial_ideal_from_configuration

    V = _read_configuration(args.configuration)
    J = monomial_ideal_from_configuration(V)
    round_trip = components_artinian(J, V.grid, V.t).index_set() == V.index_set()
    _emit(args, {"ideal": str(J), "n": J.n, "round_trip": round_trip})
    return EXIT_OK if round_trip else EXIT_FAIL


def cmd_construct(args):
    from .osequence import stick_figure_from_h_vector

    h = [int(x) for x in args.h.split(",") if x.strip()]
    res = stick_figure_from_h_vector(h, args.t, args.n, args.matrix_kind, args.seed)
    _emit(args, res.to_json())
    return EXIT_OK if res.passed else EXIT_FAIL


def cmd_verify_initial(args):
    from .export import export_script
    from .groebner import verify_initial_ideal
    from .lifting import lifted_ideal

    J = _read_ideal(args.ideal, args.n)
    A = _matrix(args, J, args.field_obj)
    rep = verify_initial_ideal(J, A)
    payload = rep.to_json()
    script = export_script(args.export, A.ring, lifted_ideal(J, A), J) if args.export else None
    _emit(args, payload, script)
    if rep.status.startswith("limit"):
        return EXIT_LIMIT
    return EXIT_OK if rep.passed else EXIT_FAIL


def cmd_residual(args):
    from .configuration import residual_check

    J = _read_ideal(args.ideal, args.n)
    rep = residual_check(J, args.t)
    _emit(args, rep.to_json())
    return EXIT_OK if rep.passed else EXIT_FAIL


# -- parser ---------------------------------------------------------------------------


def build_parser():
    p = argparse.ArgumentParser(prog="monolift", description="Lift monomial ideals and verify the results.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=0, help="seed for every random choice (64-bit)")
    common.add_argument("--field", default=None, help="QQ or GF(p); default from MONOLIFT_FIELD")
    common.add_argument("--export", choices=["m2", "singular"], help="emit a CAS script")
    common.add_argument("--export-path", help="write the exported script here instead of stdout")
    common.add_argument("--n", type=int, default=None, help="number of x-variables")
    sub = p.add_subparsers(dest="command", required=True)

    def ideal_cmd(name, fn, help_text):
        sp = sub.add_parser(name, parents=[common], help=help_text)
        sp.add_argument("ideal", help="generators like 'x1^2*x2, x2^2*x3', @file or name:<catalog>")
        sp.set_defaults(func=fn)
        return sp

    sp = ideal_cmd("lift", cmd_lift, "lift an ideal and verify the lifted resolution")
    sp.add_argument("--t", type=int, default=1)
    sp.add_argument("--matrix", help="lifting matrix JSON config")
    sp.add_argument("--degree-bound", type=int, default=None)
    sp.add_argument("--trials", type=int, default=3)
    sp.add_argument("--show-matrices", action="store_true")

    ideal_cmd("betti", cmd_betti, "graded Betti numbers of S/J")

    sp = ideal_cmd("hilbert", cmd_hilbert, "Hilbert series and h-vector of S/J")
    sp.add_argument("--degree-bound", type=int, default=10)

    sp = ideal_cmd("components", cmd_components, "components of the lifted configuration")
    sp.add_argument("--t", type=int, default=1)
    sp.add_argument("--matrix", help="lifting matrix JSON config (validated only)")
    sp.add_argument("--ascii", action="store_true", help="print only the slice pictures")

    sp = sub.add_parser("check-stick", parents=[common], help="generalized stick figure test")
    sp.add_argument("configuration")
    sp.add_argument("--away-from-w", action="store_true", help="ignore intersections inside u = 0")
    sp.set_defaults(func=cmd_check_stick)

    sp = sub.add_parser("check-conditions", parents=[common], help="downward and redistribution closure")
    sp.add_argument("configuration")
    sp.set_defaults(func=cmd_check_conditions)

    sp = sub.add_parser("invert", parents=[common], help="monomial ideal of a grid configuration")
    sp.add_argument("configuration")
    sp.set_defaults(func=cmd_invert)

    sp = sub.add_parser("construct", parents=[common], help="configuration with a prescribed h-vector")
    sp.add_argument("--h", required=True, help="comma separated h-vector")
    sp.add_argument("--t", type=int, default=1)
    sp.add_argument("--matrix-kind", choices=["vandermonde", "random"], default="vandermonde")
    sp.set_defaults(func=cmd_construct)

    sp = ideal_cmd("verify-initial", cmd_verify_initial, "Groebner check of the initial ideal")
    sp.add_argument("--t", type=int, default=1)
    sp.add_argument("--matrix", help="lifting matrix JSON config")

    sp = ideal_cmd("residual", cmd_residual, "residual in the pure-power complete intersection")
    sp.add_argument("--t", type=int, default=1)
    return p


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        args.field_obj = field_from_name(args.field) if args.field else default_field()
        return args.func(args)
    except ParseError as exc:
        print(f"error: parse error at {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ResourceLimitError as exc:
        print(f"error: resource limit reached, claim unverified (not refuted): {exc}", file=sys.stderr)
        return EXIT_LIMIT
    except (PreconditionError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
