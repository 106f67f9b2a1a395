"""Command-line front end.

Commands read a JSON instance file, run a pipeline, and emit a single
machine-readable JSON report on standard output with a short human
summary (and wall-clock timing) on standard error.  Reports on standard
output are byte-identical across runs for identical inputs, flags, and
seeds; timing therefore lives on standard error only.

Exit status: 0 success, 1 hypothesis failure (or a violated method
precondition), 2 parse error, 3 resource cap or retry budget exceeded,
4 internal cross-check failure.
"""

import argparse
import json
import sys
import time

from .bourbaki import CrossCheckError, bourbaki_reduce, module_defining_ideal
from .fields import field_from_name
from .groebner import (
    IdealGens,
    ResourceLimitExceeded,
    ideal_equal,
    saturate,
)
from .hypotheses import (
    RetryBudgetExceeded,
    check_ideal_instance,
    check_module_instance,
    random_instance,
)
from .instances import (
    ideal_instance_from_strings,
    module_instance_from_strings,
)
from .parser import ParseError
from .poly import Poly
from .rees import (
    HypothesisViolation,
    diffop_iterations,
    matrix_iterations,
    mjd_iterations,
    saturation_index_bound,
    special_fiber,
    sym_linear_forms,
)

EXIT_OK = 0
EXIT_HYPOTHESES = 1
EXIT_PARSE = 2
EXIT_RESOURCE = 3
EXIT_CROSSCHECK = 4


class CliError(Exception):
    def __init__(self, code, message):
        super().__init__(message)
        self.code = code


def _load_instance(path):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            doc = json.load(fh)
    except OSError as err:
        raise CliError(EXIT_PARSE, f"cannot read {path}: {err}")
    except json.JSONDecodeError as err:
        raise CliError(EXIT_PARSE, f"{path}: invalid JSON: {err}")
    try:
        kind = doc["kind"]
        d = int(doc["d"])
        m = int(doc["m"])
        field = field_from_name(doc.get("field", "Q"))
        f_text = doc["f"]
        psi_texts = doc["psi"]
    except (KeyError, TypeError, ValueError) as err:
        raise CliError(EXIT_PARSE, f"{path}: bad instance document: {err}")
    try:
        if kind == "ideal":
            inst = ideal_instance_from_strings(d, m, f_text, psi_texts, field)
        elif kind == "module":
            e = int(doc["e"])
            inst = module_instance_from_strings(
                d, m, e, f_text, psi_texts, field
            )
        else:
            raise CliError(EXIT_PARSE, f"{path}: unknown kind {kind!r}")
    except ParseError as err:
        raise CliError(EXIT_PARSE, f"{path}: polynomial error: {err}")
    except (KeyError, ValueError) as err:
        raise CliError(EXIT_PARSE, f"{path}: shape error: {err}")
    return inst, doc


def _gen_entry(p):
    bd = p.bidegree()
    return {
        "poly": str(p),
        "bidegree": None if bd is None else list(bd.pair()),
    }


def _x_ideal(inst):
    return IdealGens(
        inst.vars,
        [Poly.var(inst.vars, i, inst.field) for i in inst.vars.x_indices()],
        inst.field,
    )


def _require_hypotheses(inst, report_doc):
    report = (
        check_module_instance(inst)
        if hasattr(inst, "e")
        else check_ideal_instance(inst)
    )
    report_doc["hypotheses"] = report.as_dict()
    if not report.overall:
        raise CliError(
            EXIT_HYPOTHESES,
            "hypotheses failed: " + ", ".join(report.failed_names()),
        )
    return report


def _emit(report_doc, summary_lines, started):
    print(json.dumps(report_doc, indent=2, sort_keys=True))
    for line in summary_lines:
        print(line, file=sys.stderr)
    print(f"elapsed: {time.perf_counter() - started:.2f}s", file=sys.stderr)


def cmd_hypotheses(args, started):
    inst, doc = _load_instance(args.file)
    report_doc = {"command": "hypotheses", "instance": doc}
    report = (
        check_module_instance(inst)
        if hasattr(inst, "e")
        else check_ideal_instance(inst)
    )
    report_doc["hypotheses"] = report.as_dict()
    verdict = "pass" if report.overall else "fail"
    _emit(report_doc, [f"hypotheses: {verdict}"], started)
    return EXIT_OK if report.overall else EXIT_HYPOTHESES


def _iterate_generators(inst, method, mode):
    """The generator list for one method, in canonical order, plus any
    method-specific extras for the report."""
    extras = {}
    if method == "mjd":
        states = mjd_iterations(inst.psi, inst.f, mode, inst.vars)
        last = states[-1]
        gens = last.ideal.plus([last.det])
        extras["determinants"] = [_gen_entry(s.det) for s in states]
        if mode == "euler":
            greedy = mjd_iterations(inst.psi, inst.f, "greedy", inst.vars)
            flags = []
            for se, sg in zip(states, greedy):
                ratio = _unit_ratio(se.det, sg.det)
                flags.append(
                    {
                        "step": se.step,
                        "unit_vs_greedy": None if ratio is None else str(ratio),
                        "flagged": ratio is None or ratio != 1,
                    }
                )
            extras["euler_unit_flags"] = flags
    elif method == "matrix":
        steps = inst.f.bidegree().x
        _, gens = matrix_iterations(inst.psi, inst.f, steps, mode, inst.vars)
    elif method == "diffop":
        try:
            result = diffop_iterations(inst.psi, inst.f, inst.vars)
        except ValueError as err:
            raise CliError(EXIT_HYPOTHESES, f"diffop refused: {err}")
        gens = result.gens
        extras["derived_powers"] = [_gen_entry(p) for p in result.powers]
    else:
        raise CliError(EXIT_PARSE, f"unknown method {method!r}")
    return gens, extras


def _unit_ratio(a, b):
    """The scalar c with a = c*b, or None if a, b are not unit multiples."""
    if a == b:
        return 1
    if a.is_zero() or b.is_zero():
        return None
    mon, coeff = next(iter(b.terms.items()))
    other = a.terms.get(mon)
    if other is None:
        return None
    c = a.field.div(other, coeff)
    return c if a == b.scale(c) else None


def _verify_block(inst, gens, report_doc):
    xs = _x_ideal(inst)
    ells = sym_linear_forms(inst.psi, inst.vars)
    L = IdealGens(inst.vars, ells + [inst.f], inst.field)
    sat, index = saturate(L, xs)
    equal = ideal_equal(gens, sat)
    degrees = [g.bidegree().x for g in L.gens]
    bound = saturation_index_bound(degrees, inst.vars.nx)
    report_doc["oracle"] = {
        "equal": equal,
        "saturation_index": index,
        "index_equals_m": index == inst.m,
        "index_bound": bound,
        "index_within_bound": index <= bound,
    }
    return equal and index == inst.m


def cmd_iterate(args, started):
    inst, doc = _load_instance(args.file)
    report_doc = {
        "command": "iterate",
        "instance": doc,
        "method": args.method,
        "mode": args.mode,
    }
    _require_hypotheses(inst, report_doc)
    gens, extras = _iterate_generators(inst, args.method, args.mode)
    report_doc.update(extras)
    report_doc["generators"] = [_gen_entry(g) for g in gens.gens]
    fiber, degree = special_fiber(gens)
    report_doc["fiber"] = {"generator": str(fiber), "degree": degree}
    code = EXIT_OK
    if args.verify:
        ok = _verify_block(inst, gens, report_doc)
        if not ok:
            code = EXIT_CROSSCHECK
    _emit(
        report_doc,
        [
            f"method {args.method}: {len(gens)} generators, "
            f"fiber degree {degree}",
        ],
        started,
    )
    return code


def cmd_verify(args, started):
    inst, doc = _load_instance(args.file)
    report_doc = {
        "command": "verify",
        "instance": doc,
        "injected": bool(args.inject),
    }
    _require_hypotheses(inst, report_doc)
    states = mjd_iterations(inst.psi, inst.f, "greedy", inst.vars)
    last = states[-1]
    gens = last.ideal.plus([last.det])
    if args.inject:
        t1 = Poly.var(inst.vars, inst.vars.nx, inst.field)
        corrupted = list(gens.gens)
        corrupted[-1] = corrupted[-1] * t1
        gens = IdealGens(inst.vars, corrupted, inst.field)
    report_doc["generators"] = [_gen_entry(g) for g in gens.gens]
    ok = _verify_block(inst, gens, report_doc)
    verdict = "verified" if ok else "MISMATCH"
    _emit(report_doc, [f"oracle comparison: {verdict}"], started)
    return EXIT_OK if ok else EXIT_CROSSCHECK


def cmd_bourbaki(args, started):
    inst, doc = _load_instance(args.file)
    if not hasattr(inst, "e"):
        raise CliError(EXIT_PARSE, "bourbaki needs a module instance file")
    report_doc = {
        "command": "bourbaki",
        "instance": doc,
        "seed": args.seed,
    }
    _require_hypotheses(inst, report_doc)
    result = module_defining_ideal(inst, args.seed)
    red = result.reduction
    report_doc["reduction"] = {
        "transform": [[str(c) for c in row] for row in red.transform],
        "psi_reduced": red.psi_reduced.to_strings(),
        "y_forms": [str(y) for y in red.y_forms],
    }
    report_doc["generators"] = [_gen_entry(g) for g in result.gens.gens]
    report_doc["cross_check"] = True
    fiber, degree = special_fiber(result.gens)
    report_doc["fiber"] = {"generator": str(fiber), "degree": degree}
    _emit(
        report_doc,
        [
            f"reduction with seed {args.seed}: cross-check passed, "
            f"fiber degree {degree}",
        ],
        started,
    )
    return EXIT_OK


def cmd_random(args, started):
    field = field_from_name(args.field)
    inst = random_instance(args.d, args.m, args.seed, field)
    doc = {
        "kind": "ideal",
        "d": inst.d,
        "m": inst.m,
        "field": args.field,
        "f": str(inst.f),
        "psi": inst.psi.to_strings(),
    }
    print(json.dumps(doc, indent=2, sort_keys=True))
    print(
        f"random instance d={args.d} m={args.m} seed={args.seed}",
        file=sys.stderr,
    )
    print(f"elapsed: {time.perf_counter() - started:.2f}s", file=sys.stderr)
    return EXIT_OK


def build_parser():
    parser = argparse.ArgumentParser(
        prog="reesdual",
        description=(
            "Defining ideals of Rees algebras over hypersurface rings, "
            "with Groebner verification"
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("hypotheses", help="check theorem hypotheses")
    p.add_argument("file")
    p.set_defaults(func=cmd_hypotheses)

    p = sub.add_parser("iterate", help="run an iteration method")
    p.add_argument("file")
    p.add_argument(
        "--method", choices=["mjd", "matrix", "diffop"], default="mjd"
    )
    p.add_argument("--mode", choices=["greedy", "euler"], default="greedy")
    p.add_argument("--verify", action="store_true")
    p.set_defaults(func=cmd_iterate)

    p = sub.add_parser("verify", help="compare against the saturation oracle")
    p.add_argument("file")
    p.add_argument(
        "--inject",
        action="store_true",
        help="corrupt the generator list first (negative control)",
    )
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bourbaki", help="module pipeline via reduction")
    p.add_argument("file")
    p.add_argument("--seed", type=int, required=True)
    p.set_defaults(func=cmd_bourbaki)

    p = sub.add_parser("random", help="emit a random passing instance file")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--field", default="Q")
    p.set_defaults(func=cmd_random)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    started = time.perf_counter()
    try:
        return args.func(args, started)
    except CliError as err:
        print(f"error: {err}", file=sys.stderr)
        return err.code
    except HypothesisViolation as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_HYPOTHESES
    except ParseError as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_PARSE
    except (ResourceLimitExceeded, RetryBudgetExceeded) as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_RESOURCE
    except CrossCheckError as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_CROSSCHECK


if __name__ == "__main__":
    sys.exit(main())
