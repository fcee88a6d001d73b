"""Command-line front end: ``holosign <command> --P ... --Q ...``.

Every command prints one JSON object.  Exit codes: 0 for a definitive
answer, 2 when a step budget ran out, 1 for usage, parse or self-check
errors.
"""

import argparse
import json
import sys
from fractions import Fraction
from importlib import resources

from .cfrac import cfrac_probe, critical_slopes
from .classify import BOTTOM, degenerate_type, possible_signs, r_function, stability_precheck
from .errors import HolosignError
from .parse import Session, format_coefficient, parse_pair, parse_ratfunc
from .recurrence import INFINITY, HolonomicInstance, word_string
from .ultsign import DEFAULT_MAX_STEPS, Budget, Hint, make_plan, ultimate_sign, ultimate_sign_with_hint
from .numerics import DEFAULT_MAX_PRECISION

EXIT_OK, EXIT_ERROR, EXIT_BUDGET = 0, 1, 2
COMMANDS = ("classify", "signs", "possible-signs", "cfrac", "critical-lines", "precheck", "selfcheck")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _scalar_text(v):
    if v is INFINITY:
        return "inf"
    return format_coefficient(v)


def build_parser():
    p = _Parser(prog="holosign", description="Ultimate signs of second-order holonomic sequences.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)
    for name in COMMANDS:
        c = sub.add_parser(name)
        c.add_argument("--pretty", action="store_true", help="human-readable summary instead of JSON")
        if name == "selfcheck":
            continue
        c.add_argument("--P", required=True, help="coefficient of f(n+1), an expression in x")
        c.add_argument("--Q", required=True, help="coefficient of f(n), an expression in x")
        if name in ("classify", "signs"):
            c.add_argument("--f0", required=(name == "signs"), help="initial values 'f(0),f(1)'")
        if name in ("classify", "signs", "critical-lines"):
            c.add_argument("--max-steps", "--budget", dest="max_steps", type=int, default=DEFAULT_MAX_STEPS)
            c.add_argument("--precision", type=int, default=DEFAULT_MAX_PRECISION)
        if name == "signs":
            c.add_argument("--hint", choices=[h.value for h in Hint])
        if name == "cfrac":
            c.add_argument("--tau", type=int, default=1)
            c.add_argument("--horizon", type=int, default=30)
        if name == "critical-lines":
            c.add_argument("--width", default="1/10000")
            c.add_argument("--horizon", type=int, default=400)
    return p


def _budget(args):
    if args.max_steps <= 0 or args.precision <= 0:
        raise UsageError("--max-steps and --precision must be positive")
    return Budget(args.max_steps, args.precision)


def _coefficients(args, session):
    return parse_ratfunc(args.P, session), parse_ratfunc(args.Q, session)


def _type_fields(P, Q):
    if P.is_zero() or Q.is_zero():
        return {"type": degenerate_type(P, Q).label()}, None
    rtype = make_plan(P, Q, 0).rtype
    out = {"type": rtype.label()}
    if rtype.alphas is not None:
        out["alphas"] = [_scalar_text(a) for a in rtype.alphas]
    return out, rtype


def _outcome_fields(outcome):
    out = {"outcome": outcome.kind}
    if hasattr(outcome, "word"):
        out["word"] = word_string(outcome.word)
        out["N"] = outcome.N
    out["stepsUsed"] = outcome.steps_used
    return out


def cmd_classify(args):
    session = Session()
    P, Q = _coefficients(args, session)
    report, _ = _type_fields(P, Q)
    code = EXIT_OK
    if args.f0:
        f0 = parse_pair(args.f0, session)
        outcome = ultimate_sign(HolonomicInstance(P, Q, f0), _budget(args))
        report.update(_outcome_fields(outcome))
        code = EXIT_OK if outcome.definitive else EXIT_BUDGET
    else:
        report.update(outcome="Classified", stepsUsed=0)
    return report, code


def cmd_signs(args):
    session = Session()
    P, Q = _coefficients(args, session)
    f0 = parse_pair(args.f0, session)
    report, _ = _type_fields(P, Q)
    inst = HolonomicInstance(P, Q, f0)
    if args.hint:
        outcome = ultimate_sign_with_hint(inst, Hint(args.hint), _budget(args))
    else:
        outcome = ultimate_sign(inst, _budget(args))
    report.update(_outcome_fields(outcome))
    return report, (EXIT_OK if outcome.definitive else EXIT_BUDGET)


def cmd_possible_signs(args):
    P, Q = _coefficients(args, Session())
    report, rtype = _type_fields(P, Q)
    if rtype is None:
        raise UsageError("possible-signs needs non-zero P and Q")
    words = possible_signs(rtype, r_constant=r_function(P, Q).is_constant())
    report["words"] = sorted(w if w == BOTTOM else word_string(w) for w in words)
    report.update(outcome="Classified", stepsUsed=0)
    return report, EXIT_OK


def cmd_cfrac(args):
    P, Q = _coefficients(args, Session())
    if args.tau < 1 or args.horizon < 0:
        raise UsageError("--tau must be positive and --horizon non-negative")
    groups = cfrac_probe(P, Q, args.tau, args.horizon)
    report = {
        "residues": [[_scalar_text(v) for v in g] for g in groups],
        "outcome": "Probed",
        "stepsUsed": 0,
    }
    return report, EXIT_OK


def _bracket_json(b):
    out = {"lineIndex": b.line_index, "residueClass": b.residue_class}
    iv = b.slope_interval()
    if iv is None:
        out["homogeneous"] = b.homogeneous()
    else:
        out["lo"], out["hi"] = _scalar_text(iv[0]), _scalar_text(iv[1])
        out["loFloat"], out["hiFloat"] = float(iv[0]), float(iv[1])
    words = b.slope_words()
    if words is None:
        # vertical line inside: words at the homogeneous endpoints (lo:1) and (hi:1)
        words = b.words
    out["words"] = [word_string(w) for w in words]
    out["metTarget"] = b.met_target
    return out


def cmd_critical_lines(args):
    P, Q = _coefficients(args, Session())
    report, rtype = _type_fields(P, Q)
    width = Fraction(args.width)
    if width <= 0:
        raise UsageError("--width must be positive")
    try:
        result = critical_slopes(P, Q, width, _budget(args), args.horizon)
    except ValueError as exc:
        if isinstance(exc, HolosignError):
            raise
        raise UsageError(str(exc)) from None
    report["brackets"] = [_bracket_json(b) for b in result.brackets]
    report["outcome"] = "Bracketed" if result.complete else "BudgetExhausted"
    report["stepsUsed"] = result.steps_used
    return report, (EXIT_OK if result.complete else EXIT_BUDGET)


def cmd_precheck(args):
    P, Q = _coefficients(args, Session())
    return {"outcome": stability_precheck(P, Q), "stepsUsed": 0}, EXIT_OK


def _fixture_files():
    root = resources.files("holosign") / "fixtures"
    return sorted((p for p in root.iterdir() if p.name.endswith(".json")), key=lambda p: p.name)


def cmd_selfcheck(args):
    results = []
    for path in _fixture_files():
        fixture = json.loads(path.read_text())
        report, code = run(fixture["argv"])
        expected = fixture["expect"]
        ok = code == expected.get("exit", EXIT_OK) and all(
            report.get(k) == v for k, v in expected.get("fields", {}).items()
        )
        results.append({"name": fixture["name"], "passed": ok})
    passed = all(r["passed"] for r in results)
    report = {"fixtures": results, "outcome": "Passed" if passed else "Failed", "stepsUsed": 0}
    return report, (EXIT_OK if passed else EXIT_ERROR)


HANDLERS = {
    "classify": cmd_classify,
    "signs": cmd_signs,
    "possible-signs": cmd_possible_signs,
    "cfrac": cmd_cfrac,
    "critical-lines": cmd_critical_lines,
    "precheck": cmd_precheck,
    "selfcheck": cmd_selfcheck,
}


_VALUE_FLAGS = ("--P", "--Q", "--f0")


def _glue_values(argv):
    """Attach expression values to their flags so a leading '-' is not read as an option."""
    out = []
    it = iter(argv)
    for tok in it:
        if tok in _VALUE_FLAGS:
            nxt = next(it, None)
            out.append(tok if nxt is None else f"{tok}={nxt}")
        else:
            out.append(tok)
    return out


def run(argv):
    """Execute one query; returns ``(report, exit_code)`` without printing."""
    try:
        args = build_parser().parse_args(_glue_values(argv))
    except UsageError as exc:
        return {"command": None, "outcome": "UsageError", "error": str(exc)}, EXIT_ERROR
    try:
        report, code = HANDLERS[args.command](args)
    except (UsageError, HolosignError) as exc:
        report = {"outcome": type(exc).__name__, "error": str(exc)}
        if getattr(exc, "offset", None) is not None:
            report["offset"] = exc.offset
        code = EXIT_ERROR
    return {"command": args.command, **report}, code


def _pretty(report):
    lines = []
    for key, value in report.items():
        if key == "brackets":
            for b in value:
                span = b.get("homogeneous") or [b["lo"], b["hi"]]
                lines.append(f"  line {b['lineIndex']}: ({span[0]}, {span[1]})  {b['words'][0]} | {b['words'][1]}")
        elif key == "fixtures":
            lines += [f"  {'PASS' if f['passed'] else 'FAIL'} {f['name']}" for f in value]
        elif isinstance(value, list):
            lines.append(f"{key}: {', '.join(map(str, value))}")
        else:
            lines.append(f"{key}: {value}")
    return "\n".join(lines)


def main(argv=None):
    argv = sys.argv[1:] if argv is None else argv
    report, code = run(argv)
    if "--pretty" in argv:
        print(_pretty(report))
    else:
        print(json.dumps(report))
    return code


if __name__ == "__main__":
    sys.exit(main())
