"""Command-line front end.

Exit status: 0 on success or a passing criterion, 1 when a criterion fails,
2 on malformed input. Every JSON report carries the canonical ``input``
object; feeding it back through ``--input`` reproduces the report byte for
byte.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import chern, criteria, fourier_mukai, grr, schemas
from .chern import BASIS_TAG
from .cohring import PpavContext
from .errors import InputError, ThetaCalcError, UndeclaredWITError
from .report import CriterionReport
from .verification import DEFAULT_GENERA, verify_paper

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_INPUT = 2


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def _split(text):
    return [part.strip() for part in text.split(",")] if text else []


def _ints(text, flag):
    out = []
    for part in _split(text):
        try:
            out.append(int(part))
        except ValueError:
            raise InputError(f"expected comma-separated integers, got {part!r}", flag)
    return out


# each builder maps inline flags to the command's JSON input object
_INLINE = {
    "c2ch": ("g", "rank", "c"),
    "ch2c": ("g", "ch"),
    "fm": ("g", "ch", "wit", "side"),
    "grr-abel": ("genus", "degree"),
    "picard-case": ("genus", "degree"),
    "check-jacobian": ("g", "rank", "c", "wit_g", "decomposable_ppav", "decomposable_sheaf"),
    "check-picard": ("g",),
    "seq": ("g", "sub", "total", "quot", "wit", "side"),
    "verify-paper": ("g_list",),
}


def _given(args, name):
    v = getattr(args, name, None)
    return v not in (None, False)


def _inline_input(cmd, args):
    if cmd == "c2ch":
        return {"g": args.g, "rank": args.rank, "c": _split(args.c)}
    if cmd == "ch2c":
        return {"g": args.g, "ch": _split(args.ch)}
    if cmd == "fm":
        return {"g": args.g, "ch": _split(args.ch), "wit": args.wit, "side": args.side or "A"}
    if cmd in ("grr-abel", "picard-case"):
        return {"genus": args.genus, "degree": args.degree}
    if cmd == "check-jacobian":
        return {
            "g": args.g,
            "rank": args.rank,
            "c": _split(args.c),
            "wit_g": bool(args.wit_g),
            "ppav_indecomposable": not args.decomposable_ppav,
            "sheaf_indecomposable": not args.decomposable_sheaf,
        }
    if cmd == "check-picard":
        return {"g": args.g}
    if cmd == "seq":
        side = args.side or "A"
        return {
            name: {"g": args.g, "ch": _split(getattr(args, name)), "wit": args.wit, "side": side}
            for name in ("sub", "total", "quot")
        }
    if cmd == "verify-paper":
        genera = _ints(args.g_list, "--g-list") if args.g_list else list(DEFAULT_GENERA)
        return {"g_list": genera}
    raise AssertionError(cmd)


def _drop_missing(data):
    # absent flags become absent fields so the schema reports them as required
    if isinstance(data, dict):
        return {k: _drop_missing(v) for k, v in data.items() if v is not None}
    return data


def _load_input(cmd, args):
    inline = [n for n in _INLINE[cmd] if _given(args, n)]
    if args.input is not None:
        if inline:
            raise InputError(
                f"--input cannot be combined with inline flags ({', '.join(inline)})", "--input"
            )
        try:
            with open(args.input, encoding="utf-8") as fh:
                return json.load(fh)
        except OSError as exc:
            raise InputError(f"cannot read input file: {exc}", "--input")
        except json.JSONDecodeError as exc:
            raise InputError(f"invalid JSON: {exc}", "--input")
    return _drop_missing(_inline_input(cmd, args))


def _sheaf_json(s):
    return s.to_json()


def _run_c2ch(data):
    ctx, rank, c = schemas.parse_chern(data)
    ch = chern.chern_to_character(rank, c)
    canonical = {"g": ctx.g, "rank": rank, "c": c.value.to_json()}
    result = {
        "basis": BASIS_TAG,
        "ch": ch.value.to_json(),
        "divided_power_profile": chern.is_divided_power_profile(rank, c),
    }
    text = [f"ch = {', '.join(result['ch'])}"]
    return canonical, result, None, text


def _run_ch2c(data):
    ch = schemas.parse_character(data)
    c = chern.character_to_chern(ch)
    canonical = {"g": ch.g, "ch": ch.value.to_json()}
    result = {"basis": BASIS_TAG, "c": c.value.to_json(), "formal_only": ch.rank == 0}
    text = [f"c = {', '.join(result['c'])}"]
    if ch.rank == 0:
        text.append("note: rank 0, total Chern class is formal only")
    return canonical, result, None, text


def _run_fm(data):
    s = schemas.parse_sheaf(data)
    if s.wit_index is None:
        raise UndeclaredWITError("the transform needs a declared WIT index", "/wit")
    canonical = _sheaf_json(s)
    rules = fourier_mukai.check_wit_rules(s)
    result = {"wit_rules": rules.to_json()}
    if not rules.passed:
        return canonical, result, rules, [rules.to_text()]
    t = fourier_mukai.mukai_transform(s)
    result["transform"] = _sheaf_json(t)
    text = [
        f"ch = {', '.join(t.ch.value.to_json())}",
        f"wit = {t.wit_index}",
        f"side = {t.side.value}",
    ]
    return canonical, result, rules, text


def _run_grr(data):
    spec = schemas.parse_curve(data)
    ch = grr.abel_pushforward(spec)
    dual = grr.serre_dual_degree(spec)
    result = {
        "ch": ch.value.to_json(),
        "chi": grr.curve_chi(spec),
        "serre_dual_degree": dual.degree,
        "degenerate_genus": spec.degenerate,
    }
    text = [
        f"ch(a_* L) = {', '.join(result['ch'])}",
        f"chi = {result['chi']}",
        f"serre dual degree = {dual.degree}",
    ]
    return spec.to_json(), result, None, text


def _run_picard_case(data):
    spec = schemas.parse_curve(data)
    case = criteria.classify_picard_case(spec)
    result = case.to_json()
    text = [f"{case.label}" + (f", rank {case.rank}" if case.rank is not None else "")]
    text += [f"  {f}" for f in case.facts]
    text.append(f"  dual degree {case.dual_degree}: {case.dual_label}")
    return spec.to_json(), result, None, text


def _run_check_jacobian(data):
    ctx, rank, c = schemas.parse_chern(data, schema=schemas.JACOBIAN)
    canonical = {
        "g": ctx.g,
        "rank": rank,
        "c": c.value.to_json(),
        "wit_g": data["wit_g"],
        "ppav_indecomposable": data.get("ppav_indecomposable", True),
        "sheaf_indecomposable": data.get("sheaf_indecomposable", True),
    }
    try:
        report = criteria.check_jacobian_criterion(
            rank,
            c,
            data["wit_g"],
            ctx,
            ppav_indecomposable=canonical["ppav_indecomposable"],
            sheaf_indecomposable=canonical["sheaf_indecomposable"],
        )
    except InputError as exc:
        raise InputError(exc.args[0], exc.pointer or "/rank")
    return canonical, report.to_json(), report, [report.to_text()]


def _run_check_picard(data):
    ctx = schemas.parse_ppav(data)
    report = criteria.check_picard_necessary(ctx)
    return {"g": ctx.g}, report.to_json(), report, [report.to_text()]


def _run_seq(data):
    schemas.validate(data, schemas.SEQUENCE)
    terms = {k: schemas.parse_sheaf(data[k], "/" + k) for k in ("sub", "total", "quot")}
    report = criteria.transform_exact_sequence(terms["sub"], terms["total"], terms["quot"])
    canonical = {k: _sheaf_json(v) for k, v in terms.items()}
    return canonical, report.to_json(), report, [report.to_text()]


def _run_verify(data):
    schemas.validate(data, schemas.VERIFY)
    for i, g in enumerate(data["g_list"]):
        try:
            PpavContext(g)
        except InputError as exc:
            raise InputError(exc.args[0], f"/g_list/{i}")
    report = verify_paper(data["g_list"])
    return {"g_list": list(data["g_list"])}, report.to_json(), report, [report.to_text()]


_RUNNERS = {
    "c2ch": _run_c2ch,
    "ch2c": _run_ch2c,
    "fm": _run_fm,
    "grr-abel": _run_grr,
    "picard-case": _run_picard_case,
    "check-jacobian": _run_check_jacobian,
    "check-picard": _run_check_picard,
    "seq": _run_seq,
    "verify-paper": _run_verify,
}


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--input", metavar="PATH", help="JSON input file (excludes inline flags)")
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument(
        "--basis",
        default=BASIS_TAG,
        help="coefficient basis; only 'divided-power' is supported",
    )

    parser = _Parser(
        prog="theta-calc",
        description="Exact Chern-character calculus on principally polarized abelian varieties.",
    )
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("c2ch", parents=[common], help="total Chern class -> Chern character")
    p.add_argument("--g", type=int)
    p.add_argument("--rank", type=int)
    p.add_argument("--c", help="comma-separated c_0..c_g")

    p = sub.add_parser("ch2c", parents=[common], help="Chern character -> total Chern class")
    p.add_argument("--g", type=int)
    p.add_argument("--ch", help="comma-separated ch_0..ch_g")

    p = sub.add_parser("fm", parents=[common], help="Fourier-Mukai transform of a WIT sheaf")
    p.add_argument("--g", type=int)
    p.add_argument("--ch")
    p.add_argument("--wit", type=int)
    p.add_argument("--side", choices=("A", "A-hat"))

    for name, help_text in (
        ("grr-abel", "ch of a_* L for a line bundle L on the curve"),
        ("picard-case", "classify the Picard sheaves of a degree"),
    ):
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.add_argument("--genus", type=int)
        p.add_argument("--degree", type=int)

    p = sub.add_parser("check-jacobian", parents=[common], help="Jacobian criterion for a WIT_g sheaf")
    p.add_argument("--g", type=int)
    p.add_argument("--rank", type=int)
    p.add_argument("--c")
    p.add_argument("--wit-g", action="store_true", help="declare the sheaf WIT_g")
    p.add_argument("--decomposable-ppav", action="store_true")
    p.add_argument("--decomposable-sheaf", action="store_true")

    p = sub.add_parser("check-picard", parents=[common], help="necessary conditions for the Picard bundle")
    p.add_argument("--g", type=int)

    p = sub.add_parser("seq", parents=[common], help="short exact sequence bookkeeping")
    p.add_argument("--g", type=int)
    p.add_argument("--sub")
    p.add_argument("--total")
    p.add_argument("--quot")
    p.add_argument("--wit", type=int)
    p.add_argument("--side", choices=("A", "A-hat"))

    p = sub.add_parser("verify-paper", parents=[common], help="reproduce the reference computations")
    p.add_argument("--g-list", help="comma-separated genera (default 2..10)")
    return parser


def _emit(out, cmd, fmt, canonical, result, text_lines):
    if fmt == "json":
        payload = {"command": cmd, "input": canonical, "result": result}
        out.write(json.dumps(payload, indent=2, sort_keys=True) + "\n")
    else:
        out.write("\n".join(text_lines) + "\n")


def main(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        err.write(f"theta-calc: error: {exc}\n")
        return EXIT_INPUT
    except SystemExit as exc:  # --help
        return int(exc.code or 0)

    cmd = args.command
    try:
        if args.basis != BASIS_TAG:
            raise InputError(f"unsupported basis {args.basis!r}; only {BASIS_TAG!r}", "--basis")
        data = _load_input(cmd, args)
        canonical, result, report, text = _RUNNERS[cmd](data)
    except ThetaCalcError as exc:
        err.write(f"theta-calc: input error: {exc}\n")
        return EXIT_INPUT

    _emit(out, cmd, args.format, canonical, result, text)
    if isinstance(report, CriterionReport) and not report.passed:
        return EXIT_FAIL
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
