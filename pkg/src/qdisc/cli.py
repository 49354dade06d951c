"""Command-line entry points.

Subcommands: verify, classify, act, involution, scan, series, iso.
Reports print human-readable by default; --json switches to a stable
JSON schema (sorted keys, fixed fields).  Exit status 0 on pass or
success, 1 on a reported failure, 2 on an input error.  The default
verification degree bound is 8, overridable per call with --degree or
globally with the QDISC_DEGREE_BOUND environment variable.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from .actions import (
    DegenerateParameter,
    NoIntegerJump,
    NotAWeightAction,
    SeriesTag,
    SymmetryAction,
    Unclassifiable,
    apply_uq,
    are_isomorphic,
    check_involution,
    classify,
    construct_series,
    verify,
)
from .parsing import ParseError, disc_str, parse_disc_expr, parse_uq_expr, scalar_str
from .qseries import nonexistence_scan
from .scalars import GaussianRational, InvalidSpecialization, PoleAtSpecialization
from .uq import InvolutionForm

_EXIT_FAIL = 1
_EXIT_INPUT = 2

_TAG_ALIASES = {
    "0+": SeriesTag.ZERO_PLUS,
    "0-": SeriesTag.ZERO_MINUS,
    "1a": SeriesTag.ONE_A,
    "1b": SeriesTag.ONE_B,
    "-1a": SeriesTag.MINUS_ONE_A,
    "-1b": SeriesTag.MINUS_ONE_B,
    "neg1a": SeriesTag.MINUS_ONE_A,
    "neg1b": SeriesTag.MINUS_ONE_B,
}


class InputError(Exception):
    """Bad file, expression or argument; reported with exit status 2."""


def _read_source(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc


def parse_q_value(text: str) -> GaussianRational:
    """A rational like -1/2, or i<rational> for purely imaginary values."""
    text = text.strip()
    imag = text.startswith("i")
    if imag:
        text = text[1:]
    try:
        r = Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise InputError(f"bad q value {text!r}: {exc}") from exc
    return GaussianRational(0, r) if imag else GaussianRational(r, 0)


def load_action(path: str):
    """Load an action file; returns (action, q_mode string, default q0)."""
    raw = _read_source(path)
    try:
        data = json.loads(raw)
    except json.JSONDecodeError as exc:
        raise InputError(f"invalid JSON in {path}: {exc}") from exc
    if not isinstance(data, dict):
        raise InputError("action file must be a JSON object")

    q_mode = data.get("q_mode", "symbolic")
    q0 = None
    if q_mode != "symbolic":
        kind, _, val = q_mode.partition(":")
        if kind not in ("real", "imaginary") or not val:
            raise InputError(f"bad q_mode {q_mode!r}")
        q0 = parse_q_value(("i" if kind == "imaginary" else "") + val)

    if "series" in data:
        tag = _TAG_ALIASES.get(str(data["series"]))
        if tag is None:
            raise InputError(f"unknown series tag {data['series']!r}")
        params = []
        for name in tag.param_names:
            if name not in data:
                raise InputError(f"series {tag.value} needs parameter {name!r}")
            params.append(_parse_param(data[name], name))
        try:
            return construct_series(tag, *params), q_mode, q0
        except DegenerateParameter as exc:
            raise InputError(str(exc)) from exc

    images_data = data.get("images")
    if not isinstance(images_data, dict):
        raise InputError("action file needs an 'images' object or a 'series' tag")
    images = {}
    for gen in ("k", "kinv", "e", "f"):
        block = images_data.get(gen)
        if not isinstance(block, dict):
            raise InputError(f"images must contain an object for {gen!r}")
        for letter in ("z", "zs"):
            expr = block.get(letter)
            if not isinstance(expr, str):
                raise InputError(f"missing image expression for {gen}({letter})")
            try:
                images[(gen, letter)] = parse_disc_expr(expr)
            except ParseError as exc:
                raise InputError(f"in image {gen}({letter}): {exc}") from exc
    return SymmetryAction(images), q_mode, q0


def _parse_param(text, name):
    try:
        return _scalar_from_expr(str(text))
    except ParseError as exc:
        raise InputError(f"parameter {name}: {exc}") from exc


def _scalar_from_expr(text: str):
    from .parsing import parse_scalar_expr

    return parse_scalar_expr(text)


def action_to_json(action: SymmetryAction, q_mode: str = "symbolic") -> dict:
    images = {}
    for gen in ("k", "kinv", "e", "f"):
        images[gen] = {
            "z": disc_str(action.images[(gen, "z")]),
            "zs": disc_str(action.images[(gen, "zs")]),
        }
    return {"q_mode": q_mode, "images": images}


def _emit(payload: dict, as_json: bool, text: str) -> None:
    if as_json:
        print(json.dumps(payload, sort_keys=True, indent=2))
    else:
        print(text)


def _default_degree() -> int:
    raw = os.environ.get("QDISC_DEGREE_BOUND")
    if raw is None:
        return 8
    try:
        return int(raw)
    except ValueError:
        raise InputError(f"QDISC_DEGREE_BOUND must be an integer, got {raw!r}")


# --- subcommands ---


def _cmd_verify(args) -> int:
    action, _, _ = load_action(args.action)
    degree = args.degree if args.degree is not None else _default_degree()
    report = verify(action, degree)
    _emit(report.to_dict(), args.json, str(report))
    return 0 if report.passed else _EXIT_FAIL


def _cmd_classify(args) -> int:
    action, _, _ = load_action(args.action)
    degree = args.degree if args.degree is not None else _default_degree()
    report = verify(action, degree)
    if not report.passed:
        _emit(
            {"error": "action does not verify", "report": report.to_dict()},
            args.json,
            "action does not verify; classification refused\n" + str(report),
        )
        return _EXIT_FAIL
    try:
        matches = classify(action)
    except (Unclassifiable, NotAWeightAction, NoIntegerJump) as exc:
        _emit({"error": str(exc)}, args.json, f"unclassifiable: {exc}")
        return _EXIT_FAIL
    rows = sorted(
        (
            {
                "series": tag.value,
                "params": {
                    name: scalar_str(val)
                    for name, val in zip(tag.param_names, params)
                },
            }
            for tag, params in matches
        ),
        key=lambda r: r["series"],
    )
    text = "\n".join(
        f"series {r['series']}"
        + (
            " with " + ", ".join(f"{k} = {v}" for k, v in r["params"].items())
            if r["params"]
            else ""
        )
        for r in rows
    )
    _emit({"matches": rows}, args.json, text)
    return 0


def _cmd_act(args) -> int:
    action, _, _ = load_action(args.action)
    try:
        x = parse_uq_expr(args.uq_expr)
        a = parse_disc_expr(args.disc_expr)
    except ParseError as exc:
        raise InputError(str(exc)) from exc
    result = apply_uq(action, x, a)
    _emit({"result": disc_str(result)}, args.json, disc_str(result))
    return 0


def _cmd_involution(args) -> int:
    action, _, file_q0 = load_action(args.action)
    form = InvolutionForm[args.form]
    if args.q is None:
        q0 = file_q0
    elif args.q.strip() == "symbolic":
        q0 = None
    else:
        q0 = parse_q_value(args.q)
    degree = args.degree if args.degree is not None else _default_degree()
    try:
        report = check_involution(action, form, q0, degree)
    except InvalidSpecialization as exc:
        raise InputError(str(exc)) from exc
    qtxt = str(q0) if q0 is not None else "symbolic"
    payload = report.to_dict()
    payload.update({"form": form.value, "q": qtxt})
    _emit(payload, args.json, f"form {form.value}, q = {qtxt}\n{report}")
    return 0 if report.passed else _EXIT_FAIL


def _cmd_scan(args) -> int:
    report = nonexistence_scan(args.nmax)
    _emit(report.to_dict(), args.json, str(report))
    return 0 if report.all_clear else _EXIT_FAIL


def _cmd_series(args) -> int:
    tag = _TAG_ALIASES.get(args.tag)
    if tag is None:
        raise InputError(
            f"unknown series tag {args.tag!r}; choose from "
            + ", ".join(sorted(set(_TAG_ALIASES)))
        )
    params = []
    for name in tag.param_names:
        value = getattr(args, name)
        if value is None:
            raise InputError(f"series {tag.value} needs --{name}")
        try:
            params.append(_scalar_from_expr(value))
        except ParseError as exc:
            raise InputError(f"--{name}: {exc}") from exc
    for name in ("b0", "b1", "a0", "a1"):
        if name not in tag.param_names and getattr(args, name) is not None:
            raise InputError(f"series {tag.value} does not take --{name}")
    try:
        action = construct_series(tag, *params)
    except DegenerateParameter as exc:
        raise InputError(str(exc)) from exc
    print(json.dumps(action_to_json(action), sort_keys=True, indent=2))
    return 0


def _cmd_iso(args) -> int:
    a1, _, _ = load_action(args.action1)
    a2, _, _ = load_action(args.action2)
    degree = args.degree if args.degree is not None else _default_degree()
    for which, act in (("first", a1), ("second", a2)):
        if not verify(act, degree).passed:
            _emit(
                {"error": f"{which} action does not verify"},
                args.json,
                f"{which} action does not verify",
            )
            return _EXIT_FAIL
    witness = are_isomorphic(a1, a2)
    if witness is None:
        _emit({"isomorphic": False, "witness": None}, args.json, "not isomorphic")
        return _EXIT_FAIL
    _emit(
        {"isomorphic": True, "witness": scalar_str(witness)},
        args.json,
        f"isomorphic via z -> c z with c = {scalar_str(witness)}",
    )
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qdisc",
        description=(
            "Exact symbolic toolkit for quantum-disc symmetries. Disc "
            "expressions use tokens z, zs (= z*), y, q, i with + - * / ^ "
            "and no juxtaposition; U_q expressions use e, f, k, kinv. "
            "Action files are JSON with either an 'images' map or a "
            "'series' shorthand."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, action_args):
        for name in action_args:
            p.add_argument(name, help="action file (JSON), or - for stdin")
        p.add_argument("--degree", type=int, default=None, help="degree bound (default 8 or QDISC_DEGREE_BOUND)")
        p.add_argument("--json", action="store_true", help="emit a JSON report")

    p = sub.add_parser("verify", help="check the module-algebra axioms")
    add_common(p, ["action"])
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("classify", help="match a verified action against the series")
    add_common(p, ["action"])
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("act", help="apply a U_q element to a disc element")
    p.add_argument("action", help="action file (JSON), or - for stdin")
    p.add_argument("uq_expr", help="U_q expression, e.g. 'e*f - f*e'")
    p.add_argument("disc_expr", help="disc expression, e.g. 'z*zs'")
    p.add_argument("--json", action="store_true", help="emit a JSON report")
    p.set_defaults(func=_cmd_act)

    p = sub.add_parser("involution", help="check star compatibility for a form")
    add_common(p, ["action"])
    p.add_argument("--form", required=True, choices=[f.value for f in InvolutionForm])
    p.add_argument(
        "--q",
        default=None,
        help="specialize q: a rational like -1/2, i1/2 for imaginary, or "
        "'symbolic' to override an action file's q_mode "
        "(use --q=-1/2 for negative values)",
    )
    p.set_defaults(func=_cmd_involution)

    p = sub.add_parser("scan", help="nonexistence certificates for |jump| > 1")
    p.add_argument("--nmax", type=int, default=100)
    p.add_argument("--json", action="store_true", help="emit a JSON report")
    p.set_defaults(func=_cmd_scan)

    p = sub.add_parser("series", help="emit an action file for a named series")
    p.add_argument(
        "tag",
        help="one of 0+, 0-, 1a, 1b, -1a, -1b (spell -1a as neg1a, or put it after --)",
    )
    for name in ("b0", "b1", "a0", "a1"):
        p.add_argument(f"--{name}", default=None, help=f"scalar expression for {name}")
    p.set_defaults(func=_cmd_series)

    p = sub.add_parser("iso", help="search for a rescaling witness between actions")
    p.add_argument("action1", help="first action file, or -")
    p.add_argument("action2", help="second action file")
    p.add_argument("--degree", type=int, default=None)
    p.add_argument("--json", action="store_true", help="emit a JSON report")
    p.set_defaults(func=_cmd_iso)

    return parser


def _preprocess(argv: list[str]) -> list[str]:
    # let the negative-jump tags through argparse
    if argv and argv[0] == "series":
        return [
            {"-1a": "neg1a", "-1b": "neg1b"}.get(tok, tok) for tok in argv
        ]
    return argv


def run(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(_preprocess(argv))
    except SystemExit as exc:
        # argparse exits 2 on bad arguments, matching the input-error status
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (InputError, ParseError, InvalidSpecialization, PoleAtSpecialization) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return _EXIT_INPUT


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
