"""Command-line interface.

Exit codes: 0 success, 1 domain error (not representable, negative input,
precondition violated), 2 usage or syntax error.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from typing import TextIO

from . import surd
from .arithmetic import as_rat
from .errors import DomainError, NotRepresentable, ParseError
from .parser import parse_expr
from .ranks import DEPTH_CAP, rank, x115_sequence
from .taxonomy import classify, classify_pair, gen_apotome, gen_binomial, pair_from_value, species_conditions
from .verify import PROPOSITIONS, verify_proposition

APPROX_DIGITS = 12

EXIT_OK, EXIT_DOMAIN, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


@dataclass
class ParsedCommand:
    subcommand: str
    arguments: dict = field(default_factory=dict)
    output_format: str = "text"
    seed: int | None = None


def _rat_arg(text: str):
    try:
        q = as_rat(text)
    except (DomainError, TypeError) as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None
    return q


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS,
                        help="emit JSON instead of text")

    parser = _Parser(prog="bookx", description="Exact arithmetic and classification of Book X irrationals.",
                     parents=[common])
    sub = parser.add_subparsers(dest="subcommand", required=True, parser_class=_Parser)

    p = sub.add_parser("classify", parents=[common], help="classify a magnitude")
    p.add_argument("expr")

    p = sub.add_parser("commensurable", parents=[common], help="test commensurability of two magnitudes")
    p.add_argument("expr1")
    p.add_argument("expr2")
    p.add_argument("--power", action="store_true", help="commensurability in power (squares)")

    p = sub.add_parser("sqrt", parents=[common], help="exact square root")
    p.add_argument("expr")

    p = sub.add_parser("ranks", parents=[common], help="the X.115 ladder of ranks")
    p.add_argument("--base", type=_rat_arg, default=as_rat(2))
    p.add_argument("--count", type=int, default=3)

    p = sub.add_parser("binomial", parents=[common], help="binomial generators")
    p.add_argument("action", choices=["gen"])
    p.add_argument("--type", dest="species", type=int, required=True, choices=range(1, 7), metavar="1..6")
    p.add_argument("--n", type=_rat_arg, required=True)
    p.add_argument("--apotome", action="store_true")

    p = sub.add_parser("verify", parents=[common], help="seeded check of a proposition")
    p.add_argument("--prop", required=True, choices=PROPOSITIONS)
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    return parser


def parse_command(argv: list[str]) -> ParsedCommand:
    ns = vars(build_parser().parse_args(argv))
    fmt = "json" if ns.pop("json", False) else "text"
    name = ns.pop("subcommand")
    if name == "verify" and ns["trials"] < 1:
        raise UsageError("bookx verify: --trials must be at least 1")
    if name == "ranks" and ns["count"] < 1:
        raise UsageError("bookx ranks: --count must be at least 1")
    return ParsedCommand(name, ns, fmt, ns.get("seed"))


# -- subcommands ------------------------------------------------------------

def _approx(v) -> str:
    return str(surd.to_float(v, APPROX_DIGITS))


def _classify(args: dict) -> tuple[dict, str]:
    value = surd.normalize(parse_expr(args["expr"]))
    cls = classify(value)
    pair = pair_from_value(value)
    out = {
        "input": args["expr"],
        "canonical": str(value),
        "class": cls.label,
        "species": cls.species,
        "rank": cls.rank,
        "approx": _approx(value),
        "conditions": species_conditions(pair) if pair is not None else None,
    }
    lines = [f"{out['canonical']}  ~ {out['approx']}", f"class: {cls}"]
    if out["conditions"]:
        lines += [f"  {k}: {v}" for k, v in out["conditions"].items()]
    return out, "\n".join(lines)


def _commensurable(args: dict) -> tuple[dict, str]:
    x = surd.normalize(parse_expr(args["expr1"]))
    y = surd.normalize(parse_expr(args["expr2"]))
    power = args["power"]
    verdict = surd.commensurable_power(x, y) if power else surd.commensurable_length(x, y)
    try:
        ratio = surd.div(surd.mul(x, x), surd.mul(y, y)) if power else surd.div(x, y)
        ratio_text = str(ratio)
    except NotRepresentable:
        ratio_text = None
    mode = "power" if power else "length"
    out = {
        "inputs": [args["expr1"], args["expr2"]],
        "canonical": [str(x), str(y)],
        "mode": mode,
        "commensurable": verdict,
        "ratio": ratio_text,
    }
    word = "commensurable" if verdict else "incommensurable"
    text = f"{word} in {mode}"
    if ratio_text is not None:
        text += f" (ratio{' of squares' if power else ''}: {ratio_text})"
    return out, text


def _sqrt(args: dict) -> tuple[dict, str]:
    value = surd.sqrt(surd.normalize(parse_expr(args["expr"])))
    out = {"input": args["expr"], "canonical": str(value), "approx": _approx(value)}
    return out, f"{out['canonical']}  ~ {out['approx']}"


def _ranks(args: dict) -> tuple[dict, str]:
    seq = x115_sequence(args["base"], args["count"], depth_cap=DEPTH_CAP)
    terms = []
    lines = [f"base b = {seq.base_b}, u0 = 1"]
    for n, (u, s) in enumerate(zip(seq.terms, seq.areas), start=1):
        entry = {
            "n": n,
            "u": str(u),
            "power_form": u.power_form(),
            "rank": rank(u),
            "area": str(s),
            "approx": _approx(u),
            "incommensurable_with_previous": not surd.commensurable_length(u, seq.term(n - 1)),
            "incommensurable_with_unit": not surd.commensurable_length(u, surd.ONE),
        }
        terms.append(entry)
        lines.append(f"u{n} = {entry['power_form']}  rank {entry['rank']}  ~ {entry['approx']}")
    return {"base": str(seq.base_b), "count": args["count"], "terms": terms}, "\n".join(lines)


def _binomial(args: dict) -> tuple[dict, str]:
    gen = gen_apotome if args["apotome"] else gen_binomial
    pair = gen(args["species"], args["n"])
    value = pair.value()
    out = {
        "type": args["species"],
        "n": str(args["n"]),
        "kind": "apotome" if pair.is_apotome else "binomial",
        "greater_square": str(pair.greater.square),
        "lesser_square": str(pair.lesser.square),
        "canonical": str(value),
        "species": classify_pair(pair),
        "approx": _approx(value),
    }
    return out, f"{out['canonical']}  ({out['kind']} {out['species']})  ~ {out['approx']}"


def _verify(args: dict) -> tuple[dict, str]:
    report = verify_proposition(args["prop"], args["trials"], args["seed"])
    out = report.to_dict()
    text = f"{report.prop}: {report.passed}/{report.attempted} passed (seed {report.seed})"
    if report.counterexample is not None:
        text += "\nfirst counterexample: " + json.dumps(report.counterexample, sort_keys=True)
    return out, text


_HANDLERS = {
    "classify": _classify,
    "commensurable": _commensurable,
    "sqrt": _sqrt,
    "ranks": _ranks,
    "binomial": _binomial,
    "verify": _verify,
}


def _fail(kind: str, message: str, code: int, as_json: bool, out: TextIO, err: TextIO,
          position: int | None = None) -> int:
    print(message, file=err)
    if as_json:
        print(json.dumps({"error": kind, "message": message, "position": position}, sort_keys=True), file=out)
    return code


def run_command(cmd: ParsedCommand, out: TextIO | None = None, err: TextIO | None = None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    as_json = cmd.output_format == "json"
    try:
        payload, text = _HANDLERS[cmd.subcommand](cmd.arguments)
    except ParseError as exc:
        return _fail("syntax", str(exc), EXIT_USAGE, as_json, out, err, exc.position)
    except NotRepresentable as exc:
        return _fail("not_representable", f"not representable: {exc}", EXIT_DOMAIN, as_json, out, err)
    except DomainError as exc:
        return _fail("domain", f"error: {exc}", EXIT_DOMAIN, as_json, out, err)
    if as_json:
        print(json.dumps(payload, sort_keys=True), file=out)
    else:
        print(text, file=out)
    return EXIT_OK


def main(argv: list[str] | None = None, out: TextIO | None = None, err: TextIO | None = None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    err = err or sys.stderr
    try:
        cmd = parse_command(argv)
    except UsageError as exc:
        print(exc, file=err)
        return EXIT_USAGE
    return run_command(cmd, out, err)


def entry_point():
    sys.exit(main())
