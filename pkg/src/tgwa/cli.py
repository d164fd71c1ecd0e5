"""Command-line driver.

Exit codes: 0 success (property true), 1 property false, 2 input or parse
error, 3 iteration cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
from fractions import Fraction
from importlib import resources

from .constructions import (QWeylParams, TqmuParams, build_quantized_weyl,
                            build_tqmu, build_type_A2_example,
                            verify_theorem_5_3)
from .errors import (CapExceededError, InputError, InternalInconsistencyError,
                     ParseError, SpecValidationError, TGWAError)
from .locfin import DEFAULT_CAP, cartan_of, check_serre, poly_cartan_matrix, serre_element
from .parsing import parse_element, parse_scalar, parse_tgwc_spec, print_tgwc_spec
from .rank2 import presentation
from .scalars import QQ_q, format_scalar
from .tgwc import (format_element, format_word, ideal_witness, project_to_base,
                   shapovalov, validate_tgwc)

EXIT_OK, EXIT_FALSE, EXIT_INPUT, EXIT_CAP = 0, 1, 2, 3
PRESETS = ("a2-classical", "qweyl-n2", "tqmu-a2")


class Result:
    """A command outcome: ordered report sections plus an exit code."""

    def __init__(self, command, sections, code=EXIT_OK):
        self.command = command
        self.sections = sections
        self.code = code


# -- report rendering ------------------------------------------------------------

def _flat(v):
    return isinstance(v, list) and all(not isinstance(x, (dict, list)) for x in v)


def _inline(v):
    return "[" + ", ".join(_scalar_text(x) for x in v) + "]"


def _text_lines(value, indent):
    pad = "  " * indent
    if isinstance(value, dict):
        out = []
        for k, v in value.items():
            if _flat(v):
                out.append(f"{pad}{k}: {_inline(v)}")
            elif isinstance(v, (dict, list)) and v:
                out.append(f"{pad}{k}:")
                out.extend(_text_lines(v, indent + 1))
            else:
                out.append(f"{pad}{k}: {_scalar_text(v)}")
        return out
    if isinstance(value, list):
        out = []
        for v in value:
            if isinstance(v, dict):
                inner = _text_lines(v, indent + 1)
                out.append(pad + "- " + inner[0].lstrip())
                out.extend(inner[1:])
            elif _flat(v):
                out.append(pad + "- " + _inline(v))
            else:
                out.append(pad + "- " + _scalar_text(v))
        return out
    return [pad + _scalar_text(value)]


def _scalar_text(v):
    if v is True:
        return "true"
    if v is False:
        return "false"
    if v is None:
        return "none"
    if isinstance(v, (list, dict)) and not v:
        return "[]" if isinstance(v, list) else "{}"
    return str(v)


def emit_report(result: Result, fmt="text") -> str:
    if fmt == "structured":
        doc = {"command": result.command, "exit_code": result.code}
        doc.update(result.sections)
        return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"
    lines = [f"== {result.command} =="]
    for name, value in result.sections.items():
        if _flat(value) and len(value) <= 8:
            lines.append(f"{name}: {_inline(value)}")
        elif isinstance(value, (dict, list)) and value:
            lines.append(f"[{name}]")
            lines.extend(_text_lines(value, 1))
        else:
            lines.append(f"{name}: {_scalar_text(value)}")
    return "\n".join(lines) + "\n"


# -- input helpers ----------------------------------------------------------------

def resolve_spec_path(name):
    """A path on disk, or the name of a shipped preset (with or without ``.tgwa``)."""
    if os.path.exists(name):
        return name
    stem = name[:-5] if name.endswith(".tgwa") else name
    if stem in PRESETS:
        return str(resources.files("tgwa").joinpath("presets", stem + ".tgwa"))
    raise InputError(f"no such spec file or preset: {name}")


def read_spec_text(name):
    path = resolve_spec_path(name)
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def load_spec(name, validate=True):
    return parse_tgwc_spec(read_spec_text(name), validate=validate)


def parse_cartan(text):
    try:
        rows = [[int(x) for x in row.split(",")] for row in text.split(";") if row.strip()]
    except ValueError:
        raise ParseError(f"malformed Cartan matrix {text!r}", expected=["rows like 2,-1;-1,2"]) from None
    if not rows:
        raise ParseError("empty Cartan matrix")
    return rows


def parse_pair_value(text, what):
    """``"1 2: 5"`` -> ``((1, 2), "5")``."""
    if ":" not in text:
        raise ParseError(f"malformed {what} entry {text!r}", expected=["'i j: value'"])
    head, val = text.split(":", 1)
    try:
        i, j = (int(x) for x in head.split())
    except ValueError:
        raise ParseError(f"malformed {what} indices {head!r}", expected=["two integers"]) from None
    return (i, j), val.strip()


def random_nonzero_rational(rng):
    num = rng.choice([k for k in range(-7, 8) if k])
    return Fraction(num, rng.randint(1, 7))


def _tqmu_params(args, rng):
    C = parse_cartan(args.cartan or "2,-1;-1,2")
    qv = None
    if args.q is not None:
        qv = parse_scalar(args.q, QQ_q)
        if qv == QQ_q.gen:
            qv = None
    mu = {}
    for entry in args.mu or []:
        if entry.strip() == "random":
            for i in range(1, len(C) + 1):
                for j in range(i + 1, len(C) + 1):
                    mu[(i, j)] = random_nonzero_rational(rng)
            continue
        key, val = parse_pair_value(entry, "mu")
        mu[key] = parse_scalar(val, QQ_q)
    return TqmuParams(C, qv, mu)


# -- commands ---------------------------------------------------------------------

def cmd_validate(args, rng):
    d = load_spec(args.spec, validate=False)
    rep = validate_tgwc(d)
    return Result("validate", {"valid": rep.ok, "checks": [c.as_dict() for c in rep.checks]},
                  EXIT_OK if rep.ok else EXIT_FALSE)


def cmd_cartan(args, rng):
    d = load_spec(args.spec)
    P = poly_cartan_matrix(d, args.cap)
    C = cartan_of(P)
    return Result("cartan", {"polynomial_cartan_matrix": P.rows_as_strings(),
                             "generalized_cartan_matrix": C})


def _serre_section(d, e):
    v = check_serre(d, e)
    return {"pair": [e.i, e.j], "m": e.m,
            "coefficients": [format_scalar(c) for c in e.coefficients],
            "x_form": format_element(e.x_form), "y_form": format_element(e.y_form),
            "ring_criterion": v.ring_criterion, "pairing_x": v.pairing_x,
            "pairing_y": v.pairing_y, "in_ideal": v.ok}


def cmd_serre(args, rng):
    d = load_spec(args.spec)
    P = poly_cartan_matrix(d, args.cap)
    if (args.i is None) != (args.j is None):
        raise InputError("give both --i and --j, or neither")
    pairs = ([(args.i, args.j)] if args.i is not None else
             [(i, j) for i in range(1, d.n + 1) for j in range(1, d.n + 1) if i != j])
    for i, j in pairs:
        if not (1 <= i <= d.n and 1 <= j <= d.n) or i == j:
            raise InputError(f"invalid pair ({i}, {j}) for n = {d.n}")
    items = [_serre_section(d, serre_element(d, P, i, j)) for i, j in pairs]
    ok = all(x["in_ideal"] for x in items)
    return Result("serre", {"all_in_ideal": ok, "serre_elements": items},
                  EXIT_OK if ok else EXIT_FALSE)


def cmd_member(args, rng):
    d = load_spec(args.spec)
    a = parse_element(d, args.element)
    g = a.degree()
    w = ideal_witness(d, a)
    witnesses = [] if w is None else [{"monomial": format_word(w.word), "pairing": str(w.value)}]
    return Result("member", {"verdict": w is None,
                             "degree": list(g) if g is not None else None,
                             "pairing_witnesses": witnesses},
                  EXIT_OK if w is None else EXIT_FALSE)


def cmd_project(args, rng):
    d = load_spec(args.spec)
    a = parse_element(d, args.element)
    return Result("project", {"element": format_element(a), "projection": str(project_to_base(d, a))})


def cmd_shapovalov(args, rng):
    d = load_spec(args.spec)
    a = parse_element(d, args.left)
    b = parse_element(d, args.right)
    return Result("shapovalov", {"left": format_element(a), "right": format_element(b),
                                 "value": str(shapovalov(d, a, b))})


def cmd_build(args, rng):
    if args.preset == "a2-classical":
        d = build_type_A2_example()
    elif args.preset == "qweyl":
        if not args.qbar:
            raise InputError("qweyl needs --qbar, e.g. --qbar 4,9")
        qbar = [parse_scalar(x.strip()) for x in args.qbar.split(",")]
        lam = {}
        for entry in args.lam or []:
            key, val = parse_pair_value(entry, "lambda")
            lam[(min(key), max(key))] = parse_scalar(val)
        d = build_quantized_weyl(QWeylParams(qbar, lam))
    else:
        d = build_tqmu(_tqmu_params(args, rng))
    text = print_tgwc_spec(d)
    sections = {"preset": args.preset}
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
        sections["written"] = args.output
    else:
        sections["spec"] = text.rstrip("\n").split("\n")
    return Result("build", sections)


def cmd_presentation(args, rng):
    d = load_spec(args.spec)
    p = presentation(d, args.cap)
    sections = {"ok": p.ok, "properties": p.properties}
    if p.serre is not None:
        sections["serre_pair"] = {"xi": [format_scalar(x) for x in p.serre.xi],
                                  "eta": [format_scalar(x) for x in p.serre.eta]}
    if p.ok:
        sections["generators"] = p.generators
        sections["relations"] = [r.as_dict() for r in p.relations]
    else:
        sections["diagnosis"] = p.diagnosis
    return Result("presentation", sections, EXIT_OK if p.ok else EXIT_FALSE)


def cmd_theorem(args, rng):
    params = _tqmu_params(args, rng)
    rep = verify_theorem_5_3(params, args.cap)
    entries = []
    for e in rep.entries:
        e = dict(e)
        e["pair"] = list(e["pair"])
        entries.append(e)
    mu = {f"{i} {j}": format_scalar(params.mu_of(i, j))
          for i in range(1, params.n + 1) for j in range(i + 1, params.n + 1)}
    return Result("check-theorem-5-3",
                  {"ok": rep.ok, "cartan": params.C, "q": format_scalar(params.q_value()),
                   "mu": mu, "valid": rep.valid, "locally_finite": rep.locally_finite,
                   "entries": entries},
                  EXIT_OK if rep.ok else EXIT_FALSE)


# -- argument parsing -------------------------------------------------------------

def _positive_int(text):
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if v < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return v


def _add_globals(p, suppress):
    kw = {"default": argparse.SUPPRESS} if suppress else {}
    p.add_argument("--cap", type=_positive_int, help=f"iteration cap (default {DEFAULT_CAP})",
                   **({"default": DEFAULT_CAP} if not suppress else kw))
    p.add_argument("--format", choices=("text", "structured"),
                   **({"default": "text"} if not suppress else kw))
    p.add_argument("--seed", type=int, **({"default": 0} if not suppress else kw))


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise ParseError(message)


def build_parser():
    parser = _Parser(prog="tgwa", description="Twisted generalized Weyl constructions and algebras.")
    _add_globals(parser, suppress=False)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, func, spec=True, help=None):
        p = sub.add_parser(name, help=help)
        _add_globals(p, suppress=True)
        if spec:
            p.add_argument("spec", help="spec file or preset name")
        p.set_defaults(func=func)
        return p

    add("validate", cmd_validate, help="run the consistency checks")
    add("cartan", cmd_cartan, help="polynomial and generalized Cartan matrices")
    p = add("serre", cmd_serre, help="generalized Serre elements and their membership")
    p.add_argument("--i", type=int)
    p.add_argument("--j", type=int)
    p = add("member", cmd_member, help="decide membership in the graded ideal")
    p.add_argument("--element", required=True)
    p = add("project", cmd_project, help="degree-zero element as a ring element")
    p.add_argument("--element", required=True)
    p = add("shapovalov", cmd_shapovalov, help="the pairing F(a, b)")
    p.add_argument("--left", required=True)
    p.add_argument("--right", required=True)
    p = add("build", cmd_build, spec=False, help="write a spec file for a named family")
    p.add_argument("--preset", required=True, choices=("a2-classical", "qweyl", "tqmu"))
    p.add_argument("--cartan")
    p.add_argument("--q")
    p.add_argument("--mu", action="append", help="'i j: value' (repeatable) or 'random'")
    p.add_argument("--qbar", help="comma-separated q_1,...,q_n")
    p.add_argument("--lambda", dest="lam", action="append", help="'i j: value' with i < j")
    p.add_argument("-o", "--output")
    add("presentation", cmd_presentation, help="rank-2 generators and relations")
    p = add("check-theorem-5-3", cmd_theorem, spec=False,
            help="recompute the Cartan data of the T(q, mu, C) family")
    p.add_argument("--cartan", required=True)
    p.add_argument("--q")
    p.add_argument("--mu", action="append")
    return parser


def _format_from_argv(argv):
    """Best-effort format lookup so that argument errors honour ``--format`` too."""
    for k, a in enumerate(argv):
        if a == "--format=structured" or (a == "--format" and argv[k + 1:k + 2] == ["structured"]):
            return "structured"
    return "text"


def run_command(argv):
    """Run one invocation; returns ``(exit_code, report_text)``."""
    fmt = _format_from_argv(argv)
    try:
        args = build_parser().parse_args(argv)
        fmt = args.format
        rng = random.Random(args.seed)
        result = args.func(args, rng)
    except CapExceededError as exc:
        result = Result("error", {"error": "cap exceeded", "detail": str(exc)}, EXIT_CAP)
    except SpecValidationError as exc:
        result = Result("error", {"error": "invalid data", "detail": str(exc),
                                  "checks": [c.as_dict() for c in exc.report.checks]}, EXIT_INPUT)
    except InternalInconsistencyError:
        raise
    except (TGWAError, OSError) as exc:
        result = Result("error", {"error": type(exc).__name__, "detail": str(exc)}, EXIT_INPUT)
    return result.code, emit_report(result, fmt)


def main(argv=None):
    argv = sys.argv[1:] if argv is None else list(argv)
    if any(a in ("-h", "--help") for a in argv):
        build_parser().parse_args(argv)
        return EXIT_OK
    code, text = run_command(argv)
    stream = sys.stdout if code in (EXIT_OK, EXIT_FALSE) else sys.stderr
    stream.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
