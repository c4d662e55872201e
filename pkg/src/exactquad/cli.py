"""``exactquad`` command line.

Exit status: 0 success, 2 unreadable input (usage, syntax, bad file),
3 domain error (e.g. brute-force bound exceeded).
"""

from __future__ import annotations

import argparse
import json
import math
import re
import sys
from collections.abc import Sequence
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from .exact import ExactRoot, format_rational
from .forms import (
    DegenerateQuadraticError,
    GeneralForm,
    discriminant,
    pretty_print,
    solve_prod_sum,
    to_factored,
    to_standard,
)
from .modular import BruteForceBoundError, CongruenceProblem, solve_congruence
from .parser import NonIntegerModError, ParseError, ProdSum, parse
from .plot import DEFAULT_SAMPLES, plot_overlay, plot_quadratic
from .transform import Number, Point, Transformation, format_scalar, map_table, read_points_csv

EXIT_OK, EXIT_INPUT, EXIT_DOMAIN = 0, 2, 3

SUBCOMMANDS = ("solve", "standard", "factor", "classify", "congruence", "prodsum", "transform", "plot")


class InputError(ValueError):
    """Input could not be read or parsed (exit 2)."""


class DomainError(ValueError):
    """Input parsed but the request cannot be answered (exit 3)."""


@dataclass(frozen=True)
class CliConfig:
    subcommand: str
    output_format: str = "text"
    output_path: str | None = None
    alpha: str | None = None
    beta: str | None = None
    A: str = "1"
    B: str = "1"
    C: str = "0"
    D: str = "0"
    samples: int = DEFAULT_SAMPLES

    def __post_init__(self) -> None:
        if self.subcommand not in SUBCOMMANDS:
            raise InputError(f"unknown subcommand {self.subcommand!r}")
        if self.output_format not in ("text", "json", "svg"):
            raise InputError(f"unknown format {self.output_format!r}")
        if (self.output_format == "svg") != (self.subcommand == "plot"):
            raise InputError(f"format {self.output_format} is not available for {self.subcommand}")


_PI_RE = re.compile(r"([+-]?)\s*([0-9.]+(?:/[0-9.]+)?)?\s*[*·]?\s*(?:pi|π)\s*(?:/\s*([0-9.]+))?", re.I)


def parse_scalar(text: str) -> Number:
    """A rational literal, or a rational multiple of pi (returned as float)."""
    text = text.strip()
    m = _PI_RE.fullmatch(text)
    if m:
        value = math.pi * float(Fraction(m[2])) if m[2] else math.pi
        if m[3]:
            value /= float(m[3])
        return -value if m[1] == "-" else value
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise InputError(f"not a number: {text!r}") from None


# -- per-subcommand results: an ordered mapping of named values -----------


def _general(text: str) -> GeneralForm:
    parsed = parse(text)
    if not isinstance(parsed, GeneralForm):
        raise InputError("expected a quadratic over Q (no '(mod n)' / 'prodsum')")
    return parsed


def _solve(cfg: CliConfig, text: str) -> dict[str, object]:
    q = _general(text)
    f = to_factored(q)
    cls = discriminant(q)
    return {"quadratic": q, "delta": cls.delta, "case": cls.case.value, "r": f.r, "s": f.s}


def _standard(cfg: CliConfig, text: str) -> dict[str, object]:
    sf = to_standard(_general(text))
    return {"form": sf, "a": sf.a, "h": sf.h, "k": sf.k}


def _factor(cfg: CliConfig, text: str) -> dict[str, object]:
    f = to_factored(_general(text))
    return {"form": f, "a": f.a, "r": f.r, "s": f.s}


def _classify(cfg: CliConfig, text: str) -> dict[str, object]:
    cls = discriminant(_general(text))
    return {"delta": cls.delta, "case": cls.case.value}


def _congruence(cfg: CliConfig, text: str) -> dict[str, object]:
    pr = parse(text)
    if not isinstance(pr, CongruenceProblem):
        raise InputError("expected a congruence such as 'x^2 + 4 (mod 7)'")
    try:
        sol = solve_congruence(pr)
    except BruteForceBoundError as exc:
        raise DomainError(str(exc)) from None
    return {"congruence": sol}


def _prodsum(cfg: CliConfig, text: str) -> dict[str, object]:
    if text.strip():
        parsed = parse(text if text.lstrip().lower().startswith("prodsum") else f"prodsum {text}")
        assert isinstance(parsed, ProdSum)
        alpha, beta = parsed.alpha, parsed.beta
    else:
        if cfg.alpha is None or cfg.beta is None:
            raise InputError("prodsum needs --alpha and --beta")
        a, b = parse_scalar(cfg.alpha), parse_scalar(cfg.beta)
        if isinstance(a, float) or isinstance(b, float):
            raise InputError("prodsum takes rational alpha and beta")
        alpha, beta = a, b
    r, s = solve_prod_sum(alpha, beta)
    return {"alpha": alpha, "beta": beta, "r": r, "s": s}


def _transformation(cfg: CliConfig) -> Transformation:
    try:
        return Transformation(*(parse_scalar(v) for v in (cfg.A, cfg.B, cfg.C, cfg.D)))
    except InputError:
        raise
    except ValueError as exc:
        raise DomainError(str(exc)) from None


def _points(text: str) -> list[Point]:
    try:
        return read_points_csv(text, scalar=parse_scalar)
    except ValueError as exc:
        raise InputError(str(exc)) from None


def _transform(cfg: CliConfig, text: str) -> dict[str, object]:
    tr = _transformation(cfg)
    pts = _points(text)
    return {"transformation": tr, "parent": pts, "image": map_table(tr, pts)}


# -- rendering ------------------------------------------------------------


def _json_value(v: object) -> object:
    if isinstance(v, Fraction):
        return format_rational(v)
    if isinstance(v, (int, float)):
        return format_scalar(v)
    if hasattr(v, "to_json"):
        return v.to_json()  # type: ignore[attr-defined]
    return v


def _text_value(v: object) -> str:
    if isinstance(v, float):
        return format_scalar(v)
    if isinstance(v, (Fraction, int)):
        return str(v)
    if isinstance(v, ExactRoot):
        return str(v)
    if hasattr(v, "a") and not isinstance(v, CongruenceProblem):
        return pretty_print(v)  # type: ignore[arg-type]
    return str(v)


def render(cfg: CliConfig, result: dict[str, object]) -> str:
    if cfg.subcommand == "congruence":
        sol = result["congruence"]
        data = sol.to_json()  # type: ignore[attr-defined]
        if cfg.output_format == "json":
            return json.dumps(data, indent=2) + "\n"
        lines = [
            f"n = {data['n']}",
            "solutions = {" + ", ".join(map(str, data["solutions"])) + "}",
            f"method = {data['method']}",
            f"unit_2a = {str(data['preconditions']['unit_2a']).lower()}",
            f"residue_delta = {str(data['preconditions']['residue_delta']).lower()}",
        ]
        return "\n".join(lines) + "\n"
    if cfg.subcommand == "transform":
        tr = result["transformation"]
        image = result["image"]
        if cfg.output_format == "json":
            data = {
                "transformation": {k: format_scalar(getattr(tr, k)) for k in "ABCD"},
                "points": [
                    {"t": format_scalar(t), "s": format_scalar(s), "x": format_scalar(x), "y": format_scalar(y)}
                    for (t, s), (x, y) in zip(result["parent"], image)  # type: ignore[call-overload]
                ],
            }
            return json.dumps(data, indent=2) + "\n"
        return "".join(f"{format_scalar(x)},{format_scalar(y)}\n" for x, y in image)  # type: ignore[attr-defined]
    if cfg.output_format == "json":
        return json.dumps({k: _json_value(v) for k, v in result.items()}, indent=2) + "\n"
    return "".join(f"{k} = {_text_value(v)}\n" for k, v in result.items())


def _plot(cfg: CliConfig, text: str) -> str:
    if text.strip() and "," not in text:
        return plot_quadratic(_general(text), samples=cfg.samples)
    tr = _transformation(cfg)
    pts = _points(text)
    if not pts:
        raise InputError("overlay plot needs parent points")
    return plot_overlay(tr, pts)


_HANDLERS = {
    "solve": _solve,
    "standard": _standard,
    "factor": _factor,
    "classify": _classify,
    "congruence": _congruence,
    "prodsum": _prodsum,
    "transform": _transform,
}


def run(cfg: CliConfig, input_text: str) -> tuple[int, str, str]:
    """Execute one request; returns ``(exit status, document, diagnostics)``."""
    try:
        if cfg.subcommand == "plot":
            return EXIT_OK, _plot(cfg, input_text), ""
        return EXIT_OK, render(cfg, _HANDLERS[cfg.subcommand](cfg, input_text)), ""
    except (ParseError, NonIntegerModError, DegenerateQuadraticError, InputError) as exc:
        return EXIT_INPUT, "", f"error: {exc}\n"
    except (DomainError, BruteForceBoundError) as exc:
        return EXIT_DOMAIN, "", f"error: {exc}\n"


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="exactquad", description="Exact quadratic toolkit.")
    sub = parser.add_subparsers(dest="subcommand", required=True)
    helps = {
        "solve": "exact roots of a quadratic",
        "standard": "convert to a*(x-h)^2 + k",
        "factor": "convert to a*(x-r)*(x-s)",
        "classify": "discriminant and root case",
        "congruence": "solve a*x^2 + b*x + c = 0 (mod n)",
        "prodsum": "find r, s with r*s = alpha and r + s = beta",
        "transform": "map parent points through f(x) = A*g(Bx + C) + D",
        "plot": "SVG of a quadratic, or an overlay of transformed points",
    }
    for name in SUBCOMMANDS:
        p = sub.add_parser(name, help=helps[name])
        p.add_argument("expr", nargs="?", help="input expression (or use --file)")
        p.add_argument("--file", help="read input from this file ('-' for stdin)")
        p.add_argument("--format", choices=("text", "json", "svg"), default=None)
        p.add_argument("--out", help="write the result here instead of stdout")
        if name == "prodsum":
            p.add_argument("--alpha")
            p.add_argument("--beta")
        if name in ("transform", "plot"):
            for const, default in (("A", "1"), ("B", "1"), ("C", "0"), ("D", "0")):
                p.add_argument(f"--{const}", default=default, help=f"constant {const} (rational or k*pi/m)")
            p.add_argument("--points", help="CSV file of parent points t,s")
        if name == "plot":
            p.add_argument("--samples", type=int, default=DEFAULT_SAMPLES)
    return parser


def _read_input(args: argparse.Namespace) -> str:
    sources = [s for s in (args.expr, args.file, getattr(args, "points", None)) if s is not None]
    if len(sources) > 1:
        raise InputError("give exactly one input: positional expression, --file or --points")
    if args.expr is not None:
        return args.expr
    path = args.file or getattr(args, "points", None)
    if path is None:
        if args.subcommand == "prodsum":
            return ""
        if not sys.stdin.isatty():
            return sys.stdin.read()
        raise InputError("no input given")
    if path == "-":
        return sys.stdin.read()
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    fmt = args.format or ("svg" if args.subcommand == "plot" else "text")
    try:
        cfg = CliConfig(
            subcommand=args.subcommand,
            output_format=fmt,
            output_path=args.out,
            alpha=getattr(args, "alpha", None),
            beta=getattr(args, "beta", None),
            A=getattr(args, "A", "1"),
            B=getattr(args, "B", "1"),
            C=getattr(args, "C", "0"),
            D=getattr(args, "D", "0"),
            samples=getattr(args, "samples", DEFAULT_SAMPLES),
        )
        text = _read_input(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    status, document, diagnostics = run(cfg, text)
    if diagnostics:
        sys.stderr.write(diagnostics)
    if status == EXIT_OK:
        if cfg.output_path:
            Path(cfg.output_path).write_text(document, encoding="utf-8")
        else:
            sys.stdout.write(document)
    return status


if __name__ == "__main__":
    sys.exit(main())
