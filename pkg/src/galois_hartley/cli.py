"""Command-line front end.

Exit status: 0 on success, 1 on a domain error (reported on stderr as
``error: <Name>: <detail>``), 2 on a usage error.

    galois-hartley trig-table --p 7 --alpha 3
    galois-hartley forward --p 7 --alpha 3 --signal 1,2,0,0,0,0
    galois-hartley classes --n 11 --q 3
"""

from __future__ import annotations

import argparse
import contextlib
import json
import sys
from collections.abc import Sequence

from .errors import GaloisHartleyError, ParseError
from .ffht import (
    TransformPlan,
    convolve_naive,
    convolve_spectral,
    forward,
    inverse,
    make_plan,
    shift_spectrum,
)
from .gaussian_ext import GaussianElement, GaussianField
from .gf_core import (
    FieldSpec,
    element_order,
    find_element_of_order,
    format_poly,
    is_primitive_modulus,
    is_quadratic_residue,
    make_field,
)
from .ktrig import trig_table
from .spectra import cyclotomic_classes, expand_spectrum, is_valid_spectrum

__all__ = ["main", "run", "parse_element", "render_element"]


def parse_element(text: str, spec: FieldSpec) -> GaussianElement:
    """Read ``"a"``, ``"bj"`` or ``"a+bj"`` as an element of GI over ``spec``."""
    return GaussianField(spec).parse(text)


def render_element(x: GaussianElement) -> str:
    return str(x)


class _UsageError(Exception):
    pass


# ---------------------------------------------------------------------------
# argument parsing


def _field_flags(p: argparse.ArgumentParser, *, plan: bool) -> None:
    g = p.add_argument_group("field")
    g.add_argument("--p", type=int, required=True, help="odd prime characteristic")
    g.add_argument("--r", type=int, default=1, help="base field degree (default 1)")
    g.add_argument("--modulus", help="base field modulus, e.g. x^2+1 (default: generated)")
    g.add_argument("--m", type=int, default=1, help="extension degree of the kernel field (default 1)")
    g.add_argument("--ext-modulus", help="modulus of GF(p^(r*m)) when m > 1 (default: generated)")
    if plan:
        g.add_argument("--alpha", help="kernel element in GF(q^m)")
        g.add_argument("--n", type=int, help="transform length N (order of alpha)")


def _io_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--out", help="write output to this file instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="galois-hartley",
        description="Galois field trigonometry and the finite field Hartley transform.",
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")

    p = sub.add_parser("field-info", help="describe GF(p^r) (and GF(p^(rm)))")
    _field_flags(p, plan=False)
    _io_flags(p)

    p = sub.add_parser("find-alpha", help="smallest element of order N")
    _field_flags(p, plan=False)
    p.add_argument("--n", type=int, required=True)
    _io_flags(p)

    p = sub.add_parser("trig-table", help="cos_k(i) and sin_k(i) tables")
    _field_flags(p, plan=True)
    _io_flags(p)

    for name, flag, what in (
        ("forward", "--signal", "Hartley spectrum of a signal"),
        ("inverse", "--spectrum", "signal from its Hartley spectrum"),
        ("validate", "--spectrum", "check that a spectrum comes from a GF(q)-valued signal"),
        ("shift", "--spectrum", "spectrum of the signal delayed by d"),
    ):
        p = sub.add_parser(name, help=what)
        _field_flags(p, plan=True)
        src = p.add_mutually_exclusive_group(required=True)
        src.add_argument(flag, dest="values", help="comma-separated elements, e.g. 1,2+5j,6j")
        src.add_argument("--in", dest="infile", help="read values from a file (text or JSON)")
        if name == "shift":
            p.add_argument("--d", type=int, required=True, help="delay")
        _io_flags(p)

    p = sub.add_parser("conv", help="cyclic convolution of two signals")
    _field_flags(p, plan=True)
    p.add_argument("--g", required=True)
    p.add_argument("--v", required=True)
    p.add_argument("--method", choices=("spectral", "naive"), default="spectral")
    _io_flags(p)

    p = sub.add_parser("classes", help="cyclotomic classes of k -> -qk mod N")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    _io_flags(p)

    p = sub.add_parser("expand", help="valid spectrum from class representatives")
    _field_flags(p, plan=True)
    p.add_argument("--assign", required=True, help="rep:value pairs, e.g. 0:3,1:2+2j,2:2j,3:6")
    _io_flags(p)
    return parser


# ---------------------------------------------------------------------------
# resolution


def _base_field(args) -> FieldSpec:
    return make_field(args.p, args.r, args.modulus)


def _plan(args) -> TransformPlan:
    if args.alpha is None and args.n is None:
        raise _UsageError("one of --alpha or --n is required")
    base = _base_field(args)
    if args.alpha is not None and args.n is not None:
        ext = base if args.m == 1 else make_field(args.p, args.r * args.m, args.ext_modulus)
        alpha = ext.parse(args.alpha)
        if not alpha.is_zero() and element_order(alpha) != args.n:
            raise _UsageError(
                f"--alpha {args.alpha} has order {element_order(alpha)}, conflicting with --n {args.n}"
            )
    return make_plan(base, args.m, alpha=args.alpha, N=args.n, ext_modulus=args.ext_modulus)


def _read_values(args) -> str | list[str]:
    if args.values is not None:
        return args.values
    with open(args.infile, encoding="utf-8") as fh:
        text = fh.read()
    if text.lstrip().startswith("{"):
        return [str(v) for v in json.loads(text)["values"]]
    return "".join(text.split())


def _parse_assignments(text: str) -> dict[int, str]:
    out = {}
    for item in text.split(","):
        key, sep, value = item.partition(":")
        if not sep or not key.strip().isdigit():
            raise ParseError("expected rep:value", text, text.find(item))
        out[int(key)] = value
    return out


# ---------------------------------------------------------------------------
# rendering


def _grid(title: str, rows: list[list[GaussianElement]]) -> list[str]:
    n = len(rows)
    cells = [[str(x) for x in row] for row in rows]
    width = max([len(str(n - 1))] + [len(c) for row in cells for c in row])
    corner = max(len("k\\i"), len(str(n - 1)))
    lines = [title, "k\\i".ljust(corner) + "".join(" " + str(i).rjust(width) for i in range(n))]
    for k, row in enumerate(cells):
        lines.append(str(k).rjust(corner) + "".join(" " + c.rjust(width) for c in row))
    return lines


def _field_info(spec: FieldSpec) -> dict:
    return {
        "p": spec.p,
        "r": spec.r,
        "q": spec.q,
        "modulus": format_poly(spec.modulus),
        "primitive_modulus": is_primitive_modulus(spec),
        "minus_one_is_residue": is_quadratic_residue(-spec.one),
    }


def _execute(args) -> tuple[dict, str]:
    """Run one subcommand; return (json payload, text rendering)."""
    cmd = args.command
    if cmd == "classes":
        part = cyclotomic_classes(args.n, args.q)
        return part.to_json(), str(part)

    if cmd == "field-info":
        base = _base_field(args)
        payload = {"base": _field_info(base)}
        if args.m > 1:
            payload["ext"] = _field_info(make_field(args.p, args.r * args.m, args.ext_modulus))
        text = []
        for label, info in payload.items():
            text += [f"{label}.{key}: {_text_value(val)}" for key, val in info.items()]
        return payload, "\n".join(text)

    if cmd == "find-alpha":
        base = _base_field(args)
        ext = base if args.m == 1 else make_field(args.p, args.r * args.m, args.ext_modulus)
        alpha = find_element_of_order(ext, args.n)
        return {"field": _field_info(ext), "N": args.n, "alpha": str(alpha)}, str(alpha)

    plan = _plan(args)
    describe = plan.describe()

    if cmd == "trig-table":
        cos_m, sin_m = trig_table(plan.trig)
        payload = {
            "plan": describe,
            "cos": [[str(x) for x in row] for row in cos_m],
            "sin": [[str(x) for x in row] for row in sin_m],
        }
        return payload, "\n".join(_grid("cos_k(i)", cos_m) + [""] + _grid("sin_k(i)", sin_m))

    if cmd == "conv":
        fn = convolve_spectral if args.method == "spectral" else convolve_naive
        result = fn(plan, plan.signal(args.g), plan.signal(args.v))
    elif cmd == "expand":
        result = expand_spectrum(plan, _parse_assignments(args.assign))
    else:
        values = _read_values(args)
        if cmd == "forward":
            result = forward(plan, plan.signal(values))
        elif cmd == "inverse":
            result = inverse(plan, plan.spectrum(values))
        elif cmd == "shift":
            result = shift_spectrum(plan, plan.spectrum(values), args.d)
        else:
            valid = is_valid_spectrum(plan, plan.spectrum(values))
            return {"plan": describe, "valid": valid}, "valid" if valid else "invalid"
    return {"plan": describe, "values": [str(x) for x in result]}, str(result)


def _text_value(v) -> str:
    if isinstance(v, bool):
        return "yes" if v else "no"
    return str(v)


def run(argv: Sequence[str] | None = None, stdout=None, stderr=None) -> int:
    stdout = sys.stdout if stdout is None else stdout
    stderr = sys.stderr if stderr is None else stderr
    parser = build_parser()
    try:
        with contextlib.redirect_stdout(stdout), contextlib.redirect_stderr(stderr):
            args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        payload, text = _execute(args)
    except _UsageError as exc:
        parser.print_usage(stderr)
        print(f"{parser.prog} {args.command}: error: {exc}", file=stderr)
        return 2
    except GaloisHartleyError as exc:
        print(f"error: {exc.code}: {exc}", file=stderr)
        return 1
    except OSError as exc:
        print(f"error: IOError: {exc}", file=stderr)
        return 1
    out = json.dumps(payload) if args.format == "json" else text
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(out + "\n")
    else:
        print(out, file=stdout)
    return 0


def main(argv: Sequence[str] | None = None) -> int:
    return run(argv)


if __name__ == "__main__":
    sys.exit(main())
