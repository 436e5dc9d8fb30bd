"""Command-line entry point.

Exit status: 0 on success, 1 on usage errors, 2 when an input or request
violates an invariant (inadmissible component, malformed surface, failed check).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path
from typing import Sequence, TextIO

from . import __version__
from .applications import (
    CompatibleDecomposition,
    FillingPairError,
    build_filling_pair,
    thurston_dilatation,
)
from .catalog import CatalogError, emit, list_keys
from .census import BudgetExceeded, CensusQuery, buckets, enumerate_classes, summary_table
from .classify import report
from .combinators import (
    CombinatorError,
    add_marked_point,
    concat,
    h11_gadget,
    left_swap_concat,
    order2_gadget,
    right_swap_concat,
)
from .origami import Origami, Representative, from_representative, to_representative
from .planner import PlannerError, construct
from .strata import ComponentLabel, StratumSpec

JOBS_ENV = "SQTILED_JOBS"
FORMATS = ("rows", "json", "cycles", "recipe", "summary")


class UsageError(Exception):
    pass


class ValidationError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        raise UsageError(f"{self.prog}: {message}")


# ------------------------------------------------------------------ input

def parse_surface(text: str) -> Origami:
    """Accept a two-row representative, a JSON record, or ``r=(..) u=(..)`` cycles."""
    t = text.strip()
    if not t:
        raise ValidationError("empty input")
    try:
        if t.startswith("{"):
            return Origami.from_record(json.loads(t))
        if t.startswith("r="):
            return Origami.from_cycles_string(t)
        return from_representative(Representative.parse(t))
    except (ValueError, KeyError) as exc:
        raise ValidationError(f"cannot read surface: {exc}") from exc


def _read_source(src: str | None, stdin: TextIO) -> str:
    if src is None or src == "-":
        return stdin.read()
    p = Path(src)
    if not p.exists():
        raise UsageError(f"no such file: {src}")
    return p.read_text()


def _surface_arg(value: str, stdin: TextIO) -> Representative:
    """A file path, ``-`` for stdin, or a catalog key."""
    if value == "-" or Path(value).exists():
        o = parse_surface(_read_source(value, stdin))
        return to_representative(o)
    try:
        return emit(value)
    except (CatalogError, ValueError, KeyError) as exc:
        raise ValidationError(f"{value!r} is neither a file nor a catalog key: {exc}") from exc


def _format_surface(o: Origami, fmt: str) -> str:
    if fmt == "json":
        return o.to_json()
    if fmt == "cycles":
        return o.to_cycles_string()
    if fmt == "summary":
        return report(o).line()
    return to_representative(o).to_rows()


# --------------------------------------------------------------- commands

def cmd_construct(a, out: TextIO, stdin: TextIO) -> None:
    s = _stratum(a.stratum)
    c = _component(a.component)
    try:
        o, recipe = construct(s, c)
    except ValueError as exc:
        raise ValidationError(str(exc)) from exc
    except PlannerError as exc:
        raise ValidationError(str(exc)) from exc
    if a.format == "recipe":
        out.write(recipe.to_text() + "\n")
    elif a.format == "json":
        rec = o.to_record()
        rec["stratum"], rec["component"] = str(s), c.value
        rec["recipe"] = json.loads(recipe.to_json())
        out.write(json.dumps(rec) + "\n")
    else:
        out.write(_format_surface(o, a.format) + "\n")


def cmd_classify(a, out: TextIO, stdin: TextIO) -> None:
    o = parse_surface(_read_source(a.input, stdin))
    r = report(o)
    if a.format == "json":
        out.write(
            json.dumps(
                {
                    "stratum": str(r.stratum),
                    "component": r.component.value,
                    "cylinders": [r.h_cylinders, r.v_cylinders],
                    "squares": r.squares,
                    "minimal": r.minimal,
                }
            )
            + "\n"
        )
    else:
        out.write(r.line() + "\n")


def cmd_census(a, out: TextIO, stdin: TextIO) -> None:
    one_one = False
    if a.cyl:
        if a.cyl.replace(" ", "") != "1,1":
            raise UsageError("only --cyl 1,1 is supported")
        one_one = True
    try:
        q = CensusQuery(
            a.squares,
            _stratum(a.stratum) if a.stratum else None,
            _component(a.component) if a.component else None,
            one_one=one_one,
            count_only=a.count_only,
            budget=a.budget,
        )
    except BudgetExceeded as exc:
        raise ValidationError(str(exc)) from exc
    found = enumerate_classes(q, jobs=a.jobs)
    table = summary_table(buckets(found))
    body = "" if a.count_only else "".join(o.to_json() + "\n" for o in found)
    if a.out:
        Path(a.out).write_text(body)
        body = ""
    out.write(body)
    out.write(f"total={len(found)}\n")
    out.write(table + "\n")


def cmd_catalog(a, out: TextIO, stdin: TextIO) -> None:
    if a.action == "list":
        out.write("\n".join(list_keys()) + "\n")
        return
    if not a.key:
        raise UsageError("catalog emit needs --key")
    try:
        rep = emit(a.key)
    except (CatalogError, ValueError, KeyError) as exc:
        raise ValidationError(str(exc)) from exc
    out.write(_format_surface(from_representative(rep), a.format) + "\n")


def cmd_combine(a, out: TextIO, stdin: TextIO) -> None:
    left = _surface_arg(a.a, stdin)
    try:
        if a.op in ("concat", "rswap", "lswap"):
            if not a.b:
                raise UsageError(f"--op {a.op} needs --b")
            right = _surface_arg(a.b, stdin)
            fn = {"concat": concat, "rswap": right_swap_concat, "lswap": left_swap_concat}[a.op]
            rep = fn(left, right)
        elif a.op == "gadget2":
            rep = order2_gadget(left)
        elif a.op == "h11":
            rep = h11_gadget(left)
        else:
            rep = add_marked_point(left, a.symbol)
    except CombinatorError as exc:
        raise ValidationError(str(exc)) from exc
    out.write(_format_surface(from_representative(rep), a.format) + "\n")


def cmd_filling_pair(a, out: TextIO, stdin: TextIO) -> None:
    polys = [int(x) for x in a.polygons.split(",") if x.strip()]
    d = CompatibleDecomposition(polys, a.genus, a.punctures, a.intersections)
    try:
        fp = build_filling_pair(d)
    except FillingPairError as exc:
        raise ValidationError(str(exc)) from exc
    if a.format == "json":
        rec = fp.origami.to_record()
        rec.update(regions=list(fp.regions), punctures=list(fp.punctures), intersections=fp.intersections)
        out.write(json.dumps(rec) + "\n")
        return
    out.write(_format_surface(fp.origami, "rows") + "\n")
    out.write(f"regions={','.join(map(str, fp.regions))} intersections={fp.intersections}\n")
    out.write(f"punctures_in_regions={','.join(map(str, fp.punctures)) or '-'}\n")


def cmd_dilatation(a, out: TextIO, stdin: TextIO) -> None:
    try:
        d = thurston_dilatation(a.word, a.n)
    except ValueError as exc:
        raise ValidationError(str(exc)) from exc
    if a.format == "json":
        out.write(
            json.dumps(
                {
                    "matrix": [list(r) for r in d.matrix],
                    "trace": d.trace,
                    "pseudo_anosov": d.pseudo_anosov,
                    "lambda": d.dilatation,
                    "log_lambda": d.translation_length,
                }
            )
            + "\n"
        )
    else:
        out.write(d.line() + "\n")


# ---------------------------------------------------------------- parsing

def _stratum(text: str) -> StratumSpec:
    try:
        return StratumSpec.parse(text)
    except ValueError as exc:
        raise ValidationError(f"bad stratum {text!r}: {exc}") from exc


def _component(text: str) -> ComponentLabel:
    try:
        return ComponentLabel.parse(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _default_jobs() -> int:
    try:
        return max(1, int(os.environ.get(JOBS_ENV, "1")))
    except ValueError:
        return 1


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="sqtiled", description="Minimal one-cylinder square-tiled surfaces.")
    p.add_argument("--version", action="version", version=f"sqtiled {__version__}")
    sub = p.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    c = sub.add_parser("construct", help="minimal 1,1 surface in a stratum component")
    c.add_argument("--stratum", required=True, help="orders, e.g. 6,2 or 4,0,0")
    c.add_argument("--component", default="connected", help="hyp|odd|even|nonhyp|connected")
    c.add_argument("--format", choices=FORMATS, default="rows")
    c.set_defaults(func=cmd_construct)

    k = sub.add_parser("classify", help="stratum, component and cylinder data of a surface")
    k.add_argument("input", nargs="?", default="-", help="file or - for stdin")
    k.add_argument("--format", choices=("summary", "json"), default="summary")
    k.set_defaults(func=cmd_classify)

    e = sub.add_parser("census", help="enumerate origamis up to conjugation")
    e.add_argument("--squares", type=int, required=True)
    e.add_argument("--stratum")
    e.add_argument("--component")
    e.add_argument("--cyl", help="cylinder filter; only 1,1")
    e.add_argument("--jobs", type=int, default=_default_jobs())
    e.add_argument("--out", help="write records here instead of stdout")
    e.add_argument("--count-only", action="store_true")
    e.add_argument("--budget", type=int, help="raise the square budget")
    e.set_defaults(func=cmd_census)

    g = sub.add_parser("catalog", help="list or emit catalogued representatives")
    g.add_argument("action", choices=("list", "emit"))
    g.add_argument("--key")
    g.add_argument("--format", choices=FORMATS[:3] + ("summary",), default="rows")
    g.set_defaults(func=cmd_catalog)

    m = sub.add_parser("combine", help="apply a surgery to catalogue keys or surface files")
    m.add_argument("--op", required=True, choices=("concat", "rswap", "lswap", "gadget2", "h11", "mark"))
    m.add_argument("--a", required=True, help="file, - or catalog key")
    m.add_argument("--b", help="second factor for concat/rswap/lswap")
    m.add_argument("--symbol", type=int, default=3, help="side label to split for mark")
    m.add_argument("--format", choices=FORMATS[:3] + ("summary",), default="rows")
    m.set_defaults(func=cmd_combine)

    f = sub.add_parser("filling-pair", help="filling pair with prescribed complementary polygons")
    f.add_argument("--genus", type=int, required=True)
    f.add_argument("--punctures", type=int, default=0)
    f.add_argument("--intersections", type=int, required=True)
    f.add_argument("--polygons", required=True, help="side counts, e.g. 20,4,4")
    f.add_argument("--format", choices=("rows", "json"), default="rows")
    f.set_defaults(func=cmd_filling_pair)

    d = sub.add_parser("dilatation", help="Thurston construction on the core curves")
    d.add_argument("--n", type=int, required=True, help="intersection number")
    d.add_argument("--word", required=True, help="e.g. a1,b-1")
    d.add_argument("--format", choices=("summary", "json"), default="summary")
    d.set_defaults(func=cmd_dilatation)
    return p


def main(argv: Sequence[str] | None = None, stdout: TextIO | None = None, stdin: TextIO | None = None) -> int:
    out = stdout or sys.stdout
    inp = stdin or sys.stdin
    try:
        args = build_parser().parse_args(argv)
        args.func(args, out, inp)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 1
    except ValidationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return 0


def main_entry() -> None:
    sys.exit(main())
