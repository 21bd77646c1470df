"""Command-line driver: build fixtures and constructions, run verifier stacks, emit reports.

Exit status is 0 when every report is clean, 1 when some axiom instance fails
and 2 on usage, parse or shape errors.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Callable, Sequence

from . import io
from .constructions import double, dual_coop, mirror, ribbon_extension
from .errors import GradeMismatch, ParseError, ShapeMismatch, Singular, UnknownDemo
from .fixtures import DEMO_NAMES
from .modules import module_sample, validate_module
from .quasitriangular import (
    check_drinfeld_props,
    drinfeld_elements,
    ribbon_family,
    trivial_rmatrix,
    validate_ribbon,
    validate_rmatrix,
)
from .report import Report
from .rib import (
    RibObject,
    rib_from_rt_module,
    rib_tortility,
    rt_module_from_rib,
    validate_rib,
)
from .tcoalg import TCoalg, coopposite, validate_tcoalg
from .yetter_drinfeld import (
    YDModule,
    ddouble_to_yd,
    transported_braiding,
    validate_yd,
    yd_braiding,
    yd_to_ddouble,
)

EXIT_CLEAN, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

LEVELS = ("hopf", "quasi", "ribbon")


class UsageError(Exception):
    pass


def _load(path: str, kind: type, what: str):
    obj = io.load(path)
    if not isinstance(obj, kind):
        raise UsageError(f"{path} does not hold a {what}")
    return obj


def _tcoalg(path: str) -> TCoalg:
    return _load(path, TCoalg, "T-coalgebra")


def suite(H: TCoalg, level: str) -> list[Report]:
    """The verifier stack for ``level``: Hopf axioms, then R-matrix and Drinfeld, then ribbon."""
    reps = [validate_tcoalg(H)]
    if level in ("quasi", "ribbon"):
        if H.rmatrix is None:
            raise UsageError(f"{H.name or 'input'} carries no R-matrix, needed for level {level}")
        reps += [validate_rmatrix(H), check_drinfeld_props(H)]
    if level == "ribbon":
        if H.twist is None:
            raise UsageError(f"{H.name or 'input'} carries no twist, needed for level ribbon")
        reps.append(validate_ribbon(H))
    return reps


def _auto_level(H: TCoalg) -> str:
    if H.twist is not None and H.rmatrix is not None:
        return "ribbon"
    return "quasi" if H.rmatrix is not None else "hopf"


# ---------------------------------------------------------------------------
# subcommands; each returns the reports it produced


def cmd_check(args) -> list[Report]:
    """Missing structures are replaced by the trivial R-matrix ``1 (x) 1`` and the unit twist."""
    H = _tcoalg(args.file)
    if args.level in ("quasi", "ribbon") and H.rmatrix is None:
        H = H.with_(rmatrix=trivial_rmatrix(H))
    if args.level == "ribbon" and H.twist is None:
        H = H.with_(twist=ribbon_family(H, {a: H.unit(a) for a in H.grades}))
    return suite(H, args.level)


_CONSTRUCTIONS: dict[str, Callable[[TCoalg], TCoalg]] = {
    "coop": coopposite,
    "mirror": mirror,
    "dualcoop": dual_coop,
    "double": double,
    "ribbon-ext": ribbon_extension,
}


def cmd_construct(args) -> list[Report]:
    H = _tcoalg(args.file)
    if args.kind == "ribbon-ext" and H.rmatrix is None:
        raise UsageError("ribbon-ext needs an input carrying an R-matrix")
    out = _CONSTRUCTIONS[args.kind](H)
    _emit_object(out, args.output)
    return []


def cmd_drinfeld(args) -> list[Report]:
    H = _tcoalg(args.file)
    if H.rmatrix is None:
        raise UsageError("drinfeld needs an input carrying an R-matrix")
    dr = drinfeld_elements(H)
    for a in H.grades:
        names = H.basis_names[a] if H.basis_names else [f"e{i}" for i in range(H.dim(a))]
        terms = [f"{H.field.format(c)} [{n}]" for c, n in zip(dr.u[a].entries(), names) if c != 0]
        print(f"u_{a} = {' + '.join(terms) or '0'}", file=args.info)
    return [check_drinfeld_props(H)]


def cmd_yd(args) -> list[Report]:
    H = _tcoalg(args.hfile)
    V = _load(args.vfile, YDModule, "Yetter-Drinfeld module")
    rep = validate_yd(H, V)
    if args.action == "roundtrip":
        D = double(H)
        M = yd_to_ddouble(H, V)
        rep.extend(validate_module(D, M), "double.")
        rep.add("yd.roundtrip", (), ddouble_to_yd(H, M).same_as(V))
        rep.add("yd.braiding_transported", (), yd_braiding(H, V, V) == transported_braiding(H, D, V, V))
    return [rep]


def cmd_rib(args) -> list[Report]:
    H = _tcoalg(args.hfile)
    O = _load(args.ofile, RibObject, "twist pair")
    if H.rmatrix is None:
        raise UsageError("rib check needs a base carrying an R-matrix")
    rep = validate_rib(H, None, O)
    if rep.clean:
        lhs, rhs = rib_tortility(H, O)
        rep.add("rib.tortility", (), lhs == rhs)
        RT = ribbon_extension(H)
        N = rt_module_from_rib(H, RT, O)
        rep.extend(validate_module(RT, N), "rt.")
        rep.add("rib.roundtrip", (), rib_from_rt_module(H, RT, N).same_as(O))
    return [rep]


def cmd_demo(args) -> list[Report]:
    if args.name == "list":
        for n in DEMO_NAMES:
            print(n, file=args.info)
        return []
    _emit_object(io.load(io.DEMO_SCHEME + args.name), args.output)
    return []


def cmd_report(args) -> list[Report]:
    reps = []
    for path in args.files:
        obj = io.load(path)
        if isinstance(obj, TCoalg):
            reps += suite(obj, args.level or _auto_level(obj))
        else:
            raise UsageError(f"{path}: report runs on T-coalgebra files; use `yd` or `rib` for other objects")
    return reps


def cmd_sample(args) -> list[Report]:
    """Write sample objects: modules of H, YD modules of the base of a double, or twist pairs."""
    H = _tcoalg(args.hfile)
    out = Path(args.output)
    out.mkdir(parents=True, exist_ok=True)
    if args.kind == "module":
        objs: Sequence = module_sample(H, max_dim=args.max_dim)
    elif args.kind == "yd":
        objs = [ddouble_to_yd(H, M) for M in module_sample(double(H), max_dim=args.max_dim)]
    else:
        if H.rmatrix is None:
            raise UsageError("twist pairs need a base carrying an R-matrix")
        RT = ribbon_extension(H)
        objs = [rib_from_rt_module(H, RT, N) for N in module_sample(RT, max_dim=args.max_dim)]
    for k, obj in enumerate(objs):
        p = out / f"{args.kind}{k}.json"
        io.save(obj, p)
        print(p, file=args.info)
    return []


def _emit_object(obj, output: str | None) -> None:
    if output:
        io.save(obj, output)
    else:
        sys.stdout.write(io.dumps(obj))


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default=argparse.SUPPRESS, help="report encoding")
    common.add_argument("-v", "--verbose", action="store_true", default=argparse.SUPPRESS, help="list passing entries too")
    p = argparse.ArgumentParser(prog="crossedhopf", description=__doc__.splitlines()[0], parents=[common])
    sub = p.add_subparsers(dest="command", required=True)
    add = lambda name, **kw: sub.add_parser(name, parents=[common], **kw)  # noqa: E731

    s = add("check", help="verify a T-coalgebra file or demo:NAME")
    s.add_argument("file")
    s.add_argument("--level", choices=LEVELS, default="hopf")
    s.set_defaults(func=cmd_check)

    s = add("construct", help="build a derived T-coalgebra")
    s.add_argument("kind", choices=sorted(_CONSTRUCTIONS))
    s.add_argument("file")
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_construct)

    s = add("drinfeld", help="print Drinfeld elements and check their properties")
    s.add_argument("file")
    s.set_defaults(func=cmd_drinfeld)

    s = add("yd", help="check a Yetter-Drinfeld module")
    s.add_argument("action", choices=("check", "roundtrip"))
    s.add_argument("hfile")
    s.add_argument("vfile")
    s.set_defaults(func=cmd_yd)

    s = add("rib", help="check a twist pair (M, t)")
    s.add_argument("action", choices=("check",))
    s.add_argument("hfile")
    s.add_argument("ofile")
    s.set_defaults(func=cmd_rib)

    s = add("demo", help="emit a named fixture (`demo list` shows the names)")
    s.add_argument("name")
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_demo)

    s = add("report", help="run every applicable suite on T-coalgebra files")
    s.add_argument("files", nargs="+")
    s.add_argument("--level", choices=LEVELS)
    s.set_defaults(func=cmd_report)

    s = add("sample", help="write sample modules, YD modules or twist pairs to a directory")
    s.add_argument("kind", choices=("module", "yd", "rib"))
    s.add_argument("hfile")
    s.add_argument("-o", "--output", required=True)
    s.add_argument("--max-dim", type=int, default=2)
    s.set_defaults(func=cmd_sample)
    return p


def render(reports: Sequence[Report], fmt: str, verbose: bool = False) -> str:
    if fmt == "json":
        docs = [json.loads(r.to_json()) for r in reports]
        clean = all(r.clean for r in reports)
        return json.dumps({"clean": clean, "reports": docs}, indent=2, sort_keys=True)
    return "\n".join(r.to_text(verbose) for r in reports)


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    # the shared options default to SUPPRESS so a subcommand never overwrites a global choice
    args.format = getattr(args, "format", "text")
    args.verbose = getattr(args, "verbose", False)
    # informational lines go to stderr in json mode so stdout stays machine readable
    args.info = sys.stderr if args.format == "json" else sys.stdout
    try:
        reports = args.func(args)
    except (UsageError, ParseError, ShapeMismatch, UnknownDemo, GradeMismatch, Singular) as exc:
        msg = exc.args[0] if exc.args else str(exc)
        if args.format == "json":
            print(json.dumps({"error": type(exc).__name__, "message": msg}, sort_keys=True))
        else:
            print(f"error: {msg}", file=sys.stderr)
        return EXIT_USAGE
    if reports:
        print(render(reports, args.format, args.verbose))
    return EXIT_CLEAN if all(r.clean for r in reports) else EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
