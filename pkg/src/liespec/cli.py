"""Command-line front end.

Algebras come either from ``catalog:name[:param...]`` references or from JSON
files in the documented schema; catalog modules resolve against their entry.
Output is a human-readable table by default or canonical JSON with
``--format json``; repeated runs produce identical bytes.

Exit codes: 0 success, 1 computation error, 2 usage or input-parse error.
"""

from __future__ import annotations

import argparse
import os
import sys
from fractions import Fraction
from pathlib import Path

from . import jsonio
from .catalog import CATALOG_NAMES, CatalogEntry, get
from .checks import SUITES, run_suite
from .errors import SchemaError, ToolkitError
from .extensions import ExtensionSpec, build_extension
from .homology import betti_cohomology, betti_homology, chain_complex, cochain_complex
from .liealg import (
    Character,
    LieAlgebra,
    is_nilpotent,
    is_semisimple,
    is_solvable,
    jordan_holder_values,
    two_rho,
)
from .reps import Representation, trivial_module, weights
from .roots import borel_spectrum_formula
from .spectrum import (
    SpectrumReport,
    spectrum_nilpotent,
    spectrum_semisimple,
    spectrum_solvable,
)


def _parse_catalog_ref(ref: str) -> CatalogEntry:
    parts = ref.split(":")[1:]
    if not parts:
        raise SchemaError("empty catalog reference")
    name, params = parts[0], parts[1:]
    return get(name, [Fraction(p) for p in params])


def _load_algebra(ref: str) -> tuple[LieAlgebra, CatalogEntry | None]:
    if ref.startswith("catalog:"):
        entry = _parse_catalog_ref(ref)
        return entry.algebra, entry
    path = Path(ref)
    if not path.exists():
        raise SchemaError(f"no such algebra file: {ref}")
    return jsonio.algebra_from_obj(jsonio.loads(path.read_text())), None


def _load_module(ref: str, algebra: LieAlgebra, entry: CatalogEntry | None) -> Representation:
    path = Path(ref)
    if path.exists():
        v = jsonio.rep_from_obj(jsonio.loads(path.read_text()), algebra)
        if v.algebra != algebra:
            raise SchemaError("module file is over a different algebra")
        return v
    if ref == "trivial":
        return trivial_module(algebra)
    if entry is not None:
        return entry.module(ref)
    raise SchemaError(f"module reference {ref!r} needs a catalog algebra or a file")


def _emit(args, obj, table_lines) -> None:
    if args.format == "json":
        sys.stdout.write(jsonio.dumps(obj))
    else:
        sys.stdout.write("\n".join(table_lines) + "\n")


def _character_obj(values) -> list[str]:
    return [str(v) for v in values]


def _spectrum_obj(report: SpectrumReport) -> dict:
    elements = []
    for e in report.elements:
        item = {"label": e.label}
        if e.character is not None:
            item["character"] = _character_obj(e.character.values)
        item["first_degree"] = e.first_degree
        item["evidence"] = list(e.evidence.values)
        elements.append(item)
    return {
        "format_version": jsonio.FORMAT_VERSION,
        "algebra_class": report.algebra_class,
        "method": report.method,
        "elements": elements,
    }


def _cmd_catalog(args) -> int:
    if args.dump is None:
        lines = ["name        params", "----        ------"]
        descriptions = {
            "abelian": "n (dimension)",
            "heisenberg3": "-",
            "solvable3": "lambda (default 5/3)",
            "sl2": "-",
            "borel_sl2": "-",
            "sl3": "-",
            "borel_sl3": "-",
            "a1xa1": "-",
        }
        obj = []
        for name in CATALOG_NAMES:
            lines.append(f"{name:<12}{descriptions[name]}")
            obj.append({"name": name, "params": descriptions[name]})
        _emit(args, obj, lines)
        return 0
    entry = _parse_catalog_ref("catalog:" + args.dump)
    if args.module:
        module = entry.module(args.module)
        sys.stdout.write(jsonio.dumps(jsonio.rep_to_obj(module)))
    else:
        sys.stdout.write(jsonio.dumps(jsonio.algebra_to_obj(entry.algebra)))
    return 0


def _cmd_info(args) -> int:
    g, entry = _load_algebra(args.algebra)
    solvable = is_solvable(g)
    obj = {
        "format_version": jsonio.FORMAT_VERSION,
        "dim": g.dim,
        "basis": list(g.basis_names),
        "solvable": solvable,
        "nilpotent": is_nilpotent(g),
        "semisimple": is_semisimple(g),
    }
    lines = [f"dimension   {g.dim}", f"basis       {' '.join(g.basis_names)}"]
    lines.append(f"solvable    {str(obj['solvable']).lower()}")
    lines.append(f"nilpotent   {str(obj['nilpotent']).lower()}")
    lines.append(f"semisimple  {str(obj['semisimple']).lower()}")
    if solvable:
        jh = jordan_holder_values(g)
        obj["jordan_holder_values"] = [
            {"character": _character_obj(chi.values), "multiplicity": m}
            for chi, m in jh.entries
        ]
        obj["two_rho"] = _character_obj(two_rho(g).values)
        lines.append("adjoint weights:")
        for chi, m in jh.entries:
            lines.append(f"  ({', '.join(str(v) for v in chi.values)}) x{m}")
        lines.append(f"weight sum  ({', '.join(obj['two_rho'])})")
    if entry is not None and entry.module_names:
        obj["modules"] = list(entry.module_names)
        lines.append("modules     " + " ".join(entry.module_names))
    _emit(args, obj, lines)
    return 0


def _cmd_homology(args, cohomology: bool) -> int:
    g, entry = _load_algebra(args.algebra)
    v = _load_module(args.module, g, entry)
    if cohomology:
        table = betti_cohomology(g, v)
    else:
        table = betti_homology(g, v)
    kind = "cohomology" if cohomology else "homology"
    obj = {
        "format_version": jsonio.FORMAT_VERSION,
        "kind": kind,
        "betti": list(table.values),
    }
    if args.dump_complex:
        if cohomology:
            cx = cochain_complex(g, v)
            obj["lengths"] = list(cx.lengths)
            obj["differentials"] = {
                f"d^{k}": jsonio.matrix_to_obj(d) for k, d in enumerate(cx.deltas)
            }
        else:
            cx = chain_complex(g, v)
            obj["lengths"] = list(cx.lengths)
            obj["differentials"] = {
                f"d_{k}": jsonio.matrix_to_obj(d)
                for k, d in enumerate(cx.differentials)
                if k > 0
            }
    lines = [f"{kind} betti numbers: [" + ", ".join(str(b) for b in table.values) + "]"]
    _emit(args, obj, lines)
    return 0


def _cmd_weights(args) -> int:
    g, entry = _load_algebra(args.algebra)
    v = _load_module(args.module, g, entry)
    table = weights(v)
    obj = {
        "format_version": jsonio.FORMAT_VERSION,
        "weights": [
            {"character": _character_obj(chi.values), "multiplicity": m}
            for chi, m in table.entries
        ],
    }
    lines = ["weight  multiplicity"]
    for chi, m in table.entries:
        lines.append(f"({', '.join(str(x) for x in chi.values)})  {m}")
    _emit(args, obj, lines)
    return 0


def _cmd_spectrum(args) -> int:
    g, entry = _load_algebra(args.algebra)
    v = _load_module(args.module, g, entry)
    if is_nilpotent(g):
        report = spectrum_nilpotent(g, v, method=args.method)
    elif is_solvable(g):
        report = spectrum_solvable(g, v, jobs=args.jobs)
    elif is_semisimple(g):
        if not args.candidates:
            raise SchemaError("semisimple spectra need --candidates")
        refs = args.candidates.split(",")
        candidates = [_load_module(r, g, entry) for r in refs]
        report = spectrum_semisimple(g, v, candidates, labels=refs, method=args.method)
    else:
        raise ToolkitError("algebra is neither solvable nor semisimple")
    obj = _spectrum_obj(report)
    lines = [f"class: {report.algebra_class}  method: {report.method}"]
    lines.append("element  first-degree  evidence")
    for e in report.elements:
        lines.append(
            f"{e.label}  {e.first_degree}  [{', '.join(str(b) for b in e.evidence.values)}]"
        )
    _emit(args, obj, lines)
    return 0


def _cmd_borel_check(args) -> int:
    entry = _parse_catalog_ref("catalog:" + args.name)
    if entry.root_system is None or entry.parent is None:
        raise SchemaError("borel-check needs a Borel catalog entry")
    weight = [Fraction(x) for x in args.weight.split(",")] if args.weight else None
    if args.module:
        v = entry.module(args.module)
    elif weight is not None and entry.name == "borel_sl2":
        v = entry.module(f"restrict:irrep:{int(weight[0])}")
    else:
        raise SchemaError("give --module (or --weight for borel_sl2)")
    if weight is None:
        from .roots import _highest_weight, _nilradical_data

        weight = list(_highest_weight(_nilradical_data(entry, v)[2], entry.root_system))
    formula = borel_spectrum_formula(entry.root_system, weight)
    computed = tuple(
        sorted(
            {
                c.values[: entry.rank]
                for c in spectrum_solvable(entry.algebra, v).characters()
            }
        )
    )
    passed = formula == computed
    obj = {
        "format_version": jsonio.FORMAT_VERSION,
        "formula": [_character_obj(w) for w in formula],
        "computed": [_character_obj(w) for w in computed],
        "passed": passed,
    }
    lines = [
        "formula : " + " ".join("(" + ",".join(str(x) for x in w) + ")" for w in formula),
        "computed: " + " ".join("(" + ",".join(str(x) for x in w) + ")" for w in computed),
        "PASS" if passed else "FAIL",
    ]
    _emit(args, obj, lines)
    return 0 if passed else 1


def _cmd_extend(args) -> int:
    base, _ = _load_algebra(args.base)
    char_values = [Fraction(x) for x in args.char.split(",")] if args.char else [0] * base.dim
    cocycle = {}
    if args.cocycle:
        for chunk in args.cocycle.split(";"):
            i, j, value = chunk.split(",")
            cocycle[(int(i) - 1, int(j) - 1)] = Fraction(value)
    ext = build_extension(ExtensionSpec(base, Character(base, char_values), cocycle))
    sys.stdout.write(jsonio.dumps(jsonio.algebra_to_obj(ext.algebra)))
    return 0


def _use_color() -> bool:
    mode = os.environ.get("LIESPEC_COLOR", "auto")
    if mode == "always":
        return True
    if mode == "never":
        return False
    return sys.stdout.isatty()


def _cmd_check(args) -> int:
    results = run_suite(args.suite)
    color = _use_color()
    failures = 0
    lines = []
    for name, report in results:
        if report.passed:
            status = "\x1b[32mPASS\x1b[0m" if color else "PASS"
        else:
            status = "\x1b[31mFAIL\x1b[0m" if color else "FAIL"
            failures += 1
        lines.append(f"{status}  {name}")
    lines.append(f"{len(results) - failures}/{len(results)} checks passed")
    obj = {
        "format_version": jsonio.FORMAT_VERSION,
        "suite": args.suite,
        "results": [{"name": n, "passed": r.passed, "details": list(r.details)} for n, r in results],
        "passed": failures == 0,
    }
    _emit(args, obj, lines)
    return 0 if failures == 0 else 1


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("table", "json"), default="table")
    parser = argparse.ArgumentParser(
        prog="liespec",
        description="Exact Lie algebra (co)homology and Taylor spectra",
        parents=[common],
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_parser(name: str, **kwargs):
        return sub.add_parser(name, parents=[common], **kwargs)

    p = add_parser("catalog", help="list catalog entries or dump one as JSON")
    p.add_argument("dump", nargs="?", help="entry to dump, e.g. solvable3:5/3")
    p.add_argument("--module", help="dump this module of the entry instead")

    p = add_parser("info", help="structure report for an algebra")
    p.add_argument("--algebra", required=True)

    for kind in ("homology", "cohomology"):
        p = add_parser(kind, help=f"Betti numbers of {kind}")
        p.add_argument("--algebra", required=True)
        p.add_argument("--module", required=True)
        p.add_argument("--dump-complex", action="store_true")

    p = add_parser("weights", help="generalized weight table of a module")
    p.add_argument("--algebra", required=True)
    p.add_argument("--module", required=True)

    p = add_parser("spectrum", help="Taylor spectrum of a module")
    p.add_argument("--algebra", required=True)
    p.add_argument("--module", required=True)
    p.add_argument("--method", choices=("homological", "shortcut", "both"), default="both")
    p.add_argument("--candidates", help="comma-separated candidate refs (semisimple case)")
    p.add_argument("--jobs", type=int, default=1)

    p = add_parser("borel-check", help="closed-form Borel spectrum vs homology")
    p.add_argument("name", help="borel_sl2 or borel_sl3")
    p.add_argument("--weight", help="highest weight, comma separated")
    p.add_argument("--module", help="module reference on the Borel entry")

    p = add_parser("extend", help="build a 1-dimensional extension")
    p.add_argument("--base", required=True)
    p.add_argument("--char", help="character values, comma separated")
    p.add_argument("--cocycle", help="semicolon-separated i,j,value with 1-based indices")

    p = add_parser("check", help="run a named invariant suite")
    p.add_argument("--suite", choices=("all",) + tuple(SUITES), default="all")
    return parser


def run(argv) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as err:
        return 2 if err.code not in (0, None) else 0
    handlers = {
        "catalog": _cmd_catalog,
        "info": _cmd_info,
        "homology": lambda a: _cmd_homology(a, cohomology=False),
        "cohomology": lambda a: _cmd_homology(a, cohomology=True),
        "weights": _cmd_weights,
        "spectrum": _cmd_spectrum,
        "borel-check": _cmd_borel_check,
        "extend": _cmd_extend,
        "check": _cmd_check,
    }
    try:
        return handlers[args.command](args)
    except SchemaError as err:
        _print_error(args, "schema", err)
        return 2
    except ToolkitError as err:
        _print_error(args, "computation", err)
        return 1


def _print_error(args, kind: str, err: Exception) -> None:
    if getattr(args, "format", "table") == "json":
        sys.stderr.write(
            jsonio.dumps({"error": {"kind": kind, "type": type(err).__name__, "message": str(err)}})
        )
    else:
        sys.stderr.write(f"error ({kind}): {err}\n")


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
