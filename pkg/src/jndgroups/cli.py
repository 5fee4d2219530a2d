"""Command line interface: ``jndgroups analyze | construct | scan``.

Exit codes: 0 success, 1 parse error, 2 cap exceeded, 3 theorem conditions
failed or an implication was violated.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path

from . import __version__
from .catalog import constructors as cons
from .catalog.store import PREDICATES, load_catalog
from .classify import ClassificationReport, classify
from .errors import CapExceeded, ConditionsFailed, GrpParseError
from .group import DEFAULT_CAP, FiniteGroup, Subgroup
from .grpfile import dumps_group, load
from .implications import check_implications

EXIT_OK, EXIT_PARSE, EXIT_CAP, EXIT_FAILED = 0, 1, 2, 3

# name -> (constructor, number of integer parameters or None for any)
CONSTRUCTORS = {
    "cyclic": (cons.cyclic, 1),
    "abelian": (lambda *t: cons.abelian(list(t)), None),
    "dihedral": (cons.dihedral, 1),
    "dicyclic": (cons.dicyclic, 1),
    "quaternion": (cons.quaternion, 0),
    "elementary-abelian": (cons.elementary_abelian, 2),
    "symmetric": (cons.symmetric, 1),
    "alternating": (cons.alternating, 1),
    "cyclic-extension": (cons.cyclic_extension, 3),
}
NAMED = ("example72", "s5-via-theorem", "wreath-jnd")


# -- report assembly ----------------------------------------------------------


def _words(g: FiniteGroup, s: Subgroup) -> list[str]:
    return [g.word_str(int(i)) for i in s.members]


def describe_group(g: FiniteGroup, source: str) -> dict:
    return {
        "source": source,
        "degree": g.degree,
        "generators": [p.cycle_str() for p in g.generators],
    }


def classification_section(g: FiniteGroup, r: ClassificationReport) -> dict:
    out = {
        "order": r.order,
        "center_order": r.center_order,
        "derived_length": r.derived_length,
        "monolith_order": r.monolith_order,
    }
    out.update(r.flags())
    if r.decomposition is not None:
        d = r.decomposition
        out["dedekind_decomposition"] = {
            "degenerate": d.degenerate,
            "q8_part": _words(g, d.q8_part) if d.q8_part is not None else None,
            "elementary_two_part": _words(g, d.elementary_two_part),
            "odd_abelian_part": _words(g, d.odd_abelian_part),
        }
    if r.solvable_structure is not None:
        s = r.solvable_structure
        out["solvable_structure"] = {"p": s.p, "n": s.n, "a": _words(g, s.a), "x": _words(g, s.x)}
    if r.c1 is not None:
        c = r.c1
        out["c1"] = {
            "passed": c.passed,
            "stabilizers_trivial": c.stabilizers_trivial,
            "order_divides": c.order_divides,
            "q8_times_cyclic_odd": c.q8_times_cyclic_odd,
            "order_x": c.order_x,
            "modulus": c.modulus,
        }
    return out


def conditions_section(c) -> dict:
    return {
        "r": c.r,
        "d_order": c.d_order,
        "beta_order": c.beta_order,
        "dedekind": c.dedekind,
        "nonabelian": c.nonabelian,
        "transitive": c.transitive,
        "free": c.free,
        "r_even": c.r_even,
        "solvable": c.solvable,
        "nilpotent": c.nilpotent,
        "orbits": [list(o) for o in c.orbits],
    }


def _header(command: str) -> dict:
    return {"tool": "jndgroups", "version": __version__, "command": command}


# -- rendering ----------------------------------------------------------------


def _scalar(v) -> str:
    if v is None:
        return "null"
    if isinstance(v, bool):
        return "true" if v else "false"
    return str(v)


def render_text(data: dict, indent: int = 0) -> str:
    pad = "  " * indent
    lines = []
    for key, value in data.items():
        if isinstance(value, dict):
            lines.append(f"{pad}{key}:")
            lines.append(render_text(value, indent + 1))
        elif isinstance(value, list) and value and isinstance(value[0], dict):
            lines.append(f"{pad}{key}:")
            for item in value:
                lines.append(f"{pad}  -")
                lines.append(render_text(item, indent + 2))
        elif isinstance(value, list):
            lines.append(f"{pad}{key}: [{', '.join(_scalar(v) if not isinstance(v, list) else str(v) for v in value)}]")
        else:
            lines.append(f"{pad}{key}: {_scalar(value)}")
    return "\n".join(line for line in lines if line)


def emit(data: dict, fmt: str, stream=None) -> None:
    stream = stream or sys.stdout
    if fmt == "structured":
        stream.write(json.dumps(data, indent=2) + "\n")
    else:
        stream.write(render_text(data) + "\n")


# -- commands -----------------------------------------------------------------


def cmd_analyze(args) -> tuple[dict, int]:
    grp = load(args.path)
    g = grp.group(cap=args.cap)
    report = _header("analyze")
    report["input"] = describe_group(g, str(args.path))
    report["classification"] = classification_section(g, classify(g, oracle=args.oracle))
    return report, EXIT_OK


def _simple_group(name: str, cap: int) -> FiniteGroup:
    if name.lower() == "a5":
        return cons.alternating(5)
    return load(name).group(cap=cap)


def _descriptor(args) -> dict:
    if args.name == "wreath-jnd":
        return {"construction": args.name, "simple": args.simple, "r": args.r, "d": args.d, "kind": args.kind}
    if args.name == "s5-via-theorem":
        return {"construction": args.name, "simple": "a5", "r": 1}
    if args.name in CONSTRUCTORS:
        return {"construction": args.name, "params": list(args.params)}
    return {"construction": args.name}


def _construct(args) -> tuple[FiniteGroup, object]:
    """The group and the theorem-condition report if any."""
    from . import semisimple as ss

    name = args.name
    if name == "example72":
        return cons.example_72(), None
    if name == "s5-via-theorem":
        pkg = ss.compute_automorphisms(cons.alternating(5))
        w = ss.build_wreath(pkg, 1, args.cap)
        built = ss.build_semisimple_jnd(pkg, 1, w.out_wreath.whole, w, args.cap, classify=False)
        return built.group, built.conditions
    if name == "wreath-jnd":
        if args.r is None or args.d is None:
            raise ValueError("wreath-jnd needs --r and --d")
        pkg = ss.compute_automorphisms(_simple_group(args.simple, args.cap))
        w = ss.build_wreath(pkg, args.r, args.cap)
        d = w.subgroup_from_words(args.d)
        built = ss.build_semisimple_jnd(pkg, args.r, d, w, args.cap, kind=args.kind, classify=False)
        return built.group, built.conditions
    if name in CONSTRUCTORS:
        make, arity = CONSTRUCTORS[name]
        if arity is not None and len(args.params) != arity:
            raise ValueError(f"{name} takes {arity} integer parameter(s)")
        return make(*args.params), None
    raise ValueError(f"unknown construction {name!r}")


def cmd_construct(args) -> tuple[dict, int]:
    report = _header("construct")
    report["input"] = _descriptor(args)
    try:
        g, conditions = _construct(args)
    except ConditionsFailed as exc:
        report["status"] = "conditions_failed"
        report["failed_conditions"] = list(exc.failed)
        report["conditions"] = conditions_section(exc.report)
        return report, EXIT_FAILED
    except CapExceeded as exc:
        report["status"] = "cap_exceeded"
        report["cap"] = {"operation": exc.what, "cap": exc.cap, "required": exc.size}
        if getattr(exc, "report", None) is not None:
            report["conditions"] = conditions_section(exc.report)
        return report, EXIT_CAP
    report["status"] = "ok"
    report["group"] = describe_group(g, args.name)
    if conditions is not None:
        report["conditions"] = conditions_section(conditions)
    report["classification"] = classification_section(g, classify(g, oracle=args.oracle))
    if args.output:
        Path(args.output).write_text(dumps_group(g, [f"construction {args.name}"]), encoding="utf-8")
        report["output"] = str(args.output)
    return report, EXIT_OK


def cmd_scan(args) -> tuple[dict, int]:
    if args.predicate not in PREDICATES:
        raise ValueError(f"unknown predicate {args.predicate!r}; choose from {', '.join(PREDICATES)}")
    report = _header("scan")
    report["max_order"] = args.max_order
    report["predicate"] = args.predicate
    rows, failures = [], []
    for e in load_catalog(args.max_order):
        r = classify(e.group, oracle=args.oracle)
        flags = r.flags()
        if flags[args.predicate]:
            rows.append({"id": e.id, "order": e.order, **flags})
        if args.check_implications:
            failures += [{"id": e.id, "violated": c.name} for c in check_implications(e.group, r) if c.violated]
    report["matches"] = rows
    if args.check_implications:
        report["violations"] = failures
    return report, EXIT_FAILED if failures else EXIT_OK


def render_scan_text(report: dict) -> str:
    """Tabular text form of a scan report."""
    lines = [f"# jndgroups {report['version']} scan max_order={report['max_order']} predicate={report['predicate']}"]
    cols = ["order", *PREDICATES]
    lines.append("\t".join(["id", *cols]))
    for row in report["matches"]:
        lines.append("\t".join([row["id"], *(_scalar(row[c]) for c in cols)]))
    if "violations" in report:
        for v in report["violations"]:
            lines.append(f"VIOLATION\t{v['id']}\t{v['violated']}")
        lines.append(f"# implications checked, {len(report['violations'])} violation(s)")
    if "timing" in report:
        lines.append(f"# seconds {report['timing']['seconds']}")
    return "\n".join(lines)


# -- argument parsing ---------------------------------------------------------


def _global_flags(parser: argparse.ArgumentParser, suppress: bool) -> None:
    default = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    parser.add_argument("--oracle", action="store_true", default=default(False), help="use brute-force predicate modes")
    parser.add_argument("--cap", type=int, default=default(DEFAULT_CAP), help="maximum group order to enumerate")
    parser.add_argument("--format", choices=("text", "structured"), default=default("text"))
    parser.add_argument("--timing", action="store_true", default=default(False), help="add wall-clock timing to the report")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="jndgroups", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"jndgroups {__version__}")
    _global_flags(parser, suppress=False)
    common = argparse.ArgumentParser(add_help=False)
    _global_flags(common, suppress=True)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", parents=[common], help="classify a group given as a .grp file")
    p.add_argument("path")

    p = sub.add_parser("construct", parents=[common], help="build a named group")
    p.add_argument("name", help=", ".join(NAMED + tuple(CONSTRUCTORS)))
    p.add_argument("params", nargs="*", type=int)
    p.add_argument("-o", "--output", help="write the group as .grp to this path")
    p.add_argument("--simple", default="a5", help="simple group H: a5 or a .grp path")
    p.add_argument("--r", type=int)
    p.add_argument("--d", help='generators of D, comma separated, e.g. "b1 b3 t(0 1)(2 3), b1 b4 t(0 2)(1 3)"')
    p.add_argument("--kind", choices=("jnd", "jns", "jnn"), default="jnd")

    p = sub.add_parser("scan", parents=[common], help="list catalog groups with a property")
    p.add_argument("max_order", type=int)
    p.add_argument("predicate", help=", ".join(PREDICATES))
    p.add_argument("--check-implications", action="store_true")
    return parser


COMMANDS = {"analyze": cmd_analyze, "construct": cmd_construct, "scan": cmd_scan}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    start = time.perf_counter()
    try:
        report, code = COMMANDS[args.command](args)
    except GrpParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except CapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    if args.timing:
        report["timing"] = {"seconds": round(time.perf_counter() - start, 3)}
    if args.command == "scan" and args.format == "text":
        print(render_scan_text(report))
    else:
        emit(report, args.format)
    return code


if __name__ == "__main__":
    sys.exit(main())
