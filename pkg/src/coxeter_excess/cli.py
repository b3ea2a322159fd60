"""
Command-line front end.

    coxeter-excess info --type A3
    coxeter-excess excess --type A3 --element "1 2 3"
    coxeter-excess pairs --type A3 --element "1 2 3" --cycles
    coxeter-excess distribution --type A5 --format csv
    coxeter-excess witness --type F4 --format json
    coxeter-excess classes --type D4
    coxeter-excess verify --type H3

Exit codes: 0 success, 1 computation error (e.g. an infinite group),
2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from pathlib import Path

from .conjugacy import class_representatives
from .core import DEFAULT_ROOT_CAP, Element, Group, build_group, format_word, parse_word
from .errors import BadLetter, CoxeterError, InvalidMatrix
from .excess import epsilon, excess, excess_distribution, reversers, spartan_pairs
from .involution import enumerate_involutions
from .types import canonical_symbol, load_matrix, type_matrix
from .verify import format_report, report_json, run_battery
from .witness import zero_excess_witness
from . import typea

FORMATS = {
    "info": ("text", "json"),
    "length": ("text", "json"),
    "excess": ("text", "json"),
    "pairs": ("text", "json"),
    "distribution": ("text", "json", "csv"),
    "witness": ("text", "json"),
    "classes": ("text", "json", "csv"),
    "verify": ("text", "json"),
}


class UsageError(Exception):
    pass


def _parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    source = common.add_mutually_exclusive_group(required=True)
    source.add_argument("--type", dest="type_symbol", metavar="SYMBOL", help='type symbol, e.g. "A5", "B3", "I2(7)"')
    source.add_argument("--matrix", metavar="PATH", help='JSON file {"rank": n, "m": [[...]]}')
    common.add_argument("--format", default="text", choices=("text", "json", "csv"))
    common.add_argument("--root-cap", type=int, default=DEFAULT_ROOT_CAP, metavar="N",
                        help="give up after this many positive roots (default %(default)s)")
    common.add_argument("--cycles", action="store_true", help="annotate elements in cycle notation (type A only)")

    parser = argparse.ArgumentParser(prog="coxeter-excess", description=__doc__.split("\n\n")[0].strip())
    sub = parser.add_subparsers(dest="verb", required=True)

    sub.add_parser("info", parents=[common], help="order, roots, involutions, classes")
    for verb, helptext in [
        ("length", "length, reduced word and inversion set"),
        ("excess", "excess of one element"),
        ("pairs", "all involution factorizations and the spartan pairs"),
    ]:
        p = sub.add_parser(verb, parents=[common], help=helptext)
        p.add_argument("--element", required=True, metavar="WORD", help='space-separated generators, e.g. "1 2 3"')

    p = sub.add_parser("distribution", parents=[common], help="histogram of excess over the whole group")
    p.add_argument("--parallel", type=int, default=1, metavar="N", help="worker processes")
    p.add_argument("--nontrivial-y", action="store_true",
                   help="restrict the right factor to genuine involutions (changes only the identity)")

    p = sub.add_parser("witness", parents=[common], help="zero-excess conjugate with certificate")
    p.add_argument("--element", metavar="WORD", help="default: every class representative")
    p.add_argument("--greedy", action="store_true", help="local descent instead of orbit-wide minimization")

    sub.add_parser("classes", parents=[common], help="conjugacy classes")

    p = sub.add_parser("verify", parents=[common], help="run the self-check battery")
    p.add_argument("--samples", type=int, default=10_000, help="random pairs for the product identities")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--parallel", type=int, default=1, metavar="N")
    p.add_argument("--all-elements", action="store_true", help="witness every element, not just class representatives")
    return parser


def _group(args) -> Group:
    if args.root_cap < 1:
        raise UsageError("--root-cap must be positive")
    if args.type_symbol:
        try:
            matrix = type_matrix(args.type_symbol)
        except InvalidMatrix as exc:
            raise UsageError(f"--type: {exc}") from None
        name = canonical_symbol(args.type_symbol)
    else:
        path = Path(args.matrix)
        if not path.is_file():
            raise UsageError(f"--matrix: no such file {args.matrix}")
        try:
            matrix = load_matrix(path)
        except InvalidMatrix as exc:
            raise UsageError(f"--matrix: {exc}") from None
        name = path.stem
    return build_group(matrix, root_cap=args.root_cap, name=name)


def _element(g: Group, text: str) -> Element:
    try:
        return g.element(parse_word(text))
    except BadLetter as exc:
        raise UsageError(f"--element: {exc}") from None


def _label(g: Group, w: Element, cycles: bool) -> str:
    word = g.format(w) or "(identity)"
    return f"{word}  {typea.cycles(g, w)}" if cycles else word


def _emit(obj, fmt: str, out) -> None:
    if fmt == "json":
        json.dump(obj, out, indent=2)
        out.write("\n")
    else:
        out.write(obj if obj.endswith("\n") else obj + "\n")


def _csv(header: list[str], rows: list[list]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def _cmd_info(g, args, out):
    info = {
        "group": g.name,
        "rank": g.rank,
        "matrix": [list(r) for r in g.matrix.entries],
        "order": g.order,
        "positive_roots": g.num_positive_roots,
        "involutions": len(enumerate_involutions(g)),
        "classes": len(class_representatives(g)),
        "longest": {"word": g.format(g.longest), "length": g.longest.length},
    }
    if args.format == "json":
        return _emit(info, "json", out)
    lines = [
        f"group           {g.name}",
        f"rank            {g.rank}",
        f"order           {g.order}",
        f"positive roots  {g.num_positive_roots}",
        f"involutions     {info['involutions']}",
        f"classes         {info['classes']}",
        f"longest element {_label(g, g.longest, args.cycles)} (length {g.longest.length})",
    ]
    _emit("\n".join(lines), "text", out)


def _cmd_length(g, args, out):
    w = _element(g, args.element)
    info = {
        "w": g.format(w),
        "length": w.length,
        "reduced_word": g.format(w),
        "inversions": sorted(w.inversions()),
    }
    if args.cycles:
        info["cycles"] = typea.cycles(g, w)
    if args.format == "json":
        return _emit(info, "json", out)
    lines = [f"length        {w.length}", f"reduced word  {_label(g, w, args.cycles)}"]
    roots = ", ".join(_root_label(g, i) for i in sorted(w.inversions())) or "(none)"
    lines.append(f"inversions    {roots}")
    _emit("\n".join(lines), "text", out)


def _root_label(g: Group, i: int) -> str:
    if typea.is_type_a(g):
        a, b = typea.root_pair(g, i)
        return f"e{a}-e{b}"
    return f"beta{i}"


def _cmd_excess(g, args, out):
    w = _element(g, args.element)
    e = excess(g, w)
    if args.format == "json":
        return _emit({"w": g.format(w), "length": w.length, "excess": e}, "json", out)
    _emit(str(e), "text", out)


def _cmd_pairs(g, args, out):
    w = _element(g, args.element)
    pairs = spartan_pairs(g, w)
    e = pairs[0].defect
    if args.format == "json":
        return _emit({"w": g.format(w), "excess": e, "pairs": [p.to_json(g) for p in pairs]}, "json", out)
    lines = [f"w = {_label(g, w, args.cycles)}   length {w.length}   excess {e}", ""]
    rows = []
    for y in reversers(g, w):
        x = w * y
        mark = "*" if epsilon(g, w, y) == e else " "
        rows.append((mark, _label(g, x, args.cycles), _label(g, y, args.cycles), f"{x.length}+{y.length}={x.length + y.length}"))
    wx = max(len(r[1]) for r in rows + [("", "x", "", "")])
    wy = max(len(r[2]) for r in rows + [("", "", "y", "")])
    lines.append(f"  {'x':<{wx}}  {'y':<{wy}}  l(x)+l(y)")
    for mark, xs, ys, ls in rows:
        lines.append(f"{mark} {xs:<{wx}}  {ys:<{wy}}  {ls}")
    lines.append("")
    lines.append("* spartan pair")
    _emit("\n".join(lines), "text", out)


def _cmd_distribution(g, args, out):
    if args.parallel < 1:
        raise UsageError("--parallel must be >= 1")
    counts = excess_distribution(g, processes=args.parallel, nontrivial_y=args.nontrivial_y)
    if args.format == "csv":
        return _emit(_csv(["excess", "count"], [[e, c] for e, c in counts.items()]), "text", out)
    if args.format == "json":
        return _emit({"group": g.name, "counts": {str(e): c for e, c in counts.items()}, "total": g.order}, "json", out)
    lines = ["excess  count"] + [f"{e:>6}  {c}" for e, c in counts.items()] + [f" total  {g.order}"]
    _emit("\n".join(lines), "text", out)


def _cmd_witness(g, args, out):
    mode = "greedy" if args.greedy else "global"
    if args.element is not None:
        targets = [_element(g, args.element)]
    else:
        targets = [c.representative for c in class_representatives(g)]
    certs = [zero_excess_witness(g, w, mode=mode) for w in targets]
    if args.format == "json":
        payload = [c.to_json(g) for c in certs]
        return _emit(payload[0] if args.element is not None else payload, "json", out)
    blocks = []
    for c in certs:
        blocks.append("\n".join([
            f"w          {_label(g, c.input, args.cycles)}",
            f"conjugator {_label(g, c.conjugator, args.cycles)}",
            f"w*         {_label(g, c.w_star, args.cycles)}   length {c.w_star.length}",
            f"sigma      {_label(g, c.sigma, args.cycles)}   length {c.sigma.length}",
            f"tau        {_label(g, c.tau, args.cycles)}   length {c.tau.length}",
            f"J = {{{format_word(sorted(c.J))}}}  K = {{{format_word(sorted(c.K))}}}",
        ]))
    _emit("\n\n".join(blocks), "text", out)


def _cmd_classes(g, args, out):
    classes = class_representatives(g)
    if args.format == "json":
        return _emit([c.to_json(g) for c in classes], "json", out)
    if args.format == "csv":
        rows = [[g.format(c.representative), c.size, str(c.cuspidal).lower()] for c in classes]
        return _emit(_csv(["representative", "size", "cuspidal"], rows), "text", out)
    lines = ["size  cuspidal  representative"]
    for c in classes:
        lines.append(f"{c.size:>4}  {'yes' if c.cuspidal else 'no':<8}  {_label(g, c.representative, args.cycles)}")
    _emit("\n".join(lines), "text", out)


def _cmd_verify(g, args, out):
    checks = run_battery(g, samples=args.samples, seed=args.seed, all_witnesses=args.all_elements,
                         processes=args.parallel)
    if args.format == "json":
        _emit(report_json(g, checks), "json", out)
    else:
        _emit(format_report(g, checks), "text", out)
    return 0 if all(c.passed for c in checks) else 1


COMMANDS = {
    "info": _cmd_info,
    "length": _cmd_length,
    "excess": _cmd_excess,
    "pairs": _cmd_pairs,
    "distribution": _cmd_distribution,
    "witness": _cmd_witness,
    "classes": _cmd_classes,
    "verify": _cmd_verify,
}


def run(argv: list[str] | None = None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = _parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        if args.format not in FORMATS[args.verb]:
            raise UsageError(f"--format {args.format} is not available for {args.verb}")
        g = _group(args)
        if args.cycles and not typea.is_type_a(g):
            raise UsageError("--cycles needs a type A group")
        code = COMMANDS[args.verb](g, args, out)
    except UsageError as exc:
        print(f"coxeter-excess {args.verb}: error: {exc}", file=sys.stderr)
        return 2
    except CoxeterError as exc:
        print(f"coxeter-excess {args.verb}: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    return code or 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
