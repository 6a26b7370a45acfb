"""Command-line front end.

Groups are named "S<n>" (symmetric), "I<m>" (dihedral of order 2m) or
"matrix:<path>" where the file holds {"rank": r, "m": [[...]], "element_cap": c}.
Subsets are comma-separated 1-based generator indices; the empty string is
the empty set, and s/t alias 1/2 for dihedral groups.

Exit codes: 0 success, 1 invariant failure, 2 usage error, 3 element cap
exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys as _sys

from .algebra import expansion_rows, StructureTable
from .coxeter import CoxeterSpec, CoxeterSystem, DEFAULT_ELEMENT_CAP, build_system
from .covering import build_fibered_graph, multiplicity_partition, verify_covering
from .dot import covering_dot
from .errors import CapExceeded, CoxeterError, InvalidSpec
from .gensets import format_subset, iter_subsets, one_based, parse_subset
from .monodromy import monodromy_report
from .verify import run_invariant_sweep

EXIT_OK = 0
EXIT_INVARIANT = 1
EXIT_USAGE = 2
EXIT_CAP = 3


class UsageError(Exception):
    pass


def parse_group(text: str, cap: int | None) -> CoxeterSpec:
    cap_value = DEFAULT_ELEMENT_CAP if cap is None else cap
    if text.startswith("S") and text[1:].isdigit():
        return CoxeterSpec.symmetric(int(text[1:]), element_cap=cap_value)
    if text.startswith("I") and text[1:].isdigit():
        return CoxeterSpec.dihedral(int(text[1:]), element_cap=cap_value)
    if text.startswith("matrix:"):
        path = text[len("matrix:"):]
        try:
            with open(path, "r", encoding="utf-8") as fh:
                data = json.load(fh)
        except (OSError, json.JSONDecodeError) as exc:
            raise UsageError(f"cannot read matrix file {path}: {exc}") from None
        matrix = data.get("m")
        if matrix is None:
            raise UsageError(f"matrix file {path} has no 'm' entry")
        rank = data.get("rank")
        if rank is not None and rank != len(matrix):
            raise UsageError(f"declared rank {rank} does not match the matrix")
        file_cap = data.get("element_cap", DEFAULT_ELEMENT_CAP)
        return CoxeterSpec.from_matrix(matrix, element_cap=cap_value if cap is not None else file_cap)
    raise UsageError(f"cannot parse group {text!r} (expected S<n>, I<m> or matrix:<path>)")


def _build(args) -> CoxeterSystem:
    return build_system(parse_group(args.group, args.cap))


def _subset(text: str, rank: int) -> int:
    try:
        return parse_subset(text, rank)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _format_expansion(rows) -> str:
    if not rows:
        return "0"
    terms = []
    for row in rows:
        head = "" if row.constant == 1 else f"{row.constant} "
        terms.append("%sY_{%s}" % (head, ",".join(str(i) for i in row.target)))
    return " + ".join(terms)


def cmd_table(args) -> int:
    system = _build(args)
    rank = system.rank
    if args.left is None:
        lefts = sorted(iter_subsets(rank), key=one_based)
    else:
        lefts = [_subset(args.left, rank)]
    if args.right is None:
        rights = sorted(iter_subsets(rank), key=one_based)
    else:
        rights = [_subset(args.right, rank)]
    table = StructureTable(group=system.spec.describe(), rank=rank)
    for left in lefts:
        for right in rights:
            table.rows.extend(expansion_rows(system, left, right))
    if args.format == "json":
        print(json.dumps(table.to_json()))
        return EXIT_OK
    for left in lefts:
        for right in rights:
            rows = [r for r in table.rows
                    if r.left == one_based(left) and r.right == one_based(right)]
            lhs = "Y_{%s} * Y_{%s}" % (
                ",".join(str(i) for i in one_based(left)),
                ",".join(str(i) for i in one_based(right)),
            )
            print(f"{lhs} = {_format_expansion(rows)}")
            for row in rows:
                print(f"  K={format_subset(sum(1 << (i - 1) for i in row.target))} "
                      f"a={row.constant} lambda={list(row.partition)} "
                      f"components={row.components}")
    return EXIT_OK


def cmd_cover(args) -> int:
    system = _build(args)
    left = _subset(args.left, system.rank)
    right = _subset(args.right, system.rank)
    target = _subset(args.target, system.rank)
    inst = build_fibered_graph(system, left, right, target)
    report = verify_covering(inst)
    if args.dot:
        with open(args.dot, "w", encoding="utf-8") as fh:
            fh.write(covering_dot(inst))
    if args.format == "json":
        print(json.dumps(inst.to_json()))
        return EXIT_OK
    parts = list(multiplicity_partition(inst))
    print(f"Z(I={format_subset(left)} J={format_subset(right)} K={format_subset(target)}) "
          f"vertices={len(inst.vertices)} components={inst.component_count} "
          f"a={inst.fiber_size} lambda={parts}")
    if report.status == "empty":
        print("empty instance: no product lands in the target class")
    elif report.ok:
        print("covering axioms: ok")
    else:
        print(f"covering axioms FAILED: {report.violations[0]}")
        return EXIT_INVARIANT
    return EXIT_OK


def cmd_monodromy(args) -> int:
    system = _build(args)
    left = _subset(args.left, system.rank)
    right = _subset(args.right, system.rank)
    target = _subset(args.target, system.rank)
    inst = build_fibered_graph(system, left, right, target)
    print(json.dumps(monodromy_report(inst).to_json()))
    return EXIT_OK


def cmd_verify(args) -> int:
    system = _build(args)
    print(f"group {system.spec.describe()}: {len(system)} elements, rank {system.rank}")
    results = run_invariant_sweep(system)
    failed = False
    for res in results:
        if res.ok:
            print(f"{res.name}: ok ({res.checked} checks)")
        else:
            failed = True
            print(f"{res.name}: FAIL: {res.failures[0]}")
            break
    if failed:
        return EXIT_INVARIANT
    print(f"all checks passed ({sum(r.checked for r in results)} total)")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="coxcover", description=__doc__)
    parser.add_argument("--cap", type=int, default=None,
                        help="override the element cap")
    sub = parser.add_subparsers(dest="command", required=True)

    p_table = sub.add_parser("table", help="expand products of class sums")
    p_table.add_argument("--group", required=True)
    p_table.add_argument("--left", default=None)
    p_table.add_argument("--right", default=None)
    p_table.add_argument("--format", choices=("text", "json"), default="text")
    p_table.set_defaults(func=cmd_table)

    p_cover = sub.add_parser("cover", help="build one covering instance")
    p_cover.add_argument("--group", required=True)
    p_cover.add_argument("--left", required=True)
    p_cover.add_argument("--right", required=True)
    p_cover.add_argument("--target", required=True)
    p_cover.add_argument("--dot", default=None, help="write the graph as DOT")
    p_cover.add_argument("--format", choices=("text", "json"), default="text")
    p_cover.set_defaults(func=cmd_cover)

    p_mono = sub.add_parser("monodromy", help="loop actions on one instance")
    p_mono.add_argument("--group", required=True)
    p_mono.add_argument("--left", required=True)
    p_mono.add_argument("--right", required=True)
    p_mono.add_argument("--target", required=True)
    p_mono.set_defaults(func=cmd_monodromy)

    p_verify = sub.add_parser("verify", help="run the full invariant sweep")
    p_verify.add_argument("--group", required=True)
    p_verify.set_defaults(func=cmd_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=_sys.stderr)
        return EXIT_USAGE
    except InvalidSpec as exc:
        print(f"error: {exc}", file=_sys.stderr)
        return EXIT_USAGE
    except CapExceeded as exc:
        print(f"error: {exc}", file=_sys.stderr)
        return EXIT_CAP
    except CoxeterError as exc:
        print(f"invariant failure: {exc}", file=_sys.stderr)
        return EXIT_INVARIANT


if __name__ == "__main__":
    raise SystemExit(main())
