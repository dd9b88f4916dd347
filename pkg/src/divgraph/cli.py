"""Command-line front end.

Exit codes: 0 success, 1 invalid input, 2 cap or budget exhausted,
3 internal invariant violation (e.g. an equivalence-check counterexample,
which would be either a bug or a very loud finding).
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import analysis, groups, lattice, ust
from .canon import DEFAULT_BUDGET
from .divisions import (
    alternating_divisions_by_type,
    conjugacy_classes,
    divisions as compute_divisions,
)
from .errors import (
    DivgraphError,
    InternalInvariantError,
    ResourceCapExceeded,
    ValidationError,
)


def _load_group(args, spec: str | None = None) -> groups.Group:
    """Resolve one group from --catalog/--input or a positional spec."""
    cap = args.order_cap
    if spec is not None:
        if spec.endswith(".json") or "/" in spec or Path(spec).exists():
            data = json.loads(Path(spec).read_text(encoding="utf-8"))
            return groups.group_from_json(data, order_cap=cap)
        return groups.catalog(spec, order_cap=cap)
    if getattr(args, "catalog", None):
        return groups.catalog(args.catalog, order_cap=cap)
    if getattr(args, "input", None):
        data = json.loads(Path(args.input).read_text(encoding="utf-8"))
        return groups.group_from_json(data, order_cap=cap)
    raise ValidationError("no group given: use --catalog NAME or --input FILE")


def _emit(args, text: str) -> None:
    if getattr(args, "out", None):
        Path(args.out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _dump(args, payload: dict) -> None:
    _emit(args, json.dumps(payload, indent=2, sort_keys=True) + "\n")


def _cmd_validate(args) -> int:
    G = _load_group(args, args.group)
    _dump(args, {"name": G.name, "order": G.order, "valid": True})
    return 0


def _cmd_subgroups(args) -> int:
    G = _load_group(args, args.group)
    L = lattice.all_subgroups(G, order_limit=args.lattice_cap)
    if args.format == "dot":
        _emit(args, lattice.lattice_to_dot(L))
    else:
        _dump(args, lattice.lattice_to_json(L))
    return 0


def _cmd_divisions(args) -> int:
    G = _load_group(args, args.group)
    classes = conjugacy_classes(G)
    divs = compute_divisions(G, classes)
    _dump(args, {
        "group": G.name,
        "division_count": len(divs),
        "divisions": [
            {
                "representative": G.names[d.representative],
                "members": [G.names[g] for g in d.members],
                "united_class_representatives": [
                    G.names[classes[i].representative] for i in d.classes
                ],
                "common_order": d.common_order,
            }
            for d in divs
        ],
    })
    return 0


def _cmd_division_graph(args) -> int:
    G = _load_group(args, args.group)
    L = lattice.all_subgroups(G, order_limit=args.lattice_cap)
    dg = ust.division_graph(G, L)
    if args.division is not None:
        wanted = [
            (d, comp) for d, comp in dg.components
            if G.names[d.representative] == args.division
        ]
        if not wanted:
            raise ValidationError(
                f"no division has representative named {args.division!r}"
            )
        dg = ust.DivisionGraph(dg.group_name, tuple(wanted))
    if args.format == "dot":
        _emit(args, ust.division_graph_to_dot(dg))
    else:
        _dump(args, ust.division_graph_to_json(dg, G))
    return 0


def _cmd_analyze(args) -> int:
    G = _load_group(args, args.group)
    report = analysis.analyze(G)
    _dump(args, report.to_json())
    if not report.all_agree:
        raise InternalInvariantError(
            "graph-derived values disagree with direct computation"
        )
    return 0


def _cmd_compare(args) -> int:
    G1 = _load_group(args, args.left)
    G2 = _load_group(args, args.right)
    result = analysis.compare(G1, G2, budget=args.budget)
    _dump(args, {
        "left": G1.name,
        "right": G2.name,
        "result": result.verdict,
        "left_certificate": result.left.hex(),
        "right_certificate": result.right.hex(),
    })
    return 0


def _cmd_verify_lagarias(args) -> int:
    G = _load_group(args, args.group)
    report = ust.verify_lagarias(G)
    _dump(args, {
        "group": report.group_name,
        "elements": report.elements,
        "subgroups": report.subgroups,
        "passed": report.passed,
        "violations": [list(v) for v in report.violations],
    })
    if not report.passed:
        raise InternalInvariantError(
            f"division/splitting-type equivalence FAILED on {G.name}: "
            f"{len(report.violations)} violating pair(s); this contradicts a "
            "theorem and deserves loud attention"
        )
    return 0


def _cmd_an_divisions(args) -> int:
    mapping = alternating_divisions_by_type(args.n, cap=args.cap)
    _dump(args, {
        "n": args.n,
        "types": {
            "+".join(str(x) for x in t): count
            for t, count in sorted(mapping.items())
        },
    })
    return 0


def _cmd_conjecture_scan(args) -> int:
    candidates = groups.standard_groups(args.max_order)
    report = analysis.conjecture_scan(candidates, budget=args.budget)
    _dump(args, {
        "max_order": args.max_order,
        "groups": list(report.group_names),
        "collisions": [list(c) for c in report.collisions],
        "isomorphic_pairs_with_equal_certificates": [
            list(c) for c in report.matched_isomorphic
        ],
        "clean": report.clean,
    })
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="divgraph",
        description="Finite-group divisions, splitting types, and graph invariants",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, group_arg=True):
        if group_arg:
            p.add_argument("group", nargs="?", default=None,
                           help="catalog descriptor or JSON file path")
            p.add_argument("--catalog", help="catalog descriptor, e.g. symmetric:4")
            p.add_argument("--input", help="path to a JSON group file")
        p.add_argument("--order-cap", type=int, default=groups.DEFAULT_ORDER_CAP)
        p.add_argument("--lattice-cap", type=int, default=lattice.DEFAULT_ORDER_LIMIT)
        p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
        p.add_argument("--out", help="write output to this path instead of stdout")

    p = sub.add_parser("validate", help="validate a group table or generators")
    common(p)
    p.set_defaults(func=_cmd_validate)

    p = sub.add_parser("subgroups", help="emit the subgroup lattice")
    common(p)
    p.add_argument("--format", choices=("json", "dot"), default="json")
    p.set_defaults(func=_cmd_subgroups)

    p = sub.add_parser("divisions", help="emit the divisions")
    common(p)
    p.add_argument("--format", choices=("json",), default="json")
    p.set_defaults(func=_cmd_divisions)

    p = sub.add_parser("division-graph", help="emit the full division graph")
    common(p)
    p.add_argument("--format", choices=("json", "dot"), default="json")
    p.add_argument("--division", help="restrict output to one division, by element name")
    p.set_defaults(func=_cmd_division_graph)

    p = sub.add_parser("analyze", help="recover properties from the graph and cross-check")
    common(p)
    p.set_defaults(func=_cmd_analyze)

    p = sub.add_parser("compare", help="compare two groups by canonical certificates")
    p.add_argument("left", help="catalog descriptor or JSON file path")
    p.add_argument("right", help="catalog descriptor or JSON file path")
    common(p, group_arg=False)
    p.set_defaults(func=_cmd_compare)

    p = sub.add_parser("verify-lagarias", help="check divisions against splitting types")
    common(p)
    p.set_defaults(func=_cmd_verify_lagarias)

    p = sub.add_parser("an-divisions", help="alternating-group divisions by cycle type")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--cap", type=int, default=20)
    p.add_argument("--out")
    p.set_defaults(func=_cmd_an_divisions)

    p = sub.add_parser("conjecture-scan",
                       help="scan the catalog for certificate collisions")
    p.add_argument("--max-order", type=int, default=15)
    common(p, group_arg=False)
    p.set_defaults(func=_cmd_conjecture_scan)

    return parser


def run(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InternalInvariantError as exc:
        print(f"INVARIANT VIOLATION: {exc}", file=sys.stderr)
        return 3
    except ResourceCapExceeded as exc:
        print(f"cap exceeded: {exc}", file=sys.stderr)
        return 2
    except (ValidationError, json.JSONDecodeError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except DivgraphError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
