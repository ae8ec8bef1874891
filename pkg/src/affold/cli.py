"""Command-line interface.

Exit codes: 0 success, 1 verification counterexample found, 2 usage error,
3 budget exceeded.  All vertex indices on the wire and in messages are
1-based.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import catalog
from .document import document_json, export_dot, parse_document, serialize_document
from .errors import AffoldError, BudgetExceeded, FormatError
from .folding import verify_invariance_equals_admissibility
from .isomorphism import content_hash
from .matrix import ExchangeMatrix
from .mutclass import default_budget, enumerate_class, labeled_class
from .seeds import verify_folded_pattern

EXIT_OK = 0
EXIT_COUNTEREXAMPLE = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3


def _load_matrix(spec: str):
    """A Dynkin type string, or a path to (or literal) JSON document."""
    text = spec.strip()
    if text.startswith("{"):
        return parse_document(text)
    try:
        return parse_document(open(spec).read())
    except OSError:
        pass
    except json.JSONDecodeError as exc:
        raise FormatError(f"{spec}: {exc}") from exc
    t = catalog.parse_type(spec)
    return catalog.diagram(t), None, None


def _resolve_action(m: ExchangeMatrix, type_string: str, selector: str):
    """Pick a bundled action by group tag or by target-type string."""
    options = catalog.actions_for(type_string)
    matches = [
        (g, y, a)
        for g, y, a in options
        if selector in (g, y)
    ]
    if not matches:
        known = ", ".join(f"{g} -> {y}" for g, y, _ in options) or "none"
        raise FormatError(
            f"no action {selector!r} for {type_string} (available: {known})"
        )
    if len(matches) > 1:
        raise FormatError(
            f"action {selector!r} is ambiguous for {type_string}; "
            f"use the target type: " + ", ".join(y for _, y, _ in matches)
        )
    return matches[0]


def cmd_catalog(args) -> int:
    t = catalog.parse_type(args.type)
    m = catalog.diagram(t)
    action = None
    if args.action:
        _, _, action = _resolve_action(m, str(t), args.action)
    doc = serialize_document(m, action)
    doc["type"] = str(t)
    doc["layout"] = catalog.layout(t)
    print(json.dumps(doc, indent=None if args.json else 2))
    return EXIT_OK


def cmd_enumerate(args) -> int:
    m, _, _ = _load_matrix(args.input)
    budget = args.budget or default_budget()
    if args.labeled:
        seen, closed = labeled_class(m, budget=budget)
        print(f"size={len(seen)} convention=labeled closed={closed}")
        return EXIT_OK if closed else EXIT_BUDGET
    cls = enumerate_class(m, budget=budget)
    if args.dump:
        with open(args.dump, "w") as fh:
            for member in cls.members:
                fh.write(
                    json.dumps(
                        {
                            "b": [list(r) for r in member.representative.b],
                            "d": list(member.representative.d),
                            "path": [k + 1 for k in member.path],
                            "hash": f"{content_hash(member.representative):016x}",
                        }
                    )
                    + "\n"
                )
    print(
        f"size={len(cls)} convention=iso closed={cls.closed} "
        f"max_abs_entry={cls.max_abs_entry}"
    )
    return EXIT_OK if cls.closed else EXIT_BUDGET


def cmd_verify(args) -> int:
    if args.all is not None:
        triples = catalog.table1_triples(max_vertices=args.all)
    else:
        if not (args.x and args.group and args.y):
            print("verify needs X GROUP Y or --all N", file=sys.stderr)
            return EXIT_USAGE
        triples = [(args.x, args.group, args.y)]
    reports = []
    failed = False
    for x, g, y in triples:
        rep = verify_invariance_equals_admissibility(x, g, y, budget=args.budget)
        entry = rep.to_json()
        if args.depth:
            pat = verify_folded_pattern(x, g, y, depth=args.depth)
            entry["seed_pattern"] = {
                "depth": pat.depth,
                "seeds_seen": pat.seeds_seen,
                "invariant_seeds": pat.invariant_seeds,
                "admissible_seeds": pat.admissible_seeds,
                "violations": pat.violations,
            }
            if pat.violations:
                failed = True
        reports.append(entry)
        if rep.counterexamples or rep.invariant_count != rep.admissible_count:
            failed = True
        if not args.json:
            line = (
                f"{x} {g} {y}: class_size={entry['class_size']} "
                f"invariant={entry['invariant_count']} "
                f"admissible={entry['admissible_count']} "
                f"counterexamples={len(entry['counterexamples'])}"
            )
            print(line)
    if args.json:
        print(json.dumps(reports if args.all is not None else reports[0], indent=2))
    return EXIT_COUNTEREXAMPLE if failed else EXIT_OK


def cmd_serve(args) -> int:
    from .server import run

    run(port=args.port)
    return EXIT_OK


def cmd_export_dot(args) -> int:
    m, _, names = _load_matrix(args.input)
    print(export_dot(m, names))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="affold",
        description="Exact quiver mutation, mutation classes, and affine folding.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("catalog", help="print a catalog diagram document")
    p.add_argument("type", help='Dynkin type string, e.g. "E~6" or "A~{2,2}"')
    p.add_argument("--action", help="bundle a group action (tag or target type)")
    p.add_argument("--json", action="store_true", help="compact JSON output")
    p.set_defaults(fn=cmd_catalog)

    p = sub.add_parser("enumerate", help="enumerate a mutation class")
    p.add_argument("input", help="type string or document path/literal")
    g = p.add_mutually_exclusive_group()
    g.add_argument("--iso", action="store_true", help="up to isomorphism (default)")
    g.add_argument("--labeled", action="store_true", help="exact labeled matrices")
    p.add_argument("--budget", type=int, help="canonical-form insertion budget")
    p.add_argument("--dump", help="write the class as newline-delimited JSON")
    p.set_defaults(fn=cmd_enumerate)

    p = sub.add_parser("verify", help="invariance = admissibility sweeps")
    p.add_argument("x", nargs="?", help='type X, e.g. "A~{2,2}"')
    p.add_argument("group", nargs="?", help="group tag, e.g. Z2")
    p.add_argument("y", nargs="?", help='folded type Y, e.g. "A~1"')
    p.add_argument("--all", type=int, metavar="N", help="sweep all triples with <= N vertices")
    p.add_argument("--depth", type=int, help="also run the seed-level verifier")
    p.add_argument("--budget", type=int)
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("serve", help="run the HTTP JSON service")
    p.add_argument("--port", type=int, default=8617)
    p.set_defaults(fn=cmd_serve)

    p = sub.add_parser("export-dot", help="render a document as DOT")
    p.add_argument("input", help="type string or document path/literal")
    p.set_defaults(fn=cmd_export_dot)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.fn(args)
    except BudgetExceeded as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except AffoldError as exc:
        print(f"error [{exc.code}]: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
