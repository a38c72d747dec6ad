"""Command-line front end.

Commands: solve, family, classify, realize, bounds, fuzz.  JSON output
(--json) is the stable machine contract: a single envelope object
{schema_version, command, input_digest, payload} serialized with sorted
keys and no whitespace, so identical inputs give byte-identical output.
The digest is the SHA-256 of the canonical edge-list text (graph commands)
or of the canonical parameter text (family/realize/fuzz).  Table output is
human-oriented and may change.

Exit codes: 0 success; 1 fuzz found violations; 2 input error (unparsable
edge list or spec text, unknown invariant name, bad flags); 3 exact-solver
size limit exceeded (IDRD_SIZE_LIMIT overrides the default of 24); 4
domain error (no closed form, non-tree classify, inadmissible pair).
"""

import argparse
import hashlib
import json
import sys

from .bounds import GRAPH_CLASSES, check_bounds, fuzz
from .families import (
    classify_tree,
    formula_idrdn,
    generate,
    parse_family_spec,
    realize,
)
from .graph import EdgeListParseError, parse_edge_list, serialize_edge_list
from .labelings import DRLabeling, R2Labeling, RainbowLabeling
from .solvers import (
    SizeLimitError,
    compute_invariants,
    idn,
    idrdn,
    ir2dn,
)

SCHEMA_VERSION = "1"

EXIT_OK = 0
EXIT_VIOLATIONS = 1
EXIT_INPUT = 2
EXIT_SIZE = 3
EXIT_DOMAIN = 4


def _error(code: int, message: str) -> int:
    print(f"error: {message}", file=sys.stderr)
    return code


def _digest(text: str) -> str:
    return hashlib.sha256(text.encode("utf-8")).hexdigest()


def _emit_json(command: str, digest: str, payload) -> None:
    envelope = {
        "schema_version": SCHEMA_VERSION,
        "command": command,
        "input_digest": digest,
        "payload": payload,
    }
    print(json.dumps(envelope, sort_keys=True, separators=(",", ":")))


def _read_graph(path: str):
    if path == "-":
        text = sys.stdin.read()
    else:
        with open(path, "r", encoding="utf-8") as handle:
            text = handle.read()
    return parse_edge_list(text)


def _witness_json(witness):
    if isinstance(witness, RainbowLabeling):
        return [sorted(s) for s in witness.values]
    if isinstance(witness, (DRLabeling, R2Labeling)):
        return list(witness.values)
    if witness and isinstance(witness[0], tuple):
        return [list(e) for e in witness]
    return list(witness)


def _witness_lines(witness):
    if isinstance(witness, (DRLabeling, R2Labeling, RainbowLabeling)):
        return ["  " + line for line in witness.witness_text().splitlines()]
    if witness and isinstance(witness[0], tuple):
        return ["  edges: " + " ".join(f"{u}-{v}" for u, v in witness)]
    return ["  members: " + " ".join(str(v) for v in witness)]


def _cmd_solve(args) -> int:
    try:
        g = _read_graph(args.input)
    except (OSError, EdgeListParseError) as exc:
        return _error(EXIT_INPUT, str(exc))
    names = args.invariants.split(",") if args.invariants else None
    try:
        table = compute_invariants(g, names)
    except SizeLimitError as exc:
        return _error(EXIT_SIZE, str(exc))
    except ValueError as exc:
        return _error(EXIT_INPUT, str(exc))
    digest = _digest(serialize_edge_list(g))
    payload = {
        "invariants": table.entries,
        "not_applicable": table.not_applicable,
    }
    if args.witness:
        payload["witnesses"] = {
            name: _witness_json(w) for name, w in table.witnesses.items()
        }
    if args.json:
        _emit_json("solve", digest, payload)
    else:
        for name, value in table.entries.items():
            print(f"{name} = {value}")
            if args.witness and name in table.witnesses:
                print("\n".join(_witness_lines(table.witnesses[name])))
        for name, reason in table.not_applicable.items():
            print(f"{name} skipped ({reason})")
    return EXIT_OK


def _cmd_family(args) -> int:
    try:
        spec = parse_family_spec(args.spec)
    except ValueError as exc:
        return _error(EXIT_INPUT, str(exc))
    payload = {"kind": spec.kind, "params": list(spec.params)}
    if args.mode in ("formula", "both"):
        try:
            payload["formula"] = formula_idrdn(spec)
        except ValueError as exc:
            return _error(EXIT_DOMAIN, str(exc))
    if args.mode in ("solve", "both"):
        try:
            payload["solver"] = idrdn(generate(spec))[0]
        except SizeLimitError as exc:
            return _error(EXIT_SIZE, str(exc))
    if args.mode == "both":
        payload["agree"] = payload["formula"] == payload["solver"]
    digest = _digest(spec.text())
    if args.json:
        _emit_json("family", digest, payload)
    else:
        print(f"family {spec.text()}")
        for key in ("formula", "solver", "agree"):
            if key in payload:
                print(f"{key} = {str(payload[key]).lower() if key == 'agree' else payload[key]}")
    return EXIT_OK


def _cmd_classify(args) -> int:
    try:
        g = _read_graph(args.input)
    except (OSError, EdgeListParseError) as exc:
        return _error(EXIT_INPUT, str(exc))
    try:
        result = classify_tree(g)
    except ValueError as exc:
        return _error(EXIT_DOMAIN, str(exc))
    try:
        diff = ir2dn(g)[0] - idn(g)[0]
    except SizeLimitError as exc:
        return _error(EXIT_SIZE, str(exc))
    digest = _digest(serialize_edge_list(g))
    payload = {
        "membership": result.membership,
        "parameters": list(result.parameters) if result.parameters else None,
        "ir2dn_minus_idn": diff,
    }
    if args.json:
        _emit_json("classify", digest, payload)
    else:
        print(f"membership = {result.membership}")
        if result.parameters is not None:
            a, b = result.parameters
            names = ("k", "j") if result.membership == "T_family" else ("r", "s")
            print(f"{names[0]} = {a}")
            print(f"{names[1]} = {b}")
        print(f"ir2dn - idn = {diff}")
    return EXIT_OK


def _cmd_realize(args) -> int:
    try:
        t = realize(args.a, args.b)
    except ValueError as exc:
        return _error(EXIT_DOMAIN, str(exc))
    try:
        got_a = idn(t)[0]
        got_b = idrdn(t)[0]
    except SizeLimitError as exc:
        return _error(EXIT_SIZE, str(exc))
    text = serialize_edge_list(t)
    if args.out:
        try:
            with open(args.out, "w", encoding="utf-8") as handle:
                handle.write(text)
        except OSError as exc:
            return _error(EXIT_INPUT, str(exc))
    payload = {
        "a": args.a,
        "b": args.b,
        "order": t.n,
        "edge_list": text,
        "idn": got_a,
        "idrdn": got_b,
        "verified": got_a == args.a and got_b == args.b,
    }
    digest = _digest(f"{args.a} {args.b}")
    if args.json:
        _emit_json("realize", digest, payload)
    else:
        if args.out:
            print(f"written {args.out}")
        else:
            print(text, end="")
        print(f"idn = {got_a}")
        print(f"idrdn = {got_b}")
        print(f"verified = {str(payload['verified']).lower()}")
    return EXIT_OK


def _cmd_bounds(args) -> int:
    try:
        g = _read_graph(args.input)
    except (OSError, EdgeListParseError) as exc:
        return _error(EXIT_INPUT, str(exc))
    try:
        records = check_bounds(g)
    except SizeLimitError as exc:
        return _error(EXIT_SIZE, str(exc))
    except ValueError as exc:
        return _error(EXIT_INPUT, str(exc))
    digest = _digest(serialize_edge_list(g))
    if args.json:
        _emit_json("bounds", digest, {"bounds": [r.to_dict() for r in records]})
    else:
        for r in records:
            if r.skipped:
                print(f"{r.name:9} skipped ({r.skip_reason})")
            else:
                status = "holds" if r.holds else "VIOLATED"
                extra = ", tight" if r.tight else ""
                print(
                    f"{r.name:9} {r.anchor}: {r.lhs} {r.relation} {r.rhs}"
                    f" [{status}{extra}]"
                )
    return EXIT_OK


def _cmd_fuzz(args) -> int:
    try:
        report = fuzz(
            args.graph_class,
            args.max_n,
            args.trials,
            (args.p_min, args.p_max),
            args.seed,
        )
    except ValueError as exc:
        return _error(EXIT_INPUT, str(exc))
    except SizeLimitError as exc:
        return _error(EXIT_SIZE, str(exc))
    digest = _digest(
        f"{args.graph_class} {args.max_n} {args.trials} {args.seed}"
        f" {args.p_min} {args.p_max}"
    )
    if args.json:
        _emit_json("fuzz", digest, report.to_dict())
    else:
        print(f"class = {report.graph_class}")
        print(f"trials = {report.trials}")
        print(f"seed = {report.seed}")
        print(f"violations = {len(report.violations)}")
        for edge_list, bound in report.violations:
            first = edge_list.splitlines()[0]
            print(f"  {bound} violated on: {first} ...")
        for name, count in report.tight_counts.items():
            print(f"tight {name} = {count}")
    return EXIT_VIOLATIONS if report.violations else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="idrd",
        description=(
            "Exact independent double Roman domination toolkit: solvers,"
            " family formulas, tree classification, pair realization,"
            " bound checks, and fuzzing."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_solve = sub.add_parser("solve", help="compute invariants of an edge-list graph")
    p_solve.add_argument("--input", required=True, help="edge-list file path, or - for stdin")
    p_solve.add_argument(
        "--invariants",
        help="comma-separated invariant names (default: all)",
    )
    p_solve.add_argument("--witness", action="store_true", help="include witnesses")
    p_solve.add_argument("--json", action="store_true", help="machine-readable output")
    p_solve.set_defaults(func=_cmd_solve)

    p_family = sub.add_parser("family", help="closed-form and solver values for a family")
    p_family.add_argument("spec", help="family text, e.g. path:7 or kpartite:2,2,5")
    p_family.add_argument(
        "mode",
        nargs="?",
        default="both",
        choices=("formula", "solve", "both"),
        help="what to compute (default: both)",
    )
    p_family.add_argument("--json", action="store_true", help="machine-readable output")
    p_family.set_defaults(func=_cmd_family)

    p_classify = sub.add_parser("classify", help="classify a tree against the two families")
    p_classify.add_argument("--input", required=True, help="edge-list file path, or - for stdin")
    p_classify.add_argument("--json", action="store_true", help="machine-readable output")
    p_classify.set_defaults(func=_cmd_classify)

    p_realize = sub.add_parser(
        "realize", help="build a tree with the given (idn, idrdn) pair"
    )
    p_realize.add_argument("a", type=int, help="target independent domination number")
    p_realize.add_argument(
        "b", type=int, help="target independent double Roman domination number"
    )
    p_realize.add_argument("--out", help="write the edge list to this path")
    p_realize.add_argument("--json", action="store_true", help="machine-readable output")
    p_realize.set_defaults(func=_cmd_realize)

    p_bounds = sub.add_parser("bounds", help="evaluate every bound record on a graph")
    p_bounds.add_argument("--input", required=True, help="edge-list file path, or - for stdin")
    p_bounds.add_argument("--json", action="store_true", help="machine-readable output")
    p_bounds.set_defaults(func=_cmd_bounds)

    p_fuzz = sub.add_parser("fuzz", help="fuzz the bound records over random graphs")
    p_fuzz.add_argument("graph_class", choices=GRAPH_CLASSES, metavar="class")
    p_fuzz.add_argument("max_n", type=int, help="largest vertex count to sample")
    p_fuzz.add_argument("trials", type=int, help="number of sampled graphs")
    p_fuzz.add_argument("--seed", type=int, default=0, help="master seed (default 0)")
    p_fuzz.add_argument(
        "--p-min", type=float, default=0.2, help="lower edge probability (default 0.2)"
    )
    p_fuzz.add_argument(
        "--p-max", type=float, default=0.8, help="upper edge probability (default 0.8)"
    )
    p_fuzz.add_argument("--json", action="store_true", help="machine-readable output")
    p_fuzz.set_defaults(func=_cmd_fuzz)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    return args.func(args)


def entry() -> None:
    sys.exit(main(sys.argv[1:]))
