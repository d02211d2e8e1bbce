"""Command-line front end.

One subcommand per engine capability.  Outputs are deterministic and
diff-stable; every subcommand also offers a ``--json`` mirror with
sorted keys.  Exit codes: 0/1 carry the query verdict where one exists
(0 = separated / maximal / equivalent / axioms hold), 2 is a usage or
input error, 3 means a size bound was exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .classify import DISPLAY_NAMES, FLAG_NAMES, classify
from .errors import MixedSepError, SizeLimit
from .generate import GenSpec, TARGET_CLASSES, random_graph
from .graph import Edge, Graph
from .independence import (
    ALL_AXIOMS,
    Axiom,
    IndependenceModel,
    check_axiom,
    closure,
    global_model,
    markov_equivalent,
    pairwise_model,
)
from .maximality import maximalize, non_maximal_pair
from .separation import connecting_walk, separated
from .textio import (
    format_edge,
    format_walk,
    parse_graph,
    parse_model,
    serialize_graph,
    serialize_model,
)


def _load_graph(path: str) -> Graph:
    return parse_graph(Path(path).read_text())


def _load_model(path: str) -> IndependenceModel:
    return parse_model(Path(path).read_text())


def _csv_set(text: str) -> frozenset:
    return frozenset(tok for tok in text.split(",") if tok)


def _axioms_arg(text: str) -> tuple:
    return tuple(Axiom.parse(tok) for tok in text.split(",") if tok)


def _emit_json(payload) -> None:
    print(json.dumps(payload, sort_keys=True, indent=2))


def _statement_payload(statement) -> dict:
    a, b, c = statement
    return {
        "lhs": sorted(str(v) for v in a),
        "rhs": sorted(str(v) for v in b),
        "given": sorted(str(v) for v in c),
    }


def _cmd_separate(args) -> int:
    g = _load_graph(args.graph)
    lhs, rhs, given = _csv_set(args.lhs), _csv_set(args.rhs), _csv_set(args.given)
    is_sep = separated(g, lhs, rhs, given)
    witness = None
    if not is_sep and args.witness:
        for i in sorted(lhs):
            for j in sorted(rhs):
                walk = connecting_walk(g, i, j, given)
                if walk is not None:
                    witness = walk
                    break
            if witness is not None:
                break
    if args.json:
        _emit_json(
            {
                "separated": is_sep,
                "witness": format_walk(witness) if witness is not None else None,
            }
        )
    else:
        print("separated" if is_sep else "connected")
        if witness is not None:
            print(format_walk(witness))
    return 0 if is_sep else 1


def _cmd_model(args) -> int:
    model = global_model(_load_graph(args.graph), max_nodes=args.max_nodes)
    if args.json:
        _emit_json({"statements": [_statement_payload(s) for s in model.statements()]})
    else:
        sys.stdout.write(serialize_model(model))
    return 0


def _cmd_pairwise(args) -> int:
    model = pairwise_model(_load_graph(args.graph))
    if args.json:
        _emit_json({"statements": [_statement_payload(s) for s in model.statements()]})
    else:
        sys.stdout.write(serialize_model(model))
    return 0


def _cmd_closure(args) -> int:
    model = _load_model(args.model)
    closed = closure(model, axioms=args.axioms or ALL_AXIOMS, max_nodes=args.max_nodes)
    if args.json:
        _emit_json({"statements": [_statement_payload(s) for s in closed.statements()]})
    else:
        sys.stdout.write(serialize_model(closed))
    return 0


def _cmd_classify(args) -> int:
    flags = classify(_load_graph(args.graph))
    if args.json:
        _emit_json({DISPLAY_NAMES[name]: flags[name] for name in FLAG_NAMES})
    else:
        for name in FLAG_NAMES:
            print(f"{DISPLAY_NAMES[name]}: {'yes' if flags[name] else 'no'}")
    return 0


def _cmd_maximal_check(args) -> int:
    pair = non_maximal_pair(_load_graph(args.graph))
    if args.json:
        _emit_json(
            {
                "maximal": pair is None,
                "pair": None if pair is None else [str(v) for v in pair],
            }
        )
    elif pair is None:
        print("maximal")
    else:
        print(f"not maximal: no edge between {pair[0]} and {pair[1]}")
    return 0 if pair is None else 1


def _cmd_maximalize(args) -> int:
    g = _load_graph(args.graph)
    result = maximalize(g)
    added = sorted(result.edges - g.edges, key=Edge.sort_key)
    if args.json:
        _emit_json(
            {
                "graph": serialize_graph(result),
                "added": [format_edge(e) for e in added],
            }
        )
    else:
        sys.stdout.write(serialize_graph(result))
    return 0


def _cmd_equiv(args) -> int:
    g1, g2 = _load_graph(args.graph1), _load_graph(args.graph2)
    equal = markov_equivalent(g1, g2, max_nodes=args.max_nodes)
    difference = None
    if not equal:
        m1 = global_model(g1, max_nodes=args.max_nodes)
        m2 = global_model(g2, max_nodes=args.max_nodes)
        sym_diff = sorted(
            m1.mask_triples ^ m2.mask_triples,
        )
        first = sym_diff[0]
        decode = m1._unmask if first in m1.mask_triples else m2._unmask
        difference = tuple(decode(m) for m in first)
    if args.json:
        _emit_json(
            {
                "equivalent": equal,
                "difference": None if difference is None else _statement_payload(difference),
            }
        )
    elif equal:
        print("equivalent")
    else:
        a, b, c = difference

        def fmt(s):
            return ",".join(str(v) for v in sorted(s)) or "-"

        print(f"different: {fmt(a)} | {fmt(b)} | {fmt(c)}")
    return 0 if equal else 1


def _cmd_gen(args) -> int:
    g = random_graph(GenSpec(n=args.n, cls=args.cls, density=args.density, seed=args.seed))
    if args.json:
        _emit_json({"graph": serialize_graph(g)})
    else:
        sys.stdout.write(serialize_graph(g))
    return 0


def _cmd_axioms(args) -> int:
    model = _load_model(args.model)
    axioms = args.axioms or ALL_AXIOMS
    all_ok = True
    payload = {}
    lines = []
    for ax in axioms:
        violations = check_axiom(model, ax)
        ok = not violations
        all_ok &= ok
        label = f"{ax.value.upper()} {ax.name.lower().replace('_', ' ')}"
        payload[ax.value] = {
            "ok": ok,
            "violation": None if ok else violations[0].describe(),
        }
        lines.append(f"{label}: {'PASS' if ok else 'FAIL  ' + violations[0].describe()}")
    if args.json:
        _emit_json(payload)
    else:
        print("\n".join(lines))
    return 0 if all_ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mixedsep",
        description="Exact separation queries on graphs with four edge kinds.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text):
        p = sub.add_parser(name, help=help_text)
        p.set_defaults(func=func)
        p.add_argument("--json", action="store_true", help="emit JSON with sorted keys")
        return p

    p = add("separate", _cmd_separate, "decide whether two node sets are separated")
    p.add_argument("graph")
    p.add_argument("--lhs", required=True, help="comma-joined node labels")
    p.add_argument("--rhs", required=True, help="comma-joined node labels")
    p.add_argument("--given", default="", help="comma-joined conditioning labels")
    p.add_argument("--witness", action="store_true", help="print a connecting walk, if any")

    p = add("model", _cmd_model, "print the full induced independence model")
    p.add_argument("graph")
    p.add_argument("--max-nodes", type=int, default=7)

    p = add("pairwise", _cmd_pairwise, "print the pairwise statements of a CMG")
    p.add_argument("graph")

    p = add("closure", _cmd_closure, "close a model file under chosen axioms")
    p.add_argument("model")
    p.add_argument("--axioms", type=_axioms_arg, default=(), help="e.g. s1,s2,s6")
    p.add_argument("--max-nodes", type=int, default=6)

    p = add("classify", _cmd_classify, "report class membership flags")
    p.add_argument("graph")

    p = add("maximal-check", _cmd_maximal_check, "test a CMG for maximality")
    p.add_argument("graph")

    p = add("maximalize", _cmd_maximalize, "add edges until the CMG is maximal")
    p.add_argument("graph")

    p = add("equiv", _cmd_equiv, "compare the independence models of two graphs")
    p.add_argument("graph1")
    p.add_argument("graph2")
    p.add_argument("--max-nodes", type=int, default=7)

    p = add("gen", _cmd_gen, "emit a seeded random graph")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--cls", choices=TARGET_CLASSES, default="any")
    p.add_argument("--density", type=float, default=0.25)
    p.add_argument("--seed", type=int, default=0)

    p = add("axioms", _cmd_axioms, "check a model file against the graphoid axioms")
    p.add_argument("model")
    p.add_argument("--axioms", type=_axioms_arg, default=(), help="subset to check")

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except SizeLimit as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except MixedSepError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
