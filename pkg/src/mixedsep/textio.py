"""Plain-text formats for graphs and independence models.

Graph files hold one edge or isolated node per line::

    a -- b      # line
    a -> b      # arrow
    a <-> b     # arc
    a .. b      # dotted line
    node c      # isolated node

``#`` starts a comment; labels are arbitrary non-whitespace strings.
The serializer emits a sorted canonical form, so parse(serialize(g)) == g
for any canonical string-labelled graph.

Model files hold one independence statement per line as ``A | B | C``
with each part a comma-joined sorted list of labels and ``-`` for the
empty set.
"""

from __future__ import annotations

from .errors import ParseError
from .graph import Edge, EdgeKind, Graph, Walk
from .independence import IndependenceModel

_OP_TO_KIND = {
    "--": EdgeKind.LINE,
    "->": EdgeKind.ARROW,
    "<->": EdgeKind.ARC,
    "..": EdgeKind.DOTTED,
}
_KIND_TO_OP = {v: k for k, v in _OP_TO_KIND.items()}


def parse_graph(text: str) -> Graph:
    """Parse the graph file format; duplicate same-type edges collapse."""
    nodes = set()
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.split("#", 1)[0].strip()
        if not stripped:
            continue
        tokens = stripped.split()
        if len(tokens) == 2:
            if tokens[0] != "node":
                raise ParseError(lineno, f"expected 'node LABEL', got {stripped!r}")
            nodes.add(tokens[1])
        elif len(tokens) == 3:
            lhs, op, rhs = tokens
            kind = _OP_TO_KIND.get(op)
            if kind is None:
                raise ParseError(lineno, f"unknown edge token {op!r}")
            if lhs == rhs:
                raise ParseError(lineno, f"loop edge on {lhs!r}")
            edges.append(Edge(lhs, rhs, kind))
        else:
            raise ParseError(lineno, f"expected 'node LABEL' or 'LHS OP RHS', got {stripped!r}")
    return Graph(nodes, edges)


def format_edge(e: Edge) -> str:
    return f"{e.u} {_KIND_TO_OP[e.kind]} {e.v}"


def serialize_graph(g: Graph) -> str:
    """Emit the sorted canonical text form of a graph."""
    lines = []
    isolated = [v for v in g.nodes if not g.edges_at(v)]
    for v in isolated:
        lines.append(f"node {v}")
    for e in g.sorted_edges():
        lines.append(format_edge(e))
    return "\n".join(lines) + ("\n" if lines else "")


def format_walk(walk: Walk) -> str:
    """Render a walk as ``a -[->]- b -[--]- c`` with per-step edge kinds;
    arrows show their own orientation, so multi-edges stay unambiguous."""
    parts = [str(walk.nodes[0])]
    for k, e in enumerate(walk.edges):
        src = walk.nodes[k]
        if e.kind is EdgeKind.ARROW:
            token = "->" if e.u == src else "<-"
        else:
            token = e.kind.value
        parts.append(f"-[{token}]- {walk.nodes[k + 1]}")
    return " ".join(parts)


def _format_part(part) -> str:
    return ",".join(str(v) for v in sorted(part)) if part else "-"


def serialize_model(model: IndependenceModel) -> str:
    """One statement per line, sorted, diff-stable."""
    rows = []
    for a, b, c in model.statements():
        rows.append((_format_part(a), _format_part(b), _format_part(c)))
    rows.sort()
    return "".join(f"{a} | {b} | {c}\n" for a, b, c in rows)


def parse_model(text: str, ground=None) -> IndependenceModel:
    """Parse a model file.

    The ground set defaults to the labels mentioned in the statements;
    pass `ground` to widen it.
    """
    triples = []
    mentioned = set(ground or ())
    for lineno, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.split("#", 1)[0].strip()
        if not stripped:
            continue
        parts = [p.strip() for p in stripped.split("|")]
        if len(parts) != 3:
            raise ParseError(lineno, f"expected 'A | B | C', got {stripped!r}")
        sets = []
        for p in parts:
            items = frozenset(() if p == "-" else (tok.strip() for tok in p.split(",")))
            if "" in items:
                raise ParseError(lineno, f"empty label in {stripped!r}")
            sets.append(items)
        mentioned.update(*sets)
        triples.append(tuple(sets))
    return IndependenceModel.from_statements(mentioned, triples)
