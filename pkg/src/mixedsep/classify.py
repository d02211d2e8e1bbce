"""Graph-class membership, chain components, and the dotted/line swap.

Every class is decided from first principles on the four-edge-kind
graph; `HIERARCHY` records the containments between classes (read
transitively), and the property suite checks classification output
against it.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Optional

from .errors import ClassViolation, NotAChainGraph
from .graph import Edge, EdgeKind, Graph, _components, _has_directed_cycle


@dataclass(frozen=True)
class ChainDecomposition:
    """Chain components (the connected components after arrow removal),
    the single edge kind inside each (None for edgeless components), and
    the quotient arrows between component indexes."""

    components: tuple
    kinds: tuple
    quotient: tuple

    def component_of(self, node) -> int:
        for k, comp in enumerate(self.components):
            if node in comp:
                return k
        raise KeyError(node)


def chain_components(g: Graph) -> ChainDecomposition:
    """Decompose a chain graph; raises NotAChainGraph otherwise.

    The two failure modes are a component mixing edge kinds and a
    directed cycle (or self-loop) in the component quotient.
    """
    symmetric = [e for e in g.edges if e.kind is not EdgeKind.ARROW]
    roots = _components(g.nodes, symmetric)
    comp_nodes = {}
    for v in g.nodes:
        comp_nodes.setdefault(roots[v], set()).add(v)
    ordered_roots = sorted(comp_nodes, key=lambda r: sorted(comp_nodes[r])[0])
    index = {r: k for k, r in enumerate(ordered_roots)}

    kinds: list = [None] * len(ordered_roots)
    for e in symmetric:
        k = index[roots[e.u]]
        if kinds[k] is None:
            kinds[k] = e.kind
        elif kinds[k] is not e.kind:
            raise NotAChainGraph("mixed-component", f"component of {e.u!r} mixes edge kinds")

    quotient = set()
    for e in g.edges:
        if e.kind is EdgeKind.ARROW:
            cu, cv = index[roots[e.u]], index[roots[e.v]]
            if cu == cv:
                raise NotAChainGraph("quotient-cycle", f"arrow {e} inside one component")
            quotient.add((cu, cv))
    succ = {}
    for cu, cv in quotient:
        succ.setdefault(cu, set()).add(cv)
    if _has_directed_cycle(succ):
        raise NotAChainGraph("quotient-cycle", "component quotient has a directed cycle")

    return ChainDecomposition(
        components=tuple(frozenset(comp_nodes[r]) for r in ordered_roots),
        kinds=tuple(kinds),
        quotient=tuple(sorted(quotient)),
    )


@dataclass(frozen=True)
class GraphClass:
    """Membership flags across the graph-class hierarchy."""

    ug: bool
    bg: bool
    dg: bool
    dag: bool
    ucg: bool
    bcg: bool
    dcg: bool
    chain_graph: bool
    regression_graph: bool
    mamp: bool
    aadmg: bool
    admg: bool
    sg: bool
    ag: bool
    ang: bool
    cmg: bool

    def flags(self) -> dict:
        return {name: getattr(self, name) for name in FLAG_NAMES}

    def __getitem__(self, name: str) -> bool:
        name = name.lower().replace("-", "_")
        if name not in FLAG_NAMES:
            raise KeyError(name)
        return getattr(self, name)


FLAG_NAMES = (
    "ug",
    "bg",
    "dg",
    "dag",
    "ucg",
    "bcg",
    "dcg",
    "chain_graph",
    "regression_graph",
    "mamp",
    "aadmg",
    "admg",
    "sg",
    "ag",
    "ang",
    "cmg",
)

DISPLAY_NAMES = {
    "ug": "UG",
    "bg": "BG",
    "dg": "DG",
    "dag": "DAG",
    "ucg": "UCG",
    "bcg": "BCG",
    "dcg": "DCG",
    "chain_graph": "chain graph",
    "regression_graph": "regression graph",
    "mamp": "MAMP",
    "aadmg": "AADMG",
    "admg": "ADMG",
    "sg": "SG",
    "ag": "AG",
    "ang": "AnG",
    "cmg": "CMG",
}

# Direct containments; each one is provable from the class definitions.
# Read transitively: e.g. a BG is a BCG, hence a regression graph, an
# AG, an SG, and a CMG.
HIERARCHY = {
    "ug": ("ucg", "regression_graph", "ag"),
    "bg": ("bcg", "admg", "mamp"),
    "dg": ("dcg",),
    "dag": ("ucg", "bcg", "dcg", "admg", "aadmg", "mamp"),
    "ucg": ("chain_graph", "cmg"),
    "bcg": ("chain_graph", "regression_graph"),
    "dcg": ("chain_graph", "mamp", "aadmg"),
    "regression_graph": ("chain_graph", "ag"),
    "ag": ("sg", "ang"),
    "sg": ("cmg",),
    "ang": ("cmg",),
    "admg": ("sg",),
    "chain_graph": (),
    "mamp": (),
    "aadmg": (),
    "cmg": (),
}


def implied_classes(name: str) -> frozenset:
    """Transitive closure of HIERARCHY from one flag."""
    seen = set()
    stack = [name]
    while stack:
        for nxt in HIERARCHY[stack.pop()]:
            if nxt not in seen:
                seen.add(nxt)
                stack.append(nxt)
    return frozenset(seen)


def _no_arrowhead_at_line_nodes(g: Graph) -> bool:
    for v in g.nodes:
        if g.ne(v) and (g.pa(v) or g.sp(v)):
            return False
    return True


def _arc_free_of(g: Graph, relation) -> bool:
    """True iff no arc endpoint stands in `relation` to the other endpoint."""
    for e in g.edges:
        if e.kind is EdgeKind.ARC:
            if e.u in relation(g, (e.v,)) or e.v in relation(g, (e.u,)):
                return False
    return True


def _mamp_conditions(g: Graph) -> bool:
    if EdgeKind.LINE in g.kinds_present():
        return False
    if g.has_quasi_directed_cycle():
        return False
    # no cycle of dotted lines plus exactly one arc: equivalently no arc
    # between nodes already joined by a dotted path
    dotted_roots = _components(g.nodes, (e for e in g.edges if e.kind is EdgeKind.DOTTED))
    for e in g.edges:
        if e.kind is EdgeKind.ARC and dotted_roots[e.u] == dotted_roots[e.v]:
            return False
    # dotted neighbourhoods of spouse-holding nodes must be dotted cliques
    for j in g.nodes:
        if g.sp(j):
            for i, k in itertools.combinations(sorted(g.pt(j)), 2):
                if Edge(i, k, EdgeKind.DOTTED) not in g.edges:
                    return False
    return True


def classify(g: Graph) -> GraphClass:
    """Compute every membership flag from first principles."""
    kinds = g.kinds_present()
    arrow_acyclic = not g.has_directed_cycle()
    try:
        decomp: Optional[ChainDecomposition] = chain_components(g)
    except NotAChainGraph:
        decomp = None

    def components_pure(kind):
        return decomp is not None and all(k is None or k is kind for k in decomp.kinds)

    chain = decomp is not None
    cmg = EdgeKind.DOTTED not in kinds and not g.has_semi_directed_cycle()
    sg = cmg and _no_arrowhead_at_line_nodes(g)
    return GraphClass(
        ug=kinds <= {EdgeKind.LINE},
        bg=kinds <= {EdgeKind.ARC},
        dg=kinds <= {EdgeKind.DOTTED},
        dag=kinds <= {EdgeKind.ARROW} and arrow_acyclic,
        ucg=components_pure(EdgeKind.LINE),
        bcg=components_pure(EdgeKind.ARC),
        dcg=components_pure(EdgeKind.DOTTED),
        chain_graph=chain,
        regression_graph=chain
        and kinds <= {EdgeKind.LINE, EdgeKind.ARC, EdgeKind.ARROW}
        and _no_arrowhead_at_line_nodes(g),
        mamp=_mamp_conditions(g),
        aadmg=kinds <= {EdgeKind.ARROW, EdgeKind.DOTTED} and arrow_acyclic,
        admg=kinds <= {EdgeKind.ARROW, EdgeKind.ARC} and arrow_acyclic,
        sg=sg,
        ag=sg and _arc_free_of(g, Graph.ancestors),
        ang=cmg and _arc_free_of(g, Graph.anteriors),
        cmg=cmg,
    )


def dg_to_ug(g: Graph) -> Graph:
    """Replace every dotted line by a line; defined for dotted-line
    graphs, whose independence model this translation preserves."""
    if not classify(g).dg:
        raise ClassViolation("dg_to_ug expects a graph with only dotted edges")
    return Graph(
        g.nodes,
        (Edge(e.u, e.v, EdgeKind.LINE) for e in g.edges),
    )
