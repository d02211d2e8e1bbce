"""Graphs with four edge types, walks, and section machinery.

Edge kinds are lines (solid undirected), arrows (directed), arcs
(bidirected), and dotted lines (undirected).  Graphs are immutable and
canonical: at most one edge per node pair and kind, with arrows keyed by
their ordered (tail, head) pair, so graph equality is plain set equality.
Nodes are arbitrary hashable, mutually orderable values (strings or ints
in practice).
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Optional

from .errors import MalformedWalk, NodeNotFound


class EdgeKind(Enum):
    LINE = "--"
    ARROW = "->"
    ARC = "<->"
    DOTTED = ".."


class Mark(Enum):
    """What an edge presents at one of its endpoints."""

    TAIL = "tail"
    HEAD = "head"
    LINE_END = "line-end"
    DOTTED_END = "dotted-end"


_KIND_ORDER = {EdgeKind.LINE: 0, EdgeKind.ARROW: 1, EdgeKind.ARC: 2, EdgeKind.DOTTED: 3}


@dataclass(frozen=True)
class Edge:
    """A single edge.  Arrows are ordered u -> v; other kinds store u < v."""

    u: object
    v: object
    kind: EdgeKind

    def __post_init__(self):
        if self.u == self.v:
            raise ValueError(f"loops are not allowed: {self.u!r}")
        if self.kind is not EdgeKind.ARROW and self.v < self.u:
            u, v = self.u, self.v
            object.__setattr__(self, "u", v)
            object.__setattr__(self, "v", u)

    def endpoints(self) -> frozenset:
        return frozenset((self.u, self.v))

    def other(self, node):
        if node == self.u:
            return self.v
        if node == self.v:
            return self.u
        raise NodeNotFound(f"{node!r} is not an endpoint of {self}")

    def mark_at(self, node) -> Mark:
        """The mark this edge presents at `node` (one of its endpoints)."""
        if node != self.u and node != self.v:
            raise NodeNotFound(f"{node!r} is not an endpoint of {self}")
        if self.kind is EdgeKind.LINE:
            return Mark.LINE_END
        if self.kind is EdgeKind.DOTTED:
            return Mark.DOTTED_END
        if self.kind is EdgeKind.ARC:
            return Mark.HEAD
        return Mark.HEAD if node == self.v else Mark.TAIL

    def sort_key(self):
        lo, hi = sorted((self.u, self.v))
        return (lo, hi, _KIND_ORDER[self.kind], self.u)

    def __repr__(self):
        return f"{self.u!r} {self.kind.value} {self.v!r}"


def line(u, v) -> Edge:
    return Edge(u, v, EdgeKind.LINE)


def arrow(u, v) -> Edge:
    return Edge(u, v, EdgeKind.ARROW)


def arc(u, v) -> Edge:
    return Edge(u, v, EdgeKind.ARC)


def dotted(u, v) -> Edge:
    return Edge(u, v, EdgeKind.DOTTED)


@dataclass(frozen=True)
class NodeRelations:
    """The adjacency record of one node: line neighbours, parents,
    children, spouses (arc partners), and partners (dotted partners)."""

    ne: frozenset
    pa: frozenset
    ch: frozenset
    sp: frozenset
    pt: frozenset


class Graph:
    """An immutable labelled graph with four edge kinds.

    Construction canonicalizes the edge set (duplicates collapse) and
    adds any edge endpoints to the node set.  All queries are read-only,
    so shared instances are safe to use concurrently.
    """

    __slots__ = ("_nodes", "_edges", "_incident", "_ne", "_pa", "_ch", "_sp", "_pt", "_hash")

    def __init__(self, nodes: Iterable = (), edges: Iterable[Edge] = ()):
        edge_set = frozenset(edges)
        node_set = set(nodes)
        for e in edge_set:
            node_set.add(e.u)
            node_set.add(e.v)
        self._nodes = tuple(sorted(node_set))
        self._edges = edge_set
        incident = {v: [] for v in self._nodes}
        ne = {v: set() for v in self._nodes}
        pa = {v: set() for v in self._nodes}
        ch = {v: set() for v in self._nodes}
        sp = {v: set() for v in self._nodes}
        pt = {v: set() for v in self._nodes}
        for e in sorted(edge_set, key=Edge.sort_key):
            incident[e.u].append(e)
            incident[e.v].append(e)
            if e.kind is EdgeKind.LINE:
                ne[e.u].add(e.v)
                ne[e.v].add(e.u)
            elif e.kind is EdgeKind.ARROW:
                ch[e.u].add(e.v)
                pa[e.v].add(e.u)
            elif e.kind is EdgeKind.ARC:
                sp[e.u].add(e.v)
                sp[e.v].add(e.u)
            else:
                pt[e.u].add(e.v)
                pt[e.v].add(e.u)
        self._incident = {v: tuple(es) for v, es in incident.items()}
        self._ne = {v: frozenset(s) for v, s in ne.items()}
        self._pa = {v: frozenset(s) for v, s in pa.items()}
        self._ch = {v: frozenset(s) for v, s in ch.items()}
        self._sp = {v: frozenset(s) for v, s in sp.items()}
        self._pt = {v: frozenset(s) for v, s in pt.items()}
        self._hash = None

    # --- basic accessors ---

    @property
    def nodes(self) -> tuple:
        """All nodes in sorted order."""
        return self._nodes

    @property
    def edges(self) -> frozenset:
        return self._edges

    @property
    def num_nodes(self) -> int:
        return len(self._nodes)

    def sorted_edges(self) -> list:
        return sorted(self._edges, key=Edge.sort_key)

    def has_node(self, v) -> bool:
        return v in self._incident

    def edges_at(self, v) -> tuple:
        self._require(v)
        return self._incident[v]

    def edges_between(self, u, v) -> tuple:
        self._require(u)
        self._require(v)
        return tuple(e for e in self._incident[u] if e.other(u) == v)

    def adjacent(self, u, v) -> bool:
        return bool(self.edges_between(u, v))

    def kinds_present(self) -> frozenset:
        return frozenset(e.kind for e in self._edges)

    def ne(self, j) -> frozenset:
        self._require(j)
        return self._ne[j]

    def pa(self, j) -> frozenset:
        self._require(j)
        return self._pa[j]

    def ch(self, j) -> frozenset:
        self._require(j)
        return self._ch[j]

    def sp(self, j) -> frozenset:
        self._require(j)
        return self._sp[j]

    def pt(self, j) -> frozenset:
        self._require(j)
        return self._pt[j]

    def relations(self, j) -> NodeRelations:
        """Line neighbours, parents, children, spouses, and dotted partners of `j`."""
        self._require(j)
        return NodeRelations(self._ne[j], self._pa[j], self._ch[j], self._sp[j], self._pt[j])

    def _require(self, v):
        if v not in self._incident:
            raise NodeNotFound(f"unknown node {v!r}")

    def _require_all(self, vs):
        for v in vs:
            self._require(v)

    # --- reachability ---

    def ancestors(self, targets: Iterable) -> frozenset:
        """an(A): nodes outside A with a directed walk into A."""
        return self._reach_into(targets, anterior=False)

    def anteriors(self, targets: Iterable) -> frozenset:
        """ant(A): nodes outside A with an anterior walk into A.

        An anterior walk uses lines, dotted lines, and forward arrows
        only; walk- and path-reachability coincide, so this is plain
        reverse reachability.
        """
        return self._reach_into(targets, anterior=True)

    def reflexive_ancestors(self, targets: Iterable) -> frozenset:
        a = set(targets)
        return frozenset(a) | self.ancestors(a)

    def reflexive_anteriors(self, targets: Iterable) -> frozenset:
        a = set(targets)
        return frozenset(a) | self.anteriors(a)

    def _reach_into(self, targets, anterior: bool) -> frozenset:
        targets = set(targets)
        self._require_all(targets)
        seen = set(targets)
        stack = list(targets)
        while stack:
            v = stack.pop()
            preds = set(self._pa[v])
            if anterior:
                preds |= self._ne[v] | self._pt[v]
            for w in preds:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return frozenset(seen - targets)

    def is_anterior_set(self, nodes: Iterable) -> bool:
        """True iff the set is closed under taking anteriors."""
        return not self.anteriors(nodes)

    # --- cycle predicates ---

    def has_semi_directed_cycle(self) -> bool:
        """True iff a cycle uses only lines, dotted lines, and consistently
        oriented arrows, with at least one arrow."""
        return self._contracted_arrow_cycle((EdgeKind.LINE, EdgeKind.DOTTED))

    def has_quasi_directed_cycle(self) -> bool:
        """True iff a cycle has at least one arrow and all its arrows point
        forward; the remaining edges may be of any kind."""
        return self._contracted_arrow_cycle((EdgeKind.LINE, EdgeKind.DOTTED, EdgeKind.ARC))

    def _contracted_arrow_cycle(self, merge_kinds) -> bool:
        # Contract the components of the merge-kind subgraph; a qualifying
        # cycle exists iff an arrow is internal to a component or the
        # component digraph has a directed cycle.
        comp = _components(self._nodes, (e for e in self._edges if e.kind in merge_kinds))
        succ = {}
        for e in self._edges:
            if e.kind is EdgeKind.ARROW:
                cu, cv = comp[e.u], comp[e.v]
                if cu == cv:
                    return True
                succ.setdefault(cu, set()).add(cv)
        return _has_directed_cycle(succ)

    def has_directed_cycle(self) -> bool:
        succ = {}
        for e in self._edges:
            if e.kind is EdgeKind.ARROW:
                succ.setdefault(e.u, set()).add(e.v)
        return _has_directed_cycle(succ)

    # --- derived graphs ---

    def induced_subgraph(self, keep: Iterable) -> "Graph":
        keep = set(keep)
        self._require_all(keep)
        return Graph(keep, (e for e in self._edges if e.u in keep and e.v in keep))

    def add_edges(self, extra: Iterable[Edge]) -> "Graph":
        return Graph(self._nodes, self._edges.union(extra))

    # --- dunder ---

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self._nodes == other._nodes and self._edges == other._edges

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self._nodes, self._edges))
        return self._hash

    def __repr__(self):
        return f"Graph(nodes={list(self._nodes)!r}, edges={self.sorted_edges()!r})"


def _components(nodes, edges) -> dict:
    """Union-find over the given undirected view; returns node -> root."""
    parent = {v: v for v in nodes}

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for e in edges:
        ru, rv = find(e.u), find(e.v)
        if ru != rv:
            parent[ru] = rv
    return {v: find(v) for v in nodes}


def _has_directed_cycle(succ: dict) -> bool:
    WHITE, GRAY, BLACK = 0, 1, 2
    color = {}
    for start in succ:
        if color.get(start, WHITE) != WHITE:
            continue
        stack = [(start, iter(succ.get(start, ())))]
        color[start] = GRAY
        while stack:
            v, it = stack[-1]
            advanced = False
            for w in it:
                c = color.get(w, WHITE)
                if c == GRAY:
                    return True
                if c == WHITE:
                    color[w] = GRAY
                    stack.append((w, iter(succ.get(w, ()))))
                    advanced = True
                    break
            if not advanced:
                color[v] = BLACK
                stack.pop()
    return False


# --- walks and sections ---


@dataclass(frozen=True)
class Walk:
    """An alternating node/edge sequence; may repeat nodes and edges.

    Edges are carried explicitly so walks stay unambiguous in graphs with
    multiple edges between the same pair of nodes.
    """

    nodes: tuple
    edges: tuple

    def __post_init__(self):
        nodes, edges = tuple(self.nodes), tuple(self.edges)
        object.__setattr__(self, "nodes", nodes)
        object.__setattr__(self, "edges", edges)
        if len(nodes) != len(edges) + 1 or not nodes:
            raise MalformedWalk("a walk has one more node than edges")
        for k, e in enumerate(edges):
            if e.endpoints() != frozenset((nodes[k], nodes[k + 1])):
                raise MalformedWalk(f"edge {e} does not join {nodes[k]!r} and {nodes[k + 1]!r}")

    @property
    def is_path(self) -> bool:
        return len(set(self.nodes)) == len(self.nodes)

    @property
    def endpoints(self) -> tuple:
        return (self.nodes[0], self.nodes[-1])

    def reverse(self) -> "Walk":
        return Walk(tuple(reversed(self.nodes)), tuple(reversed(self.edges)))

    def __len__(self):
        return len(self.edges)

    def in_graph(self, g: Graph) -> bool:
        return all(v in g._incident for v in self.nodes) and all(e in g.edges for e in self.edges)


@dataclass(frozen=True)
class Section:
    """A maximal run of line edges on a walk (possibly a single node).

    ``left``/``right`` are the marks presented by the non-line edges
    flanking the section, or None at a walk endpoint.
    """

    nodes: tuple
    start: int
    stop: int
    left: Optional[Mark]
    right: Optional[Mark]
    is_collider: bool

    @property
    def is_endpoint(self) -> bool:
        return self.left is None or self.right is None


def is_collider_pair(left: Optional[Mark], right: Optional[Mark]) -> bool:
    """Collider rule for the two marks flanking a section.

    A section is a collider iff both flanks carry an arrowhead or a
    dotted end, but not two dotted ends; endpoint sections (a None
    flank) are never colliders.
    """
    heady = (Mark.HEAD, Mark.DOTTED_END)
    if left is None or right is None:
        return False
    if left not in heady or right not in heady:
        return False
    return not (left is Mark.DOTTED_END and right is Mark.DOTTED_END)


def sections_of(walk: Walk) -> tuple:
    """The unique section decomposition of a walk, with collider flags."""
    nodes, edges = walk.nodes, walk.edges
    sections = []
    start = 0
    k = 0
    while True:
        while k < len(edges) and edges[k].kind is EdgeKind.LINE:
            k += 1
        left = edges[start - 1].mark_at(nodes[start]) if start > 0 else None
        right = edges[k].mark_at(nodes[k]) if k < len(edges) else None
        sections.append(
            Section(
                nodes=nodes[start : k + 1],
                start=start,
                stop=k,
                left=left,
                right=right,
                is_collider=is_collider_pair(left, right),
            )
        )
        if k == len(edges):
            return tuple(sections)
        start = k = k + 1
