"""Primitive inducing walks, maximality, and maximalization of chain
mixed graphs.

A primitive inducing walk between i and j is an ij edge, or a walk
whose inner sections are all colliders, whose endpoint sections are
single nodes, and whose inner nodes are all reflexive anteriors of
{i, j}.  Such a walk certifies that i and j cannot be separated by any
set, so a CMG is maximal exactly when no non-adjacent pair has one; a
non-maximal CMG becomes maximal by adding, per walk, the edge with the
same endpoint arrowheads.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass
from typing import Optional

from .classify import classify
from .errors import ClassViolation, InvalidQuery
from .graph import Edge, EdgeKind, Graph, Mark, Walk
from .separation import connecting_walk_exists


@dataclass(frozen=True)
class InducingWitness:
    """A primitive inducing walk plus the arrowhead presence at its two
    endpoint sections (which determines the edge maximalization adds)."""

    i: object
    j: object
    walk: Walk
    head_at_i: bool
    head_at_j: bool


def _require_cmg(g: Graph, what: str):
    if not classify(g).cmg:
        raise ClassViolation(f"{what} is defined for chain mixed graphs")


def _inner_reach(g: Graph, i, j, head_at_i: bool):
    """Nodes reachable as inner nodes of a candidate inducing walk that
    starts at i with the given endpoint-arrowhead flavour.

    Start edges present an arrowhead into the first inner section (an
    arc when head_at_i, an arrow out of i otherwise); inner moves are
    lines (within a section) and arcs (between collider sections), all
    restricted to reflexive anteriors of {i, j}.
    """
    allowed = g.reflexive_anteriors((i, j))
    parents = {}
    queue = deque()
    for e in g.edges_at(i):
        if head_at_i:
            if e.kind is not EdgeKind.ARC:
                continue
        else:
            if not (e.kind is EdgeKind.ARROW and e.u == i):
                continue
        x = e.other(i)
        if x in allowed and x not in parents:
            parents[x] = (None, e)
            queue.append(x)
    while queue:
        v = queue.popleft()
        for e in g.edges_at(v):
            if e.kind not in (EdgeKind.LINE, EdgeKind.ARC):
                continue
            w = e.other(v)
            if w in allowed and w not in parents:
                parents[w] = (v, e)
                queue.append(w)
    return parents


def _closing_edges(g: Graph, j):
    """Edges that may end an inducing walk at j, keyed by whether they
    put an arrowhead at j: arcs do, arrows leaving j do not."""
    for e in g.edges_at(j):
        if e.kind is EdgeKind.ARC:
            yield e, True
        elif e.kind is EdgeKind.ARROW and e.u == j:
            yield e, False


def _walk_from(parents, i, j, x, start_is_first: bool) -> Walk:
    rev_nodes = [x]
    rev_edges = []
    cur = x
    while True:
        prev, edge = parents[cur]
        rev_edges.append(edge)
        if prev is None:
            break
        rev_nodes.append(prev)
        cur = prev
    nodes = (i, *reversed(rev_nodes))
    edges = tuple(reversed(rev_edges))
    return Walk(nodes, edges)


def inducing_endpoint_flavours(g: Graph, i, j) -> frozenset:
    """All (head_at_i, head_at_j) pairs realized by primitive inducing
    walks between non-adjacent i and j."""
    flavours = set()
    for head_i in (False, True):
        parents = _inner_reach(g, i, j, head_i)
        if not parents:
            continue
        for e, head_j in _closing_edges(g, j):
            if e.other(j) in parents:
                flavours.add((head_i, head_j))
    return frozenset(flavours)


def find_primitive_inducing_walk(g: Graph, i, j) -> Optional[InducingWitness]:
    """A primitive inducing walk between i and j, or None.

    An existing ij edge is itself such a walk and is returned directly;
    otherwise the witness is a shortest walk found by the restricted
    reachability search.
    """
    _require_cmg(g, "primitive-inducing-walk search")
    g._require(i)
    g._require(j)
    if i == j:
        raise InvalidQuery("endpoints must differ")
    between = g.edges_between(i, j)
    if between:
        e = min(between, key=Edge.sort_key)
        walk = Walk((i, j), (e,))
        return InducingWitness(i, j, walk, e.mark_at(i) is Mark.HEAD, e.mark_at(j) is Mark.HEAD)

    best = None
    for head_i in (False, True):
        parents = _inner_reach(g, i, j, head_i)
        for e, head_j in _closing_edges(g, j):
            x = e.other(j)
            if x not in parents:
                continue
            inner = _walk_from(parents, i, j, x, True)
            walk = Walk(inner.nodes + (j,), inner.edges + (e,))
            key = (len(walk), head_i, head_j)
            if best is None or key < best[0]:
                best = (key, InducingWitness(i, j, walk, head_i, head_j))
    return None if best is None else best[1]


def non_maximal_pair(g: Graph) -> Optional[tuple]:
    """The first non-adjacent pair joined by a primitive inducing walk.

    Both maximality characterizations are evaluated per pair: the
    inducing-walk search and separability by the pair's anterior set.
    They provably agree; a mismatch means the engine is broken, so it
    raises rather than returning a guess.
    """
    _require_cmg(g, "maximality checking")
    for i, j in itertools.combinations(g.nodes, 2):
        if g.adjacent(i, j):
            continue
        has_walk = find_primitive_inducing_walk(g, i, j) is not None
        sep_by_anteriors = not connecting_walk_exists(g, i, j, g.anteriors((i, j)))
        if has_walk == sep_by_anteriors:
            raise RuntimeError(
                f"maximality characterizations disagree at ({i!r},{j!r}); "
                "this is an internal inconsistency"
            )
        if has_walk:
            return (i, j)
    return None


def is_maximal(g: Graph) -> bool:
    """Whether adding any edge between non-adjacent nodes would change
    the induced independence model."""
    return non_maximal_pair(g) is None


def _edge_for_flavour(i, j, head_i: bool, head_j: bool) -> Edge:
    if head_i and head_j:
        return Edge(i, j, EdgeKind.ARC)
    if head_j:
        return Edge(i, j, EdgeKind.ARROW)
    if head_i:
        return Edge(j, i, EdgeKind.ARROW)
    # a walk with no endpoint arrowheads can only be an existing line
    raise RuntimeError("no-arrowhead inducing walk between non-adjacent nodes")


def maximalize(g: Graph) -> Graph:
    """Close every primitive inducing walk between non-adjacent nodes by
    adding the endpoint-identical edge, repeating until maximal.

    The result is a maximal CMG over the same nodes, a supergraph of the
    input, and induces the same independence model.
    """
    _require_cmg(g, "maximalization")
    current = g
    while True:
        additions = []
        for i, j in itertools.combinations(current.nodes, 2):
            if current.adjacent(i, j):
                continue
            for head_i, head_j in sorted(inducing_endpoint_flavours(current, i, j)):
                additions.append(_edge_for_flavour(i, j, head_i, head_j))
        if not additions:
            return current
        current = current.add_edges(additions)


def separator_for(g: Graph, i, j) -> Optional[frozenset]:
    """The anterior set ant({i,j}) when it separates the non-adjacent
    pair, None otherwise; never None in a maximal CMG."""
    _require_cmg(g, "separator lookup")
    g._require(i)
    g._require(j)
    if i == j:
        raise InvalidQuery("endpoints must differ")
    if g.adjacent(i, j):
        raise InvalidQuery("adjacent nodes have no separator")
    anteriors = g.anteriors((i, j))
    if connecting_walk_exists(g, i, j, anteriors):
        return None
    return anteriors
