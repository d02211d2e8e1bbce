"""Walk-based separation and its independent oracles.

A walk is connecting given C when every collider section meets C and
every non-collider section avoids C; two sets are separated by C when
no connecting walk joins them.  The engine decides this by breadth-first
search over a finite state space: (current node, mark presented by the
edge that entered the current section, whether the section has touched
C so far).  A minimal connecting walk never repeats such a state, so
reachability is exact.

The module also carries deliberately independent deciders used by the
differential test suites: a literal walk enumerator, path-based
m-separation for summary graphs, path-based z-separation for marginal
AMP graphs, moralization d-separation for DAGs, and vertex-cut
separation for undirected graphs.
"""

from __future__ import annotations

from collections import deque
from typing import Iterable, Optional

from .classify import classify
from .errors import ClassViolation, InvalidQuery, SizeLimit
from .graph import EdgeKind, Graph, Mark, Walk, is_collider_pair, sections_of

BRUTE_FORCE_MAX_NODES = 6

_HEADY = (Mark.HEAD, Mark.DOTTED_END)


def _closes_as_collider(entry: Optional[Mark], out_mark: Mark) -> bool:
    """Collider status of the section being left, from its entry mark
    (None at the walk start, which forces non-collider) and the mark the
    leaving edge presents."""
    if entry is None:
        return False
    return is_collider_pair(entry, out_mark)


def _check_pair_query(g: Graph, i, j, context: frozenset):
    g._require(i)
    g._require(j)
    g._require_all(context)
    if i == j:
        raise InvalidQuery("endpoints must differ")
    if i in context or j in context:
        raise InvalidQuery("endpoints may not lie in the conditioning set")


def connecting_walk(g: Graph, i, j, context: Iterable = ()) -> Optional[Walk]:
    """A connecting walk between i and j given the context, or None.

    The returned witness passes the literal section-based connecting
    test.  Breadth-first, so the witness has minimal edge count among
    state-minimal walks.
    """
    context = frozenset(context)
    _check_pair_query(g, i, j, context)
    start = (i, None, False)
    parents = {start: None}
    queue = deque((start,))
    while queue:
        state = queue.popleft()
        v, entry, touched = state
        for e in g.edges_at(v):
            w = e.other(v)
            if e.kind is EdgeKind.LINE:
                nxt = (w, entry, touched or w in context)
            else:
                if _closes_as_collider(entry, e.mark_at(v)) != touched:
                    continue
                nxt = (w, e.mark_at(w), w in context)
            if nxt in parents:
                continue
            parents[nxt] = (state, e)
            if w == j and not nxt[2]:
                rev_nodes = [w]
                rev_edges = []
                cur = nxt
                while parents[cur] is not None:
                    prev, edge = parents[cur]
                    rev_edges.append(edge)
                    rev_nodes.append(prev[0])
                    cur = prev
                return Walk(tuple(reversed(rev_nodes)), tuple(reversed(rev_edges)))
            queue.append(nxt)
    return None


def connecting_walk_exists(g: Graph, i, j, context: Iterable = ()) -> bool:
    return connecting_walk(g, i, j, context) is not None


def separated(g: Graph, lhs: Iterable, rhs: Iterable, context: Iterable = ()) -> bool:
    """Whether the node sets lhs and rhs are separated given the context.

    Empty sides are vacuously separated; by composition the answer is
    the conjunction of the pairwise queries.
    """
    lhs, rhs, context = frozenset(lhs), frozenset(rhs), frozenset(context)
    g._require_all(lhs | rhs | context)
    if lhs & rhs or lhs & context or rhs & context:
        raise InvalidQuery("query sets must be pairwise disjoint")
    return all(not connecting_walk_exists(g, i, j, context) for i in lhs for j in rhs)


def is_connecting_walk(walk: Walk, context: Iterable) -> bool:
    """The literal connecting test: collider sections meet the context,
    non-collider sections avoid it."""
    context = frozenset(context)
    for section in sections_of(walk):
        hits = any(v in context for v in section.nodes)
        if section.is_collider != hits:
            return False
    return True


def brute_force_connected(
    g: Graph, i, j, context: Iterable = (), max_nodes: int = BRUTE_FORCE_MAX_NODES
) -> bool:
    """Exhaustive oracle: depth-first enumeration of walks, checking the
    literal connecting test on every complete walk that ends at j.

    Two prunings keep the enumeration finite and sound.  A prefix whose
    engine-state sequence repeats a state is dropped, because a minimal
    connecting walk never repeats one.  A prefix whose latest *closed*
    section (recomputed positionally from the prefix walk) already
    violates the connecting rule is dropped, because a section's verdict
    is final once the walk leaves it.  Intended for tiny graphs.
    """
    if g.num_nodes > max_nodes:
        raise SizeLimit(f"brute force is limited to {max_nodes} nodes")
    context = frozenset(context)
    _check_pair_query(g, i, j, context)

    nodes_seq = [i]
    edges_seq = []
    seen = {(i, None, False)}

    def closed_section_ok() -> bool:
        secs = sections_of(Walk(tuple(nodes_seq), tuple(edges_seq)))
        if len(secs) < 2:
            return True
        just_closed = secs[-2]
        return just_closed.is_collider == any(v in context for v in just_closed.nodes)

    def extend(state) -> bool:
        v, entry, touched = state
        for e in g.edges_at(v):
            w = e.other(v)
            if e.kind is EdgeKind.LINE:
                nxt = (w, entry, touched or w in context)
            else:
                nxt = (w, e.mark_at(w), w in context)
            if nxt in seen:
                continue
            seen.add(nxt)
            nodes_seq.append(w)
            edges_seq.append(e)
            viable = e.kind is EdgeKind.LINE or closed_section_ok()
            if viable:
                if w == j and is_connecting_walk(
                    Walk(tuple(nodes_seq), tuple(edges_seq)), context
                ):
                    return True
                if extend(nxt):
                    return True
            seen.discard(nxt)
            nodes_seq.pop()
            edges_seq.pop()
        return False

    return extend((i, None, False))


# --- legacy criteria, each an independent implementation ---


def _simple_paths_satisfy(g: Graph, i, j, test) -> bool:
    """True iff some simple path from i to j passes `test(nodes, edges)`.

    Paths are enumerated over edge objects, so parallel edges of
    different kinds count as different paths.
    """
    path_nodes = [i]
    path_edges = []
    on_path = {i}

    def extend(v) -> bool:
        for e in g.edges_at(v):
            w = e.other(v)
            if w in on_path:
                continue
            path_nodes.append(w)
            path_edges.append(e)
            on_path.add(w)
            if w == j:
                if test(tuple(path_nodes), tuple(path_edges)):
                    return True
            elif extend(w):
                return True
            on_path.discard(w)
            path_nodes.pop()
            path_edges.pop()
        return False

    return extend(i)


def m_separated(g: Graph, i, j, context: Iterable = ()) -> bool:
    """Path-based m-separation for summary graphs: colliders on a
    connecting path must lie in the reflexive ancestors of the context,
    non-colliders outside the context."""
    if not classify(g).sg:
        raise ClassViolation("m-separation is defined on summary graphs")
    context = frozenset(context)
    _check_pair_query(g, i, j, context)
    anc_context = g.reflexive_ancestors(context)

    def m_connecting(nodes, edges) -> bool:
        for t in range(1, len(nodes) - 1):
            k = nodes[t]
            collider = (
                edges[t - 1].mark_at(k) is Mark.HEAD and edges[t].mark_at(k) is Mark.HEAD
            )
            if collider:
                if k not in anc_context:
                    return False
            elif k in context:
                return False
        return True

    return not _simple_paths_satisfy(g, i, j, m_connecting)


def z_separated(g: Graph, i, j, context: Iterable = ()) -> bool:
    """Path-based z-separation for marginal AMP graphs.

    Colliders on a connecting path must lie in the reflexive ancestors
    of the context; a non-collider k may lie in the context only when it
    sits between two dotted edges and has a spouse or a parent outside
    the context.
    """
    if not classify(g).mamp:
        raise ClassViolation("z-separation is defined on marginal AMP graphs")
    context = frozenset(context)
    _check_pair_query(g, i, j, context)
    anc_context = g.reflexive_ancestors(context)

    def z_connecting(nodes, edges) -> bool:
        for t in range(1, len(nodes) - 1):
            k = nodes[t]
            m1, m2 = edges[t - 1].mark_at(k), edges[t].mark_at(k)
            if is_collider_pair(m1, m2):
                if k not in anc_context:
                    return False
            elif k in context:
                both_dotted = m1 is Mark.DOTTED_END and m2 is Mark.DOTTED_END
                if not (both_dotted and (g.sp(k) or (g.pa(k) - context))):
                    return False
        return True

    return not _simple_paths_satisfy(g, i, j, z_connecting)


def dag_d_separated(g: Graph, i, j, context: Iterable = ()) -> bool:
    """Classical moralization criterion for DAGs: i and j are separated
    by C iff they are disconnected after restricting to the reflexive
    ancestors of {i, j} plus C, marrying parents, dropping directions,
    and deleting C."""
    if not classify(g).dag:
        raise ClassViolation("d-separation via moralization is defined on DAGs")
    context = frozenset(context)
    _check_pair_query(g, i, j, context)
    anc = g.reflexive_ancestors({i, j} | context)
    moral = {v: set() for v in anc}
    for v in anc:
        parents = sorted(g.pa(v))
        for p in parents:
            moral[p].add(v)
            moral[v].add(p)
        for a in range(len(parents)):
            for b in range(a + 1, len(parents)):
                moral[parents[a]].add(parents[b])
                moral[parents[b]].add(parents[a])
    return not _reachable_avoiding(moral, i, j, context)


def ug_separated(g: Graph, i, j, context: Iterable = ()) -> bool:
    """Vertex-cut separation in an undirected (line) graph."""
    if not classify(g).ug:
        raise ClassViolation("vertex-cut separation is defined on undirected graphs")
    context = frozenset(context)
    _check_pair_query(g, i, j, context)
    adjacency = {v: set(g.ne(v)) for v in g.nodes}
    return not _reachable_avoiding(adjacency, i, j, context)


def _reachable_avoiding(adjacency: dict, src, dst, blocked: frozenset) -> bool:
    seen = {src}
    stack = [src]
    while stack:
        v = stack.pop()
        for w in adjacency.get(v, ()):
            if w == dst:
                return True
            if w not in seen and w not in blocked:
                seen.add(w)
                stack.append(w)
    return False
