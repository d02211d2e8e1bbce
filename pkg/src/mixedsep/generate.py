"""Seeded random graphs per target class, and exhaustive enumeration.

Generation aims at coverage, not uniform sampling: chain-like classes
are built from a random block partition with a topological block order,
cycle-constrained classes reject edges that would close a forbidden
cycle, and predicate-constrained classes filter candidate edges by the
defining condition.  Every result is checked against the classifier
before it is returned.
"""

from __future__ import annotations

import itertools
import random
import string
from dataclasses import dataclass
from typing import Iterable, Iterator

from .classify import classify
from .errors import SizeLimit, UnsatisfiableSpec
from .graph import Edge, EdgeKind, Graph, _components

TARGET_CLASSES = (
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
    "any",
)

ENUMERATION_MAX_NODES = 4


@dataclass(frozen=True)
class GenSpec:
    """A deterministic random-graph request."""

    n: int
    cls: str = "any"
    density: float = 0.25
    seed: int = 0

    def __post_init__(self):
        if self.n < 1:
            raise UnsatisfiableSpec("need at least one node")
        if not 0.0 <= self.density <= 1.0:
            raise UnsatisfiableSpec(f"density {self.density} outside [0, 1]")
        if self.cls not in TARGET_CLASSES:
            raise UnsatisfiableSpec(f"unknown target class {self.cls!r}")


def node_labels(n: int) -> tuple:
    if n <= 26:
        return tuple(string.ascii_lowercase[:n])
    return tuple(f"v{w:03d}" for w in range(n))


def _random_blocks(rng: random.Random, labels) -> list:
    """Partition labels into small blocks in a random topological order."""
    order = list(labels)
    rng.shuffle(order)
    blocks = []
    k = 0
    while k < len(order):
        size = min(len(order) - k, 1 + int(rng.random() * 3))
        blocks.append(order[k : k + size])
        k += size
    return blocks


def _maybe(rng, density):
    return rng.random() < density


def _chain_like(rng, labels, density, block_kinds, *, arrow_target_ok=None) -> list:
    """Edges of a chain graph: pure-kind blocks plus forward arrows."""
    blocks = _random_blocks(rng, labels)
    edges = []
    kind_of_block = [rng.choice(block_kinds) for _ in blocks]
    for block, kind in zip(blocks, kind_of_block):
        for u, v in itertools.combinations(block, 2):
            if _maybe(rng, max(density, 0.5)):
                edges.append(Edge(u, v, kind))
    line_touched = {e.u for e in edges if e.kind is EdgeKind.LINE} | {
        e.v for e in edges if e.kind is EdgeKind.LINE
    }
    for s in range(len(blocks)):
        for t in range(s + 1, len(blocks)):
            for u in blocks[s]:
                for v in blocks[t]:
                    if arrow_target_ok is not None and not arrow_target_ok(v, line_touched):
                        continue
                    if _maybe(rng, density):
                        edges.append(Edge(u, v, EdgeKind.ARROW))
    return edges


class _CycleGuard:
    """Incremental check that candidate arrows keep the contraction of
    the symmetric edges acyclic (no internal arrows, no quotient cycle)."""

    def __init__(self, nodes, merged_edges):
        self.root = _components(nodes, merged_edges)
        self.succ = {}

    def admits(self, u, v) -> bool:
        cu, cv = self.root[u], self.root[v]
        if cu == cv:
            return False
        seen = {cv}
        stack = [cv]
        while stack:
            c = stack.pop()
            if c == cu:
                return False
            for nxt in self.succ.get(c, ()):
                if nxt not in seen:
                    seen.add(nxt)
                    stack.append(nxt)
        return True

    def add(self, u, v):
        self.succ.setdefault(self.root[u], set()).add(self.root[v])


def _constrained_arrows(rng, labels, density, guard: _CycleGuard, *, target_ok=None) -> list:
    pairs = [(u, v) for u in labels for v in labels if u != v]
    rng.shuffle(pairs)
    edges = []
    for u, v in pairs:
        if target_ok is not None and not target_ok(v):
            continue
        if _maybe(rng, density) and guard.admits(u, v):
            guard.add(u, v)
            edges.append(Edge(u, v, EdgeKind.ARROW))
    return edges


def _symmetric_edges(rng, labels, density, kind, *, pair_ok=None) -> list:
    edges = []
    for u, v in itertools.combinations(labels, 2):
        if pair_ok is not None and not pair_ok(u, v):
            continue
        if _maybe(rng, density):
            edges.append(Edge(u, v, kind))
    return edges


def _gen_basic(rng, labels, density, kind):
    return _symmetric_edges(rng, labels, density, kind)


def _gen_dag(rng, labels, density):
    order = list(labels)
    rng.shuffle(order)
    edges = []
    for s in range(len(order)):
        for t in range(s + 1, len(order)):
            if _maybe(rng, density):
                edges.append(Edge(order[s], order[t], EdgeKind.ARROW))
    return edges


def _gen_cmg(rng, labels, density, *, forbid_heads_at_lines=False):
    lines = _symmetric_edges(rng, labels, density, EdgeKind.LINE)
    guard = _CycleGuard(labels, lines)
    line_touched = {e.u for e in lines} | {e.v for e in lines}
    target_ok = (lambda v: v not in line_touched) if forbid_heads_at_lines else None
    arrows = _constrained_arrows(rng, labels, density, guard, target_ok=target_ok)
    return lines, arrows, line_touched


def _gen_mamp(rng, labels, density):
    dotted = _symmetric_edges(rng, labels, density, EdgeKind.DOTTED)
    droot = _components(labels, dotted)
    arcs = _symmetric_edges(
        rng, labels, density, EdgeKind.ARC, pair_ok=lambda u, v: droot[u] != droot[v]
    )
    guard = _CycleGuard(labels, dotted + arcs)
    arrows = _constrained_arrows(rng, labels, density, guard)
    # dotted-neighbourhood closure at spouse-holding nodes
    edges = set(dotted + arcs + arrows)
    changed = True
    while changed:
        changed = False
        g = Graph(labels, edges)
        for j in labels:
            if g.sp(j):
                for u, v in itertools.combinations(sorted(g.pt(j)), 2):
                    e = Edge(u, v, EdgeKind.DOTTED)
                    if e not in edges:
                        edges.add(e)
                        changed = True
    return list(edges)


def _gen_any(rng, labels, density):
    edges = []
    for u, v in itertools.combinations(labels, 2):
        for kind in (EdgeKind.LINE, EdgeKind.ARC, EdgeKind.DOTTED):
            if _maybe(rng, density):
                edges.append(Edge(u, v, kind))
        if _maybe(rng, density):
            edges.append(Edge(u, v, EdgeKind.ARROW))
        if _maybe(rng, density):
            edges.append(Edge(v, u, EdgeKind.ARROW))
    return edges


def random_graph(spec: GenSpec) -> Graph:
    """A deterministic pseudo-random graph whose classification includes
    the target class."""
    rng = random.Random(spec.seed)
    labels = node_labels(spec.n)
    density = spec.density
    cls = spec.cls

    if cls == "ug":
        edges = _gen_basic(rng, labels, density, EdgeKind.LINE)
    elif cls == "bg":
        edges = _gen_basic(rng, labels, density, EdgeKind.ARC)
    elif cls == "dg":
        edges = _gen_basic(rng, labels, density, EdgeKind.DOTTED)
    elif cls == "dag":
        edges = _gen_dag(rng, labels, density)
    elif cls == "ucg":
        edges = _chain_like(rng, labels, density, (EdgeKind.LINE,))
    elif cls == "bcg":
        edges = _chain_like(rng, labels, density, (EdgeKind.ARC,))
    elif cls == "dcg":
        edges = _chain_like(rng, labels, density, (EdgeKind.DOTTED,))
    elif cls == "chain_graph":
        edges = _chain_like(rng, labels, density, (EdgeKind.LINE, EdgeKind.ARC, EdgeKind.DOTTED))
    elif cls == "regression_graph":
        edges = _chain_like(
            rng,
            labels,
            density,
            (EdgeKind.LINE, EdgeKind.ARC),
            arrow_target_ok=lambda v, line_touched: v not in line_touched,
        )
    elif cls == "cmg":
        lines, arrows, _ = _gen_cmg(rng, labels, density)
        arcs = _symmetric_edges(rng, labels, density, EdgeKind.ARC)
        edges = lines + arrows + arcs
    elif cls == "sg":
        lines, arrows, line_touched = _gen_cmg(rng, labels, density, forbid_heads_at_lines=True)
        arcs = _symmetric_edges(
            rng,
            labels,
            density,
            EdgeKind.ARC,
            pair_ok=lambda u, v: u not in line_touched and v not in line_touched,
        )
        edges = lines + arrows + arcs
    elif cls == "ag":
        lines, arrows, line_touched = _gen_cmg(rng, labels, density, forbid_heads_at_lines=True)
        partial = Graph(labels, lines + arrows)
        arcs = _symmetric_edges(
            rng,
            labels,
            density,
            EdgeKind.ARC,
            pair_ok=lambda u, v: u not in line_touched
            and v not in line_touched
            and u not in partial.ancestors((v,))
            and v not in partial.ancestors((u,)),
        )
        edges = lines + arrows + arcs
    elif cls == "ang":
        lines, arrows, _ = _gen_cmg(rng, labels, density)
        partial = Graph(labels, lines + arrows)
        arcs = _symmetric_edges(
            rng,
            labels,
            density,
            EdgeKind.ARC,
            pair_ok=lambda u, v: u not in partial.anteriors((v,))
            and v not in partial.anteriors((u,)),
        )
        edges = lines + arrows + arcs
    elif cls == "admg":
        edges = _gen_dag(rng, labels, density) + _symmetric_edges(
            rng, labels, density, EdgeKind.ARC
        )
    elif cls == "aadmg":
        edges = _gen_dag(rng, labels, density) + _symmetric_edges(
            rng, labels, density, EdgeKind.DOTTED
        )
    elif cls == "mamp":
        edges = _gen_mamp(rng, labels, density)
    else:
        edges = _gen_any(rng, labels, density)

    g = Graph(labels, edges)
    if cls != "any" and not classify(g)[cls]:
        raise RuntimeError(f"generator produced a graph outside class {cls!r}")
    return g


_SLOT_KINDS = (EdgeKind.LINE, EdgeKind.ARROW, EdgeKind.ARC, EdgeKind.DOTTED)


def enumerate_graphs(n: int, kinds: Iterable[EdgeKind] = _SLOT_KINDS) -> Iterator[Graph]:
    """Every graph over n labelled nodes with edges drawn from `kinds`:
    per node pair each symmetric kind is present or absent, and arrows
    appear independently in both orientations."""
    if n > ENUMERATION_MAX_NODES:
        raise SizeLimit(f"enumeration is limited to {ENUMERATION_MAX_NODES} nodes")
    labels = node_labels(n)
    kinds = [k for k in _SLOT_KINDS if k in set(kinds)]
    slots = []
    for u, v in itertools.combinations(labels, 2):
        for kind in kinds:
            slots.append(Edge(u, v, kind))
            if kind is EdgeKind.ARROW:
                slots.append(Edge(v, u, kind))
    for mask in range(1 << len(slots)):
        yield Graph(labels, (slots[k] for k in range(len(slots)) if mask >> k & 1))
