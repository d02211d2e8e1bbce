"""Independence models: triples <A,B|C>, the compositional-graphoid
axioms, closure fixpoints, marginalization, and graph-induced models.

Statements are stored canonically: each node of the ground set maps to
one of the roles in-A / in-B / in-C / out, encoded as three bitmasks,
and symmetry is resolved by ordering (A, B) so the state space over n
nodes is exactly 4^n.  Trivial statements (empty A or B) are implicit:
membership queries answer True for them, and they are never stored.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Optional

from .classify import classify
from .errors import ClassViolation, InvalidQuery, NodeNotFound, SizeLimit
from .graph import Graph
from .separation import connecting_walk_exists

GLOBAL_MODEL_MAX_NODES = 7
CLOSURE_MAX_NODES = 6


class Axiom(Enum):
    SYMMETRY = "s1"
    DECOMPOSITION = "s2"
    WEAK_UNION = "s3"
    CONTRACTION = "s4"
    INTERSECTION = "s5"
    COMPOSITION = "s6"

    @classmethod
    def parse(cls, token: str) -> "Axiom":
        token = token.strip().lower()
        for ax in cls:
            if token in (ax.value, ax.name.lower().replace("_", "-"), ax.name.lower()):
                return ax
        raise InvalidQuery(f"unknown axiom {token!r}")


ALL_AXIOMS = tuple(Axiom)


def _iter_bits(mask: int):
    while mask:
        low = mask & -mask
        yield low
        mask ^= low


class IndependenceModel:
    """A finite set of independence statements over a fixed ground set."""

    __slots__ = ("_ground", "_bit", "_triples")

    def __init__(self, ground: Iterable, mask_triples: Iterable = ()):
        self._ground = tuple(sorted(set(ground)))
        self._bit = {v: 1 << k for k, v in enumerate(self._ground)}
        self._triples = frozenset(mask_triples)

    @classmethod
    def from_statements(cls, ground: Iterable, statements: Iterable = ()) -> "IndependenceModel":
        model = cls(ground)
        masks = set()
        for a, b, c in statements:
            t = model._normalize(a, b, c)
            if t is not None:
                masks.add(t)
        return cls(model._ground, masks)

    # --- encoding ---

    def _mask(self, nodes) -> int:
        m = 0
        for v in nodes:
            bit = self._bit.get(v)
            if bit is None:
                raise NodeNotFound(f"{v!r} is not in the ground set")
            m |= bit
        return m

    def _unmask(self, mask: int) -> frozenset:
        return frozenset(self._ground[bit.bit_length() - 1] for bit in _iter_bits(mask))

    def _normalize(self, a, b, c) -> Optional[tuple]:
        am, bm, cm = self._mask(a), self._mask(b), self._mask(c)
        if am & bm or am & cm or bm & cm:
            raise InvalidQuery("statement parts must be disjoint")
        if not am or not bm:
            return None
        return (am, bm, cm) if am < bm else (bm, am, cm)

    # --- queries ---

    @property
    def ground(self) -> tuple:
        return self._ground

    @property
    def mask_triples(self) -> frozenset:
        return self._triples

    def contains(self, a, b, c=()) -> bool:
        t = self._normalize(a, b, c)
        return True if t is None else t in self._triples

    def __contains__(self, statement) -> bool:
        a, b, c = statement
        return self.contains(a, b, c)

    def statements(self) -> list:
        """All stored (canonical, non-trivial) statements, sorted."""
        decoded = [
            (self._unmask(a), self._unmask(b), self._unmask(c)) for a, b, c in self._triples
        ]
        decoded.sort(key=lambda t: (sorted(t[0]), sorted(t[1]), sorted(t[2])))
        return decoded

    def __len__(self):
        return len(self._triples)

    def __eq__(self, other):
        if not isinstance(other, IndependenceModel):
            return NotImplemented
        return self._ground == other._ground and self._triples == other._triples

    def __hash__(self):
        return hash((self._ground, self._triples))

    def __repr__(self):
        return f"IndependenceModel(ground={list(self._ground)!r}, statements={len(self)})"

    # --- operations ---

    def marginalize(self, dropped: Iterable) -> "IndependenceModel":
        """Keep the statements that avoid `dropped`; the result is a model
        over the remaining ground set."""
        dm = self._mask(dropped)
        keep = [v for v in self._ground if not (self._bit[v] & dm)]
        remap = {}
        for new_pos, v in enumerate(keep):
            remap[self._bit[v]] = 1 << new_pos

        def translate(mask):
            out = 0
            for bit in _iter_bits(mask):
                out |= remap[bit]
            return out

        masks = {
            (translate(a), translate(b), translate(c))
            for a, b, c in self._triples
            if not ((a | b | c) & dm)
        }
        return IndependenceModel(keep, masks)


@dataclass(frozen=True)
class AxiomViolation:
    """One failed instance of an axiom: the instantiating sets and the
    statement whose membership breaks the implication."""

    axiom: Axiom
    a: frozenset
    b: frozenset
    c: frozenset
    d: frozenset
    missing: tuple

    def describe(self) -> str:
        def fmt(s):
            return "{" + ",".join(str(v) for v in sorted(s)) + "}"

        ma, mb, mc = self.missing
        return (
            f"{self.axiom.name} fails at A={fmt(self.a)} B={fmt(self.b)} "
            f"C={fmt(self.c)} D={fmt(self.d)}: missing <{fmt(ma)},{fmt(mb)}|{fmt(mc)}>"
        )


def _role_assignments(ground, roles: int):
    n = len(ground)
    for combo in itertools.product(range(roles), repeat=n):
        masks = [0] * roles
        for pos, role in enumerate(combo):
            masks[role] |= 1 << pos
        yield masks


def check_axiom(model: IndependenceModel, axiom: Axiom) -> list:
    """All violations of one axiom, quantified over disjoint A, B, C, D
    drawn from the ground set.  Empty list means the axiom holds."""
    has = model._triples.__contains__

    def member(am, bm, cm):
        if not am or not bm:
            return True
        return has((am, bm, cm) if am < bm else (bm, am, cm))

    out = []
    ground = model._ground

    def report(am, bm, cm, dm, missing):
        out.append(
            AxiomViolation(
                axiom,
                model._unmask(am),
                model._unmask(bm),
                model._unmask(cm),
                model._unmask(dm),
                tuple(model._unmask(m) for m in missing),
            )
        )

    if axiom is Axiom.SYMMETRY:
        for am, bm, cm, _ in _role_assignments(ground, 4):
            if member(am, bm, cm) != member(bm, am, cm):
                report(am, bm, cm, 0, (bm, am, cm))
        return out

    for am, bm, cm, dm, _ in _role_assignments(ground, 5):
        if axiom is Axiom.DECOMPOSITION:
            if member(am, bm | dm, cm):
                if not member(am, bm, cm):
                    report(am, bm, cm, dm, (am, bm, cm))
                elif not member(am, dm, cm):
                    report(am, bm, cm, dm, (am, dm, cm))
        elif axiom is Axiom.WEAK_UNION:
            if member(am, bm | dm, cm):
                if not member(am, bm, cm | dm):
                    report(am, bm, cm, dm, (am, bm, cm | dm))
                elif not member(am, dm, cm | bm):
                    report(am, bm, cm, dm, (am, dm, cm | bm))
        elif axiom is Axiom.CONTRACTION:
            lhs = member(am, bm, cm | dm) and member(am, dm, cm)
            rhs = member(am, bm | dm, cm)
            if lhs and not rhs:
                report(am, bm, cm, dm, (am, bm | dm, cm))
            elif rhs and not lhs:
                missing = (am, bm, cm | dm) if not member(am, bm, cm | dm) else (am, dm, cm)
                report(am, bm, cm, dm, missing)
        elif axiom is Axiom.INTERSECTION:
            if member(am, bm, cm | dm) and member(am, dm, cm | bm):
                if not member(am, bm | dm, cm):
                    report(am, bm, cm, dm, (am, bm | dm, cm))
        elif axiom is Axiom.COMPOSITION:
            if member(am, bm, cm) and member(am, dm, cm):
                if not member(am, bm | dm, cm):
                    report(am, bm, cm, dm, (am, bm | dm, cm))
        else:
            raise InvalidQuery(f"unknown axiom {axiom!r}")
    return out


def check_axioms(model: IndependenceModel, axioms: Iterable[Axiom] = ALL_AXIOMS) -> dict:
    return {ax: check_axiom(model, ax) for ax in axioms}


def _proper_nonempty_subsets(mask: int):
    sub = (mask - 1) & mask
    while sub:
        yield sub
        sub = (sub - 1) & mask


def closure(
    model: IndependenceModel,
    axioms: Iterable[Axiom] = ALL_AXIOMS,
    max_nodes: int = CLOSURE_MAX_NODES,
) -> IndependenceModel:
    """Least fixpoint of the model under the chosen axioms.

    Symmetry is representational (canonical triples), so S1 never adds
    stored statements.  The bidirectional axiom S4 contributes its
    forward direction as a rule; its reverse direction is exactly S2
    with S3.  Deterministic worklist over canonical mask triples.
    """
    if len(model.ground) > max_nodes:
        raise SizeLimit(f"closure supports at most {max_nodes} nodes; pass max_nodes to override")
    axioms = frozenset(axioms)
    use_s2 = Axiom.DECOMPOSITION in axioms
    use_s3 = Axiom.WEAK_UNION in axioms
    use_s4 = Axiom.CONTRACTION in axioms
    use_s5 = Axiom.INTERSECTION in axioms
    use_s6 = Axiom.COMPOSITION in axioms

    def views(t):
        a, b, c = t
        return ((a, b, c), (b, a, c))

    def canon(a, b, c):
        return (a, b, c) if a < b else (b, a, c)

    store = set(model.mask_triples)
    by_first = {}
    for t in store:
        for x, y, c in views(t):
            by_first.setdefault(x, set()).add((y, c))
    todo = sorted(store)
    derived = []

    def pair_rules(x, y1, c1, y2, c2):
        # one view is <x,y1|c1>, the partner <x,y2|c2>; x shared
        if use_s6 and c1 == c2 and not (y1 & y2):
            derived.append(canon(x, y1 | y2, c1))
        if use_s4 and (y2 & c1) == y2 and c2 == c1 & ~y2:
            derived.append(canon(x, y1 | y2, c2))
        if use_s5 and (y2 & c1) == y2 and (y1 & c2) == y1 and c1 & ~y2 == c2 & ~y1:
            derived.append(canon(x, y1 | y2, c1 & ~y2))

    while todo:
        t = todo.pop()
        for x, y, c in views(t):
            if use_s2 or use_s3:
                for sub in _proper_nonempty_subsets(y):
                    if use_s2:
                        derived.append(canon(x, sub, c))
                    if use_s3:
                        derived.append(canon(x, sub, c | (y ^ sub)))
            for y2, c2 in list(by_first.get(x, ())):
                pair_rules(x, y, c, y2, c2)
                pair_rules(x, y2, c2, y, c)
        for new in sorted(set(derived)):
            if new not in store:
                store.add(new)
                todo.append(new)
                for nx, ny, nc in views(new):
                    by_first.setdefault(nx, set()).add((ny, nc))
        derived.clear()
    return IndependenceModel(model.ground, store)


# --- graph-induced models ---


def _pair_separation_table(g: Graph) -> dict:
    """(pos_i, pos_j, context_mask) -> separated, for all node pairs and
    all conditioning subsets of the remaining nodes."""
    nodes = g.nodes
    n = len(nodes)
    table = {}
    for pi in range(n):
        for pj in range(pi + 1, n):
            rest = [p for p in range(n) if p != pi and p != pj]
            for picks in itertools.chain.from_iterable(
                itertools.combinations(rest, r) for r in range(len(rest) + 1)
            ):
                cmask = 0
                for p in picks:
                    cmask |= 1 << p
                context = frozenset(nodes[p] for p in picks)
                table[(pi, pj, cmask)] = not connecting_walk_exists(
                    g, nodes[pi], nodes[pj], context
                )
    return table


def global_model(g: Graph, max_nodes: int = GLOBAL_MODEL_MAX_NODES) -> IndependenceModel:
    """The independence model induced by walk separation in `g`.

    Computed pairwise and lifted: <A,B|C> holds iff every i in A and
    j in B satisfy i _|_ j | C.
    """
    if g.num_nodes > max_nodes:
        raise SizeLimit(
            f"global model supports at most {max_nodes} nodes; pass max_nodes to override"
        )
    table = _pair_separation_table(g)
    masks = set()
    for am, bm, cm, _ in _role_assignments(g.nodes, 4):
        if not am or not bm or am > bm:
            continue
        if all(
            table[(pi.bit_length() - 1, pj.bit_length() - 1, cm)]
            if pi < pj
            else table[(pj.bit_length() - 1, pi.bit_length() - 1, cm)]
            for pi in _iter_bits(am)
            for pj in _iter_bits(bm)
        ):
            masks.add((am, bm, cm))
    return IndependenceModel(g.nodes, masks)


def pairwise_model(g: Graph) -> IndependenceModel:
    """One statement <i, j | ant({i,j})> per non-adjacent pair of a
    chain mixed graph."""
    if not classify(g).cmg:
        raise ClassViolation("pairwise statements are defined for chain mixed graphs")
    statements = []
    nodes = g.nodes
    for i, j in itertools.combinations(nodes, 2):
        if not g.adjacent(i, j):
            statements.append(((i,), (j,), g.anteriors((i, j))))
    return IndependenceModel.from_statements(nodes, statements)


def satisfies_global(
    model: IndependenceModel, g: Graph, max_nodes: int = GLOBAL_MODEL_MAX_NODES
) -> tuple:
    """Whether every separation of `g` is a statement of `model`.

    Returns (ok, witness): the witness is the first separated triple
    missing from the model, in deterministic enumeration order.
    """
    if tuple(sorted(g.nodes)) != model.ground:
        raise InvalidQuery("model ground set differs from the graph's node set")
    if g.num_nodes > max_nodes:
        raise SizeLimit(f"satisfies_global supports at most {max_nodes} nodes")
    table = _pair_separation_table(g)
    has = model._triples.__contains__
    for am, bm, cm, _ in _role_assignments(g.nodes, 4):
        if not am or not bm or am > bm:
            continue
        separated = all(
            table[(pi.bit_length() - 1, pj.bit_length() - 1, cm)]
            if pi < pj
            else table[(pj.bit_length() - 1, pi.bit_length() - 1, cm)]
            for pi in _iter_bits(am)
            for pj in _iter_bits(bm)
        )
        if separated and not has((am, bm, cm)):
            witness = (model._unmask(am), model._unmask(bm), model._unmask(cm))
            return False, witness
    return True, None


def markov_equivalent(g1: Graph, g2: Graph, max_nodes: int = GLOBAL_MODEL_MAX_NODES) -> bool:
    """Whether two graphs over the same node set induce the same
    independence model.  Pairwise separations determine the model, so
    only those are compared."""
    if g1.nodes != g2.nodes:
        raise InvalidQuery("graphs must share a node set")
    if g1.num_nodes > max_nodes:
        raise SizeLimit(f"equivalence check supports at most {max_nodes} nodes")
    return _pair_separation_table(g1) == _pair_separation_table(g2)
