import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from strategies import graphs

from mixedsep import (
    Edge,
    EdgeKind,
    Graph,
    MalformedWalk,
    Mark,
    NodeNotFound,
    Walk,
    arc,
    arrow,
    dotted,
    line,
    parse_graph,
    sections_of,
)


def test_edge_canonical_order():
    assert line("b", "a") == line("a", "b")
    assert arc("b", "a") == arc("a", "b")
    assert dotted("b", "a") == dotted("a", "b")
    assert arrow("b", "a") != arrow("a", "b")
    assert line("b", "a").u == "a"


def test_edge_rejects_loops():
    with pytest.raises(ValueError):
        line("a", "a")


def test_edge_marks():
    e = arrow("a", "b")
    assert e.mark_at("a") is Mark.TAIL
    assert e.mark_at("b") is Mark.HEAD
    assert arc("a", "b").mark_at("a") is Mark.HEAD
    assert line("a", "b").mark_at("b") is Mark.LINE_END
    assert dotted("a", "b").mark_at("a") is Mark.DOTTED_END
    with pytest.raises(NodeNotFound):
        e.mark_at("c")


def test_graph_equality_ignores_duplicate_edges():
    g1 = Graph("ab", [line("a", "b")])
    g2 = Graph("ab", [line("a", "b"), line("b", "a")])
    assert g1 == g2
    assert g1.add_edges([line("a", "b")]) == g1


def test_graph_includes_edge_endpoints():
    g = Graph((), [arrow("x", "y")])
    assert g.nodes == ("x", "y")


def test_relations_single_arrow():
    g = Graph((), [arrow("i", "j")])
    rel = g.relations("j")
    assert rel.pa == {"i"}
    assert rel.ne == rel.ch == rel.sp == rel.pt == frozenset()


def test_relations_all_kinds(nonmaximal_cmg):
    rel = nonmaximal_cmg.relations("p")
    assert rel.ne == {"k"}
    assert rel.pa == {"l"}
    assert rel.ch == {"q"}
    assert rel.sp == frozenset()
    assert rel.pt == frozenset()


def test_relations_empty_graph():
    g = Graph("abc")
    for v in "abc":
        rel = g.relations(v)
        assert not (rel.ne | rel.pa | rel.ch | rel.sp | rel.pt)


def test_relations_unknown_node():
    with pytest.raises(NodeNotFound):
        Graph("ab").relations("z")


def test_anteriors_on_mixed_path(anterior_path_graph):
    g = anterior_path_graph
    assert "i" in g.anteriors(("k",))
    assert "i" in g.anteriors(("o",))
    assert "i" not in g.anteriors(("p",))
    assert "k" in g.ancestors(("m",))


def test_anteriors_trivial_sets(anterior_path_graph):
    g = anterior_path_graph
    assert g.anteriors(()) == frozenset()
    assert g.anteriors(g.nodes) == frozenset()


def _brute_force_anteriors(g, targets):
    # oracle: enumerate all simple paths and test the anterior-walk
    # condition edge by edge
    targets = set(targets)
    found = set()

    def anterior_step(e, src, dst):
        if e.kind in (EdgeKind.LINE, EdgeKind.DOTTED):
            return True
        return e.kind is EdgeKind.ARROW and e.u == src and e.v == dst

    def walk(v, seen):
        if v in targets:
            return True
        hit = False
        for e in g.edges_at(v):
            w = e.other(v)
            if w not in seen and anterior_step(e, v, w):
                if walk(w, seen | {w}):
                    hit = True
        return hit

    for start in g.nodes:
        if start not in targets and walk(start, {start}):
            found.add(start)
    return frozenset(found)


def test_anteriors_match_path_enumeration(nonmaximal_cmg):
    g = nonmaximal_cmg
    expected = _brute_force_anteriors(g, ("j", "l"))
    assert expected == {"k", "p", "q"}
    assert g.anteriors(("j", "l")) == expected


def test_ancestors_chain():
    g = parse_graph("i -> j\nj -> k\n")
    assert g.ancestors(("k",)) == {"i", "j"}
    assert Graph("abc").ancestors(("a",)) == frozenset()


def test_semi_directed_cycle():
    g = parse_graph("h -> p\np -- q\nq -- h\n")
    assert g.has_semi_directed_cycle()
    assert not parse_graph("a -- b\nb -- c\nc -- a\n").has_semi_directed_cycle()


def test_semi_directed_cycle_absent_in_cmg(nonmaximal_cmg):
    assert not nonmaximal_cmg.has_semi_directed_cycle()


def test_quasi_directed_cycle():
    assert parse_graph("i -> j\ni <-> j\n").has_quasi_directed_cycle()
    assert parse_graph("i -> j\nj -> k\nk .. i\n").has_quasi_directed_cycle()
    assert not parse_graph("i <-> j\nj <-> k\n").has_quasi_directed_cycle()


def test_induced_subgraph(nonmaximal_cmg):
    g = nonmaximal_cmg
    assert g.induced_subgraph(g.nodes) == g
    assert g.induced_subgraph(()) == Graph()
    sub = g.induced_subgraph(("j", "k", "p"))
    assert sub == Graph("jkp", [arc("j", "k"), line("k", "p")])
    with pytest.raises(NodeNotFound):
        g.induced_subgraph(("j", "zz"))


def test_walk_validation():
    e = line("a", "b")
    w = Walk(("a", "b"), (e,))
    assert w.is_path
    assert w.endpoints == ("a", "b")
    with pytest.raises(MalformedWalk):
        Walk(("a", "c"), (e,))
    with pytest.raises(MalformedWalk):
        Walk(("a", "b"), ())


def test_sections_single_node_walk():
    (sec,) = sections_of(Walk(("a",), ()))
    assert sec.nodes == ("a",)
    assert sec.is_endpoint and not sec.is_collider


def test_sections_of_collider_walk(collider_section_graph):
    g = collider_section_graph
    jk = next(e for e in g.edges if e == arrow("j", "k"))
    kl = next(e for e in g.edges if e == arc("k", "l"))
    lr = next(e for e in g.edges if e == line("l", "r"))
    rq = next(e for e in g.edges if e == line("q", "r"))
    hq = next(e for e in g.edges if e == arrow("h", "q"))
    walk = Walk(("j", "k", "l", "r", "q", "h"), (jk, kl, lr, rq, hq))
    secs = sections_of(walk)
    assert [s.nodes for s in secs] == [("j",), ("k",), ("l", "r", "q"), ("h",)]
    assert [s.is_collider for s in secs] == [False, True, True, False]


def test_sections_directed_chain_inner_noncollider():
    g = parse_graph("i -> j\nj -> k\n")
    ij, jk = sorted(g.edges, key=Edge.sort_key)
    secs = sections_of(Walk(("i", "j", "k"), (ij, jk)))
    assert [s.is_collider for s in secs] == [False, False, False]


def test_flank_patterns_split_five_five():
    # two-edge walks u ? m ? v over each unordered pair of flank
    # presentations: arrow-in, arrow-out, arc, dotted
    presentations = {
        "arrow-in": lambda other: arrow(other, "m"),
        "arrow-out": lambda other: arrow("m", other),
        "arc": lambda other: arc("m", other),
        "dotted": lambda other: dotted("m", other),
    }
    colliders = []
    for a, b in itertools.combinations_with_replacement(sorted(presentations), 2):
        e1 = presentations[a]("u")
        e2 = presentations[b]("v")
        walk = Walk(("u", "m", "v"), (e1, e2))
        _, mid, _ = sections_of(walk)
        colliders.append(mid.is_collider)
    assert len(colliders) == 10
    assert sum(colliders) == 5
    expected = {
        ("arc", "arc"): True,
        ("arc", "arrow-in"): True,
        ("arc", "arrow-out"): False,
        ("arc", "dotted"): True,
        ("arrow-in", "arrow-in"): True,
        ("arrow-in", "arrow-out"): False,
        ("arrow-in", "dotted"): True,
        ("arrow-out", "arrow-out"): False,
        ("arrow-out", "dotted"): False,
        ("dotted", "dotted"): False,
    }
    got = dict(
        zip(itertools.combinations_with_replacement(sorted(presentations), 2), colliders)
    )
    assert {tuple(sorted(k)): v for k, v in got.items()} == expected


# --- property tests ---


@settings(max_examples=100, deadline=None)
@given(graphs(), st.data())
def test_anterior_monotonicity(g, data):
    nodes = list(g.nodes)
    a = frozenset(data.draw(st.sets(st.sampled_from(nodes), max_size=len(nodes))))
    b = frozenset(data.draw(st.sets(st.sampled_from(nodes), max_size=len(nodes))))
    if a <= b:
        assert g.anteriors(a) <= g.anteriors(b) | b
    assert g.ancestors(a) <= g.anteriors(a) | a


@settings(max_examples=60, deadline=None)
@given(graphs(max_nodes=4), st.data())
def test_anteriors_equal_walk_enumeration(g, data):
    targets = frozenset(
        data.draw(st.sets(st.sampled_from(list(g.nodes)), max_size=len(g.nodes)))
    )
    assert g.anteriors(targets) == _brute_force_anteriors(g, targets)


def test_semi_directed_cycle_exhaustive_sparse_three_nodes():
    # every 3-node graph with at most 6 pair-kind edges, against the
    # literal cycle-enumeration oracle used below
    from mixedsep import enumerate_graphs

    checked = 0
    for g in enumerate_graphs(3):
        if len(g.edges) > 6:
            continue
        checked += 1
        assert g.has_semi_directed_cycle() == _enumerates_semi_directed_cycle(g)
    assert checked == sum(_binom(15, k) for k in range(7))


def _binom(n, k):
    out = 1
    for t in range(k):
        out = out * (n - t) // (t + 1)
    return out


def _enumerates_semi_directed_cycle(g):
    usable = [e for e in g.edges if e.kind is not EdgeKind.ARC]

    def extend(start, v, seen):
        for e in usable:
            if v not in e.endpoints():
                continue
            w = e.other(v)
            if e.kind is EdgeKind.ARROW and e.v != w:
                continue
            if w == start and len(seen) >= 1:
                if any(x[1].kind is EdgeKind.ARROW for x in seen) or (
                    e.kind is EdgeKind.ARROW
                ):
                    return True
                continue
            if any(w == s for s, _ in seen) or w == start:
                continue
            if extend(start, w, seen + [(w, e)]):
                return True
        return False

    return any(extend(v, v, []) for v in g.nodes)


@settings(max_examples=60, deadline=None)
@given(graphs(max_nodes=4))
def test_semi_directed_cycle_matches_cycle_enumeration(g):
    assert g.has_semi_directed_cycle() == _enumerates_semi_directed_cycle(g)
