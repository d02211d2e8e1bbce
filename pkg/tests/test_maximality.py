import itertools

import pytest

from mixedsep import (
    ClassViolation,
    GenSpec,
    InvalidQuery,
    arc,
    arrow,
    classify,
    connecting_walk_exists,
    find_primitive_inducing_walk,
    inducing_endpoint_flavours,
    is_connecting_walk,
    is_maximal,
    markov_equivalent,
    maximalize,
    non_maximal_pair,
    parse_graph,
    random_graph,
    sections_of,
    separator_for,
)


def _witness_meets_definition(g, witness):
    """The literal inducing-walk conditions, checked from scratch."""
    walk = witness.walk
    assert walk.in_graph(g)
    if len(walk) == 1:
        return True
    allowed = g.reflexive_anteriors((witness.i, witness.j))
    secs = sections_of(walk)
    assert len(secs[0].nodes) == 1 and len(secs[-1].nodes) == 1
    for sec in secs[1:-1]:
        assert sec.is_collider
        assert set(sec.nodes) <= allowed
    return True


def test_inducing_walk_in_nonmaximal_graph(nonmaximal_cmg):
    w = find_primitive_inducing_walk(nonmaximal_cmg, "j", "l")
    assert w.walk.nodes == ("j", "k", "p", "l")
    assert w.head_at_i and not w.head_at_j
    assert _witness_meets_definition(nonmaximal_cmg, w)


def test_inducing_walk_via_double_arc():
    g = parse_graph("i <-> k\nk <-> j\nk -> i\n")
    w = find_primitive_inducing_walk(g, "i", "j")
    assert w.walk.nodes == ("i", "k", "j")
    assert w.head_at_i and w.head_at_j
    assert _witness_meets_definition(g, w)


def test_directed_chain_has_no_inducing_walk():
    g = parse_graph("i -> k\nk -> j\n")
    assert find_primitive_inducing_walk(g, "i", "j") is None


def test_existing_edge_is_inducing():
    g = parse_graph("a -- b\n")
    w = find_primitive_inducing_walk(g, "a", "b")
    assert len(w.walk) == 1
    assert not w.head_at_i and not w.head_at_j


def test_inducing_walk_rejects_non_cmg():
    with pytest.raises(ClassViolation):
        find_primitive_inducing_walk(parse_graph("a .. b\nnode c\n"), "a", "c")


def test_inducing_walk_implies_inseparable(nonmaximal_cmg):
    g = nonmaximal_cmg
    others = [v for v in g.nodes if v not in ("j", "l")]
    for r in range(len(others) + 1):
        for ctx in itertools.combinations(others, r):
            assert connecting_walk_exists(g, "j", "l", ctx)


def test_is_maximal(nonmaximal_cmg):
    assert not is_maximal(nonmaximal_cmg)
    assert non_maximal_pair(nonmaximal_cmg) == ("j", "l")
    complete = parse_graph("a -- b\nb -- c\na -- c\n")
    assert is_maximal(complete)


def test_maximalize_adds_exactly_one_arrow(nonmaximal_cmg):
    g = nonmaximal_cmg
    gmax = maximalize(g)
    assert gmax.edges - g.edges == {arrow("l", "j")}
    assert is_maximal(gmax)
    assert classify(gmax).cmg
    assert markov_equivalent(g, gmax)


def test_maximalize_fixpoint(nonmaximal_cmg):
    gmax = maximalize(nonmaximal_cmg)
    assert maximalize(gmax) == gmax


def test_maximalize_double_arc_graph():
    g = parse_graph("i <-> k\nk <-> j\nk -> i\n")
    gmax = maximalize(g)
    assert gmax.edges - g.edges == {arc("i", "j")}
    assert markov_equivalent(g, gmax)


def test_endpoint_flavours(nonmaximal_cmg):
    assert inducing_endpoint_flavours(nonmaximal_cmg, "j", "l") == {(True, False)}
    assert inducing_endpoint_flavours(nonmaximal_cmg, "k", "q") == frozenset()


def test_separator_for(nonmaximal_cmg):
    g = nonmaximal_cmg
    assert separator_for(g, "j", "l") is None
    assert separator_for(g, "k", "q") == g.anteriors(("k", "q"))
    two = parse_graph("node a\nnode b\n")
    assert separator_for(two, "a", "b") == frozenset()
    with pytest.raises(InvalidQuery):
        separator_for(g, "j", "k")


def test_maximal_graphs_satisfy_pairwise_separators():
    for seed in range(20):
        g = maximalize(random_graph(GenSpec(n=5, cls="cmg", density=0.3, seed=seed)))
        for i, j in itertools.combinations(g.nodes, 2):
            if not g.adjacent(i, j):
                assert separator_for(g, i, j) is not None


def test_separation_restricts_to_anterior_subset():
    # in a maximal CMG any separator can be cut down to the pair's anteriors
    for seed in range(20):
        g = maximalize(random_graph(GenSpec(n=5, cls="cmg", density=0.3, seed=100 + seed)))
        for i, j in itertools.combinations(g.nodes, 2):
            rest = [v for v in g.nodes if v not in (i, j)]
            ant = g.anteriors((i, j))
            for r in range(len(rest) + 1):
                for ctx in itertools.combinations(rest, r):
                    if g.adjacent(i, j):
                        continue
                    if not connecting_walk_exists(g, i, j, ctx):
                        assert not connecting_walk_exists(g, i, j, frozenset(ctx) & ant)
