import pytest
from hypothesis import given, settings

from mixedsep import (
    ClassViolation,
    EdgeKind,
    Graph,
    HIERARCHY,
    NotAChainGraph,
    chain_components,
    classify,
    dg_to_ug,
    enumerate_graphs,
    implied_classes,
    parse_graph,
)
from mixedsep.classify import FLAG_NAMES

from strategies import graphs


def test_chain_components_rejects_semi_directed_cycle():
    g = parse_graph("h -> p\np -- q\nq -- h\n")
    with pytest.raises(NotAChainGraph) as err:
        chain_components(g)
    assert err.value.reason == "quotient-cycle"


def test_chain_components_rejects_mixed_component():
    g = parse_graph("a -- b\nb .. c\n")
    with pytest.raises(NotAChainGraph) as err:
        chain_components(g)
    assert err.value.reason == "mixed-component"


def test_chain_components_line_graph():
    g = parse_graph("a -- b\nc -- d\nnode e\n")
    decomp = chain_components(g)
    assert set(decomp.components) == {
        frozenset("ab"),
        frozenset("cd"),
        frozenset("e"),
    }
    assert decomp.quotient == ()


def test_chain_components_mixed_kinds_across_components():
    g = parse_graph("i -- j\nj -> k\nk .. m\n")
    decomp = chain_components(g)
    assert set(decomp.components) == {frozenset("ij"), frozenset("km")}
    kinds = dict(zip(decomp.components, decomp.kinds))
    assert kinds[frozenset("ij")] is EdgeKind.LINE
    assert kinds[frozenset("km")] is EdgeKind.DOTTED
    assert len(decomp.quotient) == 1


def test_classify_arc_with_ancestor_endpoint():
    g = parse_graph("i <-> k\nk <-> j\nk -> i\n")
    flags = classify(g)
    assert flags.cmg and flags.sg
    assert not flags.ag
    assert not flags.ang


def test_classify_pure_line_graph():
    flags = classify(parse_graph("a -- b\nb -- c\n"))
    for name in ("ug", "ucg", "chain_graph", "sg", "ag", "ang", "cmg", "regression_graph"):
        assert flags[name], name
    for name in ("bg", "dg", "mamp", "aadmg", "admg"):
        assert not flags[name], name


def test_classify_dag_is_everything_chainlike():
    flags = classify(parse_graph("a -> b\nb -> c\n"))
    for name in ("dag", "ucg", "bcg", "dcg", "admg", "aadmg", "mamp", "sg", "ag", "cmg"):
        assert flags[name], name


def test_classify_empty_graph_is_in_every_class():
    flags = classify(Graph("abc"))
    assert all(flags.flags().values())


def test_mamp_condition_three():
    base = "i .. j\nj .. k\ni <-> l\n"
    flags = classify(parse_graph(base))
    # j has no spouse, so the dotted-clique condition does not bind
    assert flags.mamp
    # give j a spouse without closing i..k: condition 3 now fails
    flags = classify(parse_graph(base + "j <-> m\n"))
    assert not flags.mamp
    # closing the dotted triangle restores membership
    flags = classify(parse_graph(base + "j <-> m\ni .. k\n"))
    assert flags.mamp


def test_mamp_rejects_dotted_arc_cycle():
    assert not classify(parse_graph("i .. j\ni <-> j\n")).mamp
    # a longer dotted path closed by one arc is still a violation
    assert not classify(parse_graph("i .. j\nj .. k\ni <-> k\n")).mamp
    # arc between separate dotted components is fine
    assert classify(parse_graph("i .. j\nk <-> l\n")).mamp


def test_regression_graph_heads_allowed_at_arc_nodes_only():
    g = parse_graph("a -- b\nc <-> d\nb -> c\n")
    assert classify(g).regression_graph
    assert classify(g).sg and classify(g).ag
    # an arrow into a line endpoint disqualifies
    assert not classify(parse_graph("a -- b\nc -> a\n")).regression_graph
    # dotted edges disqualify regardless
    assert not classify(parse_graph("a .. b\n")).regression_graph


def test_dg_to_ug():
    assert dg_to_ug(parse_graph("i .. j\n")) == parse_graph("i -- j\n")
    assert dg_to_ug(Graph("ab")) == Graph("ab")
    assert classify(dg_to_ug(parse_graph("a .. b\nb .. c\n"))).ug
    with pytest.raises(ClassViolation):
        dg_to_ug(parse_graph("a -- b\n"))


def _assert_hierarchy_consistent(g):
    flags = classify(g)
    for name in FLAG_NAMES:
        if flags[name]:
            for implied in implied_classes(name):
                assert flags[implied], f"{name} set but {implied} missing: {g!r}"


@settings(max_examples=300, deadline=None)
@given(graphs(max_nodes=5))
def test_hierarchy_closed_on_random_graphs(g):
    _assert_hierarchy_consistent(g)


def test_hierarchy_closed_on_seeded_sample():
    from mixedsep import GenSpec, random_graph

    for seed in range(1000):
        g = random_graph(GenSpec(n=5, cls="any", density=0.3, seed=seed))
        _assert_hierarchy_consistent(g)


def test_hierarchy_closed_on_small_enumeration():
    for g in enumerate_graphs(2):
        _assert_hierarchy_consistent(g)


def test_hierarchy_table_is_closed_under_itself():
    for name, targets in HIERARCHY.items():
        for t in targets:
            assert t in HIERARCHY


def test_chain_components_agrees_with_cycle_predicate():
    # a graph is a chain graph iff no semi-directed cycle and components
    # are kind-pure; cross-check on the 3-node line/arrow enumeration
    for g in enumerate_graphs(3, kinds=(EdgeKind.LINE, EdgeKind.ARROW)):
        try:
            chain_components(g)
            is_chain = True
        except NotAChainGraph:
            is_chain = False
        # with only lines present, kind purity always holds
        assert is_chain == (not g.has_semi_directed_cycle())


def test_classify_dg_to_ug_marks_ug():
    for text in ("a .. b\n", "a .. b\nb .. c\nc .. d\n", ""):
        g = parse_graph(text)
        if classify(g).dg:
            assert classify(dg_to_ug(g)).ug
