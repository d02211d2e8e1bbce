"""Hypothesis strategies shared by the test modules."""

import itertools

from hypothesis import strategies as st

from mixedsep import Graph, arc, arrow, dotted, line

SLOTS = ("line", "arc", "dotted", "arrow", "arrow-back")


def slot_edge(slot, u, v):
    return {
        "line": line(u, v),
        "arc": arc(u, v),
        "dotted": dotted(u, v),
        "arrow": arrow(u, v),
        "arrow-back": arrow(v, u),
    }[slot]


@st.composite
def graphs(draw, max_nodes=5):
    n = draw(st.integers(min_value=1, max_value=max_nodes))
    labels = [f"n{k}" for k in range(n)]
    edges = []
    for u, v in itertools.combinations(labels, 2):
        for slot in draw(st.sets(st.sampled_from(SLOTS), max_size=5)):
            edges.append(slot_edge(slot, u, v))
    return Graph(labels, edges)
