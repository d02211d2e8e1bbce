import pytest

from mixedsep import parse_graph


@pytest.fixture
def collider_section_graph():
    """Seven-node graph whose separations hinge on multi-node collider
    sections: blocking k separates j from h, blocking {k,l} connects."""
    return parse_graph(
        """
        j -> k
        k <-> l
        l -- r
        r -- q
        l -> p
        h -> q
        """
    )


@pytest.fixture
def nonmaximal_cmg():
    """Five-node CMG in which j and l are non-adjacent yet inseparable;
    closing the inducing walk adds exactly the arrow l -> j."""
    return parse_graph(
        """
        j <-> k
        k -- p
        l -> p
        p -> q
        q -> j
        """
    )


@pytest.fixture
def anterior_path_graph():
    """Line/arrow/arc path used for anterior and ancestor bookkeeping."""
    return parse_graph(
        """
        i -- j
        j -- k
        k -> l
        l -> m
        m -- n
        n -> o
        o <-> p
        """
    )
