from hypothesis import strategies as st

from spaf.graph import Graph

CAPS = ["1", "2", "3.5", "4", "8", "9"]


@st.composite
def graphs(draw, min_n=1, max_n=7, caps=CAPS):
    n = draw(st.integers(min_n, max_n))
    vertex = st.integers(1, n)
    edges = draw(st.lists(st.tuples(vertex, vertex, st.sampled_from(caps)), max_size=n * n))
    return Graph.from_edges(n, edges)
