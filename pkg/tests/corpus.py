"""
Fixed small graphs and the seeded random corpus shared by the tests
"""
from typing import List, Sequence, Tuple

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from faceopt.gadgets.random_graphs import gen_random_biconnected
from faceopt.graph.multigraph import Multigraph
from faceopt.oracle.enumeration import count_embeddings
from faceopt.spqr.builder import build_spqr

PROPERTY_SETTINGS = settings(
    max_examples=60,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.filter_too_much],
)

# Largest embedding count the oracle-backed tests enumerate
ORACLE_LIMIT = 20000


def graph_from_pairs(pairs: Sequence[Tuple[str, str]]) -> Multigraph:
    """Edges e0, e1, ... in the given order"""
    vertices = sorted({x for pair in pairs for x in pair})
    return Multigraph(vertices, [(f"e{i}", u, v) for i, (u, v) in enumerate(pairs)])


def cycle(n: int) -> Multigraph:
    return graph_from_pairs([(f"c{i}", f"c{(i + 1) % n}") for i in range(n)])


def k4() -> Multigraph:
    return graph_from_pairs([("a", "b"), ("a", "c"), ("a", "d"), ("b", "c"), ("b", "d"), ("c", "d")])


def cube() -> Multigraph:
    pairs = []
    for i in range(8):
        for bit in (1, 2, 4):
            j = i ^ bit
            if i < j:
                pairs.append((f"q{i}", f"q{j}"))
    return graph_from_pairs(pairs)


def theta() -> Multigraph:
    """Poles u, v joined by three paths of length 2"""
    return graph_from_pairs([("u", "a"), ("a", "v"), ("u", "b"), ("b", "v"), ("u", "c"), ("c", "v")])


def subdivided_k4() -> Multigraph:
    """K4 with every edge subdivided once"""
    pairs = []
    for x, y in [("a", "b"), ("a", "c"), ("a", "d"), ("b", "c"), ("b", "d"), ("c", "d")]:
        pairs.extend([(x, f"{x}{y}"), (f"{x}{y}", y)])
    return graph_from_pairs(pairs)


def double_path() -> Multigraph:
    """Edge uv plus two u-v paths of length 2 (n=4, m=5); min max face is 4"""
    return graph_from_pairs([("u", "v"), ("u", "a"), ("a", "v"), ("u", "b"), ("b", "v")])


def parallel_pair_and_path() -> Multigraph:
    """Two parallel uv edges plus a path u-w-v; min max face is 3"""
    return graph_from_pairs([("u", "v"), ("u", "v"), ("u", "w"), ("w", "v")])


def bundle(k: int) -> Multigraph:
    return graph_from_pairs([("u", "v")] * k)


def one_and_three() -> Multigraph:
    """Parallel paths of length 1 and 3 between u and v"""
    return graph_from_pairs([("u", "v"), ("u", "x"), ("x", "y"), ("y", "v")])


FIXED = {
    "k4": k4,
    "cube": cube,
    "square": lambda: cycle(4),
    "hexagon": lambda: cycle(6),
    "theta": theta,
    "subdivided_k4": subdivided_k4,
    "double_path": double_path,
    "parallel_pair_and_path": parallel_pair_and_path,
    "bundle3": lambda: bundle(3),
    "one_and_three": one_and_three,
}


def enumerable(g: Multigraph, limit: int = ORACLE_LIMIT) -> bool:
    return count_embeddings(build_spqr(g)) <= limit


def random_corpus(count: int, max_edges: int = 10, seed: int = 0) -> List[Multigraph]:
    """Deterministic list of random biconnected graphs the oracle can enumerate"""
    graphs = []
    s = seed
    while len(graphs) < count:
        m = 2 + s % (max_edges - 1)
        n = 2 + (s // 3) % (m - 1)
        g = gen_random_biconnected(n, m, seed=s)
        if enumerable(g):
            graphs.append(g)
        s += 1
    return graphs


@st.composite
def random_graphs(draw, max_edges: int = 10) -> Multigraph:
    m = draw(st.integers(min_value=2, max_value=max_edges))
    n = draw(st.integers(min_value=2, max_value=m))
    seed = draw(st.integers(min_value=0, max_value=10 ** 6))
    return gen_random_biconnected(n, m, seed=seed)


def oracle_graphs(max_edges: int = 10, limit: int = ORACLE_LIMIT):
    """Random graphs small enough for exhaustive enumeration"""
    return random_graphs(max_edges=max_edges).filter(lambda g: enumerable(g, limit))
