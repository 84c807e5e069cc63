"""
Global structural checks: biconnectivity, bipartiteness, Euler consistency
"""
import logging
from typing import Dict, Optional

import networkx as nx

from faceopt.graph.multigraph import Multigraph

logger = logging.getLogger(__name__)


def is_biconnected(g: Multigraph) -> bool:
    """Connected, at least two vertices, and no cutvertex"""
    if g.n < 2:
        return False
    simple = g.simple_graph()
    if not nx.is_connected(simple):
        return False
    if g.n == 2:
        return True
    return nx.is_biconnected(simple)


def is_triconnected(graph: nx.Graph) -> bool:
    """Simple graph with at least 4 vertices and vertex connectivity >= 3"""
    if graph.number_of_nodes() < 4:
        return False
    return nx.node_connectivity(graph) >= 3


class Bipartition:
    """A proper 2-coloring, colors 0 and 1"""

    def __init__(self, colors: Dict[str, int]):
        self.colors = dict(sorted(colors.items()))

    def color(self, v: str) -> int:
        return self.colors[v]

    def same_class(self, u: str, v: str) -> bool:
        return self.colors[u] == self.colors[v]

    def classes(self):
        zero = [v for v, c in self.colors.items() if c == 0]
        one = [v for v, c in self.colors.items() if c == 1]
        return zero, one

    def __repr__(self) -> str:
        zero, one = self.classes()
        return f"Bipartition({zero} | {one})"


def bipartition(g: Multigraph) -> Optional[Bipartition]:
    """2-coloring of g, or None if g has an odd cycle"""
    simple = g.simple_graph()
    if not nx.is_bipartite(simple):
        return None
    return Bipartition(nx.bipartite.color(simple))


def euler_uniform_k(g: Multigraph) -> Optional[int]:
    """The only face size a uniform embedding of g could have"""
    f = g.m - g.n + 2
    if f <= 0 or (2 * g.m) % f != 0:
        return None
    k = (2 * g.m) // f
    return k if k > 0 else None
