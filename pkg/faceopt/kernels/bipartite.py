"""
Bipartite matching and perfect b-matching
"""
import logging
from typing import Dict, Hashable, Iterable, Mapping, Optional

import networkx as nx
import networkx.algorithms.flow as flow

from faceopt.errors import FaceoptError, InvalidParams

logger = logging.getLogger(__name__)

_SOURCE = ("source",)
_SINK = ("sink",)


class BipartiteInstance:
    """Left vertices, right vertices, adjacency, optional right capacities"""

    def __init__(
        self,
        left: Iterable[Hashable],
        right: Iterable[Hashable],
        adjacency: Mapping[Hashable, Iterable[Hashable]],
        capacities: Optional[Mapping[Hashable, int]] = None,
    ):
        self.left = list(left)
        self.right = list(right)
        right_set = set(self.right)
        self.adjacency: Dict[Hashable, list] = {}
        for x in self.left:
            targets = list(dict.fromkeys(adjacency.get(x, ())))
            unknown = [y for y in targets if y not in right_set]
            if unknown:
                raise InvalidParams(f"Left vertex {x} is adjacent to unknown right vertices {unknown}")
            self.adjacency[x] = targets
        self.capacities: Optional[Dict[Hashable, int]] = None
        if capacities is not None:
            self.capacities = {}
            for y in self.right:
                c = capacities.get(y, 0)
                if not isinstance(c, int) or c < 0:
                    raise InvalidParams(f"Capacity of {y} must be a non-negative integer, got {c}")
                self.capacities[y] = c

    def __repr__(self) -> str:
        return f"BipartiteInstance(left={len(self.left)}, right={len(self.right)})"


def _check_assignment(inst: BipartiteInstance, assignment: Mapping, exact: bool):
    load: Dict[Hashable, int] = {}
    for x, y in assignment.items():
        if y not in inst.adjacency.get(x, ()):
            raise FaceoptError(f"Matched pair {x}-{y} is not an edge")
        load[y] = load.get(y, 0) + 1
    for y, used in load.items():
        limit = inst.capacities[y] if inst.capacities is not None else 1
        if used > limit:
            raise FaceoptError(f"Right vertex {y} used {used} times, capacity {limit}")
    if exact:
        if len(assignment) != len(inst.left):
            raise FaceoptError("Not every left vertex is matched")
        for y in inst.right:
            if load.get(y, 0) != inst.capacities[y]:
                raise FaceoptError(f"Right vertex {y} is not saturated")


def max_matching(inst: BipartiteInstance) -> Dict[Hashable, Hashable]:
    """Maximum cardinality matching, left vertex -> right vertex"""
    graph = nx.Graph()
    top = [("L", x) for x in inst.left]
    graph.add_nodes_from(top)
    graph.add_nodes_from(("R", y) for y in inst.right)
    for x, targets in inst.adjacency.items():
        graph.add_edges_from((("L", x), ("R", y)) for y in targets)
    raw = nx.bipartite.hopcroft_karp_matching(graph, top_nodes=top)
    matching = {node[1]: raw[node][1] for node in top if node in raw}
    _check_assignment(inst, matching, exact=False)
    logger.debug(f"Matched {len(matching)} of {len(inst.left)} left vertices")
    return matching


def perfect_b_matching(inst: BipartiteInstance) -> Optional[Dict[Hashable, Hashable]]:
    """Every left vertex used once and every right vertex exactly to capacity, or None"""
    if inst.capacities is None:
        raise InvalidParams("perfect_b_matching needs right capacities")
    if sum(inst.capacities.values()) != len(inst.left):
        return None
    if not inst.left:
        return {}
    graph = nx.DiGraph()
    graph.add_node(_SOURCE)
    graph.add_node(_SINK)
    for x, targets in inst.adjacency.items():
        graph.add_edge(_SOURCE, ("L", x), capacity=1)
        for y in targets:
            graph.add_edge(("L", x), ("R", y), capacity=1)
    for y, c in inst.capacities.items():
        graph.add_edge(("R", y), _SINK, capacity=c)
    value, flows = nx.maximum_flow(graph, _SOURCE, _SINK, flow_func=flow.dinitz)
    if value != len(inst.left):
        return None
    assignment = {}
    for x in inst.left:
        for (_, y), amount in flows[("L", x)].items():
            if amount > 0:
                assignment[x] = y
                break
    _check_assignment(inst, assignment, exact=True)
    return assignment
