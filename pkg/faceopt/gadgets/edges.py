"""
Two-pole gadgets that behave like (1,d)-edges
"""
import logging

from faceopt.errors import InvalidParams, InvalidParity
from faceopt.gadgets.gadget_graph import GadgetGraph
from faceopt.graph.multigraph import Multigraph

logger = logging.getLogger(__name__)


def gen_parallel_edge(d: int) -> GadgetGraph:
    """A single edge s-t in parallel with an s-t path of length d"""
    if d not in (2, 3):
        raise InvalidParams(f"Parallel edge gadget needs d in (2, 3), got {d}")
    inner = [f"p{i}" for i in range(1, d)]
    path = ["s"] + inner + ["t"]
    edges = [("e0", "s", "t")]
    roles = {"e0": "direct"}
    for i in range(d):
        eid = f"e{i + 1}"
        edges.append((eid, path[i], path[i + 1]))
        roles[eid] = "path"
    graph = Multigraph(path, edges, poles=("s", "t"))
    return GadgetGraph(graph, roles, poles=("s", "t"))


def gen_wheel_edge(d: int, k: int) -> GadgetGraph:
    """Wheel with d rim vertices and spokes of length (k-1)/2; poles are r0, r1"""
    if k % 2 == 0:
        raise InvalidParity(f"Wheel gadget needs odd k, got {k}")
    if k < 7 or d not in (3, 4, 5):
        raise InvalidParams(f"Wheel gadget needs k >= 7 and d in (3, 4, 5), got d={d}, k={k}")
    spoke = (k - 1) // 2
    vertices = ["h"] + [f"r{i}" for i in range(d)]
    edges, roles = [], {}

    def add(eid, u, v, role):
        edges.append((eid, u, v))
        roles[eid] = role

    for i in range(d):
        add(f"rim{i}", f"r{i}", f"r{(i + 1) % d}", "rim")
        chain = ["h"] + [f"s{i}.{j}" for j in range(1, spoke)] + [f"r{i}"]
        vertices.extend(chain[1:-1])
        for j in range(spoke):
            add(f"spoke{i}.{j}", chain[j], chain[j + 1], "spoke")
    graph = Multigraph(vertices, edges, poles=("r0", "r1"))
    logger.debug(f"Wheel gadget d={d}, k={k}: n={graph.n}, m={graph.m}")
    return GadgetGraph(graph, roles, poles=("r0", "r1"))
