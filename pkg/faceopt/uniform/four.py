"""
4-uniform recognition from edge counts of expansion graphs
"""
import logging
from typing import Dict, List, Optional

from faceopt.errors import WitnessError
from faceopt.graph.multigraph import Multigraph
from faceopt.graph.rotation import RotationSystem, faces
from faceopt.graph.structure import bipartition
from faceopt.models.node_kind import NodeKind
from faceopt.spqr.assembly import NodePlan, SkeletonFaces, materialize
from faceopt.spqr.builder import build_spqr
from faceopt.spqr.skeleton import embed_skeleton
from faceopt.spqr.tree import EdgeKey, SPQRTree
from faceopt.uniform.types import alternating_order, is_q_neighbour

logger = logging.getLogger(__name__)


def excess(tree: SPQRTree, key: EdgeKey) -> int:
    """m_e - 2 n_e for the expansion graph of a virtual edge"""
    n_e, m_e = tree.expansion_counts(key)
    return m_e - 2 * n_e


def _p_node_half(tree: SPQRTree, nid: int) -> Optional[bool]:
    """False if every neighbour has m_e = 2n_e - 4, True for the half-Q case, None otherwise"""
    keys = [e.key for e in tree.nodes[nid].edges]
    if all(excess(tree, k) == -4 for k in keys):
        return False
    q_keys = [k for k in keys if is_q_neighbour(tree, nid, k)]
    rest = [k for k in keys if not is_q_neighbour(tree, nid, k)]
    if len(q_keys) == len(rest) and all(excess(tree, k) == -5 for k in rest):
        return True
    return None


def _face_ok(tree: SPQRTree, walk) -> bool:
    values = [excess(tree, key) for key, _, _ in walk]
    if len(walk) == 4:
        return all(v == -3 for v in values)
    if len(walk) == 3:
        return values.count(-4) == 1 and values.count(-3) == 2
    return False


def uniform4_violations(tree: SPQRTree) -> List[str]:
    problems = []
    for nid, node in sorted(tree.nodes.items()):
        if node.kind == NodeKind.P and _p_node_half(tree, nid) is None:
            problems.append(f"P-node {nid} fails the expansion count condition")
        if node.kind in (NodeKind.S, NodeKind.R):
            walks = SkeletonFaces(tree, nid, embed_skeleton(tree, nid)).walks
            bad = [len(w) for w in walks if not _face_ok(tree, w)]
            if bad:
                problems.append(f"{node.kind}-node {nid} has faces failing the count condition: sizes {bad}")
    return problems


def recognize_uniform4(g: Multigraph) -> Optional[RotationSystem]:
    """Embedding with every face of size 4, or None"""
    if g.m - g.n + 2 <= 0 or 2 * g.m != 4 * (g.m - g.n + 2):
        return None
    if bipartition(g) is None:
        logger.debug("No 4-uniform embedding: graph is not bipartite")
        return None
    tree = build_spqr(g)
    problems = uniform4_violations(tree)
    if problems:
        logger.debug(f"No 4-uniform embedding: {problems[0]}")
        return None
    plans: Dict[int, NodePlan] = {}
    for nid in tree.nodes_of_kind(NodeKind.P):
        if _p_node_half(tree, nid):
            plans[nid] = NodePlan(params=alternating_order(tree, nid))
    rot = materialize(tree, plans)
    if any(size != 4 for size in faces(g, rot).sizes):
        raise WitnessError("4-uniform witness has a face of size other than 4")
    return rot
