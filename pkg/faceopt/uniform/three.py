"""
3-uniform recognition from SPQR-tree conditions
"""
import logging
from typing import Dict, List, Optional

from faceopt.errors import WitnessError
from faceopt.graph.multigraph import Multigraph
from faceopt.graph.rotation import RotationSystem, faces
from faceopt.models.node_kind import NodeKind
from faceopt.spqr.assembly import NodePlan, SkeletonFaces, materialize
from faceopt.spqr.builder import build_spqr
from faceopt.spqr.skeleton import embed_skeleton
from faceopt.spqr.tree import SPQRTree
from faceopt.uniform.types import alternating_order

logger = logging.getLogger(__name__)


def _neighbours(tree: SPQRTree, nid: int) -> List[int]:
    return [e.target for e in tree.nodes[nid].edges]


def uniform3_violations(tree: SPQRTree) -> List[str]:
    """Human-readable reasons the tree admits no 3-uniform embedding"""
    problems = []
    for nid, node in sorted(tree.nodes.items()):
        kind = node.kind
        if kind in (NodeKind.S, NodeKind.R):
            bad = [x for x in _neighbours(tree, nid) if tree.kind(x) in (NodeKind.S, NodeKind.R)]
            if bad:
                problems.append(f"{kind}-node {nid} is adjacent to S/R-nodes {bad}")
        if kind == NodeKind.R:
            walks = SkeletonFaces(tree, nid, embed_skeleton(tree, nid)).walks
            if any(len(w) != 3 for w in walks):
                problems.append(f"R-node {nid} skeleton is not a triangulation")
        if kind == NodeKind.S and node.size != 3:
            problems.append(f"S-node {nid} skeleton has size {node.size}")
        if kind == NodeKind.P:
            degree = len(node.edges)
            q_count = sum(1 for x in _neighbours(tree, nid) if tree.kind(x) == NodeKind.Q)
            if degree % 2 or 2 * q_count != degree:
                problems.append(f"P-node {nid} has {q_count} Q-neighbours out of {degree}")
    return problems


def recognize_uniform3(g: Multigraph) -> Optional[RotationSystem]:
    """Embedding with every face a triangle, or None"""
    if g.m - g.n + 2 <= 0 or 2 * g.m != 3 * (g.m - g.n + 2):
        return None
    tree = build_spqr(g)
    problems = uniform3_violations(tree)
    if problems:
        logger.debug(f"No 3-uniform embedding: {problems[0]}")
        return None
    plans: Dict[int, NodePlan] = {}
    for nid in tree.nodes_of_kind(NodeKind.P):
        plans[nid] = NodePlan(params=alternating_order(tree, nid))
    rot = materialize(tree, plans)
    if any(size != 3 for size in faces(g, rot).sizes):
        raise WitnessError("3-uniform witness has a face that is not a triangle")
    return rot
