"""
Linear-time style decision for max face size <= 3
"""
import logging
from typing import Dict, Optional

from faceopt.errors import WitnessError
from faceopt.graph.multigraph import Multigraph
from faceopt.graph.rotation import RotationSystem, faces
from faceopt.minmaxface.types import Q_TYPE, TypePair
from faceopt.models.node_kind import NodeKind
from faceopt.spqr.assembly import NodePlan, SkeletonFaces, materialize
from faceopt.spqr.builder import build_spqr
from faceopt.spqr.skeleton import embed_skeleton
from faceopt.spqr.tree import SPQRTree

logger = logging.getLogger(__name__)

TYPE_22 = TypePair(2, 2)


def _p_sequence(q_children, other_children):
    """Alternate (1,1)- and (2,2)-children; None if impossible"""
    a, b = len(q_children), len(other_children)
    if a < b - 1:
        return None
    if a == b - 1:
        seq = []
        for i, child in enumerate(other_children):
            seq.append(child)
            if i < a:
                seq.append(q_children[i])
        return seq
    seq = []
    for i, child in enumerate(other_children):
        seq.append(q_children[i])
        seq.append(child)
    return seq + q_children[b:]


def label_tree3(tree: SPQRTree):
    """Labels (None = infeasible) and plans for every non-root node"""
    labels: Dict[int, Optional[TypePair]] = {}
    plans: Dict[int, NodePlan] = {}
    for nid in tree.post_order():
        if nid == tree.root:
            continue
        kind = tree.kind(nid)
        if kind == NodeKind.Q:
            labels[nid] = Q_TYPE
            continue
        child_labels = [labels[c] for c in tree.children(nid)]
        if kind in (NodeKind.S, NodeKind.R):
            skeleton = SkeletonFaces(tree, nid, embed_skeleton(tree, nid))
            ok = all(len(w) == 3 for w in skeleton.walks) and all(lab == Q_TYPE for lab in child_labels)
            labels[nid] = TYPE_22 if ok else None
            continue

        if any(lab not in (Q_TYPE, TYPE_22) for lab in child_labels):
            labels[nid] = None
            continue
        q_children = [c for c in tree.children(nid) if labels[c] == Q_TYPE]
        others = [c for c in tree.children(nid) if labels[c] == TYPE_22]
        seq = _p_sequence(q_children, others)
        if seq is None:
            labels[nid] = None
            continue
        a, b = len(q_children), len(others)
        labels[nid] = TYPE_22 if a == b - 1 else (TypePair(1, 2) if a == b else Q_TYPE)
        plans[nid] = NodePlan(params=[tree.child_edge(nid, c).key for c in seq])
        logger.debug(f"P-node {nid}: a={a}, b={b} -> {labels[nid]}")
    return labels, plans


def decide_minmax3(g: Multigraph) -> Optional[RotationSystem]:
    """Embedding with every face of size at most 3, or None"""
    tree = build_spqr(g)
    labels, plans = label_tree3(tree)
    if labels[tree.root_child()] is None:
        return None
    rot = materialize(tree, plans)
    if faces(g, rot).max_face > 3:
        raise WitnessError("Witness for max face 3 has a larger face")
    return rot
