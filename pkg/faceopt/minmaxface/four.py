"""
Polynomial decision for max face size <= 4

Labels are computed bottom-up on the chain (1,1) < (1,2) < (2,2) < (2,3) < (3,3),
with the incomparable (1,3) tracked separately since only the root can use it.
"""
import logging
from typing import Dict, List, Optional, Tuple

from faceopt.errors import WitnessError
from faceopt.graph.multigraph import Multigraph
from faceopt.graph.rotation import RotationSystem, faces
from faceopt.kernels.bipartite import BipartiteInstance, max_matching
from faceopt.minmaxface.types import CHAIN_4, Q_TYPE, NodeLabel4, TypePair, chain_rank
from faceopt.models.node_kind import NodeKind
from faceopt.spqr.assembly import NodePlan, SkeletonFaces, materialize
from faceopt.spqr.builder import build_spqr
from faceopt.spqr.skeleton import embed_skeleton, p_node_sides
from faceopt.spqr.tree import SPQRTree

logger = logging.getLogger(__name__)

T12 = TypePair(1, 2)
T13 = TypePair(1, 3)
T22 = TypePair(2, 2)
T23 = TypePair(2, 3)
T33 = TypePair(3, 3)

# (child id, left length, right length); child id None never occurs
Item = Tuple[int, int, int]


def _label_rigid(tree: SPQRTree, nid: int, labels: Dict[int, NodeLabel4]):
    """S- and R-nodes: every face keeps size + extra lengths <= 4"""
    child_type = {}
    for e in tree.child_edges(nid):
        best = labels[e.target].best
        if best is None or best in (T23, T33):
            return NodeLabel4(), None
        child_type[e.key] = best

    skeleton = SkeletonFaces(tree, nid, embed_skeleton(tree, nid))
    base = []
    for idx, walk in enumerate(skeleton.walks):
        extra = sum(1 for key, _, _ in walk if child_type.get(key) == T22)
        base.append(len(walk) + extra)
    if any(size > 4 for size in base):
        return NodeLabel4(), None

    half = [e for e in tree.child_edges(nid) if child_type[e.key] == T12]
    face_a, face_b = skeleton.outer
    inner = set(skeleton.inner())
    best: Optional[Tuple[TypePair, dict]] = None
    for receiving in ((), (face_a,), (face_b,), (face_a, face_b)):
        allowed = {f for f in inner | set(receiving) if base[f] < 4}
        adjacency = {}
        for e in half:
            f1, f2 = skeleton.faces_of_edge(e.key, e.u, e.v)
            adjacency[e.key] = [f for f in (f1, f2) if f in allowed]
        matching = max_matching(BipartiteInstance([e.key for e in half], sorted(allowed), adjacency))
        if len(matching) != len(half):
            continue
        received = {f: 0 for f in (face_a, face_b)}
        for f in matching.values():
            if f in received:
                received[f] += 1
        pair = TypePair.of(base[face_a] - 1 + received[face_a], base[face_b] - 1 + received[face_b])
        if best is None or chain_rank(pair) < chain_rank(best[0]):
            best = (pair, matching)
    if best is None:
        return NodeLabel4(), None

    pair, matching = best
    plan = NodePlan()
    for key, f in matching.items():
        plan.require(key, skeleton.dart_in(key, f), 2)
    return NodeLabel4(best=pair), plan


def _blocks(pairs: int, t22: List[int], t23: List[int], t33: List[int]) -> List[List[Item]]:
    """Maximal chains of non-Q children that need no Q-child between them"""
    blocks: List[List[Item]] = []
    spare22 = [(c, 2, 2) for c in t22]
    for i in range(pairs):
        x, y = t23[2 * i], t23[2 * i + 1]
        middle = spare22 if i == 0 else []
        blocks.append([(x, 3, 2)] + middle + [(y, 2, 3)])
    singles = t23[2 * pairs:]
    for i, c in enumerate(singles):
        lead = spare22 if pairs == 0 and i == 0 else []
        blocks.append(lead + [(c, 2, 3)])
    blocks.extend([[(c, 3, 3)] for c in t33])
    if not t23 and spare22:
        blocks.append(spare22)
    return blocks


def _reverse(block: List[Item]) -> List[Item]:
    return [(c, r, l) for c, l, r in reversed(block)]


def _min_side_right(block: List[Item]) -> List[Item]:
    return block if block[-1][2] <= block[0][1] else _reverse(block)


def _min_side(block: List[Item]) -> int:
    return min(block[0][1], block[-1][2])


def _arrangements(blocks: List[List[Item]], qs: List[int]):
    """Feasible child sequences with the boundary types they produce"""
    b, q = len(blocks), len(qs)
    Q = [(c, 1, 1) for c in qs]
    out = []
    if q >= b + 1:
        seq = []
        for i, block in enumerate(blocks):
            seq += [Q[i]] + block
        seq += Q[b:]
        out.append(seq)
    if b >= 1 and q >= b:
        j = min(range(b), key=lambda i: _min_side(blocks[i]))
        others = [blk for i, blk in enumerate(blocks) if i != j]
        seq = Q[b:]
        for i, block in enumerate(others):
            seq += [Q[i]] + block
        seq += [Q[b - 1], *_min_side_right(blocks[j])]
        out.append(seq)
    if b >= 2 and q >= b - 1:
        order = sorted(range(b), key=lambda i: _min_side(blocks[i]))
        j1, j2 = order[0], order[1]
        middle = [blk for i, blk in enumerate(blocks) if i not in (j1, j2)]
        seq = _reverse(_min_side_right(blocks[j1]))
        for i, block in enumerate(middle):
            seq += [Q[i]] + block
        seq += Q[b - 2:] + _min_side_right(blocks[j2])
        out.append(seq)
    if b == 1 and q == 0:
        out.append(list(blocks[0]))
    return [(TypePair.of(seq[0][1], seq[-1][2]), seq) for seq in out]


def _label_parallel(tree: SPQRTree, nid: int, labels: Dict[int, NodeLabel4]):
    qs, t22, t23, t33 = [], [], [], []
    for c in tree.children(nid):
        if tree.kind(c) == NodeKind.Q:
            qs.append(c)
            continue
        best = labels[c].best
        if best == T22:
            t22.append(c)
        elif best == T23:
            t23.append(c)
        elif best == T33:
            t33.append(c)
        else:
            return NodeLabel4(), {}

    candidates = []
    for pairs in range(len(t23) // 2 + 1):
        candidates += _arrangements(_blocks(pairs, t22, t23, t33), qs)
    chain = [(pair, seq) for pair, seq in candidates if pair in CHAIN_4]
    best = min(chain, key=lambda item: chain_rank(item[0]), default=None)
    with_13 = next((seq for pair, seq in candidates if pair == T13), None)

    (left_tail, left_head), _ = p_node_sides(tree, nid)
    plans = {}
    for pair, seq in ([best] if best else []) + ([(T13, with_13)] if with_13 else []):
        plan = NodePlan(params=[tree.child_edge(nid, c).key for c, _, _ in seq])
        for c, left, _ in seq:
            if tree.kind(c) != NodeKind.Q:
                plan.require(tree.child_edge(nid, c).key, (left_tail, left_head), left)
        plans[pair] = plan
    label = NodeLabel4(best=best[0] if best else None, admits_13=with_13 is not None)
    return label, plans


def label_tree4(tree: SPQRTree):
    """Labels and realizing plans for every non-root node"""
    labels: Dict[int, NodeLabel4] = {}
    plans: Dict[int, Dict[TypePair, NodePlan]] = {}
    for nid in tree.post_order():
        if nid == tree.root:
            continue
        kind = tree.kind(nid)
        if kind == NodeKind.Q:
            labels[nid] = NodeLabel4(best=Q_TYPE)
        elif kind == NodeKind.P:
            labels[nid], plans[nid] = _label_parallel(tree, nid, labels)
        else:
            labels[nid], plan = _label_rigid(tree, nid, labels)
            if plan is not None:
                plans[nid] = {labels[nid].best: plan}
        logger.debug(f"{kind}-node {nid}: {labels[nid]}")
    return labels, plans


def decide_minmax4(g: Multigraph) -> Optional[RotationSystem]:
    """Embedding with every face of size at most 4, or None"""
    tree = build_spqr(g)
    labels, plans = label_tree4(tree)
    top = tree.root_child()
    if not labels[top].feasible:
        return None
    chosen = {nid: options[labels[nid].best] for nid, options in plans.items() if labels[nid].best in options}
    if labels[top].best is None:
        chosen[top] = plans[top][T13]
    rot = materialize(tree, chosen)
    if faces(g, rot).max_face > 4:
        raise WitnessError("Witness for max face 4 has a larger face")
    return rot
