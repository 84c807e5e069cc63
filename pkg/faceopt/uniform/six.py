"""
6-uniform recognition: forced types bottom-up, flips and arrangements per node
"""
import itertools
import logging
from functools import lru_cache
from typing import Dict, List, Optional, Tuple

from faceopt.errors import WitnessError
from faceopt.graph.multigraph import Multigraph
from faceopt.graph.rotation import RotationSystem, faces
from faceopt.graph.structure import Bipartition, bipartition
from faceopt.kernels.bipartite import BipartiteInstance, perfect_b_matching
from faceopt.minmaxface.types import TypePair
from faceopt.models.node_kind import NodeKind
from faceopt.spqr.assembly import NodePlan, SkeletonFaces, materialize
from faceopt.spqr.builder import build_spqr
from faceopt.spqr.skeleton import embed_skeleton, p_node_sides
from faceopt.spqr.tree import SPQRTree
from faceopt.uniform.types import AlmostUniformType, outer_face_length

logger = logging.getLogger(__name__)

K = 6


def node_types(tree: SPQRTree, colours: Bipartition) -> Dict[int, AlmostUniformType]:
    """Forced almost 6-uniform type of every non-root node"""
    types = {}
    for nid in tree.nodes:
        if nid == tree.root:
            continue
        n_pert, m_pert = tree.pertinent_counts(nid)
        s, t = tree.poles(nid)
        types[nid] = AlmostUniformType(outer_face_length(n_pert, m_pert, K), colours.same_class(s, t))
    return types


def _matches(left: int, right: int, pair: TypePair) -> bool:
    return TypePair.of(left, right) == pair


def _series_plan(tree: SPQRTree, nid: int, types: Dict[int, AlmostUniformType]) -> Optional[NodePlan]:
    """Try every flip of the chain's children"""
    skeleton = SkeletonFaces(tree, nid, embed_skeleton(tree, nid))
    parent = tree.parent_edge(nid)
    face_a = skeleton.face_of[(parent.key, parent.u, parent.v)]
    edges = tree.child_edges(nid)
    pairs = [types[e.target].pair for e in edges]
    target = types[nid].pair
    choices = [((p.a, p.b), (p.b, p.a)) if p.a != p.b else ((p.a, p.b),) for p in pairs]
    for combo in itertools.product(*choices):
        side_a = sum(x for x, _ in combo)
        side_b = sum(y for _, y in combo)
        if _matches(side_a, side_b, target):
            plan = NodePlan()
            for e, (x, _) in zip(edges, combo):
                plan.require(e.key, skeleton.dart_in(e.key, face_a), x)
            return plan
    return None


def _parallel_order(pairs: List[TypePair], target: TypePair) -> Optional[List[Tuple[int, int, int]]]:
    """Children as (index, left, right): facing sides sum to 6 and the two ends form target"""
    kinds = sorted(set(pairs))
    members = {kind: [i for i, p in enumerate(pairs) if p == kind] for kind in kinds}

    def orientations(kind: TypePair):
        return sorted({(kind.a, kind.b), (kind.b, kind.a)})

    def take(counts: Tuple[int, ...], j: int) -> Tuple[int, ...]:
        return counts[:j] + (counts[j] - 1,) + counts[j + 1:]

    for j0, first in enumerate(kinds):
        for first_left, first_right in orientations(first):

            @lru_cache(maxsize=None)
            def search(counts: Tuple[int, ...], open_side: int):
                if not any(counts):
                    return () if _matches(first_left, open_side, target) else None
                for j, kind in enumerate(kinds):
                    if not counts[j]:
                        continue
                    for left, right in orientations(kind):
                        if open_side + left != K:
                            continue
                        found = search(take(counts, j), right)
                        if found is not None:
                            return ((j, left, right),) + found
                return None

            full = tuple(len(members[kind]) for kind in kinds)
            rest = search(take(full, j0), first_right)
            if rest is None:
                continue
            pools = {kind: list(idx) for kind, idx in members.items()}
            order = [(pools[first].pop(0), first_left, first_right)]
            for j, left, right in rest:
                order.append((pools[kinds[j]].pop(0), left, right))
            return order
    return None


def _parallel_plan(tree: SPQRTree, nid: int, types: Dict[int, AlmostUniformType]) -> Optional[NodePlan]:
    edges = tree.child_edges(nid)
    order = _parallel_order([types[e.target].pair for e in edges], types[nid].pair)
    if order is None:
        return None
    left_dart, _ = p_node_sides(tree, nid)
    plan = NodePlan(params=[edges[i].key for i, _, _ in order])
    for i, left, _ in order:
        plan.require(edges[i].key, left_dart, left)
    return plan


def _rigid_plan(tree: SPQRTree, nid: int, types: Dict[int, AlmostUniformType]) -> Optional[NodePlan]:
    """Face demands met by a perfect b-matching of the (0,2)-edges"""
    edges = tree.child_edges(nid)
    pairs = {e.key: types[e.target].pair for e in edges}
    if any(p.b >= 5 for p in pairs.values()):
        return None
    skeleton = SkeletonFaces(tree, nid, embed_skeleton(tree, nid))
    outer_a, outer_b = skeleton.outer
    target = types[nid].pair
    for side_a, side_b in sorted({(target.a, target.b), (target.b, target.a)}):
        demand = {f: K for f in skeleton.inner()}
        demand[outer_a], demand[outer_b] = side_a, side_b
        for e in edges:
            for f in skeleton.faces_of_edge(e.key, e.u, e.v):
                demand[f] -= pairs[e.key].a
        if any(d < 0 or d % 2 for d in demand.values()):
            continue
        flexible = [e for e in edges if pairs[e.key].a != pairs[e.key].b]
        adjacency = {e.key: sorted(set(skeleton.faces_of_edge(e.key, e.u, e.v))) for e in flexible}
        faces_ = sorted(demand)
        instance = BipartiteInstance(
            [e.key for e in flexible], faces_, adjacency, capacities={f: demand[f] // 2 for f in faces_}
        )
        assignment = perfect_b_matching(instance)
        if assignment is None:
            continue
        plan = NodePlan()
        for key, f in assignment.items():
            plan.require(key, skeleton.dart_in(key, f), pairs[key].b)
        return plan
    return None


def label_tree6(tree: SPQRTree, colours: Bipartition) -> Optional[Dict[int, NodePlan]]:
    """Plans realizing the forced type at every node, or None"""
    types = node_types(tree, colours)
    plans: Dict[int, NodePlan] = {}
    for nid in tree.post_order():
        if nid == tree.root or tree.kind(nid) == NodeKind.Q:
            continue
        if not types[nid].feasible:
            logger.debug(f"Node {nid}: outer length {types[nid].length} has no almost 6-uniform type")
            return None
        kind = tree.kind(nid)
        if kind == NodeKind.S:
            plan = _series_plan(tree, nid, types)
        elif kind == NodeKind.P:
            plan = _parallel_plan(tree, nid, types)
        else:
            plan = _rigid_plan(tree, nid, types)
        if plan is None:
            logger.debug(f"{kind}-node {nid} cannot realize {types[nid].pair}")
            return None
        plans[nid] = plan
    if types[tree.root_child()].pair != TypePair(K - 1, K - 1):
        return None
    return plans


def recognize_uniform6(g: Multigraph) -> Optional[RotationSystem]:
    """Embedding with every face of size 6, or None"""
    if g.m - g.n + 2 <= 0 or 2 * g.m != K * (g.m - g.n + 2):
        return None
    colours = bipartition(g)
    if colours is None:
        return None
    tree = build_spqr(g)
    plans = label_tree6(tree, colours)
    if plans is None:
        return None
    rot = materialize(tree, plans)
    if any(size != K for size in faces(g, rot).sizes):
        raise WitnessError("6-uniform witness has a face of size other than 6")
    return rot
