"""
Neat embeddings bottom-up and the 6-approximation for MinMaxFace

Every Q-, P- and R-node gets an embedding of its pertinent graph whose boundary
paths are as short as any embedding allows. S-nodes are consumed as chains by
their parent: all short sides of a chain point to one face, except below an
R-node, where the R-node's LP decides each chain edge separately.
"""
import logging
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from faceopt.errors import NotBiconnected, WitnessError
from faceopt.graph.multigraph import Multigraph
from faceopt.graph.rotation import RotationSystem, faces
from faceopt.graph.structure import is_biconnected
from faceopt.kernels.lp import LPInstance, solve_lp
from faceopt.models.node_kind import NodeKind
from faceopt.spqr.assembly import NodePlan, PertinentEmbedding, SkeletonFaces, build_pertinent, materialize
from faceopt.spqr.builder import build_spqr
from faceopt.spqr.skeleton import embed_skeleton, p_node_sides
from faceopt.spqr.tree import EdgeKey, ExpandedEdge, SPQRTree

logger = logging.getLogger(__name__)


class NeatEmbedding:
    """Embedded pert(node) with the plan that produced it"""

    def __init__(self, node: int, embedding: PertinentEmbedding, plan: Optional[NodePlan] = None):
        self.node = node
        self.embedding = embedding
        self.plan = plan

    @property
    def type_pair(self) -> Tuple[int, int]:
        return self.embedding.type_pair()

    def __repr__(self) -> str:
        return f"NeatEmbedding(node={self.node}, type={self.type_pair})"


class RNodeReport:
    """LP optimum and rounded shallow-face sizes of one R-node"""

    def __init__(self, node: int, optimum: Fraction, shallow: Dict[int, int], outer: Tuple[int, int]):
        self.node = node
        self.optimum = optimum
        self.shallow = shallow
        self.outer = outer

    @property
    def within_bound(self) -> bool:
        return all(size <= 2 * self.optimum for size in self.shallow.values())

    def to_dict(self) -> dict:
        return {
            "node": self.node,
            "lp_optimum": str(self.optimum),
            "shallow_faces": {str(f): size for f, size in sorted(self.shallow.items())},
        }

    def __repr__(self) -> str:
        return f"RNodeReport(node={self.node}, M={self.optimum}, shallow={self.shallow})"


class NeatState:
    """Neat embeddings, S-chain embeddings and plans built so far"""

    def __init__(self, tree: SPQRTree):
        self.tree = tree
        self.neats: Dict[int, NeatEmbedding] = {}
        self.chains: Dict[int, PertinentEmbedding] = {}
        self.plans: Dict[int, NodePlan] = {}
        self.reports: Dict[int, RNodeReport] = {}

    def embedding(self, nid: int) -> PertinentEmbedding:
        if self.tree.kind(nid) == NodeKind.Q:
            return PertinentEmbedding.of_q_node(self.tree, nid)
        if self.tree.kind(nid) == NodeKind.S:
            return self.chains[nid]
        return self.neats[nid].embedding

    def pair(self, nid: int) -> Tuple[int, int]:
        if self.tree.kind(nid) == NodeKind.Q:
            return 1, 1
        return self.neats[nid].type_pair

    def children(self, nid: int) -> Dict[int, PertinentEmbedding]:
        return {c: self.embedding(c) for c in self.tree.children(nid)}


def boundary_min_length(tree: SPQRTree, nid: int, state: NeatState) -> int:
    """Shortest boundary path a child of a P-node can show"""
    if tree.kind(nid) == NodeKind.S:
        return sum(state.pair(g)[0] for g in tree.children(nid))
    return state.pair(nid)[0]


def _chain(tree: SPQRTree, s_node: int, state: NeatState, short_face: Dict[EdgeKey, int]):
    """Embed an S-node with each grandchild's short side in the given S face"""
    skeleton = SkeletonFaces(tree, s_node, embed_skeleton(tree, s_node))
    plan = NodePlan()
    for e in tree.child_edges(s_node):
        a, b = state.pair(e.target)
        if a != b:
            plan.require(e.key, skeleton.dart_in(e.key, short_face[e.key]), a)
    state.plans[s_node] = plan
    state.chains[s_node] = build_pertinent(tree, s_node, plan, state.children(s_node))


def _uniform_chain(tree: SPQRTree, s_node: int, state: NeatState):
    """All short sides toward the face of the S-node's parent dart u->v"""
    skeleton = SkeletonFaces(tree, s_node, embed_skeleton(tree, s_node))
    parent = tree.parent_edge(s_node)
    face = skeleton.face_of[(parent.key, parent.u, parent.v)]
    _chain(tree, s_node, state, {e.key: face for e in tree.child_edges(s_node)})


def neat_p_node(tree: SPQRTree, nid: int, state: NeatState) -> NeatEmbedding:
    """The two children with the shortest boundary paths go outside"""
    children = tree.children(nid)
    for c in children:
        if tree.kind(c) == NodeKind.S:
            _uniform_chain(tree, c, state)
    lengths = {c: boundary_min_length(tree, c, state) for c in children}
    by_length = sorted(children, key=lambda c: (lengths[c], c))
    if len(by_length) == 1:
        # two parallel edges: the single child is both outer sides
        alpha = beta = by_length[0]
        order = [alpha]
    else:
        alpha, beta = by_length[0], by_length[1]
        middle = [c for c in children if c not in (alpha, beta)]
        order = [alpha] + middle + [beta]

    left, right = p_node_sides(tree, nid)
    plan = NodePlan(params=[tree.child_edge(nid, c).key for c in order])
    for c in order:
        key = tree.child_edge(nid, c).key
        plan.require(key, right if c == beta else left, lengths[c])
    embedding = build_pertinent(tree, nid, plan, state.children(nid))
    logger.debug(f"P-node {nid}: alpha={alpha} beta={beta} type={embedding.type_pair()}")
    return NeatEmbedding(nid, embedding, plan)


def _r_node_lp(
    expanded: List[Tuple[int, ExpandedEdge, Tuple[int, int]]],
    pairs: List[Tuple[int, int]],
    outer: Tuple[int, int],
) -> Tuple[Fraction, Dict[int, int]]:
    """Solve the orientation LP; returns M and, per expanded edge, its short face"""
    lp = LPInstance()
    lp.add_variable("M", lb=0)
    load: Dict[int, Dict[str, int]] = {}
    fixed_short: Dict[int, int] = {}
    for i, (_, _, (f, g)) in enumerate(expanded):
        a, b = pairs[i]
        out = f if f in outer else (g if g in outer else None)
        if out is not None:
            fixed_short[i] = out
            continue
        xf = lp.add_variable(f"x_{i}_{f}", lb=a, ub=b)
        xg = lp.add_variable(f"x_{i}_{g}", lb=a, ub=b)
        lp.add_constraint({xf: 1, xg: 1}, "==", a + b)
        load.setdefault(f, {})[xf] = 1
        load.setdefault(g, {})[xg] = 1

    constant: Dict[int, int] = {}
    for i, out in fixed_short.items():
        a, b = pairs[i]
        f, g = expanded[i][2]
        inner = g if out == f else f
        if inner not in outer:
            constant[inner] = constant.get(inner, 0) + b

    for face in sorted(set(load) | set(constant)):
        if face in outer:
            continue
        coeffs = dict(load.get(face, {}))
        coeffs["M"] = -1
        lp.add_constraint(coeffs, "<=", -constant.get(face, 0))
    lp.minimize({"M": 1})
    optimum, values = solve_lp(lp)

    short = dict(fixed_short)
    for i, (_, _, (f, g)) in enumerate(expanded):
        if i in short:
            continue
        xf, xg = values[f"x_{i}_{f}"], values[f"x_{i}_{g}"]
        if xf < xg or (xf == xg and f < g):
            short[i] = f
        else:
            short[i] = g
    return optimum, short


def neat_r_node(tree: SPQRTree, nid: int, state: NeatState) -> Tuple[NeatEmbedding, RNodeReport]:
    """LP-rounded orientation of the expanded skeleton"""
    skeleton = SkeletonFaces(tree, nid, embed_skeleton(tree, nid))
    expanded_skel = tree.expanded_skeleton(nid)
    expanded = []
    for key, path in sorted(expanded_skel.paths.items()):
        e = tree.skeleton_edge(key)
        faces_st = skeleton.faces_of_edge(key, e.u, e.v)
        for x in path:
            expanded.append((key, x, faces_st))
    pairs = [state.pair(x.node) for _, x, _ in expanded]
    optimum, short = _r_node_lp(expanded, pairs, skeleton.outer)

    shallow: Dict[int, int] = {f: 0 for f in skeleton.inner()}
    for i, (_, _, (f, g)) in enumerate(expanded):
        a, b = pairs[i]
        long_face = g if short[i] == f else f
        if short[i] in shallow:
            shallow[short[i]] += a
        if long_face in shallow:
            shallow[long_face] += b
    report = RNodeReport(nid, optimum, shallow, skeleton.outer)
    if not report.within_bound:
        raise WitnessError(f"R-node {nid}: rounded face exceeds twice the LP optimum {optimum}")

    plan = NodePlan()
    s_faces: Dict[int, Dict[EdgeKey, int]] = {}
    for i, (key, x, (f, _)) in enumerate(expanded):
        e = tree.skeleton_edge(key)
        if x.grand_key is None:
            a, b = pairs[i]
            if a != b:
                plan.require(key, skeleton.dart_in(key, short[i]), a)
            continue
        # R face at dart u->v of e continues in the S face at the S parent dart v->u
        s_node = e.target
        s_skeleton = SkeletonFaces(tree, s_node, embed_skeleton(tree, s_node))
        s_parent = tree.parent_edge(s_node)
        tail, head = (e.v, e.u) if short[i] == f else (e.u, e.v)
        s_faces.setdefault(s_node, {})[x.grand_key] = s_skeleton.face_of[(s_parent.key, tail, head)]
    for s_node, short_face in s_faces.items():
        _chain(tree, s_node, state, short_face)

    embedding = build_pertinent(tree, nid, plan, state.children(nid))
    logger.debug(f"R-node {nid}: M={optimum} shallow={shallow} type={embedding.type_pair()}")
    return NeatEmbedding(nid, embedding, plan), report


def neat_embeddings(tree: SPQRTree) -> NeatState:
    """Neat embeddings of every Q-, P- and R-node, bottom-up"""
    state = NeatState(tree)
    for nid in tree.post_order():
        kind = tree.kind(nid)
        if nid == tree.root or kind in (NodeKind.Q, NodeKind.S):
            continue
        if kind == NodeKind.P:
            neat = neat_p_node(tree, nid, state)
        else:
            neat, state.reports[nid] = neat_r_node(tree, nid, state)
        state.neats[nid] = neat
        state.plans[nid] = neat.plan
    return state


def neat_root(tree: SPQRTree, state: NeatState) -> RotationSystem:
    """Glue the root child; an S root child puts all short sides on one face"""
    top = tree.root_child()
    if tree.kind(top) == NodeKind.S:
        _uniform_chain(tree, top, state)
    return materialize(tree, state.plans)


def approximate(g: Multigraph) -> Tuple[RotationSystem, int, NeatState]:
    if not is_biconnected(g):
        raise NotBiconnected("Input graph is not biconnected")
    tree = build_spqr(g)
    state = neat_embeddings(tree)
    rot = neat_root(tree, state)
    largest = faces(g, rot).max_face
    logger.info(f"Approximate max face {largest} over {len(state.reports)} R-nodes")
    return rot, largest, state


def approx_min_max_face(g: Multigraph) -> Tuple[RotationSystem, int]:
    """Embedding with max face at most 6 * OPT(g), and its max face"""
    rot, largest, _ = approximate(g)
    return rot, largest
