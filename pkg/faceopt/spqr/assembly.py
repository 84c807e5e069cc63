"""
Gluing skeleton embeddings into embeddings of pertinent graphs and of G

Replacing the virtual edge e=(s,t) of a node by the embedded child splices the
child's rotation at each pole in place of e. The skeleton face containing dart
s->t of e receives the child's boundary path from the face containing the
child's parent dart t->s.
"""
import logging
from typing import Callable, Dict, Hashable, List, Optional, Tuple

from faceopt.errors import WitnessError
from faceopt.graph.rotation import RotationSystem, trace_face, trace_faces
from faceopt.models.node_kind import NodeKind
from faceopt.spqr.skeleton import SkeletonParams, embed_skeleton
from faceopt.spqr.tree import EdgeKey, SPQRTree

logger = logging.getLogger(__name__)

Orientation = Tuple[Tuple[str, str], int]


class PertinentEmbedding:
    """Rotation of pert(node) with its parent edge kept as a placeholder"""

    def __init__(
        self,
        node: int,
        placeholder: EdgeKey,
        poles: Tuple[str, str],
        rotation: Dict[str, List[Hashable]],
        endpoints: Callable[[Hashable], Tuple[str, str]],
    ):
        self.node = node
        self.placeholder = placeholder
        self.poles = poles
        self.rotation = rotation
        self.endpoints = endpoints

    @classmethod
    def of_q_node(cls, tree: SPQRTree, nid: int) -> 'PertinentEmbedding':
        node = tree.nodes[nid]
        (virtual,) = node.edges
        rotation = {x: [virtual.key, node.real_edge] for x in virtual.ends}
        return cls(nid, virtual.key, virtual.ends, rotation, tree.endpoints)

    def after(self, pole: str) -> List[Hashable]:
        """Rotation at a pole read from just after the placeholder"""
        seq = self.rotation[pole]
        i = seq.index(self.placeholder)
        return seq[i + 1:] + seq[:i]

    def flipped(self) -> 'PertinentEmbedding':
        rotation = {v: list(reversed(seq)) for v, seq in self.rotation.items()}
        return PertinentEmbedding(self.node, self.placeholder, self.poles, rotation, self.endpoints)

    def side_length(self, tail: str, head: str) -> int:
        """Length of the boundary path on the face through placeholder dart tail->head"""
        walk = trace_face(self.rotation, self.endpoints, (self.placeholder, tail, head))
        return len(walk) - 1

    def type_pair(self) -> Tuple[int, int]:
        s, t = self.poles
        return tuple(sorted((self.side_length(s, t), self.side_length(t, s))))

    def inner_face_sizes(self) -> List[int]:
        """Sizes of faces not touching the placeholder"""
        walks = trace_faces(self.rotation, self.endpoints)
        return [len(w) for w in walks if all(d[0] != self.placeholder for d in w)]


class NodePlan:
    """Skeleton parameters plus required child orientations for one node

    `orient[key] = ((x, y), length)` asks that the child at skeleton edge key
    show a boundary path of `length` to the skeleton face containing dart x->y.
    """

    def __init__(self, params: SkeletonParams = None, orient: Optional[Dict[EdgeKey, Orientation]] = None):
        self.params = params
        self.orient: Dict[EdgeKey, Orientation] = dict(orient or {})

    def require(self, key: EdgeKey, dart: Tuple[str, str], length: int):
        self.orient[key] = (dart, length)

    def __repr__(self) -> str:
        return f"NodePlan(params={self.params}, orient={self.orient})"


class SkeletonFaces:
    """Faces of an embedded skeleton, indexed by dart"""

    def __init__(self, tree: SPQRTree, nid: int, rotation: RotationSystem):
        self.walks = trace_faces(rotation, tree.endpoints)
        self.face_of: Dict[Tuple[Hashable, str, str], int] = {}
        for idx, walk in enumerate(self.walks):
            for dart in walk:
                self.face_of[dart] = idx
        parent = tree.parent_edge(nid)
        self.parent = parent
        if parent is not None:
            self.outer = (self.face_of[(parent.key, parent.u, parent.v)],
                          self.face_of[(parent.key, parent.v, parent.u)])
        else:
            self.outer = ()

    def size(self, idx: int) -> int:
        return len(self.walks[idx])

    def dart_in(self, key: Hashable, idx: int) -> Tuple[str, str]:
        """The dart of `key` lying on face idx"""
        for k, tail, head in self.walks[idx]:
            if k == key:
                return tail, head
        raise KeyError((key, idx))

    def faces_of_edge(self, key: Hashable, u: str, v: str) -> Tuple[int, int]:
        return self.face_of[(key, u, v)], self.face_of[(key, v, u)]

    def inner(self) -> List[int]:
        return [i for i in range(len(self.walks)) if i not in self.outer]


def orient_child(child: PertinentEmbedding, dart: Tuple[str, str], length: int) -> PertinentEmbedding:
    """Flip child if needed so the face through parent dart x->y gets `length`"""
    x, y = dart
    if child.side_length(y, x) == length:
        return child
    flipped = child.flipped()
    if flipped.side_length(y, x) == length:
        return flipped
    raise WitnessError(f"Node {child.node} has no boundary path of length {length}")


def _glue(rotation: Dict[str, List[Hashable]], key: EdgeKey, child: PertinentEmbedding):
    for pole in child.poles:
        seq = rotation[pole]
        i = seq.index(key)
        rotation[pole] = seq[:i] + child.after(pole) + seq[i + 1:]
    for v, seq in child.rotation.items():
        if v not in child.poles:
            rotation[v] = list(seq)


def build_pertinent(
    tree: SPQRTree,
    nid: int,
    plan: Optional[NodePlan],
    children: Dict[int, PertinentEmbedding],
) -> PertinentEmbedding:
    """Embedding of pert(nid) from its skeleton and embedded children"""
    if tree.kind(nid) == NodeKind.Q:
        return PertinentEmbedding.of_q_node(tree, nid)
    plan = plan or NodePlan()
    skeleton = embed_skeleton(tree, nid, plan.params)
    rotation = {v: list(seq) for v, seq in skeleton.items()}
    for e in tree.child_edges(nid):
        child = children[e.target]
        required = plan.orient.get(e.key)
        if required is not None:
            child = orient_child(child, *required)
        _glue(rotation, e.key, child)
    parent = tree.parent_edge(nid)
    return PertinentEmbedding(nid, parent.key, parent.ends, rotation, tree.endpoints)


def materialize(
    tree: SPQRTree,
    plans: Optional[Dict[int, NodePlan]] = None,
    types: Optional[Dict[int, Tuple[int, int]]] = None,
) -> RotationSystem:
    """Rotation system of G from per-node plans; nodes without a plan use defaults

    If `types` is given it is filled with the realized (a, b) of every non-root node.
    """
    plans = plans or {}
    built: Dict[int, PertinentEmbedding] = {}
    for nid in tree.post_order():
        if nid == tree.root:
            continue
        children = {c: built.pop(c) for c in tree.children(nid)}
        built[nid] = build_pertinent(tree, nid, plans.get(nid), children)
        if types is not None:
            types[nid] = built[nid].type_pair()

    root_edge = tree.root_edge
    virtual = tree.child_edge(tree.root, tree.root_child())
    rotation = {x: [root_edge, virtual.key] for x in tree.graph.endpoints(root_edge)}
    _glue(rotation, virtual.key, built.pop(tree.root_child()))
    return RotationSystem(rotation)
