"""
Skeleton embeddings: P-node permutations, R-node flips, fixed S/Q rotations
"""
from typing import Sequence, Union

from faceopt.errors import InvalidParams
from faceopt.graph.rotation import RotationSystem
from faceopt.models.node_kind import NodeKind
from faceopt.spqr.tree import EdgeKey, SPQRTree

SkeletonParams = Union[None, bool, Sequence[EdgeKey]]


def p_node_order(tree: SPQRTree, nid: int, params: SkeletonParams) -> list:
    """Child edge keys in the order they follow the parent edge at the first pole"""
    parent = tree.parent_edge(nid)
    children = [e.key for e in tree.child_edges(nid)]
    if params is None:
        return children
    if isinstance(params, bool):
        raise InvalidParams(f"P-node {nid} takes a permutation, not a flip bit")
    order = [tuple(k) for k in params]
    if order and parent is not None and order[0] == parent.key:
        order = order[1:]
    if sorted(order) != sorted(children):
        raise InvalidParams(f"Permutation {order} does not match the edges of P-node {nid}")
    return order


def embed_skeleton(tree: SPQRTree, nid: int, params: SkeletonParams = None) -> RotationSystem:
    """Rotation of skel(nid) over skeleton edge keys (and the real edge for Q-nodes)"""
    node = tree.nodes[nid]
    if node.kind == NodeKind.Q:
        if params is not None:
            raise InvalidParams("Q-nodes take no parameters")
        (virtual,) = node.edges
        return RotationSystem({x: (node.real_edge, virtual.key) for x in virtual.ends})

    if node.kind == NodeKind.S:
        if params is not None:
            raise InvalidParams("S-nodes take no parameters")
        rotation = {v: [] for v in node.vertices}
        for e in node.edges:
            rotation[e.u].append(e.key)
            rotation[e.v].append(e.key)
        return RotationSystem(rotation)

    if node.kind == NodeKind.P:
        parent = tree.parent_edge(nid)
        if parent is None:
            raise InvalidParams("A P-node is never the root")
        order = p_node_order(tree, nid, params)
        return RotationSystem({
            parent.u: [parent.key] + order,
            parent.v: [parent.key] + list(reversed(order)),
        })

    if params is not None and not isinstance(params, bool):
        raise InvalidParams(f"R-node {nid} takes a flip bit")
    base = node.base_rotation
    if params:
        return RotationSystem({v: tuple(reversed(seq)) for v, seq in base.items()})
    return RotationSystem(base)


def p_node_sides(tree: SPQRTree, nid: int):
    """Darts of P-node child edges facing the previous and the next face

    With the first pole u, every child edge shares the face containing its
    dart u->v with the preceding edge and the face containing v->u with the
    following edge.
    """
    parent = tree.parent_edge(nid)
    return (parent.u, parent.v), (parent.v, parent.u)
