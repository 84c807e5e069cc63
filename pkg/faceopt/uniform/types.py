"""
Outer face lengths, forced almost-uniform types and shared P-node alternation
"""
from typing import List, Optional

from faceopt.minmaxface.types import TypePair
from faceopt.models.node_kind import NodeKind
from faceopt.spqr.tree import EdgeKey, SPQRTree


def outer_face_length(n: int, m: int, k: int) -> int:
    """Outer length of any embedding of an (n, m) graph whose inner faces all have size k"""
    return k * (n - m - 1) + 2 * m


# boundary paths of an almost 6-uniform pertinent graph, by outer length and
# whether the poles share a colour class; (1,5) never occurs
_SIX_TABLE = {
    (2, False): TypePair(1, 1),
    (4, True): TypePair(2, 2),
    (4, False): TypePair(1, 3),
    (6, True): TypePair(2, 4),
    (6, False): TypePair(3, 3),
    (8, True): TypePair(4, 4),
    (8, False): TypePair(3, 5),
    (10, False): TypePair(5, 5),
}


def forced_type(length: int, same_colour: bool) -> Optional[TypePair]:
    """The only type an almost 6-uniform embedding with this outer length can have"""
    return _SIX_TABLE.get((length, same_colour))


class AlmostUniformType:
    """Outer length of a pertinent graph and the type it is forced to"""

    def __init__(self, length: int, same_colour: bool):
        self.length = length
        self.same_colour = same_colour
        self.pair = forced_type(length, same_colour)

    @property
    def feasible(self) -> bool:
        return self.pair is not None

    def __repr__(self) -> str:
        return f"AlmostUniformType(length={self.length}, pair={self.pair})"


def is_q_neighbour(tree: SPQRTree, nid: int, key: EdgeKey) -> bool:
    return tree.kind(tree.skeleton_edge(key).target) == NodeKind.Q


def alternating_order(tree: SPQRTree, nid: int) -> Optional[List[EdgeKey]]:
    """P-node child keys so that Q and non-Q neighbours alternate around the parent"""
    parent = tree.parent_edge(nid)
    q_keys = [e.key for e in tree.child_edges(nid) if is_q_neighbour(tree, nid, e.key)]
    other_keys = [e.key for e in tree.child_edges(nid) if not is_q_neighbour(tree, nid, e.key)]
    if is_q_neighbour(tree, nid, parent.key):
        first, second = other_keys, q_keys
    else:
        first, second = q_keys, other_keys
    if len(first) != len(second) + 1:
        return None
    order = []
    for i, key in enumerate(first):
        order.append(key)
        if i < len(second):
            order.append(second[i])
    return order
