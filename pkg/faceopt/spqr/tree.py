"""
SPQR-tree data model, rooting and queries
"""
import logging
from collections import deque
from typing import Dict, FrozenSet, Hashable, List, Optional, Tuple

from faceopt.errors import InvalidParams
from faceopt.graph.multigraph import Multigraph
from faceopt.models.node_kind import NodeKind

logger = logging.getLogger(__name__)

# (node id, index) of a virtual skeleton edge; real edges keep their string ids
EdgeKey = Tuple[int, int]


class SkeletonEdge:
    """A virtual edge of a skeleton, standing for the neighbour `target`"""

    __slots__ = ('key', 'u', 'v', 'target', 'twin')

    def __init__(self, key: EdgeKey, u: str, v: str, target: int, twin: Optional[EdgeKey] = None):
        self.key = key
        self.u = u
        self.v = v
        self.target = target
        self.twin = twin

    @property
    def ends(self) -> Tuple[str, str]:
        return self.u, self.v

    def other(self, x: str) -> str:
        return self.v if x == self.u else self.u

    def label(self) -> str:
        return f"v{self.key[0]}.{self.key[1]}"

    def __repr__(self) -> str:
        return f"SkeletonEdge({self.label()}: {self.u}-{self.v} -> {self.target})"


class SPQRNode:
    """One node with its skeleton; immutable after the builder finishes"""

    def __init__(
        self,
        node_id: int,
        kind: NodeKind,
        edges: List[SkeletonEdge],
        real_edge: Optional[str] = None,
        base_rotation: Optional[Dict[str, Tuple[EdgeKey, ...]]] = None,
    ):
        self.id = node_id
        self.kind = kind
        self.edges: Tuple[SkeletonEdge, ...] = tuple(sorted(edges, key=lambda e: e.key))
        self.real_edge = real_edge
        self.base_rotation = base_rotation
        self._by_key = {e.key: e for e in self.edges}
        verts = set()
        for e in self.edges:
            verts.update(e.ends)
        self.vertices: Tuple[str, ...] = tuple(sorted(verts))

    def edge(self, key: EdgeKey) -> SkeletonEdge:
        return self._by_key[key]

    def edge_to(self, target: int) -> SkeletonEdge:
        for e in self.edges:
            if e.target == target:
                return e
        raise KeyError(target)

    @property
    def size(self) -> int:
        """Number of skeleton edges (the real edge counts for Q-nodes)"""
        return len(self.edges) + (1 if self.real_edge is not None else 0)

    def __repr__(self) -> str:
        return f"SPQRNode({self.id}, {self.kind}, size={self.size})"


class ExpandedEdge:
    """Edge of an expanded skeleton; `node` is the non-S node it represents"""

    __slots__ = ('u', 'v', 'node', 'via', 'grand_key')

    def __init__(self, u: str, v: str, node: int, via: EdgeKey, grand_key: Optional[EdgeKey] = None):
        self.u = u
        self.v = v
        self.node = node
        self.via = via
        self.grand_key = grand_key

    def __repr__(self) -> str:
        return f"ExpandedEdge({self.u}-{self.v} -> {self.node})"


class ExpandedSkeleton:
    """Skeleton of a P- or R-node with S-children inlined as paths"""

    def __init__(self, node: int, parent_key: Optional[EdgeKey], paths: Dict[EdgeKey, List[ExpandedEdge]]):
        self.node = node
        self.parent_key = parent_key
        self.paths = paths

    @property
    def edges(self) -> List[ExpandedEdge]:
        return [x for key in sorted(self.paths) for x in self.paths[key]]

    def path_length(self, key: EdgeKey) -> int:
        return len(self.paths[key])


class SPQRTree:
    """Rooted view over the SPQR nodes; rerooting creates a new view"""

    def __init__(self, graph: Multigraph, nodes: Dict[int, SPQRNode], root_edge: str):
        if not graph.has_edge(root_edge):
            raise InvalidParams(f"Unknown root edge: {root_edge}")
        self.graph = graph
        self.nodes = nodes
        self.root_edge = root_edge
        self._q_of = {node.real_edge: nid for nid, node in nodes.items() if node.kind == NodeKind.Q}
        self._edge_index: Dict[EdgeKey, SkeletonEdge] = {e.key: e for node in nodes.values() for e in node.edges}
        self.root = self._q_of[root_edge]
        self._orient()
        self._pert_edges: Dict[int, FrozenSet[str]] = {}
        self._pert_vertices: Dict[int, FrozenSet[str]] = {}
        self._collect_pertinent()

    def _orient(self):
        self._parent: Dict[int, Optional[int]] = {self.root: None}
        self._children: Dict[int, List[int]] = {nid: [] for nid in self.nodes}
        order = []
        queue = deque([self.root])
        while queue:
            nid = queue.popleft()
            order.append(nid)
            for e in self.nodes[nid].edges:
                if e.target == self._parent[nid]:
                    continue
                self._parent[e.target] = nid
                self._children[nid].append(e.target)
                queue.append(e.target)
        if len(order) != len(self.nodes):
            raise InvalidParams("SPQR nodes do not form a tree")
        for nid in self._children:
            self._children[nid].sort()
        self._bfs_order = order

    def _collect_pertinent(self):
        for nid in reversed(self._bfs_order):
            node = self.nodes[nid]
            if node.kind == NodeKind.Q:
                self._pert_edges[nid] = frozenset([node.real_edge])
                self._pert_vertices[nid] = frozenset(self.graph.endpoints(node.real_edge))
                continue
            edges, verts = set(), set()
            for child in self._children[nid]:
                edges |= self._pert_edges[child]
                verts |= self._pert_vertices[child]
            self._pert_edges[nid] = frozenset(edges)
            self._pert_vertices[nid] = frozenset(verts)

    # structure

    def kind(self, nid: int) -> NodeKind:
        return self.nodes[nid].kind

    def parent(self, nid: int) -> Optional[int]:
        return self._parent[nid]

    def children(self, nid: int) -> List[int]:
        """Children in ascending node id"""
        return list(self._children[nid])

    def parent_edge(self, nid: int) -> Optional[SkeletonEdge]:
        """Skeleton edge of nid that points to its parent"""
        parent = self._parent[nid]
        if parent is None:
            return None
        return self.nodes[nid].edge_to(parent)

    def child_edge(self, nid: int, child: int) -> SkeletonEdge:
        return self.nodes[nid].edge_to(child)

    def child_edges(self, nid: int) -> List[SkeletonEdge]:
        parent = self._parent[nid]
        return [e for e in self.nodes[nid].edges if e.target != parent]

    def poles(self, nid: int) -> Tuple[str, str]:
        if nid == self.root:
            return self.graph.endpoints(self.root_edge)
        return self.parent_edge(nid).ends

    def post_order(self) -> List[int]:
        """Every node after all of its children"""
        return list(reversed(self._bfs_order))

    def pre_order(self) -> List[int]:
        return list(self._bfs_order)

    def nodes_of_kind(self, kind: NodeKind) -> List[int]:
        return sorted(nid for nid, node in self.nodes.items() if node.kind == kind)

    def q_node(self, edge_id: str) -> int:
        return self._q_of[edge_id]

    def root_child(self) -> int:
        return self._children[self.root][0]

    def endpoints(self, key: Hashable) -> Tuple[str, str]:
        """Endpoints of a real edge id or a virtual edge key"""
        if isinstance(key, tuple):
            return self._edge_index[key].ends
        return self.graph.endpoints(key)

    def skeleton_edge(self, key: EdgeKey) -> SkeletonEdge:
        return self._edge_index[key]

    # pertinent and expansion graphs

    def pertinent_edges(self, nid: int) -> FrozenSet[str]:
        return self._pert_edges[nid]

    def pertinent_vertices(self, nid: int) -> FrozenSet[str]:
        return self._pert_vertices[nid]

    def pertinent_counts(self, nid: int) -> Tuple[int, int]:
        return len(self._pert_vertices[nid]), len(self._pert_edges[nid])

    def pertinent_graph(self, nid: int) -> Multigraph:
        if nid == self.root:
            raise InvalidParams("The root Q-node has no pertinent graph")
        return self.graph.subgraph(self._pert_edges[nid], poles=self.poles(nid))

    def expansion_counts(self, key: EdgeKey) -> Tuple[int, int]:
        """(n_e, m_e) of the graph a virtual edge stands for"""
        edge = self._edge_index[key]
        owner = key[0]
        if self._parent.get(edge.target) == owner:
            return self.pertinent_counts(edge.target)
        n_pert, m_pert = self.pertinent_counts(owner)
        return self.graph.n - n_pert + 2, self.graph.m - m_pert

    def s_path(self, s_node: int, start: str) -> List[SkeletonEdge]:
        """Non-parent edges of an S-skeleton in path order from `start`"""
        node = self.nodes[s_node]
        parent = self.parent_edge(s_node)
        remaining = [e for e in node.edges if e.key != parent.key]
        path = []
        current = start
        while remaining:
            nxt = next(e for e in remaining if current in e.ends)
            remaining.remove(nxt)
            path.append(nxt)
            current = nxt.other(current)
        return path

    def expanded_skeleton(self, nid: int) -> ExpandedSkeleton:
        if self.kind(nid) not in (NodeKind.P, NodeKind.R):
            raise InvalidParams(f"Node {nid} is a {self.kind(nid)}-node; expected P or R")
        paths: Dict[EdgeKey, List[ExpandedEdge]] = {}
        for e in self.child_edges(nid):
            if self.kind(e.target) == NodeKind.S:
                current = e.u
                path = []
                for g in self.s_path(e.target, e.u):
                    nxt = g.other(current)
                    path.append(ExpandedEdge(current, nxt, g.target, e.key, g.key))
                    current = nxt
                paths[e.key] = path
            else:
                paths[e.key] = [ExpandedEdge(e.u, e.v, e.target, e.key)]
        parent = self.parent_edge(nid)
        return ExpandedSkeleton(nid, parent.key if parent else None, paths)

    # views

    def reroot(self, edge_id: str) -> 'SPQRTree':
        return SPQRTree(self.graph, self.nodes, edge_id)

    def to_dict(self) -> dict:
        nodes = []
        for nid in sorted(self.nodes):
            node = self.nodes[nid]
            entry = {
                "id": nid,
                "kind": node.kind.code,
                "parent": self._parent[nid],
                "children": self._children[nid],
                "poles": list(self.poles(nid)),
                "skeleton": {
                    "vertices": list(node.vertices),
                    "edges": [
                        {"id": e.label(), "ends": [e.u, e.v], "target": e.target}
                        for e in node.edges
                    ],
                },
            }
            if node.real_edge is not None:
                entry["real_edge"] = node.real_edge
            nodes.append(entry)
        return {"root": self.root, "root_edge": self.root_edge, "nodes": nodes}

    def __repr__(self) -> str:
        counts = {kind.code: len(self.nodes_of_kind(kind)) for kind in NodeKind}
        return f"SPQRTree(root={self.root}, {counts})"


def pertinent_graph(t: SPQRTree, nid: int) -> Multigraph:
    return t.pertinent_graph(nid)


def expansion_counts(t: SPQRTree, key: EdgeKey) -> Tuple[int, int]:
    return t.expansion_counts(key)


def expanded_skeleton(t: SPQRTree, nid: int) -> ExpandedSkeleton:
    return t.expanded_skeleton(nid)


def reroot(t: SPQRTree, edge_id: str) -> SPQRTree:
    return t.reroot(edge_id)
