"""
SPQR-tree construction by recursive split-pair decomposition

Split components are found by peeling multi-edge bundles into bonds and
cutting at separation pairs until every piece is a bond, a cycle, or a
triconnected graph; adjacent bonds and adjacent cycles are then merged.
"""
import logging
from collections import defaultdict
from typing import Dict, List, Optional, Tuple

import networkx as nx
from networkx.utils import UnionFind

from faceopt.errors import InvalidParams, NonPlanarSkeleton, NotBiconnected, TooSmall
from faceopt.graph.multigraph import Multigraph
from faceopt.graph.rotation import trace_faces
from faceopt.graph.structure import is_biconnected
from faceopt.models.node_kind import NodeKind
from faceopt.spqr.tree import SkeletonEdge, SPQRNode, SPQRTree

logger = logging.getLogger(__name__)

# ("r", edge id) for real edges, ("s", n) for split edges
WorkKey = Tuple[str, object]
WorkEdge = Tuple[WorkKey, str, str]


class _Component:
    def __init__(self, kind: NodeKind, edges: List[WorkEdge]):
        self.kind = kind
        self.edges = sorted(edges)


class _Splitter:
    """Produces split components of a biconnected multigraph"""

    def __init__(self):
        self.components: List[_Component] = []
        self._next_split = 0

    def _new_split(self) -> WorkKey:
        key = ("s", self._next_split)
        self._next_split += 1
        return key

    def run(self, edges: List[WorkEdge]):
        pending = [edges]
        while pending:
            self._step(pending.pop(), pending)

    def _step(self, edges: List[WorkEdge], pending: List[List[WorkEdge]]):
        vertices = {x for _, u, v in edges for x in (u, v)}
        if len(vertices) == 2:
            self.components.append(_Component(NodeKind.P, edges))
            return

        bundles: Dict[frozenset, List[WorkEdge]] = defaultdict(list)
        for edge in sorted(edges):
            bundles[frozenset(edge[1:])].append(edge)
        simple: List[WorkEdge] = []
        for bundle in bundles.values():
            if len(bundle) == 1:
                simple.append(bundle[0])
                continue
            _, u, v = bundle[0]
            split = (self._new_split(), u, v)
            self.components.append(_Component(NodeKind.P, bundle + [split]))
            simple.append(split)

        graph = nx.Graph()
        graph.add_edges_from((u, v) for _, u, v in simple)
        if all(d == 2 for _, d in graph.degree()):
            self.components.append(_Component(NodeKind.S, simple))
            return

        found = _find_separation_pair(graph)
        if found is None:
            self.components.append(_Component(NodeKind.R, simple))
            return
        (a, b), side = found
        split = (self._new_split(), a, b)
        first = [e for e in simple if e[1] in side or e[2] in side]
        rest = [e for e in simple if not (e[1] in side or e[2] in side)]
        pending.append(rest + [split])
        pending.append(first + [split])


def _find_separation_pair(graph: nx.Graph) -> Optional[Tuple[Tuple[str, str], set]]:
    """Smallest separation pair and the vertex set of one side"""
    for a in sorted(graph.nodes):
        rest = graph.subgraph(x for x in graph.nodes if x != a)
        cuts = sorted(nx.articulation_points(rest))
        if not cuts:
            continue
        b = cuts[0]
        remaining = rest.subgraph(x for x in rest.nodes if x != b)
        comps = sorted((sorted(c) for c in nx.connected_components(remaining)), key=lambda c: c[0])
        return (a, b) if a < b else (b, a), set(comps[0])
    return None


def _merge(components: List[_Component]) -> List[_Component]:
    """Merge bonds sharing a split edge with bonds, and cycles with cycles"""
    groups = UnionFind(range(len(components)))
    where: Dict[WorkKey, List[int]] = defaultdict(list)
    for idx, comp in enumerate(components):
        for key, _, _ in comp.edges:
            if key[0] == "s":
                where[key].append(idx)
    for key, (i, j) in where.items():
        if components[i].kind == components[j].kind and components[i].kind in (NodeKind.P, NodeKind.S):
            groups.union(i, j)

    merged = []
    for members in sorted(sorted(s) for s in groups.to_sets()):
        inner = {key for key, (i, j) in where.items() if groups[i] == groups[j] and i in members}
        edges = [e for idx in members for e in components[idx].edges if e[0] not in inner]
        merged.append(_Component(components[members[0]].kind, edges))
    return merged


def _rigid_rotation(node: SPQRNode) -> Dict[str, Tuple]:
    graph = nx.Graph()
    graph.add_nodes_from(node.vertices)
    key_of = {}
    for e in node.edges:
        graph.add_edge(e.u, e.v)
        key_of[frozenset(e.ends)] = e.key
    planar, embedding = nx.check_planarity(graph)
    if not planar:
        raise NonPlanarSkeleton(f"R-node {node.id} skeleton is not planar")
    # networkx reports clockwise orders; store counterclockwise
    rotation = {
        v: tuple(key_of[frozenset((v, w))] for w in reversed(list(embedding.neighbors_cw_order(v))))
        for v in node.vertices
    }
    walks = trace_faces(rotation, lambda key: node.edge(key).ends)
    if len(node.vertices) - len(node.edges) + len(walks) != 2:
        raise NonPlanarSkeleton(f"R-node {node.id} embedding failed the Euler check")
    return rotation


def _build_nodes(g: Multigraph, components: List[_Component]) -> Dict[int, SPQRNode]:
    q_ids = {eid: i for i, eid in enumerate(g.edge_ids)}
    first_inner = len(q_ids)
    inner_edges: Dict[int, List[SkeletonEdge]] = {}
    q_edges: Dict[int, SkeletonEdge] = {}
    split_sites: Dict[WorkKey, List[Tuple[int, SkeletonEdge]]] = defaultdict(list)

    for offset, comp in enumerate(components):
        nid = first_inner + offset
        edges = []
        for idx, (key, u, v) in enumerate(comp.edges):
            edge = SkeletonEdge((nid, idx), u, v, target=-1)
            if key[0] == "r":
                q = q_ids[key[1]]
                edge.target = q
                twin = SkeletonEdge((q, 0), u, v, target=nid, twin=edge.key)
                edge.twin = twin.key
                q_edges[q] = twin
            else:
                split_sites[key].append((nid, edge))
            edges.append(edge)
        inner_edges[nid] = edges

    for key, sites in split_sites.items():
        (n1, e1), (n2, e2) = sites
        e1.target, e1.twin = n2, e2.key
        e2.target, e2.twin = n1, e1.key

    nodes: Dict[int, SPQRNode] = {}
    for eid, q in q_ids.items():
        nodes[q] = SPQRNode(q, NodeKind.Q, [q_edges[q]], real_edge=eid)
    for offset, comp in enumerate(components):
        nid = first_inner + offset
        nodes[nid] = SPQRNode(nid, comp.kind, inner_edges[nid])
        if comp.kind == NodeKind.R:
            nodes[nid].base_rotation = _rigid_rotation(nodes[nid])
    return nodes


def build_spqr(g: Multigraph, root_edge: Optional[str] = None) -> SPQRTree:
    """Canonical SPQR-tree of g rooted at the Q-node of root_edge (default: smallest edge id)"""
    if g.m < 2:
        raise TooSmall(f"Need at least 2 edges, got {g.m}")
    if not is_biconnected(g):
        raise NotBiconnected("Input graph is not biconnected")
    if root_edge is None:
        root_edge = g.edge_ids[0]
    elif not g.has_edge(root_edge):
        raise InvalidParams(f"Unknown root edge: {root_edge}")

    splitter = _Splitter()
    splitter.run([(("r", eid), u, v) for eid, u, v in g.edges()])
    components = _merge(splitter.components)
    nodes = _build_nodes(g, components)
    tree = SPQRTree(g, nodes, root_edge)
    logger.debug(f"Built {tree!r} for n={g.n}, m={g.m}")
    return tree
