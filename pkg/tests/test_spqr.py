import networkx as nx
import pytest
from hypothesis import given
from hypothesis import strategies as st

from faceopt.errors import InvalidParams, NotBiconnected, TooSmall
from faceopt.graph.rotation import faces
from faceopt.graph.structure import is_triconnected
from faceopt.models.node_kind import NodeKind
from faceopt.spqr.assembly import materialize
from faceopt.spqr.builder import build_spqr
from faceopt.spqr.skeleton import embed_skeleton
from tests.corpus import PROPERTY_SETTINGS, graph_from_pairs, k4, random_graphs, theta


def _kind_counts(tree):
    return {kind: len(tree.nodes_of_kind(kind)) for kind in NodeKind}


def _skeleton_graph(node):
    """Skeleton as a simple networkx graph"""
    graph = nx.Graph()
    graph.add_edges_from(e.ends for e in node.edges)
    return graph


def test_k4_is_one_rigid_node():
    tree = build_spqr(k4())
    assert _kind_counts(tree) == {NodeKind.Q: 6, NodeKind.S: 0, NodeKind.P: 0, NodeKind.R: 1}


def test_theta_is_one_parallel_node_over_three_chains():
    tree = build_spqr(theta())
    assert _kind_counts(tree) == {NodeKind.Q: 6, NodeKind.S: 3, NodeKind.P: 1, NodeKind.R: 0}
    (p,) = tree.nodes_of_kind(NodeKind.P)
    assert len(tree.nodes[p].edges) == 3


def test_rejects_small_and_separable_graphs():
    with pytest.raises(TooSmall):
        build_spqr(graph_from_pairs([("u", "v")]))
    with pytest.raises(NotBiconnected):
        build_spqr(graph_from_pairs([("a", "b"), ("b", "c"), ("c", "a"), ("a", "d"), ("d", "e"), ("e", "a")]))


def test_unknown_root_edge():
    with pytest.raises(InvalidParams):
        build_spqr(k4(), root_edge="nope")


def test_k4_pertinent_graph_of_rigid_node():
    g = k4()
    tree = build_spqr(g)
    (r,) = tree.nodes_of_kind(NodeKind.R)
    pert = tree.pertinent_graph(r)
    assert pert.m == 5
    assert set(pert.poles) == set(g.endpoints(tree.root_edge))
    assert tree.root_edge not in pert.edge_ids


def test_q_node_pertinent_graph_is_its_edge():
    tree = build_spqr(k4())
    q = tree.q_node("e3")
    assert tree.pertinent_graph(q).edge_ids == ("e3",)


def test_expansion_counts():
    tree = build_spqr(theta())
    (p,) = tree.nodes_of_kind(NodeKind.P)
    for e in tree.child_edges(p):
        assert tree.expansion_counts(e.key) == (3, 2)
    s = tree.children(p)[0]
    for e in tree.child_edges(s):
        assert tree.expansion_counts(e.key) == (2, 1)


def test_expansion_counts_of_parent_edge_is_complement():
    g = k4()
    tree = build_spqr(g)
    (r,) = tree.nodes_of_kind(NodeKind.R)
    assert tree.expansion_counts(tree.parent_edge(r).key) == (2, 1)
    q = tree.children(r)[0]
    assert tree.expansion_counts(tree.child_edge(r, q).key) == (2, 1)


def test_k4_minus_edge_expansion():
    # K4 minus an edge, plus the removed edge subdivided into a chain of length 2
    g = graph_from_pairs([("a", "b"), ("a", "c"), ("a", "d"), ("b", "c"), ("b", "d"), ("c", "x"), ("x", "d")])
    tree = build_spqr(g, root_edge="e5")
    (s,) = tree.nodes_of_kind(NodeKind.S)
    r = tree.nodes_of_kind(NodeKind.R)[0]
    key = tree.child_edge(s, r).key if tree.parent(r) == s else tree.parent_edge(s).key
    assert sorted(tree.expansion_counts(key)) == [4, 5]


def test_theta_expanded_skeleton():
    tree = build_spqr(theta())
    (p,) = tree.nodes_of_kind(NodeKind.P)
    expanded = tree.expanded_skeleton(p)
    for e in tree.child_edges(p):
        assert expanded.path_length(e.key) == 2


def test_parallel_skeleton_permutation():
    tree = build_spqr(theta())
    (p,) = tree.nodes_of_kind(NodeKind.P)
    parent = tree.parent_edge(p)
    keys = [e.key for e in tree.child_edges(p)]
    rot = embed_skeleton(tree, p, list(reversed(keys)))
    assert list(rot[parent.u]) == [parent.key] + list(reversed(keys))
    assert list(rot[parent.v]) == [parent.key] + keys


def test_rigid_skeleton_flip_is_mirror():
    tree = build_spqr(k4())
    (r,) = tree.nodes_of_kind(NodeKind.R)
    assert embed_skeleton(tree, r, True) == embed_skeleton(tree, r, False).mirrored()


def test_reroot_shares_nodes():
    tree = build_spqr(k4())
    other = tree.reroot("e4")
    assert other.nodes is tree.nodes
    assert other.root == tree.q_node("e4")
    assert other.parent(tree.root) is not None


def test_to_dict():
    dump = build_spqr(theta()).to_dict()
    assert dump["root_edge"] == "e0"
    kinds = sorted(node["kind"] for node in dump["nodes"])
    assert kinds == ["P"] + ["Q"] * 6 + ["S"] * 3


class TestSPQRProperties:
    @PROPERTY_SETTINGS
    @given(g=random_graphs(max_edges=12))
    def test_regluing_reproduces_edges(self, g):
        tree = build_spqr(g)
        assert len(tree.nodes_of_kind(NodeKind.Q)) == g.m
        child = tree.root_child()
        assert tree.pertinent_edges(child) | {tree.root_edge} == set(g.edge_ids)
        for nid in tree.nodes:
            if tree.kind(nid) == NodeKind.Q:
                continue
            parts = [tree.pertinent_edges(c) for c in tree.children(nid)]
            assert sum(len(p) for p in parts) == len(tree.pertinent_edges(nid))
            assert frozenset().union(*parts) == tree.pertinent_edges(nid)

    @PROPERTY_SETTINGS
    @given(g=random_graphs(max_edges=12))
    def test_tree_is_reduced(self, g):
        tree = build_spqr(g)
        for nid, node in tree.nodes.items():
            for e in node.edges:
                if tree.kind(e.target) == NodeKind.Q:
                    continue
                # no two adjacent S-nodes and no two adjacent P-nodes
                assert not (node.kind == tree.kind(e.target) and node.kind in (NodeKind.S, NodeKind.P))

    @PROPERTY_SETTINGS
    @given(g=random_graphs(max_edges=12))
    def test_materialized_types_match_pertinent_faces(self, g):
        tree = build_spqr(g)
        types = {}
        rot = materialize(tree, types=types)
        faces(g, rot)
        for nid, (a, b) in types.items():
            assert 1 <= a <= b
            if tree.kind(nid) == NodeKind.Q:
                assert (a, b) == (1, 1)

    @PROPERTY_SETTINGS
    @given(g=random_graphs(max_edges=14))
    def test_skeletons_are_canonical(self, g):
        tree = build_spqr(g)
        for nid, node in tree.nodes.items():
            if node.kind == NodeKind.P:
                assert len(node.edges) >= 3 or g.m == 2
                assert len(node.vertices) == 2
            elif node.kind == NodeKind.S:
                assert len(node.edges) == len(node.vertices) >= 3
                assert all(d == 2 for _, d in _skeleton_graph(node).degree())
            elif node.kind == NodeKind.R:
                simple = _skeleton_graph(node)
                assert simple.number_of_edges() == len(node.edges)
                assert is_triconnected(simple)

    @PROPERTY_SETTINGS
    @given(g=random_graphs(max_edges=12), data=st.data())
    def test_reroot_and_back(self, g, data):
        tree = build_spqr(g)
        edge = data.draw(st.sampled_from(g.edge_ids))
        other = tree.reroot(edge)
        assert other.root_edge == edge
        assert other.pertinent_edges(other.root_child()) | {edge} == set(g.edge_ids)
        back = other.reroot(tree.root_edge)
        assert back.to_dict() == tree.to_dict()
        for nid in tree.nodes:
            assert back.parent(nid) == tree.parent(nid)
            assert back.children(nid) == tree.children(nid)
