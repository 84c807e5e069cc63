import itertools

import pytest
from hypothesis import given

from faceopt.approx.audit import audit_out_minimality
from faceopt.approx.neat import approx_min_max_face, approximate, boundary_min_length, neat_embeddings
from faceopt.errors import NotBiconnected
from faceopt.graph.rotation import faces
from faceopt.models.node_kind import NodeKind
from faceopt.oracle.enumeration import exact_min_max_face
from faceopt.spqr.assembly import SkeletonFaces
from faceopt.spqr.builder import build_spqr
from faceopt.spqr.skeleton import embed_skeleton
from tests.corpus import (
    PROPERTY_SETTINGS,
    bundle,
    double_path,
    graph_from_pairs,
    k4,
    oracle_graphs,
    parallel_pair_and_path,
    random_corpus,
    random_graphs,
    theta
)


def _only_p_node(g):
    tree = build_spqr(g)
    (p,) = tree.nodes_of_kind(NodeKind.P)
    return tree, p


def test_theta_parallel_node_is_type_22():
    tree, p = _only_p_node(theta())
    state = neat_embeddings(tree)
    assert state.pair(p) == (2, 2)


def test_two_edges_and_long_chain_is_type_11():
    tree, p = _only_p_node(graph_from_pairs([("u", "v"), ("u", "v"), ("u", "v"), ("u", "x"), ("x", "y"), ("y", "v")]))
    state = neat_embeddings(tree)
    assert state.pair(p) == (1, 1)
    (s,) = tree.nodes_of_kind(NodeKind.S)
    assert boundary_min_length(tree, s, state) == 3


def test_edge_and_short_chain_is_type_12():
    tree, p = _only_p_node(graph_from_pairs([("u", "v"), ("u", "v"), ("u", "w"), ("w", "v")]))
    state = neat_embeddings(tree)
    assert state.pair(p) == (1, 2)


def test_k4_rigid_node():
    g = k4()
    rot, largest, state = approximate(g)
    assert largest == 3
    assert faces(g, rot).sizes == [3, 3, 3, 3]
    (report,) = state.reports.values()
    assert report.within_bound
    assert report.to_dict()["lp_optimum"] == str(report.optimum)


def test_rejects_separable_graph():
    with pytest.raises(NotBiconnected):
        approx_min_max_face(graph_from_pairs([("a", "b"), ("b", "c"), ("c", "a"), ("a", "d"), ("d", "e"), ("e", "a")]))


def test_out_minimality_on_corpus():
    for g in random_corpus(30, max_edges=9):
        assert audit_out_minimality(g) == []


class TestApproximationProperties:
    @PROPERTY_SETTINGS
    @given(g=oracle_graphs(max_edges=11))
    def test_within_six_times_optimum(self, g):
        opt, _ = exact_min_max_face(g)
        rot, largest = approx_min_max_face(g)
        assert faces(g, rot).max_face == largest
        assert opt <= largest <= 6 * opt

    @PROPERTY_SETTINGS
    @given(g=random_graphs(max_edges=12))
    def test_rigid_rounding_within_twice_lp(self, g):
        _, _, state = approximate(g)
        assert all(report.within_bound for report in state.reports.values())


def test_parallel_pair_is_one_face_pair():
    g = bundle(2)
    rot, largest = approx_min_max_face(g)
    assert largest == 2
    assert faces(g, rot).sizes == [2, 2]
    tree, p = _only_p_node(g)
    assert neat_embeddings(tree).pair(p) == (1, 1)


@pytest.mark.parametrize("graph", [bundle(2), bundle(3), theta(), k4(), parallel_pair_and_path(), double_path()])
def test_fixed_graphs_within_six_times_optimum(graph):
    opt, _ = exact_min_max_face(graph)
    _, largest = approx_min_max_face(graph)
    assert opt <= largest <= 6 * opt


def _integral_loads(tree, nid, state):
    """Largest inner face load of every integral orientation of an R-node's expanded skeleton"""
    skeleton = SkeletonFaces(tree, nid, embed_skeleton(tree, nid))
    slots = []
    for key, path in sorted(tree.expanded_skeleton(nid).paths.items()):
        e = tree.skeleton_edge(key)
        f, g = skeleton.faces_of_edge(key, e.u, e.v)
        slots.extend((f, g, state.pair(x.node)) for x in path)
    base = {face: 0 for face in skeleton.inner()}
    free = []
    for f, g, (a, b) in slots:
        if f in skeleton.outer or g in skeleton.outer:
            inner = g if f in skeleton.outer else f
            if inner in base:
                base[inner] += b
        else:
            free.append((f, g, a, b))
    for bits in itertools.product((False, True), repeat=len(free)):
        load = dict(base)
        for flip, (f, g, a, b) in zip(bits, free):
            load[f] += b if flip else a
            load[g] += a if flip else b
        yield max(load.values(), default=0)


class TestRigidLinearProgram:
    @PROPERTY_SETTINGS
    @given(g=random_graphs(max_edges=14))
    def test_lp_optimum_below_every_integral_orientation(self, g):
        _, _, state = approximate(g)
        for nid, report in state.reports.items():
            loads = list(_integral_loads(state.tree, nid, state))
            assert report.optimum <= min(loads)
            assert max(report.shallow.values(), default=0) <= 2 * report.optimum
