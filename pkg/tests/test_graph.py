import itertools

import networkx as nx
import pytest
from hypothesis import given
from hypothesis import strategies as st

from faceopt.errors import DuplicateId, LoopEdge, NonPlanarRotation, UnknownVertex
from faceopt.graph.multigraph import Multigraph
from faceopt.graph.rotation import RotationSystem, face_sizes, faces
from faceopt.graph.structure import bipartition, euler_uniform_k, is_biconnected, is_triconnected
from faceopt.spqr.assembly import materialize
from faceopt.spqr.builder import build_spqr
from tests.corpus import PROPERTY_SETTINGS, bundle, cube, cycle, graph_from_pairs, k4, random_graphs


def test_k4_counts():
    g = k4()
    assert (g.n, g.m) == (4, 6)


def test_parallel_pair_accepted():
    g = Multigraph(["u", "v"], [("e1", "u", "v"), ("e2", "u", "v")])
    assert g.m == 2
    assert g.incident("u") == ("e1", "e2")


def test_loop_rejected():
    with pytest.raises(LoopEdge):
        Multigraph(["u"], [("e1", "u", "u")])


def test_unknown_vertex_rejected():
    with pytest.raises(UnknownVertex):
        Multigraph(["u"], [("e1", "u", "v")])


def test_duplicate_ids_rejected():
    with pytest.raises(DuplicateId):
        Multigraph(["u", "u"], [])
    with pytest.raises(DuplicateId):
        Multigraph(["u", "v"], [("e1", "u", "v"), ("e1", "v", "u")])


def test_other_end():
    g = k4()
    eid = g.incident("a")[0]
    assert g.other_end(eid, "a") != "a"
    with pytest.raises(UnknownVertex):
        g.other_end(eid, "zz")


@pytest.mark.parametrize("pairs, expected", [
    ([("a", "b"), ("a", "c"), ("a", "d"), ("b", "c"), ("b", "d"), ("c", "d")], True),
    ([("u", "v"), ("v", "w")], False),
    ([("a", "b"), ("b", "c"), ("c", "a"), ("a", "d"), ("d", "e"), ("e", "a")], False),
    ([("u", "v"), ("u", "v")], True),
])
def test_is_biconnected(pairs, expected):
    assert is_biconnected(graph_from_pairs(pairs)) is expected


def test_is_triconnected():
    assert is_triconnected(k4().simple_graph())
    assert not is_triconnected(cycle(5).simple_graph())


def test_faces_of_square():
    g = cycle(4)
    rot = RotationSystem({v: list(g.incident(v)) for v in g.vertices})
    report = faces(g, rot)
    assert sorted(report.sizes) == [4, 4]
    assert report.max_face == 4


def test_faces_of_parallel_pair():
    g = bundle(2)
    rot = RotationSystem({"u": ["e0", "e1"], "v": ["e0", "e1"]})
    assert sorted(faces(g, rot).sizes) == [2, 2]


def test_k4_faces_via_default_embedding():
    g = k4()
    report = faces(g, materialize(build_spqr(g)))
    assert report.sizes == [3, 3, 3, 3]
    assert report.size_multiset == {3: 4}


def test_only_two_k4_rotations_are_planar():
    g = k4()
    planar = 0
    # two cyclic orders per degree-3 vertex
    per_vertex = {}
    for v in g.vertices:
        x, y, z = g.incident(v)
        per_vertex[v] = [(x, y, z), (x, z, y)]
    for combo in itertools.product(*per_vertex.values()):
        rot = RotationSystem(dict(zip(per_vertex, combo)))
        try:
            faces(g, rot)
        except NonPlanarRotation:
            continue
        planar += 1
    assert planar == 2


def test_face_sides_format():
    g = cycle(4)
    rot = RotationSystem({v: list(g.incident(v)) for v in g.vertices})
    face = faces(g, rot).faces[0]
    for eid, side in face.sides():
        tail, head = side.split("->")
        assert set(g.endpoints(eid)) == {tail, head}


def test_bipartition():
    colours = bipartition(cycle(4))
    zero, one = colours.classes()
    assert len(zero) == len(one) == 2
    assert bipartition(k4()) is None
    pair = bipartition(bundle(2))
    assert not pair.same_class("u", "v")


@pytest.mark.parametrize("graph, k", [(k4(), 3), (cube(), 4), (graph_from_pairs([("a", "b"), ("b", "c"), ("c", "d"), ("d", "a"), ("a", "c")]), None)])
def test_euler_uniform_k(graph, k):
    assert euler_uniform_k(graph) == k


class TestFaceProperties:
    @PROPERTY_SETTINGS
    @given(g=random_graphs())
    def test_default_embedding_satisfies_euler(self, g):
        report = faces(g, materialize(build_spqr(g)))
        assert sum(report.sizes) == 2 * g.m
        assert g.n - g.m + report.f == 2

    @PROPERTY_SETTINGS
    @given(g=random_graphs())
    def test_face_sizes_matches_full_report(self, g):
        rot = materialize(build_spqr(g))
        assert sorted(face_sizes(g, rot)) == sorted(faces(g, rot).sizes)

    @PROPERTY_SETTINGS
    @given(g=random_graphs())
    def test_mirror_has_same_face_sizes(self, g):
        rot = materialize(build_spqr(g))
        assert sorted(face_sizes(g, rot.mirrored())) == sorted(face_sizes(g, rot))


@st.composite
def small_multigraphs(draw, max_vertices: int = 8):
    """Arbitrary loopless multigraphs, isolated vertices allowed"""
    n = draw(st.integers(min_value=1, max_value=max_vertices))
    pairs = draw(st.lists(
        st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)).filter(lambda p: p[0] != p[1]),
        max_size=14,
    ))
    return Multigraph([f"v{i}" for i in range(n)], [(f"e{i}", f"v{a}", f"v{b}") for i, (a, b) in enumerate(pairs)])


def _survives_every_vertex_deletion(g):
    simple = nx.Graph()
    simple.add_nodes_from(g.vertices)
    simple.add_edges_from(g.endpoints(eid) for eid in g.edge_ids)
    if g.n < 2 or not nx.is_connected(simple):
        return False
    for v in g.vertices:
        rest = simple.copy()
        rest.remove_node(v)
        if not nx.is_connected(rest):
            return False
    return True


class TestBiconnectivity:
    @PROPERTY_SETTINGS
    @given(g=small_multigraphs())
    def test_matches_vertex_deletion(self, g):
        assert is_biconnected(g) is _survives_every_vertex_deletion(g)

    @PROPERTY_SETTINGS
    @given(g=random_graphs())
    def test_random_graphs_are_biconnected(self, g):
        assert _survives_every_vertex_deletion(g)

    def test_two_blocks_sharing_a_vertex(self):
        g = graph_from_pairs([("a", "b"), ("b", "c"), ("c", "a"), ("c", "d"), ("d", "e"), ("e", "c")])
        assert not _survives_every_vertex_deletion(g)
        assert not is_biconnected(g)
