import pytest
from hypothesis import given

from faceopt.errors import NotBiconnected
from faceopt.graph.rotation import faces, trace_faces
from faceopt.graph.structure import bipartition, euler_uniform_k
from faceopt.minmaxface.types import TypePair
from faceopt.models.node_kind import NodeKind
from faceopt.oracle.enumeration import enumerate_embeddings, exact_uniform, pertinent_samples
from faceopt.spqr.builder import build_spqr
from faceopt.uniform.dispatch import recognize_uniform
from faceopt.uniform.four import excess, recognize_uniform4
from faceopt.uniform.six import recognize_uniform6
from faceopt.uniform.three import recognize_uniform3, uniform3_violations
from faceopt.uniform.types import AlmostUniformType, forced_type, outer_face_length
from tests.corpus import (
    PROPERTY_SETTINGS,
    bundle,
    cube,
    cycle,
    double_path,
    graph_from_pairs,
    k4,
    oracle_graphs,
    random_corpus,
    subdivided_k4,
    theta
)


@pytest.mark.parametrize("graph, k", [
    (k4(), 3),
    (cube(), 4),
    (cycle(4), 4),
    (theta(), 4),
    (cycle(6), 6),
    (subdivided_k4(), 6),
    (bundle(3), 2),
])
def test_fixed_witnesses(graph, k):
    found = recognize_uniform(graph)
    assert found is not None
    assert found[0] == k
    assert set(faces(graph, found[1]).sizes) == {k}


def test_recognizers_directly():
    assert recognize_uniform3(k4()) is not None
    assert recognize_uniform4(cube()) is not None
    assert recognize_uniform6(subdivided_k4()) is not None
    assert recognize_uniform6(cube()) is None


def test_requested_k_must_match_euler():
    assert recognize_uniform(k4(), 4) is None
    assert recognize_uniform(k4(), 3)[0] == 3


def test_euler_gate():
    assert euler_uniform_k(double_path()) is None
    assert recognize_uniform(double_path()) is None


def test_bipartite_gate():
    # triangle abc glued to the 4-cycle a-d-e-b along ab: Euler allows k=4
    g = graph_from_pairs([("a", "b"), ("b", "c"), ("c", "a"), ("a", "d"), ("d", "e"), ("e", "b")])
    assert euler_uniform_k(g) == 4
    assert bipartition(g) is None
    assert recognize_uniform(g) is None


def test_rejects_separable_graph():
    with pytest.raises(NotBiconnected):
        recognize_uniform(graph_from_pairs([("u", "v"), ("v", "w")]))


def test_three_uniform_conditions():
    assert uniform3_violations(build_spqr(k4())) == []
    assert uniform3_violations(build_spqr(theta()))


def test_excess_of_real_edge():
    tree = build_spqr(theta())
    (p,) = tree.nodes_of_kind(NodeKind.P)
    s = tree.children(p)[0]
    for e in tree.child_edges(s):
        assert excess(tree, e.key) == -3
    for e in tree.child_edges(p):
        assert excess(tree, e.key) == -4


def test_outer_face_length():
    assert outer_face_length(2, 1, 6) == 2
    # a hexagon split by the poles into paths of length 3 and 3
    assert outer_face_length(6, 6, 6) == 6


@pytest.mark.parametrize("length, same, pair", [
    (2, False, TypePair(1, 1)),
    (4, True, TypePair(2, 2)),
    (4, False, TypePair(1, 3)),
    (6, True, TypePair(2, 4)),
    (6, False, TypePair(3, 3)),
    (8, True, TypePair(4, 4)),
    (8, False, TypePair(3, 5)),
    (10, False, TypePair(5, 5)),
    (10, True, None),
    (12, False, None),
])
def test_forced_six_types(length, same, pair):
    assert forced_type(length, same) == pair
    assert AlmostUniformType(length, same).feasible is (pair is not None)


def test_outer_length_on_pertinent_embeddings():
    violations = 0
    for g in random_corpus(25, max_edges=9):
        tree = build_spqr(g)
        for nid in tree.nodes:
            if nid == tree.root or tree.kind(nid) == NodeKind.Q:
                continue
            pert = tree.pertinent_graph(nid)
            for (a, b), inner in pertinent_samples(pert, tree.poles(nid)):
                if inner and len(set(inner)) == 1 and 3 <= inner[0] <= 8:
                    violations += a + b != outer_face_length(pert.n, pert.m, inner[0])
    assert violations == 0


def _paths_between(*lengths):
    """Poles u, v joined by internally disjoint paths of the given lengths"""
    pairs = []
    for i, length in enumerate(lengths):
        inner = [f"p{i}_{j}" for j in range(1, length)]
        walk = ["u"] + inner + ["v"]
        pairs.extend(zip(walk, walk[1:]))
    return graph_from_pairs(pairs)


def _boundary_type(g, rot, inside):
    """Sorted lengths of the two boundary paths a pertinent edge set shows in rot"""
    sides = []
    for walk in trace_faces(rot, g.endpoints):
        count = sum(1 for d in walk if d[0] in inside)
        if 0 < count < len(walk):
            sides.append(count)
    assert len(sides) == 2
    return TypePair.of(*sides)


@pytest.mark.parametrize("graph", [
    cycle(6),
    subdivided_k4(),
    _paths_between(3, 3, 3),
    _paths_between(3, 3, 3, 3),
    _paths_between(2, 4, 2, 4),
    _paths_between(1, 5),
])
def test_six_uniform_types_match_table(graph):
    colours = bipartition(graph)
    tree = build_spqr(graph)
    witnesses = [rot for rot in enumerate_embeddings(graph) if set(faces(graph, rot).sizes) == {6}]
    assert witnesses
    for rot in witnesses:
        for nid in tree.nodes:
            if nid == tree.root:
                continue
            pert = tree.pertinent_graph(nid)
            s, t = tree.poles(nid)
            expected = forced_type(outer_face_length(pert.n, pert.m, 6), colours.same_class(s, t))
            assert _boundary_type(graph, rot, tree.pertinent_edges(nid)) == expected


class TestUniformProperties:
    @PROPERTY_SETTINGS
    @given(g=oracle_graphs(max_edges=11))
    def test_agrees_with_oracle(self, g):
        k = euler_uniform_k(g)
        expected = exact_uniform(g, k) is not None if k is not None else False
        found = recognize_uniform(g)
        assert (found is not None) == expected
        if found is not None:
            assert set(faces(g, found[1]).sizes) == {found[0]}
