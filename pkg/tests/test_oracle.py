import itertools
import math

import pytest
from hypothesis import given

from faceopt.errors import SizeGuardExceeded
from faceopt.gadgets.edges import gen_parallel_edge
from faceopt.graph.rotation import face_sizes, faces, trace_faces
from faceopt.models.node_kind import NodeKind
from faceopt.oracle.enumeration import (
    choice_space,
    count_embeddings,
    enumerate_embeddings,
    exact_min_max_face,
    exact_uniform,
    find_embedding,
    realized_types
)
from faceopt.spqr.builder import build_spqr
from tests.corpus import PROPERTY_SETTINGS, bundle, cube, cycle, double_path, k4, oracle_graphs, random_graphs


def _closed_form(tree) -> int:
    total = 2 ** len(tree.nodes_of_kind(NodeKind.R))
    for nid in tree.nodes_of_kind(NodeKind.P):
        total *= math.factorial(len(tree.nodes[nid].edges) - 1)
    return total // 2 if total > 1 else 1


@pytest.mark.parametrize("graph, expected", [(cycle(4), 1), (k4(), 1), (bundle(4), 3)])
def test_embedding_counts(graph, expected):
    assert count_embeddings(build_spqr(graph)) == expected
    assert len(list(enumerate_embeddings(graph))) == expected


def test_exact_min_max_face():
    assert exact_min_max_face(k4())[0] == 3
    value, rot = exact_min_max_face(double_path())
    assert value == 4
    assert faces(double_path(), rot).max_face == 4


def test_exact_uniform():
    hexagon = cycle(6)
    assert sorted(faces(hexagon, exact_uniform(hexagon, 6)).sizes) == [6, 6]
    assert exact_uniform(k4(), 3) is not None
    assert exact_uniform(cube(), 3) is None


def test_size_guard_checked_before_enumeration():
    with pytest.raises(SizeGuardExceeded):
        choice_space(bundle(6), limit=10)


def test_find_embedding():
    g = bundle(4)
    assert find_embedding(g, lambda sizes: max(sizes) <= 2) is not None
    assert find_embedding(g, lambda sizes: max(sizes) > 2) is None


def test_choice_index_out_of_range():
    space = choice_space(bundle(4))
    with pytest.raises(IndexError):
        space.choice_at(len(space))


def test_choice_ranges_cover_the_space():
    space = choice_space(bundle(5))
    whole = list(space.embeddings())
    halves = list(space.embeddings(0, 5)) + list(space.embeddings(5))
    assert whole == halves
    assert space.choice_at(3).p_orders


def test_realized_types_of_parallel_gadget():
    gadget = gen_parallel_edge(2)
    assert realized_types(gadget.graph, gadget.poles) == {(1, 2)}


class TestOracleProperties:
    @PROPERTY_SETTINGS
    @given(g=random_graphs(max_edges=9))
    def test_count_matches_closed_form(self, g):
        tree = build_spqr(g)
        assert count_embeddings(tree) == _closed_form(tree)

    @PROPERTY_SETTINGS
    @given(g=oracle_graphs(max_edges=8))
    def test_enumeration_is_distinct_up_to_mirror(self, g):
        rots = list(enumerate_embeddings(g))
        assert len(set(rots)) == len(rots)
        if max(g.degree(v) for v in g.vertices) >= 3:
            seen = set(rots)
            assert not any(rot.mirrored() in seen for rot in rots)

    @PROPERTY_SETTINGS
    @given(g=oracle_graphs(max_edges=8))
    def test_min_max_face_is_minimum(self, g):
        value, rot = exact_min_max_face(g)
        assert max(face_sizes(g, rot)) == value
        assert all(max(face_sizes(g, other)) >= value for other in enumerate_embeddings(g))


def _subtree(tree, nid):
    nodes, stack = set(), [nid]
    while stack:
        x = stack.pop()
        nodes.add(x)
        stack.extend(tree.children(x))
    return nodes


def _boundary_and_sizes(g, rot, inside):
    """Boundary length of pert per surrounding face, and face size per outside dart"""
    sides, size_at = {}, {}
    for walk in trace_faces(rot, g.endpoints):
        outside = frozenset(d for d in walk if d[0] not in inside)
        if outside and len(outside) < len(walk):
            sides[outside] = len(walk) - len(outside)
        for d in outside:
            size_at[d] = len(walk)
    return sides, size_at


class TestReplacement:
    @PROPERTY_SETTINGS
    @given(g=oracle_graphs(max_edges=8, limit=200))
    def test_smaller_boundary_never_grows_outside_faces(self, g):
        space = choice_space(g)
        tree = space.tree
        choices = list(space.choices())
        rots = list(space.embeddings())
        for nid in tree.nodes:
            if nid == tree.root or tree.kind(nid) in (NodeKind.Q, NodeKind.S):
                continue
            below = _subtree(tree, nid)
            inside = tree.pertinent_edges(nid)
            groups = {}
            for index, choice in enumerate(choices):
                key = (
                    tuple(sorted((x, o) for x, o in choice.p_orders.items() if x not in below)),
                    tuple(sorted((x, f) for x, f in choice.r_flips.items() if x not in below)),
                )
                groups.setdefault(key, []).append(index)
            measured = [_boundary_and_sizes(g, rot, inside) for rot in rots]
            for group in groups.values():
                for i, j in itertools.permutations(group, 2):
                    (sides_i, size_i), (sides_j, size_j) = measured[i], measured[j]
                    assert sides_i.keys() == sides_j.keys()
                    if all(sides_j[k] <= sides_i[k] for k in sides_i):
                        assert all(size_j[d] <= size_i[d] for d in size_i)
