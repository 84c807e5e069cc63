import itertools
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from faceopt.errors import Infeasible, InvalidParams, Unbounded
from faceopt.kernels.bipartite import BipartiteInstance, max_matching, perfect_b_matching
from faceopt.kernels.lp import LPInstance, solve_lp
from tests.corpus import PROPERTY_SETTINGS


def test_max_matching_simple():
    inst = BipartiteInstance(["x", "y", "z"], [1, 2], {"x": [1], "y": [1, 2], "z": [2]})
    matching = max_matching(inst)
    assert len(matching) == 2
    assert len(set(matching.values())) == 2


def test_unknown_right_vertex_rejected():
    with pytest.raises(InvalidParams):
        BipartiteInstance(["x"], [1], {"x": [2]})


def test_perfect_b_matching_found():
    inst = BipartiteInstance(["a", "b", "c"], ["f", "g"], {"a": ["f"], "b": ["f", "g"], "c": ["g"]},
                             capacities={"f": 2, "g": 1})
    assignment = perfect_b_matching(inst)
    assert assignment == {"a": "f", "b": "f", "c": "g"}


def test_perfect_b_matching_impossible():
    inst = BipartiteInstance(["a", "b"], ["f", "g"], {"a": ["f"], "b": ["f"]}, capacities={"f": 1, "g": 1})
    assert perfect_b_matching(inst) is None


def test_perfect_b_matching_capacity_sum_mismatch():
    inst = BipartiteInstance(["a"], ["f"], {"a": ["f"]}, capacities={"f": 2})
    assert perfect_b_matching(inst) is None


def test_perfect_b_matching_needs_capacities():
    with pytest.raises(InvalidParams):
        perfect_b_matching(BipartiteInstance(["a"], ["f"], {"a": ["f"]}))


def test_lp_small_optimum():
    lp = LPInstance()
    lp.add_variable("x", 0, 4)
    lp.add_variable("y", 0, 4)
    lp.add_constraint({"x": 1, "y": 1}, ">=", 3)
    lp.add_constraint({"x": 1, "y": -1}, "==", Fraction(1, 2))
    lp.minimize({"x": 2, "y": 1})
    value, assignment = solve_lp(lp)
    assert assignment == {"x": Fraction(7, 4), "y": Fraction(5, 4)}
    assert value == Fraction(19, 4)


def test_lp_shifted_lower_bounds():
    lp = LPInstance()
    lp.add_variable("x", 2, 5)
    lp.minimize({"x": 1})
    value, _ = solve_lp(lp)
    assert value == 2


def test_lp_infeasible():
    lp = LPInstance()
    lp.add_variable("x", 0, 1)
    lp.add_constraint({"x": 1}, ">=", 2)
    with pytest.raises(Infeasible):
        solve_lp(lp)


def test_lp_unbounded():
    lp = LPInstance()
    lp.add_variable("x")
    lp.minimize({"x": -1})
    with pytest.raises(Unbounded):
        solve_lp(lp)


def test_lp_rejects_bad_input():
    lp = LPInstance()
    lp.add_variable("x")
    with pytest.raises(InvalidParams):
        lp.add_variable("x")
    with pytest.raises(InvalidParams):
        lp.add_constraint({"y": 1}, "<=", 1)
    with pytest.raises(InvalidParams):
        lp.add_constraint({"x": 1}, "<", 1)


@st.composite
def _bipartite_instances(draw):
    left = list(range(draw(st.integers(min_value=0, max_value=5))))
    right = [f"r{i}" for i in range(draw(st.integers(min_value=1, max_value=3)))]
    adjacency = {x: draw(st.lists(st.sampled_from(right), unique=True)) for x in left}
    capacities = {y: draw(st.integers(min_value=0, max_value=3)) for y in right}
    return BipartiteInstance(left, right, adjacency, capacities=capacities)


def _brute_b_matching_exists(inst: BipartiteInstance) -> bool:
    options = [inst.adjacency[x] for x in inst.left]
    for choice in itertools.product(*options):
        if all(choice.count(y) == inst.capacities[y] for y in inst.right):
            return True
    return False


class TestKernelProperties:
    @PROPERTY_SETTINGS
    @given(inst=_bipartite_instances())
    def test_b_matching_agrees_with_brute_force(self, inst):
        assignment = perfect_b_matching(inst)
        assert (assignment is not None) == _brute_b_matching_exists(inst)

    @PROPERTY_SETTINGS
    @given(
        costs=st.lists(st.integers(min_value=-3, max_value=3), min_size=2, max_size=4),
        bound=st.integers(min_value=1, max_value=4),
    )
    def test_lp_optimum_beats_every_vertex_of_the_box(self, costs, bound):
        lp = LPInstance()
        names = [lp.add_variable(f"x{i}", 0, bound) for i in range(len(costs))]
        lp.add_constraint({name: 1 for name in names}, "<=", bound)
        lp.minimize(dict(zip(names, costs)))
        value, _ = solve_lp(lp)
        # optimum of this polytope is attained at 0 or at bound on the cheapest variable
        assert value == min(0, bound * min(costs))
