"""Instance generator exports"""
from faceopt.gadgets.gadget_graph import GadgetGraph, VariableGadget
from faceopt.gadgets.edges import gen_parallel_edge, gen_wheel_edge
from faceopt.gadgets.random_graphs import gen_random_biconnected
from faceopt.gadgets.sat import SAT_MODES, sat_oracle
from faceopt.gadgets.minmax5 import assignment_from_embedding, check_regime, gen_minmax5_instance

__all__ = [
    'GadgetGraph',
    'SAT_MODES',
    'VariableGadget',
    'assignment_from_embedding',
    'check_regime',
    'gen_minmax5_instance',
    'gen_parallel_edge',
    'gen_random_biconnected',
    'gen_wheel_edge',
    'sat_oracle'
]
