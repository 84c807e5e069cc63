"""Optimization kernels exports"""
from faceopt.kernels.bipartite import BipartiteInstance, max_matching, perfect_b_matching
from faceopt.kernels.lp import LPInstance, solve_lp

__all__ = ['BipartiteInstance', 'max_matching', 'perfect_b_matching', 'LPInstance', 'solve_lp']
