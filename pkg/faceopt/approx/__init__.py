"""Approximation exports"""
from faceopt.approx.neat import (
    NeatEmbedding,
    NeatState,
    RNodeReport,
    approx_min_max_face,
    approximate,
    boundary_min_length,
    neat_embeddings,
    neat_p_node,
    neat_r_node,
    neat_root
)
from faceopt.approx.audit import audit_out_minimality

__all__ = [
    'NeatEmbedding',
    'NeatState',
    'RNodeReport',
    'approx_min_max_face',
    'approximate',
    'audit_out_minimality',
    'boundary_min_length',
    'neat_embeddings',
    'neat_p_node',
    'neat_r_node',
    'neat_root'
]
