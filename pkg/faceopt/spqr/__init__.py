"""SPQR package exports"""
from faceopt.spqr.tree import (
    EdgeKey,
    ExpandedEdge,
    ExpandedSkeleton,
    SkeletonEdge,
    SPQRNode,
    SPQRTree,
    expanded_skeleton,
    expansion_counts,
    pertinent_graph,
    reroot
)
from faceopt.spqr.builder import build_spqr
from faceopt.spqr.skeleton import embed_skeleton, p_node_order, p_node_sides
from faceopt.spqr.assembly import (
    NodePlan,
    PertinentEmbedding,
    SkeletonFaces,
    build_pertinent,
    materialize,
    orient_child
)

__all__ = [
    'EdgeKey',
    'ExpandedEdge',
    'ExpandedSkeleton',
    'SkeletonEdge',
    'SPQRNode',
    'SPQRTree',
    'expanded_skeleton',
    'expansion_counts',
    'pertinent_graph',
    'reroot',
    'build_spqr',
    'embed_skeleton',
    'p_node_order',
    'p_node_sides',
    'NodePlan',
    'PertinentEmbedding',
    'SkeletonFaces',
    'build_pertinent',
    'materialize',
    'orient_child'
]
