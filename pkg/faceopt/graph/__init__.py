"""Graph core exports"""
from faceopt.graph.multigraph import Multigraph, build_graph
from faceopt.graph.rotation import (
    Dart,
    Face,
    FaceReport,
    RotationSystem,
    face_sizes,
    faces,
    trace_face,
    trace_faces
)
from faceopt.graph.structure import (
    Bipartition,
    bipartition,
    euler_uniform_k,
    is_biconnected,
    is_triconnected
)

__all__ = [
    'Multigraph',
    'build_graph',
    'Dart',
    'Face',
    'FaceReport',
    'RotationSystem',
    'face_sizes',
    'faces',
    'trace_face',
    'trace_faces',
    'Bipartition',
    'bipartition',
    'euler_uniform_k',
    'is_biconnected',
    'is_triconnected'
]
