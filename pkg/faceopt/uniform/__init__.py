"""Uniform embedding recognition exports"""
from faceopt.uniform.types import AlmostUniformType, alternating_order, forced_type, outer_face_length
from faceopt.uniform.three import recognize_uniform3, uniform3_violations
from faceopt.uniform.four import excess, recognize_uniform4, uniform4_violations
from faceopt.uniform.six import label_tree6, node_types, recognize_uniform6
from faceopt.uniform.dispatch import recognize_uniform

__all__ = [
    'AlmostUniformType',
    'alternating_order',
    'excess',
    'forced_type',
    'label_tree6',
    'node_types',
    'outer_face_length',
    'recognize_uniform',
    'recognize_uniform3',
    'recognize_uniform4',
    'recognize_uniform6',
    'uniform3_violations',
    'uniform4_violations'
]
