"""MinMaxFace decision exports"""
from faceopt.minmaxface.types import CHAIN_3, CHAIN_4, Q_TYPE, NodeLabel4, TypePair, chain_rank
from faceopt.minmaxface.three import decide_minmax3, label_tree3
from faceopt.minmaxface.four import decide_minmax4, label_tree4
from faceopt.minmaxface.dispatch import decide_minmax

__all__ = [
    'CHAIN_3',
    'CHAIN_4',
    'Q_TYPE',
    'NodeLabel4',
    'TypePair',
    'chain_rank',
    'decide_minmax',
    'decide_minmax3',
    'decide_minmax4',
    'label_tree3',
    'label_tree4'
]
