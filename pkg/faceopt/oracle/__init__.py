"""Enumeration oracle exports"""
from faceopt.oracle.enumeration import (
    EmbeddingChoice,
    EmbeddingChoiceSpace,
    choice_space,
    count_embeddings,
    enumerate_embeddings,
    exact_min_max_face,
    exact_uniform,
    find_embedding,
    pertinent_samples,
    realized_types
)

__all__ = [
    'EmbeddingChoice',
    'EmbeddingChoiceSpace',
    'choice_space',
    'count_embeddings',
    'enumerate_embeddings',
    'exact_min_max_face',
    'exact_uniform',
    'find_embedding',
    'pertinent_samples',
    'realized_types'
]
