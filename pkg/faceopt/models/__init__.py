"""Models package exports"""
from faceopt.models.node_kind import NodeKind
from faceopt.models.graph_document import EdgeDocument, GraphDocument, FaceDocument, EmbeddingDocument
from faceopt.models.cnf_formula import CnfFormula

__all__ = ['NodeKind', 'EdgeDocument', 'GraphDocument', 'FaceDocument', 'EmbeddingDocument', 'CnfFormula']
