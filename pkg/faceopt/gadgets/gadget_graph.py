"""
Graphs with role tags and designated poles
"""
from typing import Dict, Optional, Tuple

from faceopt.graph.multigraph import Multigraph
from faceopt.models.graph_document import GraphDocument


class VariableGadget:
    """Where a variable's truth value can be read off an embedding"""

    def __init__(self, var: int, edge: str, path_vertex: str, positive_apex: str):
        self.var = var
        self.edge = edge
        self.path_vertex = path_vertex
        self.positive_apex = positive_apex

    def __repr__(self) -> str:
        return f"VariableGadget(x{self.var}, edge={self.edge}, apex={self.positive_apex})"


class GadgetGraph:
    """A multigraph plus a role per edge and optional poles"""

    def __init__(
        self,
        graph: Multigraph,
        roles: Dict[str, str],
        poles: Optional[Tuple[str, str]] = None,
        variables: Optional[Dict[int, VariableGadget]] = None,
    ):
        self.graph = graph
        self.roles = dict(roles)
        self.poles = poles
        self.variables = dict(variables or {})

    def edges_with_role(self, role: str):
        return [eid for eid in self.graph.edge_ids if self.roles.get(eid) == role]

    def to_document(self) -> GraphDocument:
        return GraphDocument.from_multigraph(self.graph, poles=self.poles, roles=self.roles)

    def __repr__(self) -> str:
        return f"GadgetGraph(n={self.graph.n}, m={self.graph.m}, poles={self.poles})"
