"""
Loop-free undirected multigraph with stable string identifiers
"""
import logging
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Tuple

import networkx as nx

from faceopt.errors import DuplicateId, LoopEdge, UnknownVertex

logger = logging.getLogger(__name__)

EdgeTriple = Tuple[str, str, str]


class Multigraph:
    """Immutable multigraph; all iteration is in sorted id order"""

    def __init__(
        self,
        vertices: Iterable[str],
        edges: Iterable[EdgeTriple],
        poles: Optional[Tuple[str, str]] = None,
    ):
        vertex_list = [str(v) for v in vertices]
        seen = set()
        for v in vertex_list:
            if v in seen:
                raise DuplicateId(f"Duplicate vertex id: {v}")
            seen.add(v)
        self._vertices: Tuple[str, ...] = tuple(sorted(seen))

        ends: Dict[str, Tuple[str, str]] = {}
        for eid, u, v in edges:
            eid, u, v = str(eid), str(u), str(v)
            if eid in ends:
                raise DuplicateId(f"Duplicate edge id: {eid}")
            for x in (u, v):
                if x not in seen:
                    raise UnknownVertex(f"Edge {eid} uses undeclared vertex {x}")
            if u == v:
                raise LoopEdge(f"Edge {eid} is a loop at {u}")
            ends[eid] = (u, v)
        self._ends: Dict[str, Tuple[str, str]] = {e: ends[e] for e in sorted(ends)}

        incident: Dict[str, List[str]] = {v: [] for v in self._vertices}
        for eid, (u, v) in self._ends.items():
            incident[u].append(eid)
            incident[v].append(eid)
        self._incident: Dict[str, Tuple[str, ...]] = {v: tuple(es) for v, es in incident.items()}

        if poles is not None:
            for p in poles:
                if p not in seen:
                    raise UnknownVertex(f"Pole {p} is not a vertex")
        self.poles: Optional[Tuple[str, str]] = tuple(poles) if poles is not None else None

    @property
    def n(self) -> int:
        return len(self._vertices)

    @property
    def m(self) -> int:
        return len(self._ends)

    @property
    def vertices(self) -> Tuple[str, ...]:
        return self._vertices

    @property
    def edge_ids(self) -> Tuple[str, ...]:
        return tuple(self._ends)

    def edges(self) -> Iterator[EdgeTriple]:
        for eid, (u, v) in self._ends.items():
            yield eid, u, v

    def has_vertex(self, v: str) -> bool:
        return v in self._incident

    def has_edge(self, eid: str) -> bool:
        return eid in self._ends

    def endpoints(self, eid: str) -> Tuple[str, str]:
        return self._ends[eid]

    def other_end(self, eid: str, v: str) -> str:
        a, b = self._ends[eid]
        if v == a:
            return b
        if v == b:
            return a
        raise UnknownVertex(f"{v} is not an endpoint of {eid}")

    def incident(self, v: str) -> Tuple[str, ...]:
        return self._incident[v]

    def degree(self, v: str) -> int:
        return len(self._incident[v])

    def edge_mapping(self) -> Dict[str, Tuple[str, str]]:
        return dict(self._ends)

    def subgraph(self, edge_ids: Iterable[str], poles: Optional[Tuple[str, str]] = None) -> 'Multigraph':
        """Edge-induced subgraph"""
        chosen = sorted(set(edge_ids))
        verts = set()
        for eid in chosen:
            verts.update(self._ends[eid])
        return Multigraph(verts, ((e, *self._ends[e]) for e in chosen), poles=poles)

    def with_edge(self, eid: str, u: str, v: str) -> 'Multigraph':
        return Multigraph(self._vertices, list(self.edges()) + [(eid, u, v)], poles=self.poles)

    def to_networkx(self) -> nx.MultiGraph:
        graph = nx.MultiGraph()
        graph.add_nodes_from(self._vertices)
        for eid, u, v in self.edges():
            graph.add_edge(u, v, key=eid)
        return graph

    def simple_graph(self) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(self._vertices)
        graph.add_edges_from((u, v) for _, u, v in self.edges())
        return graph

    def __repr__(self) -> str:
        return f"Multigraph(n={self.n}, m={self.m})"


def build_graph(vertex_ids: Sequence[str], edge_list: Iterable[EdgeTriple]) -> Multigraph:
    """Build a validated multigraph from ids and (edge id, u, v) triples"""
    graph = Multigraph(vertex_ids, edge_list)
    logger.debug(f"Built graph with n={graph.n}, m={graph.m}")
    return graph
