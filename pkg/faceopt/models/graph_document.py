"""
JSON documents for graphs and embeddings
"""
from typing import Dict, List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, field_validator

from faceopt.graph.multigraph import Multigraph
from faceopt.graph.rotation import FaceReport, RotationSystem


class EdgeDocument(BaseModel):
    """One edge of the input graph"""

    id: str = Field(..., description="Edge identifier")
    ends: Tuple[str, str] = Field(..., description="The two endpoint vertex ids")


class GraphDocument(BaseModel):
    """Graph input/output format"""

    model_config = ConfigDict(extra='ignore')

    vertices: List[str] = Field(default_factory=list)
    edges: List[EdgeDocument] = Field(default_factory=list)
    poles: Optional[Tuple[str, str]] = Field(None, description="Designated poles of a gadget")
    roles: Optional[Dict[str, str]] = Field(None, description="Role tag per edge id")

    @field_validator('vertices')
    @classmethod
    def stringify_vertices(cls, v):
        return [str(x) for x in v]

    def to_multigraph(self) -> Multigraph:
        return Multigraph(self.vertices, [(e.id, e.ends[0], e.ends[1]) for e in self.edges], poles=self.poles)

    @classmethod
    def from_multigraph(
        cls,
        g: Multigraph,
        poles: Optional[Tuple[str, str]] = None,
        roles: Optional[Dict[str, str]] = None
    ) -> 'GraphDocument':
        return cls(
            vertices=list(g.vertices),
            edges=[EdgeDocument(id=eid, ends=(u, v)) for eid, u, v in g.edges()],
            poles=poles if poles is not None else g.poles,
            roles=roles,
        )

    def to_dict(self) -> dict:
        return self.model_dump(exclude_none=True)


class FaceDocument(BaseModel):
    size: int
    sides: List[Tuple[str, str]]


class EmbeddingDocument(BaseModel):
    """Embedding output format"""

    rotation: Dict[str, List[str]]
    faces: List[FaceDocument]
    max_face: int

    @classmethod
    def from_report(cls, rot: RotationSystem, report: FaceReport) -> 'EmbeddingDocument':
        return cls(
            rotation={v: [str(e) for e in seq] for v, seq in rot.items()},
            faces=[FaceDocument(size=face.size, sides=[tuple(s) for s in face.sides()]) for face in report.faces],
            max_face=report.max_face,
        )

    def to_rotation(self) -> RotationSystem:
        return RotationSystem(self.rotation)

    def to_dict(self) -> dict:
        return self.model_dump()
