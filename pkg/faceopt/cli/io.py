"""
Reading instances and shaping command results
"""
import json
import os
from typing import Any, Dict, List, Optional

from faceopt.graph.multigraph import Multigraph
from faceopt.graph.rotation import RotationSystem, faces
from faceopt.models.cnf_formula import CnfFormula
from faceopt.models.graph_document import EmbeddingDocument, GraphDocument

SCHEMA = "faceopt/1"


class CommandResult:
    """Exit code, JSON payload and the template that renders it as text"""

    def __init__(self, exit_code: int, payload: Dict[str, Any], template: str = "summary.jinja"):
        self.exit_code = exit_code
        self.payload = payload
        self.template = template

    def document(self, command: str, status: str = "success") -> Dict[str, Any]:
        return {"schema": SCHEMA, "command": command, "status": status, **self.payload}


def error_document(command: str, error: BaseException) -> Dict[str, Any]:
    return {
        "schema": SCHEMA,
        "command": command,
        "status": "error",
        "error": {"type": type(error).__name__, "message": str(error)},
    }


def read_graph(path: str) -> Multigraph:
    """Graph JSON file to a multigraph; pydantic errors propagate"""
    with open(path, encoding="utf-8") as fh:
        return GraphDocument.model_validate_json(fh.read()).to_multigraph()


def read_formula(path: str) -> CnfFormula:
    """CNF as JSON `{"clauses": [...]}` or as DIMACS text"""
    with open(path, encoding="utf-8") as fh:
        text = fh.read()
    if text.lstrip().startswith("{"):
        return CnfFormula.model_validate_json(text)
    return CnfFormula.parse(text)


def embedding_payload(g: Multigraph, rot: RotationSystem) -> Dict[str, Any]:
    """Embedding document of rot, validated by a full face traversal"""
    return EmbeddingDocument.from_report(rot, faces(g, rot)).to_dict()


def batch_inputs(path: str) -> Optional[List[str]]:
    """Sorted *.json files if path is a directory, else None"""
    if not os.path.isdir(path):
        return None
    names = sorted(name for name in os.listdir(path) if name.endswith(".json"))
    return [os.path.join(path, name) for name in names]


def dump_json(document: Dict[str, Any]) -> str:
    return json.dumps(document, sort_keys=True, indent=2)
