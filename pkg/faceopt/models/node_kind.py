"""
SPQR node kinds
"""
from enum import Enum


class NodeKind(Enum):
    """Kinds of SPQR-tree nodes"""

    Q = "Q"
    S = "S"
    P = "P"
    R = "R"

    @classmethod
    def from_code(cls, code: str) -> 'NodeKind':
        """Get NodeKind from code string"""
        code = code.upper()
        for kind in cls:
            if kind.value == code:
                return kind
        raise ValueError(f"Unknown node kind: {code}")

    @property
    def code(self) -> str:
        """Get kind code"""
        return self.value

    @property
    def has_choice(self) -> bool:
        """P-nodes permute, R-nodes flip"""
        return self in (NodeKind.P, NodeKind.R)

    def __str__(self) -> str:
        return self.value
