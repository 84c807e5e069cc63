"""
Embedding type pairs and node labels
"""
from typing import NamedTuple, Optional


class TypePair(NamedTuple):
    """Boundary path lengths (a, b) of an embedded pertinent graph, a <= b"""

    a: int
    b: int

    @classmethod
    def of(cls, x: int, y: int) -> 'TypePair':
        return cls(min(x, y), max(x, y))

    def precedes(self, other: 'TypePair') -> bool:
        """Component-wise order"""
        return self.a <= other.a and self.b <= other.b

    def __str__(self) -> str:
        return f"({self.a},{self.b})"


Q_TYPE = TypePair(1, 1)

# (1,3) is left out: it is incomparable with (2,2)
CHAIN_4 = (TypePair(1, 1), TypePair(1, 2), TypePair(2, 2), TypePair(2, 3), TypePair(3, 3))
CHAIN_3 = CHAIN_4[:3]


def chain_rank(pair: TypePair) -> int:
    return CHAIN_4.index(pair)


class NodeLabel4:
    """Best chain type of a node and whether a (1,3)-embedding exists"""

    def __init__(self, best: Optional[TypePair] = None, admits_13: bool = False):
        self.best = best
        self.admits_13 = admits_13

    @property
    def feasible(self) -> bool:
        return self.best is not None or self.admits_13

    def __repr__(self) -> str:
        return f"NodeLabel4(best={self.best}, admits_13={self.admits_13})"
