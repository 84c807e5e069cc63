"""
Exception hierarchy for graph, embedding and solver failures
"""


class FaceoptError(Exception):
    """Base error; `exit_code` is what the CLI returns for it"""

    exit_code: int = 2


class InvalidGraphError(FaceoptError):
    """Input graph is malformed or outside the supported class"""


class LoopEdge(InvalidGraphError):
    pass


class UnknownVertex(InvalidGraphError):
    pass


class DuplicateId(InvalidGraphError):
    pass


class NotBiconnected(InvalidGraphError):
    pass


class TooSmall(InvalidGraphError):
    pass


class NonPlanarSkeleton(InvalidGraphError):
    """An R-node skeleton has no planar embedding, so the graph is not planar"""


class NonPlanarRotation(FaceoptError):
    """Face traversal of a rotation system violates Euler's formula"""


class InvalidParams(FaceoptError):
    pass


class InvalidParity(InvalidParams):
    pass


class RegimeViolation(InvalidParams):
    """Formula outside the occurrence regime of the hardness construction"""


class SizeGuardExceeded(FaceoptError):
    exit_code = 3


class TooLarge(SizeGuardExceeded):
    pass


class LPError(FaceoptError):
    """Raised by the simplex kernel; always a bug in how the LP was built"""

    exit_code = 4


class Infeasible(LPError):
    pass


class Unbounded(LPError):
    pass


class WitnessError(FaceoptError):
    """A constructed embedding failed its own validation"""

    exit_code = 4
