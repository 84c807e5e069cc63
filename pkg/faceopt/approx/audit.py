"""
Out-minimality audit of neat embeddings against enumerated pertinent embeddings
"""
import logging
from typing import List, Optional, Tuple

from faceopt.approx.neat import neat_embeddings
from faceopt.graph.multigraph import Multigraph
from faceopt.oracle.enumeration import realized_types
from faceopt.spqr.builder import build_spqr

logger = logging.getLogger(__name__)


def audit_out_minimality(g: Multigraph, limit: Optional[int] = None) -> List[Tuple[int, Tuple[int, int], Tuple[int, int]]]:
    """(node, neat type, beating type) for every realized type the neat one does not dominate"""
    tree = build_spqr(g)
    state = neat_embeddings(tree)
    violations = []
    for nid, neat in sorted(state.neats.items()):
        a, b = neat.type_pair
        pert = tree.pertinent_graph(nid)
        for other in sorted(realized_types(pert, tree.poles(nid), limit)):
            if a > other[0] or b > other[1]:
                logger.warning(f"Node {nid}: neat type {(a, b)} not below realized {other}")
                violations.append((nid, (a, b), other))
    return violations
