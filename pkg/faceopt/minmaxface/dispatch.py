"""
k-MinMaxFace dispatch: direct cases, polynomial DPs, oracle fallback
"""
import logging
from typing import Optional

from faceopt.errors import InvalidParams, NotBiconnected
from faceopt.graph.multigraph import Multigraph
from faceopt.graph.rotation import RotationSystem
from faceopt.graph.structure import is_biconnected
from faceopt.minmaxface.four import decide_minmax4
from faceopt.minmaxface.three import decide_minmax3
from faceopt.oracle.enumeration import find_embedding
from faceopt.spqr.builder import build_spqr
from faceopt.spqr.assembly import materialize

logger = logging.getLogger(__name__)


def decide_minmax(g: Multigraph, k: int, limit: Optional[int] = None) -> Optional[RotationSystem]:
    """Embedding of g with every face of size at most k, or None"""
    if k < 2:
        raise InvalidParams(f"k must be at least 2, got {k}")
    if not is_biconnected(g):
        raise NotBiconnected("Input graph is not biconnected")
    if k == 2:
        # only a bundle of parallel edges has all faces of size 2
        if g.n == 2:
            return materialize(build_spqr(g))
        return None
    if k == 3:
        return decide_minmax3(g)
    if k == 4:
        return decide_minmax4(g)
    logger.info(f"k={k}: falling back to enumeration")
    return find_embedding(g, lambda sizes: max(sizes) <= k, limit)
