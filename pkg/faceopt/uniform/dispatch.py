"""
k-uniform dispatch on the Euler value of k
"""
import logging
from typing import Optional, Tuple

from faceopt.errors import NotBiconnected
from faceopt.graph.multigraph import Multigraph
from faceopt.graph.rotation import RotationSystem
from faceopt.graph.structure import bipartition, euler_uniform_k, is_biconnected
from faceopt.oracle.enumeration import exact_uniform
from faceopt.spqr.assembly import materialize
from faceopt.spqr.builder import build_spqr
from faceopt.uniform.four import recognize_uniform4
from faceopt.uniform.six import recognize_uniform6
from faceopt.uniform.three import recognize_uniform3

logger = logging.getLogger(__name__)

RECOGNIZERS = {3: recognize_uniform3, 4: recognize_uniform4, 6: recognize_uniform6}


def recognize_uniform(
    g: Multigraph,
    k: Optional[int] = None,
    limit: Optional[int] = None,
) -> Optional[Tuple[int, RotationSystem]]:
    """(k, embedding with all faces of size k), or None

    Without k, the only value Euler's formula allows is used.
    """
    if not is_biconnected(g):
        raise NotBiconnected("Input graph is not biconnected")
    euler_k = euler_uniform_k(g)
    if euler_k is None or (k is not None and k != euler_k):
        logger.debug(f"Euler gate: 2m={2 * g.m}, f={g.m - g.n + 2}, requested k={k}")
        return None
    k = euler_k
    if k % 2 == 0 and bipartition(g) is None:
        return None
    if k == 2:
        rot = materialize(build_spqr(g)) if g.n == 2 else None
    elif k in RECOGNIZERS:
        rot = RECOGNIZERS[k](g)
    else:
        logger.info(f"k={k}: falling back to enumeration")
        rot = exact_uniform(g, k, limit)
    return (k, rot) if rot is not None else None
