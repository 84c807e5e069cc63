"""
Seeded random biconnected planar multigraphs
"""
import logging
import random
from typing import List, NamedTuple, Optional, Tuple

from faceopt.config import faceopt_config
from faceopt.errors import InvalidParams
from faceopt.graph.multigraph import Multigraph

logger = logging.getLogger(__name__)


class RigidBase(NamedTuple):
    """3-connected planar skeleton glued in place of one of its edges"""

    name: str
    order: int
    edges: Tuple[Tuple[int, int], ...]

    @property
    def added_vertices(self) -> int:
        return self.order - 2

    @property
    def excess(self) -> int:
        """Growth of m - n when glued"""
        return len(self.edges) - 1 - self.added_vertices


def _wheel(rim: int) -> RigidBase:
    spokes = tuple((0, i) for i in range(1, rim + 1))
    ring = tuple((i, i % rim + 1) for i in range(1, rim + 1))
    return RigidBase(f"W{rim}", rim + 1, spokes + ring)


RIGID_BASES = (
    RigidBase("K4", 4, ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3))),
    _wheel(4),
    _wheel(5),
    RigidBase("prism", 6, ((0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3), (1, 4), (2, 5))),
    RigidBase("octahedron", 6, tuple(
        (i, j) for i in range(6) for j in range(i + 1, 6) if (i, j) not in ((0, 1), (2, 3), (4, 5))
    )),
    RigidBase("cube", 8, tuple(
        (i, i ^ bit) for i in range(8) for bit in (1, 2, 4) if i < i ^ bit
    )),
)

_SERIES = "series"
_PARALLEL = "parallel"


def _draw_rigid(rng: random.Random, n_budget: int, x_budget: int) -> List[RigidBase]:
    """Rigid bases whose vertex and excess needs fit the budgets"""
    chosen: List[RigidBase] = []
    for _ in range(rng.randint(0, min(n_budget // 2, x_budget // 3))):
        fits = [b for b in RIGID_BASES if b.added_vertices <= n_budget and b.excess <= x_budget]
        if not fits:
            break
        base = rng.choice(fits)
        chosen.append(base)
        n_budget -= base.added_vertices
        x_budget -= base.excess
    return chosen


def gen_random_biconnected(n_target: int, m_target: int, seed: Optional[int] = None) -> Multigraph:
    """Grow a 2-cycle by subdivisions, parallel edges and rigid gluings

    A rigid gluing replaces an edge uv by a 3-connected planar base with one of
    its edges mapped onto uv and kept; the base becomes an R-skeleton. The
    rigid bases are drawn first, then the counts force the number of
    subdivisions (n) and parallel edges (m - n).
    """
    if n_target < 2 or m_target < max(n_target, 2):
        raise InvalidParams(f"Need n >= 2 and m >= max(n, 2), got n={n_target}, m={m_target}")
    seed = faceopt_config.seed if seed is None else seed
    rng = random.Random(seed)
    rigid = _draw_rigid(rng, n_target - 2, m_target - n_target)
    operations = (
        list(rigid)
        + [_SERIES] * (n_target - 2 - sum(b.added_vertices for b in rigid))
        + [_PARALLEL] * (m_target - n_target - sum(b.excess for b in rigid))
    )
    rng.shuffle(operations)

    vertices = ["v0", "v1"]
    edges: List[Tuple[str, str, str]] = [("e0", "v0", "v1"), ("e1", "v0", "v1")]

    def new_vertex() -> str:
        vertices.append(f"v{len(vertices)}")
        return vertices[-1]

    def new_edge(u: str, v: str):
        edges.append((f"e{len(edges)}", u, v))

    for op in operations:
        i = rng.randrange(len(edges))
        eid, u, v = edges[i]
        if op == _SERIES:
            w = new_vertex()
            edges[i] = (eid, u, w)
            new_edge(w, v)
        elif op == _PARALLEL:
            new_edge(u, v)
        else:
            x, y = rng.choice(op.edges)
            names = {x: u, y: v}
            for corner in range(op.order):
                if corner not in names:
                    names[corner] = new_vertex()
            for a, b in op.edges:
                if {a, b} != {x, y}:
                    new_edge(names[a], names[b])
    graph = Multigraph(vertices, edges)
    logger.debug(f"Random graph seed={seed}: n={graph.n}, m={graph.m}, rigid={[b.name for b in rigid]}")
    return graph
