"""
Brute-force enumeration of combinatorial embeddings through SPQR choices
"""
import logging
import math
from typing import Callable, Dict, Iterator, List, Optional, Set, Tuple

from faceopt.config import faceopt_config
from faceopt.errors import SizeGuardExceeded
from faceopt.graph.multigraph import Multigraph
from faceopt.graph.rotation import RotationSystem, face_sizes, trace_faces
from faceopt.models.node_kind import NodeKind
from faceopt.spqr.assembly import NodePlan, materialize
from faceopt.spqr.builder import build_spqr
from faceopt.spqr.tree import EdgeKey, SPQRTree

logger = logging.getLogger(__name__)


def _unrank_permutation(items: List, index: int) -> List:
    """index-th permutation of items in lexicographic order"""
    pool = list(items)
    out = []
    for i in range(len(pool), 0, -1):
        block = math.factorial(i - 1)
        pos, index = divmod(index, block)
        out.append(pool.pop(pos))
    return out


def _unrank_canonical(items: List, index: int) -> List:
    """index-th permutation whose first item precedes its last item"""
    r = len(items)
    block = math.factorial(r - 2)
    pair, rest = divmod(index, block)
    for a in range(r):
        for b in range(a + 1, r):
            if pair == 0:
                middle = [x for i, x in enumerate(items) if i not in (a, b)]
                return [items[a]] + _unrank_permutation(middle, rest) + [items[b]]
            pair -= 1
    raise IndexError(index)


class EmbeddingChoice:
    """Per P-node child order after the parent edge, per R-node flip bit"""

    def __init__(self, p_orders: Dict[int, Tuple[EdgeKey, ...]], r_flips: Dict[int, bool]):
        self.p_orders = p_orders
        self.r_flips = r_flips

    def plans(self) -> Dict[int, NodePlan]:
        plans = {nid: NodePlan(params=order) for nid, order in self.p_orders.items()}
        plans.update({nid: NodePlan(params=flip) for nid, flip in self.r_flips.items()})
        return plans


class EmbeddingChoiceSpace:
    """Mixed-radix index over all embeddings, one per mirror pair

    The mirror symmetry is broken at an anchor node: the lowest-id R-node keeps
    flip=False, or, without R-nodes, the lowest-id P-node with two or more
    children only takes orders whose first child precedes its last.
    """

    def __init__(self, tree: SPQRTree):
        self.tree = tree
        self.p_nodes = tree.nodes_of_kind(NodeKind.P)
        self.r_nodes = tree.nodes_of_kind(NodeKind.R)
        self._children = {nid: [e.key for e in tree.child_edges(nid)] for nid in self.p_nodes}
        self.anchor: Optional[int] = None
        if self.r_nodes:
            self.anchor = self.r_nodes[0]
        else:
            self.anchor = next((nid for nid in self.p_nodes if len(self._children[nid]) >= 2), None)
        self._slots: List[Tuple[int, int]] = []
        for nid in sorted(self.p_nodes + self.r_nodes):
            self._slots.append((nid, self._radix(nid)))

    def _radix(self, nid: int) -> int:
        if self.tree.kind(nid) == NodeKind.R:
            return 1 if nid == self.anchor else 2
        r = len(self._children[nid])
        return math.factorial(r) // 2 if nid == self.anchor else math.factorial(r)

    def __len__(self) -> int:
        return math.prod(radix for _, radix in self._slots)

    def choice_at(self, index: int) -> EmbeddingChoice:
        if not 0 <= index < len(self):
            raise IndexError(index)
        digits = {}
        for nid, radix in reversed(self._slots):
            index, digits[nid] = divmod(index, radix)
        p_orders, r_flips = {}, {}
        for nid, digit in digits.items():
            if self.tree.kind(nid) == NodeKind.R:
                r_flips[nid] = bool(digit)
            elif nid == self.anchor:
                p_orders[nid] = tuple(_unrank_canonical(self._children[nid], digit))
            else:
                p_orders[nid] = tuple(_unrank_permutation(self._children[nid], digit))
        return EmbeddingChoice(p_orders, r_flips)

    def choices(self, start: int = 0, stop: Optional[int] = None) -> Iterator[EmbeddingChoice]:
        stop = len(self) if stop is None else min(stop, len(self))
        for index in range(start, stop):
            yield self.choice_at(index)

    def embeddings(self, start: int = 0, stop: Optional[int] = None) -> Iterator[RotationSystem]:
        for choice in self.choices(start, stop):
            yield materialize(self.tree, choice.plans())


def count_embeddings(tree: SPQRTree) -> int:
    return len(EmbeddingChoiceSpace(tree))


def choice_space(g: Multigraph, limit: Optional[int] = None, root_edge: Optional[str] = None) -> EmbeddingChoiceSpace:
    """Choice space of g, refused up front if larger than limit"""
    limit = faceopt_config.resolve_limit(limit)
    tree = build_spqr(g, root_edge)
    space = EmbeddingChoiceSpace(tree)
    if len(space) > limit:
        raise SizeGuardExceeded(f"{len(space)} embeddings exceed the limit of {limit}")
    logger.debug(f"Enumerating {len(space)} embeddings")
    return space


def enumerate_embeddings(g: Multigraph, limit: Optional[int] = None) -> Iterator[RotationSystem]:
    """Every embedding of g once up to global reflection, in deterministic order"""
    return choice_space(g, limit).embeddings()


def find_embedding(
    g: Multigraph,
    predicate: Callable[[List[int]], bool],
    limit: Optional[int] = None,
) -> Optional[RotationSystem]:
    """First embedding whose face sizes satisfy predicate"""
    for rot in enumerate_embeddings(g, limit):
        if predicate(face_sizes(g, rot)):
            return rot
    return None


def exact_min_max_face(g: Multigraph, limit: Optional[int] = None) -> Tuple[int, RotationSystem]:
    """OPT(g) with a witness"""
    f = g.m - g.n + 2
    lower = -(-2 * g.m // f)
    best: Optional[Tuple[int, RotationSystem]] = None
    for rot in enumerate_embeddings(g, limit):
        largest = max(face_sizes(g, rot))
        if best is None or largest < best[0]:
            best = (largest, rot)
            if largest <= lower:
                break
    return best


def exact_uniform(g: Multigraph, k: int, limit: Optional[int] = None) -> Optional[RotationSystem]:
    """Embedding with every face of size k, or None"""
    f = g.m - g.n + 2
    if f * k != 2 * g.m:
        return None
    return find_embedding(g, lambda sizes: all(s == k for s in sizes), limit)


def pertinent_samples(
    pert: Multigraph,
    poles: Tuple[str, str],
    limit: Optional[int] = None,
) -> Iterator[Tuple[Tuple[int, int], List[int]]]:
    """(boundary type, inner face sizes) for every embedding of a pertinent graph

    The poles are joined by an extra edge; its two faces give the boundary paths.
    """
    marker = "~parent"
    while pert.has_edge(marker):
        marker += "~"
    closed = pert.with_edge(marker, *poles)
    for rot in enumerate_embeddings(closed, limit):
        walks = trace_faces(rot, closed.endpoints)
        sides, inner = [], []
        for walk in walks:
            if any(d[0] == marker for d in walk):
                sides.append(len(walk) - 1)
            else:
                inner.append(len(walk))
        yield tuple(sorted(sides)), inner


def realized_types(pert: Multigraph, poles: Tuple[str, str], limit: Optional[int] = None) -> Set[Tuple[int, int]]:
    return {pair for pair, _ in pertinent_samples(pert, poles, limit)}
