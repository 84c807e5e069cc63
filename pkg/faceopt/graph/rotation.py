"""
Rotation systems and face traversal

Faces are traced counterclockwise: from dart (e, u->v) the next dart leaves v
along the successor of e in v's cyclic order.
"""
import logging
from collections import Counter
from typing import Callable, Dict, Hashable, Iterable, List, Mapping, Sequence, Tuple, Union

from pydantic import BaseModel, Field

from faceopt.errors import InvalidParams, NonPlanarRotation
from faceopt.graph.multigraph import Multigraph

logger = logging.getLogger(__name__)

Dart = Tuple[Hashable, str, str]
Endpoints = Union[Mapping[Hashable, Tuple[str, str]], Callable[[Hashable], Tuple[str, str]]]


class RotationSystem:
    """Cyclic order of edge keys around each vertex"""

    def __init__(self, rotation: Mapping[str, Iterable[Hashable]]):
        self._rotation: Dict[str, Tuple[Hashable, ...]] = {
            v: tuple(rotation[v]) for v in sorted(rotation, key=str)
        }

    def __getitem__(self, v: str) -> Tuple[Hashable, ...]:
        return self._rotation[v]

    def __contains__(self, v: str) -> bool:
        return v in self._rotation

    def __iter__(self):
        return iter(self._rotation)

    def __len__(self) -> int:
        return len(self._rotation)

    def items(self):
        return self._rotation.items()

    def as_dict(self) -> Dict[str, List[Hashable]]:
        return {v: list(seq) for v, seq in self._rotation.items()}

    def successor(self, v: str, key: Hashable) -> Hashable:
        seq = self._rotation[v]
        return seq[(seq.index(key) + 1) % len(seq)]

    def mirrored(self) -> 'RotationSystem':
        return RotationSystem({v: tuple(reversed(seq)) for v, seq in self._rotation.items()})

    def canonical(self) -> Dict[str, Tuple[Hashable, ...]]:
        """Each cyclic sequence rotated to start at its smallest key"""
        out = {}
        for v, seq in self._rotation.items():
            if not seq:
                out[v] = seq
                continue
            start = min(range(len(seq)), key=lambda i: str(seq[i]))
            out[v] = seq[start:] + seq[:start]
        return out

    def __eq__(self, other) -> bool:
        if not isinstance(other, RotationSystem):
            return NotImplemented
        return self.canonical() == other.canonical()

    def __hash__(self) -> int:
        return hash(tuple(sorted((v, tuple(map(str, s))) for v, s in self.canonical().items())))

    def __repr__(self) -> str:
        return f"RotationSystem({self.as_dict()})"


def _endpoint_lookup(endpoints: Endpoints) -> Callable[[Hashable], Tuple[str, str]]:
    if callable(endpoints):
        return endpoints
    return endpoints.__getitem__


def trace_faces(rotation: Mapping[str, Sequence[Hashable]], endpoints: Endpoints) -> List[List[Dart]]:
    """Partition all darts of the rotation into facial walks"""
    ends_of = _endpoint_lookup(endpoints)
    successor: Dict[Tuple[str, Hashable], Hashable] = {}
    for v, seq in rotation.items():
        size = len(seq)
        for i, key in enumerate(seq):
            successor[(v, key)] = seq[(i + 1) % size]

    def other(key: Hashable, v: str) -> str:
        a, b = ends_of(key)
        return b if v == a else a

    visited = set()
    walks: List[List[Dart]] = []
    for v in sorted(rotation, key=str):
        for key in rotation[v]:
            start = (key, v, other(key, v))
            if start in visited:
                continue
            walk = []
            dart = start
            while dart not in visited:
                visited.add(dart)
                walk.append(dart)
                k, _, head = dart
                try:
                    nxt = successor[(head, k)]
                except KeyError:
                    raise InvalidParams(f"Edge {k} missing from the rotation at {head}")
                dart = (nxt, head, other(nxt, head))
            if dart != start:
                raise InvalidParams("Rotation does not define a permutation of darts")
            walks.append(walk)
    return walks


def trace_face(rotation: Mapping[str, Sequence[Hashable]], endpoints: Endpoints, start: Dart) -> List[Dart]:
    """The single facial walk through `start`"""
    ends_of = _endpoint_lookup(endpoints)
    walk = []
    dart = start
    while True:
        walk.append(dart)
        key, _, head = dart
        seq = rotation[head]
        nxt = seq[(list(seq).index(key) + 1) % len(seq)]
        a, b = ends_of(nxt)
        dart = (nxt, head, b if head == a else a)
        if dart == start:
            return walk
        if len(walk) > 4 * sum(len(s) for s in rotation.values()):
            raise InvalidParams("Facial walk does not close")


def _check_rotation(g: Multigraph, rot: RotationSystem):
    if set(rot) != set(g.vertices):
        raise InvalidParams("Rotation vertices differ from graph vertices")
    for v in g.vertices:
        seq = rot[v]
        if len(seq) != g.degree(v) or set(seq) != set(g.incident(v)):
            raise InvalidParams(f"Rotation at {v} is not a permutation of its incident edges")


def face_sizes(g: Multigraph, rot: RotationSystem) -> List[int]:
    """Face sizes only; same Euler check as `faces`"""
    walks = trace_faces(rot, g.endpoints)
    if g.n - g.m + len(walks) != 2:
        raise NonPlanarRotation(f"Euler check failed: n={g.n}, m={g.m}, f={len(walks)}")
    return [len(w) for w in walks]


class Face(BaseModel):
    """One facial walk"""

    id: int = Field(..., description="Face index in traversal order")
    darts: List[Tuple[str, str, str]] = Field(default_factory=list, description="(edge id, tail, head)")

    @property
    def size(self) -> int:
        return len(self.darts)

    def sides(self) -> List[List[str]]:
        return [[eid, f"{u}->{v}"] for eid, u, v in self.darts]

    def edge_ids(self) -> List[str]:
        return [eid for eid, _, _ in self.darts]

    def vertices(self) -> List[str]:
        return [u for _, u, _ in self.darts]


class FaceReport(BaseModel):
    """All faces of one embedding"""

    faces: List[Face] = Field(default_factory=list)

    @property
    def f(self) -> int:
        return len(self.faces)

    @property
    def max_face(self) -> int:
        return max((face.size for face in self.faces), default=0)

    @property
    def sizes(self) -> List[int]:
        return [face.size for face in self.faces]

    @property
    def size_multiset(self) -> Dict[int, int]:
        return dict(sorted(Counter(self.sizes).items()))

    def face_of(self, eid: str, tail: str, head: str) -> Face:
        for face in self.faces:
            if (eid, tail, head) in face.darts:
                return face
        raise KeyError((eid, tail, head))


def faces(g: Multigraph, rot: RotationSystem) -> FaceReport:
    """Trace every face of g under rot; fails on a non-planar rotation"""
    _check_rotation(g, rot)
    walks = trace_faces(rot, g.endpoints)
    if g.n - g.m + len(walks) != 2:
        raise NonPlanarRotation(f"Euler check failed: n={g.n}, m={g.m}, f={len(walks)}")
    report = FaceReport(faces=[Face(id=i, darts=list(w)) for i, w in enumerate(walks)])
    if sum(report.sizes) != 2 * g.m:
        raise NonPlanarRotation("Face sizes do not sum to 2m")
    return report
