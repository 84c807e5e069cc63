"""
MinMaxFace hardness instances for max face 5 from small CNF formulas

Each variable x is a diamond p, a, q, b whose diagonal p-q becomes a (1,3)-edge.
The cycles p-a-q (positive side) and p-b-q (negative side) hold the literal
edges, which become (1,2)-edges. A clause is a triangle of its literal edges,
or for two literals a 4-cycle with two plain edges. A literal is true when its
(1,2)-edge turns its short side into the clause face.
"""
import itertools
import logging
from typing import Dict, Iterator, List, Optional, Tuple

import networkx as nx
from networkx.utils import UnionFind

from faceopt.config import faceopt_config
from faceopt.errors import InvalidGraphError, RegimeViolation, SizeGuardExceeded
from faceopt.gadgets.gadget_graph import GadgetGraph, VariableGadget
from faceopt.graph.multigraph import Multigraph
from faceopt.graph.rotation import RotationSystem, faces, trace_faces
from faceopt.graph.structure import is_biconnected, is_triconnected
from faceopt.models.cnf_formula import CnfFormula
from faceopt.oracle.enumeration import choice_space

logger = logging.getLogger(__name__)

# slot edges of the two sides of a variable diamond
_POSITIVE_SLOTS = (("p", "a"), ("a", "q"))
_NEGATIVE_SLOTS = (("p", "b"), ("b", "q"))

Occurrence = Tuple[int, int]  # (clause index, position in clause)


def check_regime(formula: CnfFormula):
    """Clauses of size 2 or 3 on distinct variables; each variable at most
    twice positive, at most twice negative, and (2, 1) when it occurs thrice"""
    if not formula.clauses:
        raise RegimeViolation("Formula has no clauses")
    for j, clause in enumerate(formula.clauses):
        if len(clause) not in (2, 3):
            raise RegimeViolation(f"Clause {j} has {len(clause)} literals")
        if len({abs(lit) for lit in clause}) != len(clause):
            raise RegimeViolation(f"Clause {j} repeats a variable")
    for var in formula.variables:
        pos, neg = formula.occurrences(var)
        if pos > 2 or neg > 2 or pos + neg > 3 or (pos + neg == 3 and pos != 2):
            raise RegimeViolation(f"Variable {var} occurs {pos} times positive and {neg} times negative")


class _Layout:
    """One choice of literal slots and literal edge orientations"""

    def __init__(self, formula: CnfFormula, slots: Dict[Occurrence, Tuple[str, str]], flips: Dict[Occurrence, bool]):
        self.formula = formula
        self.slots = slots
        self.flips = flips

    def literal_edge(self, occ: Occurrence) -> str:
        var = abs(self.formula.clauses[occ[0]][occ[1]])
        x, y = self.slots[occ]
        return f"x{var}.{x}{y}"

    def literal_ends(self, occ: Occurrence) -> Tuple[str, str]:
        var = abs(self.formula.clauses[occ[0]][occ[1]])
        x, y = self.slots[occ]
        ends = (f"x{var}.{x}", f"x{var}.{y}")
        return (ends[1], ends[0]) if self.flips[occ] else ends


def _occurrences(formula: CnfFormula, var: int, positive: bool) -> List[Occurrence]:
    lit = var if positive else -var
    return [(j, i) for j, clause in enumerate(formula.clauses) for i, l in enumerate(clause) if l == lit]


def _layouts(formula: CnfFormula) -> Iterator[_Layout]:
    per_var = []
    for var in formula.variables:
        options = []
        pos, neg = _occurrences(formula, var, True), _occurrences(formula, var, False)
        for pos_slots in itertools.permutations(_POSITIVE_SLOTS, len(pos)):
            for neg_slots in itertools.permutations(_NEGATIVE_SLOTS, len(neg)):
                options.append(dict(zip(pos + neg, pos_slots + neg_slots)))
        per_var.append(options)
    all_occ = [(j, i) for j, clause in enumerate(formula.clauses) for i in range(len(clause))]
    # the first literal of each clause keeps its orientation; the rest is mirror images
    free = [occ for occ in all_occ if occ[1] != 0]
    for choice in itertools.product(*per_var):
        slots = {}
        for part in choice:
            slots.update(part)
        for bits in itertools.product((False, True), repeat=len(free)):
            flips = {occ: False for occ in all_occ}
            flips.update(zip(free, bits))
            yield _Layout(formula, slots, flips)


def _skeleton(layout: _Layout):
    """Skeleton edges (id, u, v, role) and gadget cycles as edge id sets"""
    formula = layout.formula
    uf = UnionFind()
    raw: List[Tuple[str, str, str, str]] = []
    cycles: List[frozenset] = []
    literal_ids = {layout.literal_edge(occ) for occ in layout.slots}
    for var in formula.variables:
        name = f"x{var}"
        raw.append((f"{name}.pq", f"{name}.p", f"{name}.q", "variable"))
        for side in (_POSITIVE_SLOTS, _NEGATIVE_SLOTS):
            ids = []
            for x, y in side:
                eid = f"{name}.{x}{y}"
                raw.append((eid, f"{name}.{x}", f"{name}.{y}", "literal" if eid in literal_ids else "plain"))
                ids.append(eid)
            cycles.append(frozenset([f"{name}.pq"] + ids))

    for j, clause in enumerate(formula.clauses):
        occs = [(j, i) for i in range(len(clause))]
        ends = [layout.literal_ends(occ) for occ in occs]
        ids = [layout.literal_edge(occ) for occ in occs]
        if len(clause) == 3:
            for i in range(3):
                uf.union(ends[i][1], ends[(i + 1) % 3][0])
        else:
            for i, (tail, head) in enumerate([(ends[0][1], ends[1][0]), (ends[1][1], ends[0][0])]):
                eid = f"c{j}.{i}"
                raw.append((eid, tail, head, "clause-plain"))
                ids.append(eid)
        cycles.append(frozenset(ids))

    # the smallest name represents each merged class
    rename = {x: min(group) for group in uf.to_sets() for x in group}
    edges = [(eid, rename.get(u, u), rename.get(v, v), role) for eid, u, v, role in raw]
    return edges, cycles, rename


def _cycle_is_simple(edges: Dict[str, Tuple[str, str]], cycle: frozenset) -> bool:
    graph = nx.MultiGraph()
    for eid in cycle:
        graph.add_edge(*edges[eid], key=eid)
    return all(d == 2 for _, d in graph.degree()) and nx.is_connected(graph)


def _cycles_meet_cleanly(edges: Dict[str, Tuple[str, str]], cycles: List[frozenset]) -> bool:
    """No two gadget faces share two vertices except along a common edge

    Two faces meeting in two vertices x, y that are not the ends of a shared
    edge leave {x, y} as a separation pair whatever the triangulation.
    """
    corners = [frozenset(x for eid in c for x in edges[eid]) for c in cycles]
    for (i, a), (j, b) in itertools.combinations(enumerate(cycles), 2):
        shared = corners[i] & corners[j]
        if len(shared) < 2:
            continue
        if len(shared) > 2 or not any(frozenset(edges[eid]) == shared for eid in a & b):
            return False
    return True


def _face_embedding(g: Multigraph, cycles: List[frozenset], limit: int) -> Optional[RotationSystem]:
    """An embedding in which every gadget cycle bounds a face"""
    try:
        space = choice_space(g, limit)
    except SizeGuardExceeded:
        return None
    for rot in space.embeddings():
        walks = trace_faces(rot, g.endpoints)
        boundaries = {frozenset(key for key, _, _ in walk) for walk in walks if len(walk) == len({k for k, _, _ in walk})}
        if all(c in boundaries for c in cycles):
            return rot
    return None


def _fan_chords(g: Multigraph, rot: RotationSystem, cycles: List[frozenset]) -> Optional[List[Tuple[str, str]]]:
    """Chords that triangulate every non-gadget face from its lowest usable vertex"""
    adjacent = {frozenset(g.endpoints(eid)) for eid in g.edge_ids}
    chords = []
    for walk in trace_faces(rot, g.endpoints):
        if frozenset(key for key, _, _ in walk) in cycles or len(walk) <= 3:
            continue
        ring = [tail for _, tail, _ in walk]
        if len(set(ring)) != len(ring):
            return None
        for centre in sorted(ring):
            i = ring.index(centre)
            around = ring[i:] + ring[:i]
            planned = [frozenset((centre, x)) for x in around[2:-1]]
            if not any(pair in adjacent for pair in planned):
                break
        else:
            return None
        adjacent.update(planned)
        chords.extend((centre, x) for x in around[2:-1])
    return chords


def _hub_spokes(g: Multigraph, rot: RotationSystem, cycles: List[frozenset]) -> Tuple[List[str], List[Tuple[str, str]]]:
    """A hub vertex inside every non-gadget face longer than 3, joined to its whole boundary"""
    hubs, spokes = [], []
    for walk in trace_faces(rot, g.endpoints):
        if frozenset(key for key, _, _ in walk) in cycles or len(walk) <= 3:
            continue
        hub = f"hub{len(hubs)}"
        hubs.append(hub)
        spokes.extend((hub, tail) for _, tail, _ in walk)
    return hubs, spokes


def _is_rigid(skeleton: List[Tuple[str, str, str, str]]) -> bool:
    simple = nx.Graph()
    simple.add_edges_from((u, v) for _, u, v, _ in skeleton)
    return simple.number_of_edges() == len(skeleton) and is_triconnected(simple)


def _rigid_fill(core: Multigraph, rot: RotationSystem, cycles: List[frozenset], skeleton):
    """Triangulate the non-gadget faces: fan chords first, hub vertices otherwise"""
    chords = _fan_chords(core, rot, cycles)
    if chords is not None:
        filled = skeleton + [(f"f{i}", u, v, "filler") for i, (u, v) in enumerate(chords)]
        if _is_rigid(filled):
            return [], filled
    hubs, spokes = _hub_spokes(core, rot, cycles)
    filled = skeleton + [(f"f{i}", u, v, "filler") for i, (u, v) in enumerate(spokes)]
    if _is_rigid(filled):
        return hubs, filled
    return None


def _substitute(skeleton: List[Tuple[str, str, str, str]]):
    """Replace variable edges by (1,3)-edges and literal edges by (1,2)-edges"""
    edges, roles, extra = [], {}, []
    lengths = {"variable": 3, "literal": 2}
    for eid, u, v, role in skeleton:
        edges.append((eid, u, v))
        roles[eid] = role
        if role in lengths:
            path = [u] + [f"{eid}.w{i}" for i in range(1, lengths[role])] + [v]
            extra.extend(path[1:-1])
            for i in range(lengths[role]):
                pid = f"{eid}.path{i}"
                edges.append((pid, path[i], path[i + 1]))
                roles[pid] = f"{role}-path"
    return edges, roles, extra


def distinct_clauses(formula: CnfFormula) -> CnfFormula:
    """The formula without repeated clauses (as literal sets); satisfiability is unchanged"""
    seen, clauses = set(), []
    for clause in formula.clauses:
        key = frozenset(clause)
        if key not in seen:
            seen.add(key)
            clauses.append(list(clause))
    return CnfFormula(clauses=clauses, num_vars=formula.num_vars)


def gen_minmax5_instance(formula: CnfFormula) -> GadgetGraph:
    """Graph with an embedding of max face 5 iff the formula is satisfiable"""
    check_regime(formula)
    formula = distinct_clauses(formula)
    budget = faceopt_config.layout_limit
    for tried, layout in enumerate(_layouts(formula)):
        if tried >= budget:
            break
        skeleton, cycles, rename = _skeleton(layout)
        if any(u == v for _, u, v, _ in skeleton):
            continue
        pairs = [frozenset((u, v)) for _, u, v, _ in skeleton]
        if len(set(pairs)) != len(pairs):
            continue
        vertices = sorted({x for _, u, v, _ in skeleton for x in (u, v)})
        core = Multigraph(vertices, [(eid, u, v) for eid, u, v, _ in skeleton])
        ends = core.edge_mapping()
        if not is_biconnected(core) or not all(_cycle_is_simple(ends, c) for c in cycles):
            continue
        if not _cycles_meet_cleanly(ends, cycles):
            continue
        try:
            rot = _face_embedding(core, cycles, budget)
        except InvalidGraphError as e:
            logger.debug(f"Layout {tried} skipped: {e}")
            continue
        if rot is None:
            continue
        filled = _rigid_fill(core, rot, cycles, skeleton)
        if filled is None:
            continue
        hubs, filled = filled

        edges, roles, extra = _substitute(filled)
        graph = Multigraph(vertices + hubs + extra, edges)
        variables = {
            var: VariableGadget(var, f"x{var}.pq", f"x{var}.pq.w1", rename.get(f"x{var}.a", f"x{var}.a"))
            for var in formula.variables
        }
        logger.info(f"Hardness instance after {tried + 1} layouts: n={graph.n}, m={graph.m}, hubs={len(hubs)}")
        return GadgetGraph(graph, roles, variables=variables)
    raise RegimeViolation("No planar layout with a rigid skeleton was found for this formula")


def assignment_from_embedding(instance: GadgetGraph, rot: RotationSystem) -> Dict[int, bool]:
    """x is true iff the direct variable edge faces the positive side of its diamond"""
    report = faces(instance.graph, rot)
    values = {}
    for var, gadget in instance.variables.items():
        p, q = instance.graph.endpoints(gadget.edge)
        for tail, head in ((p, q), (q, p)):
            face = report.face_of(gadget.edge, tail, head)
            if gadget.path_vertex not in face.vertices():
                values[var] = gadget.positive_apex in face.vertices()
                break
    return values
