"""
Exact rational two-phase simplex with Bland's rule
"""
import logging
from fractions import Fraction
from typing import Dict, List, Optional, Tuple, Union

from faceopt.errors import FaceoptError, Infeasible, InvalidParams, Unbounded

logger = logging.getLogger(__name__)

Number = Union[int, Fraction]
_SENSES = ("<=", ">=", "==")


class LPInstance:
    """Minimize a linear objective over bounded rational variables"""

    def __init__(self):
        self.variables: List[str] = []
        self.bounds: Dict[str, Tuple[Fraction, Optional[Fraction]]] = {}
        self.rows: List[Tuple[Dict[str, Fraction], str, Fraction]] = []
        self.objective: Dict[str, Fraction] = {}

    def add_variable(self, name: str, lb: Number = 0, ub: Optional[Number] = None) -> str:
        if name in self.bounds:
            raise InvalidParams(f"Variable {name} declared twice")
        lb = Fraction(lb)
        ub = None if ub is None else Fraction(ub)
        if ub is not None and ub < lb:
            raise Infeasible(f"Variable {name} has empty bounds [{lb}, {ub}]")
        self.variables.append(name)
        self.bounds[name] = (lb, ub)
        return name

    def add_constraint(self, coeffs: Dict[str, Number], sense: str, rhs: Number):
        if sense not in _SENSES:
            raise InvalidParams(f"Unknown constraint sense {sense}")
        for name in coeffs:
            if name not in self.bounds:
                raise InvalidParams(f"Unknown variable {name}")
        self.rows.append(({k: Fraction(v) for k, v in coeffs.items() if v != 0}, sense, Fraction(rhs)))

    def minimize(self, coeffs: Dict[str, Number]):
        self.objective = {k: Fraction(v) for k, v in coeffs.items()}

    def check(self, assignment: Dict[str, Fraction]) -> bool:
        """Exact feasibility of an assignment"""
        for name, (lb, ub) in self.bounds.items():
            x = assignment[name]
            if x < lb or (ub is not None and x > ub):
                return False
        for coeffs, sense, rhs in self.rows:
            lhs = sum((c * assignment[k] for k, c in coeffs.items()), Fraction(0))
            if (sense == "<=" and lhs > rhs) or (sense == ">=" and lhs < rhs) or (sense == "==" and lhs != rhs):
                return False
        return True

    def value(self, assignment: Dict[str, Fraction]) -> Fraction:
        return sum((c * assignment[k] for k, c in self.objective.items()), Fraction(0))

    def __repr__(self) -> str:
        return f"LPInstance(vars={len(self.variables)}, rows={len(self.rows)})"


class _Tableau:
    """Dense tableau; the last entry of each row is the right-hand side"""

    def __init__(self, rows: List[List[Fraction]], basis: List[int]):
        self.rows = rows
        self.basis = basis
        self.obj: List[Fraction] = []

    def set_objective(self, cost: List[Fraction]):
        obj = list(cost) + [Fraction(0)]
        for row, b in zip(self.rows, self.basis):
            factor = obj[b]
            if factor:
                obj = [o - factor * r for o, r in zip(obj, row)]
        self.obj = obj

    def pivot(self, r: int, j: int):
        row = self.rows[r]
        piv = row[j]
        row = [x / piv for x in row]
        self.rows[r] = row
        for i, other in enumerate(self.rows):
            if i != r and other[j]:
                f = other[j]
                self.rows[i] = [a - f * b for a, b in zip(other, row)]
        if self.obj[j]:
            f = self.obj[j]
            self.obj = [a - f * b for a, b in zip(self.obj, row)]
        self.basis[r] = j

    def run(self, allowed: int):
        """Bland's rule over columns < allowed until optimal"""
        while True:
            entering = next((j for j in range(allowed) if self.obj[j] < 0), None)
            if entering is None:
                return
            best = None
            for i, row in enumerate(self.rows):
                if row[entering] > 0:
                    ratio = row[-1] / row[entering]
                    candidate = (ratio, self.basis[i], i)
                    if best is None or candidate < best:
                        best = candidate
            if best is None:
                raise Unbounded("Objective is unbounded below")
            self.pivot(best[2], entering)


def solve_lp(inst: LPInstance) -> Tuple[Fraction, Dict[str, Fraction]]:
    """Exact optimum and optimal assignment; raises Infeasible or Unbounded"""
    names = inst.variables
    index = {name: j for j, name in enumerate(names)}
    lows = [inst.bounds[name][0] for name in names]

    constraints: List[Tuple[Dict[int, Fraction], str, Fraction]] = []
    for coeffs, sense, rhs in inst.rows:
        shifted = rhs - sum((c * lows[index[k]] for k, c in coeffs.items()), Fraction(0))
        constraints.append(({index[k]: c for k, c in coeffs.items()}, sense, shifted))
    for name in names:
        lb, ub = inst.bounds[name]
        if ub is not None:
            constraints.append(({index[name]: Fraction(1)}, "<=", ub - lb))

    n = len(names)
    slack_cols = [j for j, (_, sense, _) in enumerate(constraints) if sense != "=="]
    n_slack = len(slack_cols)
    n_rows = len(constraints)
    width = n + n_slack + n_rows
    rows: List[List[Fraction]] = []
    slack_of = {row_idx: n + k for k, row_idx in enumerate(slack_cols)}
    for i, (coeffs, sense, rhs) in enumerate(constraints):
        row = [Fraction(0)] * (width + 1)
        for j, c in coeffs.items():
            row[j] = c
        if sense == "<=":
            row[slack_of[i]] = Fraction(1)
        elif sense == ">=":
            row[slack_of[i]] = Fraction(-1)
        row[-1] = rhs
        if rhs < 0:
            row = [-x for x in row]
        row[n + n_slack + i] = Fraction(1)
        rows.append(row)

    tableau = _Tableau(rows, [n + n_slack + i for i in range(n_rows)])
    phase_one = [Fraction(0)] * (n + n_slack) + [Fraction(1)] * n_rows
    tableau.set_objective(phase_one)
    tableau.run(width)
    if tableau.obj[-1] != 0:
        raise Infeasible(f"LP infeasible, phase one optimum {-tableau.obj[-1]}")

    # drive artificial variables out of the basis; drop redundant rows
    structural = n + n_slack
    r = 0
    while r < len(tableau.rows):
        if tableau.basis[r] >= structural:
            j = next((j for j in range(structural) if tableau.rows[r][j] != 0), None)
            if j is None:
                del tableau.rows[r]
                del tableau.basis[r]
                continue
            tableau.pivot(r, j)
        r += 1
    for i, row in enumerate(tableau.rows):
        tableau.rows[i] = row[:structural] + [row[-1]]

    cost = [inst.objective.get(name, Fraction(0)) for name in names] + [Fraction(0)] * n_slack
    tableau.set_objective(cost)
    tableau.run(structural)

    values = [Fraction(0)] * structural
    for row, b in zip(tableau.rows, tableau.basis):
        values[b] = row[-1]
    assignment = {name: values[j] + lows[j] for j, name in enumerate(names)}
    if not inst.check(assignment):
        raise FaceoptError("Simplex returned an assignment violating a constraint")
    value = inst.value(assignment)
    logger.debug(f"LP solved: {inst!r}, optimum {value}")
    return value, assignment
