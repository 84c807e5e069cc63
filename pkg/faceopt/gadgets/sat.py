"""
Brute-force satisfiability for small formulas
"""
import itertools
import logging

from faceopt.config import faceopt_config
from faceopt.errors import InvalidParams, TooLarge
from faceopt.models.cnf_formula import CnfFormula

logger = logging.getLogger(__name__)

SAT_MODES = ("3sat", "1in3")


def _clause_ok(clause, assignment, mode: str) -> bool:
    true_literals = sum(1 for lit in clause if assignment[abs(lit)] == (lit > 0))
    return true_literals == 1 if mode == "1in3" else true_literals >= 1


def sat_oracle(formula: CnfFormula, mode: str = "3sat") -> bool:
    """Truth-table decision; 1in3 needs exactly one true literal per clause"""
    if mode not in SAT_MODES:
        raise InvalidParams(f"Unknown SAT mode {mode}; expected one of {SAT_MODES}")
    variables = formula.variables
    if len(variables) > faceopt_config.sat_max_vars:
        raise TooLarge(f"{len(variables)} variables exceed the limit of {faceopt_config.sat_max_vars}")
    for values in itertools.product((False, True), repeat=len(variables)):
        assignment = dict(zip(variables, values))
        if all(_clause_ok(clause, assignment, mode) for clause in formula.clauses):
            logger.debug(f"Satisfying assignment ({mode}): {assignment}")
            return True
    return False
