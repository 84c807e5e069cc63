"""
CNF formulas with DIMACS-style signed literals
"""
from typing import Dict, List, Optional, Tuple

from pydantic import BaseModel, Field, field_validator, model_validator


class CnfFormula(BaseModel):
    """Clauses as lists of non-zero ints; -3 is the negation of variable 3"""

    clauses: List[List[int]] = Field(default_factory=list)
    num_vars: Optional[int] = Field(None, description="Declared variable count")

    @field_validator('clauses')
    @classmethod
    def check_literals(cls, clauses):
        for clause in clauses:
            if not clause:
                raise ValueError("Empty clause")
            if any(lit == 0 for lit in clause):
                raise ValueError("Literal 0 is not allowed")
        return clauses

    @model_validator(mode='after')
    def check_num_vars(self):
        used = max((abs(lit) for clause in self.clauses for lit in clause), default=0)
        if self.num_vars is None:
            self.num_vars = used
        elif self.num_vars < used:
            raise ValueError(f"num_vars={self.num_vars} but variable {used} is used")
        return self

    @property
    def variables(self) -> List[int]:
        return sorted({abs(lit) for clause in self.clauses for lit in clause})

    def occurrences(self, var: int) -> Tuple[int, int]:
        """(positive, negative) occurrence counts"""
        pos = sum(1 for clause in self.clauses for lit in clause if lit == var)
        neg = sum(1 for clause in self.clauses for lit in clause if lit == -var)
        return pos, neg

    def evaluate(self, assignment: Dict[int, bool]) -> bool:
        return all(any(assignment[abs(lit)] == (lit > 0) for lit in clause) for clause in self.clauses)

    @classmethod
    def parse(cls, text: str) -> 'CnfFormula':
        """Parse '1 2 0 -1 -2 0' (DIMACS body, optional p line and comments)"""
        clauses: List[List[int]] = []
        current: List[int] = []
        num_vars = None
        for line in text.splitlines():
            line = line.strip()
            if not line or line.startswith('c'):
                continue
            if line.startswith('p'):
                parts = line.split()
                num_vars = int(parts[2])
                continue
            for token in line.split():
                lit = int(token)
                if lit == 0:
                    if current:
                        clauses.append(current)
                    current = []
                else:
                    current.append(lit)
        if current:
            clauses.append(current)
        return cls(clauses=clauses, num_vars=num_vars)
