"""
Domain models package
Exports truth values, program syntax and interpretations
"""

from .bilattice import BilatticeKind, FourValue, IntervalValue, TruthValue
from .program import (
    And,
    Atom,
    Const,
    Exists,
    Forall,
    Formula,
    GroundProgram,
    HerbrandBase,
    KJoin,
    KMeet,
    Neg,
    Or,
    Program,
    Rule,
    Term,
)
from .interpretation import Interpretation, PseudoPair, eval_formula, eval_pseudo

__all__ = [
    "BilatticeKind",
    "FourValue",
    "IntervalValue",
    "TruthValue",
    "And",
    "Atom",
    "Const",
    "Exists",
    "Forall",
    "Formula",
    "GroundProgram",
    "HerbrandBase",
    "KJoin",
    "KMeet",
    "Neg",
    "Or",
    "Program",
    "Rule",
    "Term",
    "Interpretation",
    "PseudoPair",
    "eval_formula",
    "eval_pseudo",
]
