"""
Support and unfounded sets
The greatest safe falsehood estimate Sp_P(I), its oracles, and Π, Π̃, Φ′, W_P
"""

from dataclasses import dataclass
from itertools import combinations, product
from typing import List, Optional, Tuple

import structlog

import config
from errors import BilatticeKindError, LimitExceededError
from models.bilattice import BilatticeKind
from models.interpretation import Interpretation, eval_formula
from models.program import Atom, GroundProgram, conjuncts, disjuncts
from operators import (
    FixpointTrace,
    IterationOrder,
    iterate,
    lfp_k,
    phi,
    require_classical,
    t_p,
)

logger = structlog.get_logger(__name__)


@dataclass
class SupportResult:
    """Sp_P(I) together with its h-sequence"""
    support: Interpretation
    trace: FixpointTrace


def is_safe(g: GroundProgram, i: Interpretation, j: Interpretation) -> bool:
    """J ≼_k I_⊥t and J ≼_k Φ(I ⊕ J)"""
    falsity = Interpretation.bottom_t(g.base, g.kind)
    return j.leq_k(falsity) and j.leq_k(phi(g, i.join_k(j)))


def support(g: GroundProgram, i: Interpretation) -> SupportResult:
    """h_0 = I_⊥t, h_{n+1} = I_⊥t ⊗ Φ(I ⊕ h_n) until stable"""
    falsity = Interpretation.bottom_t(g.base, g.kind)
    result, trace = iterate(
        lambda h: falsity.meet_k(phi(g, i.join_k(h))),
        falsity,
        IterationOrder.K_DECREASING,
        label="support",
    )
    return SupportResult(result, trace)


def _check_limit(n: int, limit: int, what: str) -> None:
    if n > limit:
        raise LimitExceededError(f"{what} enumerates 2^{n} candidates; the limit is n <= {limit}")


def brute_force_support(
    g: GroundProgram, i: Interpretation, limit: Optional[int] = None
) -> Interpretation:
    """⊕ of every safe J with values in {f, ⊥}; FOUR only"""
    if g.kind is not BilatticeKind.FOUR:
        raise BilatticeKindError("Brute-force support enumerates FOUR candidates only")
    _check_limit(len(g.base), config.SUPPORT_ORACLE_LIMIT if limit is None else limit,
                 "brute_force_support")
    kind = g.kind
    joined = Interpretation.bottom_k(g.base, kind)
    for values in product((kind.bottom, kind.false), repeat=len(g.base)):
        candidate = Interpretation(g.base, values, kind)
        if is_safe(g, i, candidate):
            joined = joined.join_k(candidate)
    return joined


def greatest_unfounded_set(g: GroundProgram, i: Interpretation) -> List[Atom]:
    """Atoms the support makes false, in base order; classical programs only"""
    require_classical(g)
    return support(g, i).support.atoms_with(g.kind.false)


def unfounded_set_to_interpretation(g: GroundProgram, atoms: List[Atom]) -> Interpretation:
    """¬.X: atoms of X false, everything else ⊥"""
    values = [g.kind.false if atom in atoms else g.kind.bottom for atom in g.base]
    return Interpretation(g.base, values, g.kind)


def is_unfounded(g: GroundProgram, i: Interpretation, atoms: List[Atom]) -> bool:
    """Every disjunct of each body in X is false under I or under ¬.X"""
    negated = unfounded_set_to_interpretation(g, atoms)
    false = g.kind.false
    for atom in atoms:
        for disjunct in disjuncts(g.rule_for(atom)):
            if eval_formula(i, disjunct) == false:
                continue
            if any(eval_formula(negated, part) == false for part in conjuncts(disjunct)):
                continue
            return False
    return True


def unfounded_set_oracle(
    g: GroundProgram, i: Interpretation, limit: Optional[int] = None
) -> List[Atom]:
    """Union of all unfounded subsets, by enumeration; classical programs and interpretations"""
    require_classical(g, i)
    _check_limit(len(g.base), config.UNFOUNDED_ORACLE_LIMIT if limit is None else limit,
                 "unfounded_set_oracle")
    found = set()
    atoms = list(g.base)
    for size in range(1, len(atoms) + 1):
        for subset in combinations(atoms, size):
            if is_unfounded(g, i, list(subset)):
                found.update(subset)
    return [atom for atom in atoms if atom in found]


def pi(g: GroundProgram, i: Interpretation) -> Interpretation:
    """Π_P(I) = Φ(I ⊕ Sp(I))"""
    return phi(g, i.join_k(support(g, i).support))


def pi_tilde(g: GroundProgram, i: Interpretation) -> Interpretation:
    """Π̃_P(I) = Φ(I) ⊕ Sp(I)"""
    return phi(g, i).join_k(support(g, i).support)


def phi_prime(
    g: GroundProgram, i: Interpretation, sp: Optional[SupportResult] = None
) -> Tuple[Interpretation, FixpointTrace]:
    """
    Φ′_P(I): J_0 = Sp(I), J_{n+1} = Φ(J_n) ⊕ J_n
    The support computation is kept as the start trace
    """
    sp = sp or support(g, i)
    result, trace = lfp_k(lambda j: phi(g, j).join_k(j), sp.support, label="phi_prime")
    trace.start_trace = sp.trace
    return result, trace


def w_p(g: GroundProgram, i: Interpretation) -> Interpretation:
    """Classical W_P(I) = T_P(I) ⊕ ¬.U_P(I)"""
    require_classical(g, i)
    unfounded = unfounded_set_to_interpretation(g, greatest_unfounded_set(g, i))
    return t_p(g, i).join_k(unfounded)
