"""
Immediate-consequence operators and the fixpoint engine
Φ, Γ, Ψ, Ψ′, lfp_k, model checks and the classical T_P
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import Callable, List, Optional, Tuple, Union

import structlog

import config
from errors import FuseExceededError, InvariantViolationError, SyntaxRestrictionError
from grounding import general_reduct
from models.interpretation import Interpretation, PseudoPair, eval_formula, eval_pseudo
from models.program import GroundProgram

logger = structlog.get_logger(__name__)


class IterationOrder(str, Enum):
    """Direction each trace must move in between consecutive steps"""
    T_INCREASING = "t-increasing"
    K_INCREASING = "k-increasing"
    K_DECREASING = "k-decreasing"

    def holds(self, before: Interpretation, after: Interpretation) -> bool:
        if self is IterationOrder.T_INCREASING:
            return before.leq_t(after)
        if self is IterationOrder.K_INCREASING:
            return before.leq_k(after)
        return after.leq_k(before)


@dataclass
class FixpointTrace:
    """
    Iterates x_0 .. x_n of one fixpoint computation; converged means the last
    two steps are equal. inner holds one nested trace per application when
    the operator itself is an iteration; start_trace is the computation of x_0
    """
    label: str
    order: IterationOrder
    steps: List[Interpretation] = field(default_factory=list)
    converged: bool = False
    inner: List["FixpointTrace"] = field(default_factory=list)
    start_trace: Optional["FixpointTrace"] = None

    @property
    def iterations(self) -> int:
        return max(len(self.steps) - 1, 0)

    @property
    def result(self) -> Interpretation:
        return self.steps[-1]


StepResult = Union[Interpretation, Tuple[Interpretation, FixpointTrace]]
Operator = Callable[[Interpretation], StepResult]


def iterate(
    operator: Operator,
    start: Interpretation,
    order: IterationOrder,
    label: str,
    fuse: Optional[int] = None,
) -> Tuple[Interpretation, FixpointTrace]:
    """
    Apply operator from start until two consecutive iterates are equal
    Every step is checked against the declared order
    """
    fuse = config.ITERATION_FUSE if fuse is None else fuse
    trace = FixpointTrace(label=label, order=order, steps=[start])
    current = start
    for _ in range(fuse):
        outcome = operator(current)
        if isinstance(outcome, tuple):
            following, nested = outcome
            trace.inner.append(nested)
        else:
            following = outcome
        if not order.holds(current, following):
            logger.error("fixpoint.monotonicity_violated", label=label, step=len(trace.steps))
            raise InvariantViolationError(
                f"{label}: step {len(trace.steps)} is not {order.value} "
                f"({current!r} -> {following!r})"
            )
        trace.steps.append(following)
        if following == current:
            trace.converged = True
            logger.debug("fixpoint.converged", label=label, iterations=trace.iterations)
            return following, trace
        current = following
    raise FuseExceededError(f"{label}: no fixpoint after {fuse} iterations")


def lfp_k(
    operator: Operator, start: Interpretation, label: str = "lfp_k", fuse: Optional[int] = None
) -> Tuple[Interpretation, FixpointTrace]:
    """Least fixpoint under ≼_k above start, by iteration"""
    return iterate(operator, start, IterationOrder.K_INCREASING, label, fuse)


def lfp_t(
    operator: Operator, start: Interpretation, label: str = "lfp_t", fuse: Optional[int] = None
) -> Tuple[Interpretation, FixpointTrace]:
    """Least fixpoint under ≼_t above start, by iteration"""
    return iterate(operator, start, IterationOrder.T_INCREASING, label, fuse)


def phi(g: GroundProgram, i: Interpretation) -> Interpretation:
    """Φ_P(I)(A) = I(φ_A)"""
    return Interpretation(g.base, [eval_formula(i, body) for body in g.bodies], g.kind)


def truth_minimal_model(g: GroundProgram) -> Interpretation:
    """≼_t-least model of a negation-free ground program: lfp_t Φ from I_⊥t"""
    start = Interpretation.bottom_t(g.base, g.kind)
    model, _ = lfp_t(lambda x: phi(g, x), start, label="truth_minimal_model")
    return model


def gamma(g: GroundProgram, i: Interpretation) -> Interpretation:
    """Γ_P(I): ≼_t-least model of the general reduct P[I]"""
    return truth_minimal_model(general_reduct(g, i))


def psi(g: GroundProgram, pos: Interpretation, neg: Interpretation) -> Interpretation:
    """Ψ_P(pos, neg)(A) = ⟨pos, neg⟩(φ_A)"""
    pair = PseudoPair(pos, neg)
    return Interpretation(g.base, [eval_pseudo(pair, body) for body in g.bodies], g.kind)


def require_literal_normal(g: GroundProgram) -> None:
    if not g.is_literal_normal():
        raise SyntaxRestrictionError(
            "Ψ needs negation applied to atoms only; this program negates a compound formula"
        )


def psi_prime(g: GroundProgram, i: Interpretation) -> Tuple[Interpretation, FixpointTrace]:
    """Ψ′_P(I): lfp_t of λx.Ψ_P(x, I), iterated from I_⊥t"""
    require_literal_normal(g)
    start = Interpretation.bottom_t(g.base, g.kind)
    return lfp_t(lambda x: psi(g, x, i), start, label="psi_prime")


def is_model(g: GroundProgram, i: Interpretation) -> bool:
    """I(φ_A) ≼_t I(A) for every rule"""
    return all(
        eval_formula(i, body).leq_t(value) for body, value in zip(g.bodies, i.values)
    )


def is_cl_model(g: GroundProgram, i: Interpretation) -> bool:
    """I(A) = I(φ_A) for every rule (fixpoint of Φ)"""
    return phi(g, i) == i


def require_classical(g: GroundProgram, i: Optional[Interpretation] = None) -> None:
    if not g.is_classical():
        raise SyntaxRestrictionError("This operation needs a program in classical syntax")
    if i is not None and not i.is_classical:
        raise SyntaxRestrictionError("This operation needs an interpretation with values in {f, bot, t}")


def t_p(g: GroundProgram, i: Interpretation) -> Interpretation:
    """Classical T_P: t for atoms whose body is t under I, ⊥ elsewhere"""
    require_classical(g, i)
    true, unknown = g.kind.true, g.kind.bottom
    return Interpretation(
        g.base,
        [true if eval_formula(i, body) == true else unknown for body in g.bodies],
        g.kind,
    )
