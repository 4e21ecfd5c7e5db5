"""
Top-level semantics
Kripke-Kleene, well-founded (several routes), stable-model checks and classification
"""

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from enum import Enum
from itertools import product
from typing import Callable, Dict, Iterator, List, Optional, Sequence, Tuple, TypeVar

import structlog

import config
from errors import (
    BilatticeKindError,
    InvariantViolationError,
    LimitExceededError,
    SyntaxRestrictionError,
)
from grounding import gl_reduct, k_complete
from models.bilattice import BilatticeKind
from models.interpretation import Interpretation
from models.program import Atom, GroundProgram
from operators import (
    FixpointTrace,
    is_cl_model,
    is_model,
    lfp_k,
    phi,
    psi_prime,
    truth_minimal_model,
)
from support import SupportResult, phi_prime, pi, pi_tilde, support, w_p

logger = structlog.get_logger(__name__)

T = TypeVar("T")


class WellFoundedRoute(str, Enum):
    """Ways of computing the well-founded model; all must agree"""
    PSI_PRIME = "psi-prime"
    PI = "pi"
    PI_TILDE = "pi-tilde"
    PHI_PRIME = "phi-prime"
    W_P = "w-p"


class StableCheckMethod(str, Enum):
    """Equivalent characterizations of stable models"""
    PSI_PRIME_FIXPOINT = "psi-prime"
    PHI_PRIME_FIXPOINT = "phi-prime"
    KK_OF_KCOMPLETION = "kk-completion"
    MIN_K_COMPLETION_MODELS = "min-k"
    GL_REDUCT_CLASSICAL = "gl-reduct"


def kripke_kleene(g: GroundProgram) -> Tuple[Interpretation, FixpointTrace]:
    """KK(P) = lfp_k Φ from I_⊥k"""
    start = Interpretation.bottom_k(g.base, g.kind)
    return lfp_k(lambda i: phi(g, i), start, label="kripke_kleene")


def applicable_routes(g: GroundProgram) -> List[WellFoundedRoute]:
    routes = []
    if g.is_literal_normal():
        routes.append(WellFoundedRoute.PSI_PRIME)
    routes += [WellFoundedRoute.PI, WellFoundedRoute.PI_TILDE, WellFoundedRoute.PHI_PRIME]
    if g.is_classical():
        routes.append(WellFoundedRoute.W_P)
    return routes


def default_route(g: GroundProgram) -> WellFoundedRoute:
    return WellFoundedRoute.PSI_PRIME if g.is_literal_normal() else WellFoundedRoute.PHI_PRIME


def well_founded(
    g: GroundProgram, route: WellFoundedRoute = WellFoundedRoute.PSI_PRIME
) -> Tuple[Interpretation, FixpointTrace]:
    """WF(P) as lfp_k of the route's operator from I_⊥k"""
    route = WellFoundedRoute(route)
    start = Interpretation.bottom_k(g.base, g.kind)
    label = f"well_founded[{route.value}]"
    if route is WellFoundedRoute.PSI_PRIME:
        return lfp_k(lambda i: psi_prime(g, i), start, label=label)
    if route is WellFoundedRoute.PI:
        return lfp_k(lambda i: pi(g, i), start, label=label)
    if route is WellFoundedRoute.PI_TILDE:
        return lfp_k(lambda i: pi_tilde(g, i), start, label=label)
    if route is WellFoundedRoute.PHI_PRIME:
        return lfp_k(lambda i: phi_prime(g, i), start, label=label)
    return lfp_k(lambda i: w_p(g, i), start, label=label)


def well_founded_checked(
    g: GroundProgram, routes: Optional[Sequence[WellFoundedRoute]] = None
) -> Tuple[Interpretation, Dict[WellFoundedRoute, FixpointTrace]]:
    """Run every applicable route; the first disagreement is an invariant violation"""
    routes = list(routes) if routes else applicable_routes(g)
    traces: Dict[WellFoundedRoute, FixpointTrace] = {}
    reference: Optional[Interpretation] = None
    for route in routes:
        model, trace = well_founded(g, route)
        traces[route] = trace
        if reference is None:
            reference = model
        elif model != reference:
            logger.error("well_founded.divergence", route=route.value)
            raise InvariantViolationError(
                f"well-founded routes disagree: {routes[0].value} gives {reference!r}, "
                f"{route.value} gives {model!r}"
            )
    logger.info("well_founded.agreed", routes=[r.value for r in routes])
    return reference, traces


def check_enumeration_limit(g: GroundProgram, limit: Optional[int] = None) -> None:
    if g.kind is not BilatticeKind.FOUR:
        raise BilatticeKindError("Enumeration is only possible over FOUR")
    limit = config.CLASSIFY_LIMIT if limit is None else limit
    if len(g.base) > limit:
        raise LimitExceededError(
            f"{len(g.base)} atoms give 4^{len(g.base)} interpretations; the limit is {limit} atoms"
        )


def interpretation_at(g: GroundProgram, index: int) -> Interpretation:
    """Interpretation number index in enumeration order (first atom most significant)"""
    values = g.kind.values()
    digits = []
    for _ in range(len(g.base)):
        index, digit = divmod(index, 4)
        digits.append(values[digit])
    return Interpretation(g.base, reversed(digits), g.kind)


def all_interpretations(g: GroundProgram) -> Iterator[Interpretation]:
    for values in product(g.kind.values(), repeat=len(g.base)):
        yield Interpretation(g.base, values, g.kind)


def _scan(
    g: GroundProgram, visit: Callable[[Interpretation], Optional[T]], workers: Optional[int]
) -> List[T]:
    """
    Apply visit to every interpretation; keep non-None results in index order
    Chunks of the index space go to a thread pool when workers > 1
    """
    total = 4 ** len(g.base)
    workers = config.WORKERS if workers is None else workers

    def chunk(bounds: Tuple[int, int]) -> List[T]:
        kept = []
        for index in range(*bounds):
            outcome = visit(interpretation_at(g, index))
            if outcome is not None:
                kept.append(outcome)
        return kept

    if workers <= 1 or total < 2 * workers:
        return chunk((0, total))
    size = -(-total // workers)
    bounds = [(start, min(start + size, total)) for start in range(0, total, size)]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        parts = list(pool.map(chunk, bounds))
    return [item for part in parts for item in part]


class CompletionModels:
    """
    Φ tabulated over all FOUR interpretations, for finding the ≼_k-least
    cl-model of P ⊕ S by enumeration
    """

    def __init__(self, g: GroundProgram, limit: Optional[int] = None):
        check_enumeration_limit(g, limit)
        self.g = g
        self.table = [(i, phi(g, i)) for i in all_interpretations(g)]
        self._cache: Dict[Interpretation, Optional[Interpretation]] = {}

    def models(self, s: Interpretation) -> List[Interpretation]:
        """cl-models of P ⊕ S: J = Φ(J) ⊕ S"""
        return [j for j, image in self.table if image.join_k(s) == j]

    def least(self, s: Interpretation) -> Optional[Interpretation]:
        if s not in self._cache:
            models = self.models(s)
            least = [m for m in models if all(m.leq_k(other) for other in models)]
            self._cache[s] = least[0] if least else None
        return self._cache[s]


def is_stable(
    g: GroundProgram,
    i: Interpretation,
    method: StableCheckMethod = StableCheckMethod.PSI_PRIME_FIXPOINT,
    sp: Optional[SupportResult] = None,
    completions: Optional[CompletionModels] = None,
) -> bool:
    """Check stability of i by one characterization"""
    method = StableCheckMethod(method)
    if method is StableCheckMethod.PSI_PRIME_FIXPOINT:
        return psi_prime(g, i)[0] == i
    if method is StableCheckMethod.GL_REDUCT_CLASSICAL:
        return truth_minimal_model(gl_reduct(g, i)) == i
    sp = sp or support(g, i)
    if method is StableCheckMethod.PHI_PRIME_FIXPOINT:
        return phi_prime(g, i, sp)[0] == i
    if method is StableCheckMethod.KK_OF_KCOMPLETION:
        return kripke_kleene(k_complete(g, sp.support))[0] == i
    if g.kind is not BilatticeKind.FOUR:
        raise SyntaxRestrictionError("The min-k method enumerates FOUR interpretations only")
    completions = completions or CompletionModels(g)
    return completions.least(sp.support) == i


def default_method(g: GroundProgram) -> StableCheckMethod:
    if g.is_literal_normal():
        return StableCheckMethod.PSI_PRIME_FIXPOINT
    return StableCheckMethod.PHI_PRIME_FIXPOINT


def enumerate_stable(
    g: GroundProgram,
    method: Optional[StableCheckMethod] = None,
    limit: Optional[int] = None,
    workers: Optional[int] = None,
) -> List[Interpretation]:
    """All stable models over FOUR, in enumeration order"""
    check_enumeration_limit(g, limit)
    method = method or default_method(g)
    completions = (
        CompletionModels(g, limit) if method is StableCheckMethod.MIN_K_COMPLETION_MODELS else None
    )
    logger.info("enumerate_stable.start", atoms=len(g.base), method=method.value)
    stable = _scan(
        g,
        lambda i: i if is_stable(g, i, method, completions=completions) else None,
        workers,
    )
    logger.info("enumerate_stable.done", stable=len(stable))
    return stable


@dataclass
class ModelClassification:
    """One interpretation with its support and semantic status"""
    interpretation: Interpretation
    support: Interpretation
    is_model: bool
    is_cl_model: bool
    is_supported: bool
    is_deductively_closed: bool
    is_stable: bool
    is_kk: bool
    is_wf: bool
    unfounded_set: Optional[List[Atom]] = None

    def flags(self) -> Dict[str, bool]:
        return {
            "model": self.is_model,
            "cl_model": self.is_cl_model,
            "supported": self.is_supported,
            "deductively_closed": self.is_deductively_closed,
            "stable": self.is_stable,
            "kk": self.is_kk,
            "wf": self.is_wf,
        }

    def check_consistency(self) -> None:
        chain = [
            ("kk", self.is_kk, "cl_model", self.is_cl_model),
            ("wf", self.is_wf, "stable", self.is_stable),
            ("stable", self.is_stable, "deductively_closed", self.is_deductively_closed),
            ("deductively_closed", self.is_deductively_closed, "supported", self.is_supported),
            ("supported", self.is_supported, "cl_model", self.is_cl_model),
            ("cl_model", self.is_cl_model, "model", self.is_model),
        ]
        for name, holds, implied_name, implied in chain:
            if holds and not implied:
                raise InvariantViolationError(
                    f"{self.interpretation!r} is {name} but not {implied_name}"
                )


def classify_interpretation(
    g: GroundProgram,
    i: Interpretation,
    kk: Optional[Interpretation] = None,
    wf: Optional[Interpretation] = None,
) -> ModelClassification:
    """Every flag for a single interpretation; works for both bilattices"""
    kk = kk if kk is not None else kripke_kleene(g)[0]
    wf = wf if wf is not None else well_founded(g, default_route(g))[0]
    sp = support(g, i)
    cl_model = is_cl_model(g, i)
    deductively_closed = phi_prime(g, i, sp)[0] == i
    stable = (
        psi_prime(g, i)[0] == i if g.is_literal_normal() else deductively_closed
    )
    result = ModelClassification(
        interpretation=i,
        support=sp.support,
        is_model=is_model(g, i),
        is_cl_model=cl_model,
        is_supported=cl_model and sp.support.leq_k(i),
        is_deductively_closed=deductively_closed,
        is_stable=stable,
        is_kk=i == kk,
        is_wf=i == wf,
        unfounded_set=sp.support.atoms_with(g.kind.false) if g.is_classical() else None,
    )
    result.check_consistency()
    return result


def classify(
    g: GroundProgram,
    all_interpretations: bool = False,
    limit: Optional[int] = None,
    workers: Optional[int] = None,
    kk: Optional[Interpretation] = None,
    wf: Optional[Interpretation] = None,
) -> List[ModelClassification]:
    """
    Classify every cl-model (or every interpretation) of a FOUR program
    KK and WF are computed here unless the caller already has them
    """
    check_enumeration_limit(g, limit)
    kk = kk if kk is not None else kripke_kleene(g)[0]
    wf = wf if wf is not None else well_founded(g, default_route(g))[0]

    def visit(i: Interpretation) -> Optional[ModelClassification]:
        if not all_interpretations and not is_cl_model(g, i):
            return None
        return classify_interpretation(g, i, kk, wf)

    logger.info("classify.start", atoms=len(g.base), candidates=4 ** len(g.base))
    rows = _scan(g, visit, workers)
    logger.info("classify.done", kept=len(rows))
    return rows
