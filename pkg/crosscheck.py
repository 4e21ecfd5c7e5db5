"""
Equivalence cross-checks
Runs every characterization against every other on small FOUR programs
"""

from dataclasses import dataclass, field
from typing import List

import structlog

from errors import BilatError, InvariantViolationError
from generator import ProgramGenerator, shrink
from grounding import build_pstar, k_complete
from models.interpretation import Interpretation
from models.program import GroundProgram, Program
from operators import gamma, is_cl_model, phi, psi_prime
from semantics import (
    CompletionModels,
    StableCheckMethod,
    all_interpretations,
    interpretation_at,
    is_stable,
    kripke_kleene,
    well_founded_checked,
)
from support import (
    brute_force_support,
    is_safe,
    phi_prime,
    support,
    unfounded_set_oracle,
    unfounded_set_to_interpretation,
)

logger = structlog.get_logger(__name__)


@dataclass
class Divergence:
    check: str
    detail: str
    program_text: str = ""


@dataclass
class CrosscheckReport:
    seed: int
    programs: int
    interpretations: int = 0
    divergences: List[Divergence] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.divergences


def stable_methods(g: GroundProgram) -> List[StableCheckMethod]:
    methods = [
        StableCheckMethod.PHI_PRIME_FIXPOINT,
        StableCheckMethod.KK_OF_KCOMPLETION,
        StableCheckMethod.MIN_K_COMPLETION_MODELS,
    ]
    if g.is_literal_normal():
        methods.insert(0, StableCheckMethod.PSI_PRIME_FIXPOINT)
    if g.is_classical():
        methods.append(StableCheckMethod.GL_REDUCT_CLASSICAL)
    return methods


def check_program(g: GroundProgram) -> List[Divergence]:
    """All checks over every FOUR interpretation of g"""
    found: List[Divergence] = []

    def diverge(check: str, detail: str) -> None:
        found.append(Divergence(check, detail, g.to_text()))

    methods = stable_methods(g)
    completions = CompletionModels(g)
    classical = g.is_classical()
    literal_normal = g.is_literal_normal()
    total = 4 ** len(g.base)
    falsity = Interpretation.bottom_t(g.base, g.kind)
    stable: List[Interpretation] = []

    for index, i in enumerate(all_interpretations(g)):
        sp = support(g, i)
        pp, _ = phi_prime(g, i, sp)
        kkc, _ = kripke_kleene(k_complete(g, sp.support))
        verdicts = {}
        for m in methods:
            if m is StableCheckMethod.PHI_PRIME_FIXPOINT:
                verdicts[m] = pp == i
            elif m is StableCheckMethod.KK_OF_KCOMPLETION:
                verdicts[m] = kkc == i
            else:
                verdicts[m] = is_stable(g, i, m, sp=sp, completions=completions)
        if len(set(verdicts.values())) > 1:
            detail = ", ".join(f"{m.value}={v}" for m, v in verdicts.items())
            diverge("stable_methods", f"{i!r}: {detail}")
        if verdicts[methods[0]]:
            stable.append(i)

        if brute_force_support(g, i) != sp.support:
            diverge("support_oracle", f"{i!r}: support {sp.support!r}")

        if classical and i.is_classical:
            oracle = unfounded_set_to_interpretation(g, unfounded_set_oracle(g, i))
            if oracle != sp.support:
                diverge("unfounded_oracle", f"{i!r}: support {sp.support!r}, oracle {oracle!r}")

        image = phi(g, i)
        supported = is_cl_model(g, i) and sp.support.leq_k(i)
        four_way = {
            supported,
            image.join_k(sp.support) == i,
            is_cl_model(k_complete(g, sp.support), i),
            phi(g, i.join_k(sp.support)) == i,
        }
        if len(four_way) > 1:
            diverge("supported_equivalence", repr(i))

        if gamma(g, i) != image:
            diverge("phi_gamma", repr(i))

        j = interpretation_at(g, (index * 7 + 3) % total)
        if phi(k_complete(g, i), j) != phi(g, j).join_k(i):
            diverge("k_completion_phi", f"I={i!r}, J={j!r}")

        if sp.support != falsity.meet_k(phi(g, i.join_k(sp.support))):
            diverge("support_closure", f"{i!r}: support {sp.support!r}")
        if not is_safe(g, i, sp.support):
            diverge("support_safe", f"{i!r}: support {sp.support!r}")
        if pp != kkc:
            diverge("phi_prime_k_completion", f"{i!r}: phi_prime {pp!r}, KK {kkc!r}")

        if pp == i and literal_normal:
            psi, _ = psi_prime(g, i)
            bounded = (
                sp.support.leq_t(psi) and psi.leq_t(i)
                and sp.support.leq_k(psi) and psi.leq_k(i)
            )
            if not bounded:
                diverge("support_psi_prime_bounds", f"{i!r}: support {sp.support!r}, psi_prime {psi!r}")

    try:
        wf, _ = well_founded_checked(g)
    except InvariantViolationError as e:
        diverge("well_founded_routes", e.detail)
        return found
    kk, _ = kripke_kleene(g)
    if not kk.leq_k(wf):
        diverge("kk_below_wf", f"KK={kk!r}, WF={wf!r}")
    if wf not in stable:
        diverge("wf_is_stable", repr(wf))
    for model in stable:
        if not wf.leq_k(model):
            diverge("wf_least_stable", repr(model))
        for other in stable:
            if model != other and model.leq_t(other):
                diverge("stable_incomparable", f"{model!r} <=t {other!r}")
    return found


def run_corpus(
    seed: int,
    count: int,
    max_atoms: int = 4,
    classical_share: float = 0.5,
    shrink_failures: bool = True,
) -> CrosscheckReport:
    """Check a seeded random corpus; failing programs are shrunk before reporting"""
    report = CrosscheckReport(seed=seed, programs=count)
    generator = ProgramGenerator(seed=seed, max_atoms=max_atoms)
    for program in generator.corpus(count, classical_share):
        g = build_pstar(program)
        report.interpretations += 4 ** len(g.base)
        try:
            divergences = check_program(g)
        except BilatError as e:
            divergences = [Divergence("error", e.detail, g.to_text())]
        if divergences and shrink_failures:
            divergences = [_shrunk(program, d) for d in divergences[:1]]
        for divergence in divergences:
            logger.error("crosscheck.divergence", check=divergence.check, detail=divergence.detail)
        report.divergences.extend(divergences)
    logger.info(
        "crosscheck.done", seed=seed, programs=count, divergences=len(report.divergences)
    )
    return report


def _fails(program: Program, check: str) -> bool:
    try:
        return any(d.check == check for d in check_program(build_pstar(program)))
    except BilatError:
        return check == "error"


def _shrunk(program: Program, divergence: Divergence) -> Divergence:
    smaller = shrink(program, lambda p: _fails(p, divergence.check))
    return Divergence(divergence.check, divergence.detail, smaller.to_text())


def check_source(program: Program) -> List[Divergence]:
    """Check one parsed program"""
    return check_program(build_pstar(program))
