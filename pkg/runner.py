"""
Command execution
Parses inputs, runs the selected semantics or operator and renders the result
"""

from dataclasses import dataclass
from typing import Any, Optional

import structlog
from pydantic import ValidationError

import formatting
from crosscheck import CrosscheckReport, check_source, run_corpus
from errors import BilatError, ConfigurationError, InvariantViolationError
from grounding import build_pstar
from models.interpretation import Interpretation
from models.program import GroundProgram
from operators import phi, psi_prime
from parser import parse_interpretation, parse_program
from schemas import (
    ALL_ROUTES,
    CliConfig,
    Command,
    CrosscheckSummary,
    DivergenceEntry,
    EvalReport,
    ModelReport,
    OutputFormat,
    StableReport,
    SupportReport,
    TraceOperator,
)
from semantics import (
    check_enumeration_limit,
    classify,
    classify_interpretation,
    default_method,
    default_route,
    enumerate_stable,
    is_stable,
    kripke_kleene,
    well_founded,
    well_founded_checked,
    WellFoundedRoute,
)
from support import (
    brute_force_support,
    phi_prime,
    support,
    unfounded_set_oracle,
    unfounded_set_to_interpretation,
)

logger = structlog.get_logger(__name__)


@dataclass
class RunResult:
    exit_code: int
    output: str = ""
    error: str = ""


def build_config(**options: Any) -> CliConfig:
    """CliConfig from raw option values; None means 'use the default'"""
    try:
        return CliConfig(**{k: v for k, v in options.items() if v is not None})
    except ValidationError as e:
        messages = "; ".join(err["msg"] for err in e.errors())
        raise ConfigurationError(messages)


def _dump(report) -> str:
    return report.model_dump_json(indent=2) + "\n"


def _interpretation(
    g: GroundProgram, text: Optional[str], json_format: Optional[bool] = None
) -> Interpretation:
    if text is None:
        return Interpretation.bottom_k(g.base, g.kind)
    return parse_interpretation(text, g.base, g.kind, json_format)


def _kk(cfg: CliConfig, g: GroundProgram) -> str:
    model, trace = kripke_kleene(g)
    if cfg.format is OutputFormat.JSON:
        return _dump(ModelReport(
            **formatting.header(g),
            semantics="kripke_kleene",
            model=model.to_dict(),
            traces=[formatting.trace_report(trace)] if cfg.trace else [],
        ))
    out = model.to_text()
    if cfg.trace:
        out += formatting.render_trace(trace)
    return out


def _wf(cfg: CliConfig, g: GroundProgram) -> str:
    if cfg.route == ALL_ROUTES:
        model, by_route = well_founded_checked(g)
        routes = list(by_route)
        traces = list(by_route.values())
        route_name = ALL_ROUTES
    else:
        route = WellFoundedRoute(cfg.route) if cfg.route else default_route(g)
        model, trace = well_founded(g, route)
        routes, traces, route_name = [route], [trace], route.value
    if cfg.format is OutputFormat.JSON:
        return _dump(ModelReport(
            **formatting.header(g),
            semantics="well_founded",
            route=route_name,
            routes_checked=[r.value for r in routes],
            model=model.to_dict(),
            traces=[formatting.trace_report(t) for t in traces] if cfg.trace else [],
        ))
    out = model.to_text()
    if cfg.trace:
        out += "".join(formatting.render_trace(t) for t in traces)
    return out


def _stable(cfg: CliConfig, g: GroundProgram, interpretation_text: Optional[str],
            json_format: Optional[bool]) -> str:
    method = cfg.method or default_method(g)
    atoms = [str(a) for a in g.base]
    if interpretation_text is not None:
        i = _interpretation(g, interpretation_text, json_format)
        verdict = is_stable(g, i, method)
        if cfg.format is OutputFormat.JSON:
            return _dump(StableReport(
                **formatting.header(g), method=method.value, at=i.to_dict(), is_stable=verdict
            ))
        return f"{'stable' if verdict else 'not stable'} ({method.value})\n"
    models = enumerate_stable(g, method, cfg.limit, cfg.workers)
    if cfg.format is OutputFormat.JSON:
        return _dump(StableReport(
            **formatting.header(g), method=method.value, stable=[m.value_list() for m in models]
        ))
    return formatting.render_models("stable models", models, atoms)


def _classify(cfg: CliConfig, g: GroundProgram) -> str:
    check_enumeration_limit(g, cfg.limit)
    kk, _ = kripke_kleene(g)
    wf, _ = well_founded(g, default_route(g))
    rows = classify(g, cfg.all_interpretations, cfg.limit, cfg.workers, kk=kk, wf=wf)
    stable = [row.interpretation for row in rows if row.is_stable]
    if cfg.format is OutputFormat.JSON:
        return _dump(formatting.semantics_report(g, rows, kk, wf, stable))
    atoms = [str(a) for a in g.base]
    return (
        formatting.render_classification(g, rows)
        + "\n"
        + formatting.render_models("KK", [kk], atoms)
        + formatting.render_models("WF", [wf], atoms)
        + formatting.render_models("stable models", stable, atoms)
    )


def _support(cfg: CliConfig, g: GroundProgram, interpretation_text: Optional[str],
             json_format: Optional[bool]) -> str:
    i = _interpretation(g, interpretation_text, json_format)
    sp = support(g, i)
    completed = i.join_k(sp.support)
    unfounded = sp.support.atoms_with(g.kind.false) if g.is_classical() else None
    agrees = None
    if cfg.oracle:
        agrees = brute_force_support(g, i, cfg.limit) == sp.support
        if unfounded is not None and i.is_classical:
            oracle = unfounded_set_oracle(g, i)
            agrees = agrees and unfounded_set_to_interpretation(g, oracle) == sp.support
    if cfg.format is OutputFormat.JSON:
        return _dump(SupportReport(
            **formatting.header(g),
            at=i.to_dict(),
            support=sp.support.to_dict(),
            completed=completed.to_dict(),
            unfounded=[str(a) for a in unfounded] if unfounded is not None else None,
            oracle_agrees=agrees,
            trace=formatting.trace_report(sp.trace) if cfg.trace else None,
        ))
    out = "# support\n" + sp.support.to_text() + "# completed\n" + completed.to_text()
    if unfounded is not None:
        out += "# unfounded\n" + " ".join(str(a) for a in unfounded) + "\n"
    if agrees is not None:
        out += f"# oracle {'agrees' if agrees else 'DISAGREES'}\n"
    if cfg.trace:
        out += formatting.render_trace(sp.trace)
    return out


def _eval(cfg: CliConfig, g: GroundProgram, interpretation_text: Optional[str],
          json_format: Optional[bool]) -> str:
    i = _interpretation(g, interpretation_text, json_format)
    image = phi(g, i)
    row = classify_interpretation(g, i)
    if cfg.format is OutputFormat.JSON:
        return _dump(EvalReport(
            **formatting.header(g),
            at=i.to_dict(),
            phi=image.to_dict(),
            classification=formatting.classification_entry(row),
        ))
    flags = row.flags()
    out = "# phi\n" + image.to_text() + "# support\n" + row.support.to_text()
    out += "# flags\n" + "".join(f"{name} = {str(value).lower()}\n" for name, value in flags.items())
    if row.unfounded_set is not None:
        out += "# unfounded\n" + " ".join(str(a) for a in row.unfounded_set) + "\n"
    return out


def _trace(cfg: CliConfig, g: GroundProgram, interpretation_text: Optional[str],
           json_format: Optional[bool]) -> str:
    operator = cfg.operator or TraceOperator.PHI
    if operator is TraceOperator.PHI:
        _, trace = kripke_kleene(g)
    else:
        i = _interpretation(g, interpretation_text, json_format)
        if operator is TraceOperator.PSI_PRIME:
            _, trace = psi_prime(g, i)
        elif operator is TraceOperator.SUPPORT:
            trace = support(g, i).trace
        else:
            _, trace = phi_prime(g, i)
    if cfg.format is OutputFormat.JSON:
        return _dump(formatting.trace_report(trace))
    return formatting.render_trace(trace)


def _crosscheck(cfg: CliConfig, program_text: Optional[str]) -> RunResult:
    if program_text is not None:
        program = parse_program(program_text, cfg.kind)
        report = CrosscheckReport(seed=cfg.seed, programs=1)
        g = build_pstar(program)
        report.interpretations = 4 ** len(g.base)
        report.divergences = check_source(program)
    else:
        report = run_corpus(cfg.seed, cfg.count, cfg.atoms)
    summary = CrosscheckSummary(
        seed=report.seed,
        programs=report.programs,
        interpretations=report.interpretations,
        divergences=[
            DivergenceEntry(check=d.check, detail=d.detail, program=d.program_text)
            for d in report.divergences
        ],
    )
    if cfg.format is OutputFormat.JSON:
        out = _dump(summary)
    else:
        out = (
            f"seed {summary.seed}: {summary.programs} programs, "
            f"{summary.interpretations} interpretations, "
            f"{len(summary.divergences)} divergences\n"
        )
        for d in summary.divergences:
            out += f"\n## {d.check}: {d.detail}\n{d.program}"
    if report.ok:
        return RunResult(0, out)
    error = InvariantViolationError(f"{len(report.divergences)} cross-check divergence(s)")
    return RunResult(error.exit_code, out, f"error: {error.detail}\n")


def execute(
    cfg: CliConfig,
    program_text: Optional[str],
    interpretation_text: Optional[str] = None,
    interpretation_json: Optional[bool] = None,
) -> RunResult:
    """Run one command; exceptions propagate"""
    if cfg.command is Command.CROSSCHECK:
        return _crosscheck(cfg, program_text)
    g = build_pstar(parse_program(program_text or "", cfg.kind))
    if cfg.command is Command.KK:
        return RunResult(0, _kk(cfg, g))
    if cfg.command is Command.WF:
        return RunResult(0, _wf(cfg, g))
    if cfg.command is Command.STABLE:
        return RunResult(0, _stable(cfg, g, interpretation_text, interpretation_json))
    if cfg.command is Command.CLASSIFY:
        return RunResult(0, _classify(cfg, g))
    if cfg.command is Command.SUPPORT:
        return RunResult(0, _support(cfg, g, interpretation_text, interpretation_json))
    if cfg.command is Command.EVAL:
        return RunResult(0, _eval(cfg, g, interpretation_text, interpretation_json))
    return RunResult(0, _trace(cfg, g, interpretation_text, interpretation_json))


def run(
    cfg: CliConfig,
    program_text: Optional[str],
    interpretation_text: Optional[str] = None,
    interpretation_json: Optional[bool] = None,
) -> RunResult:
    """
    Run one command and map failures to exit codes
    1 parse/validation, 2 limit or fuse, 3 internal invariant
    """
    logger.info("command.start", command=cfg.command.value, kind=cfg.kind.value)
    try:
        return execute(cfg, program_text, interpretation_text, interpretation_json)
    except BilatError as e:
        logger.warning("command.failed", command=cfg.command.value, exit_code=e.exit_code)
        return RunResult(e.exit_code, "", f"error: {e.detail}\n")
    except Exception as e:
        logger.exception("command.crashed", command=cfg.command.value)
        return RunResult(InvariantViolationError.exit_code, "", f"internal error: {e}\n")
