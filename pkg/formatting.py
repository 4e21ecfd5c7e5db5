"""
Output formatting
Aligned text tables, trace dumps and JSON report assembly
"""

from typing import List, Optional, Sequence

from grounding import program_hash
from models.interpretation import Interpretation
from models.program import GroundProgram
from operators import FixpointTrace
from schemas import ClassificationEntry, ProgramHeader, SemanticsReport, TraceReport
from semantics import ModelClassification


def header(g: GroundProgram) -> dict:
    return ProgramHeader(
        program_hash=program_hash(g), kind=g.kind, atoms=[str(a) for a in g.base]
    ).model_dump()


def render_table(headers: Sequence[str], rows: Sequence[Sequence[str]]) -> str:
    """Columns padded to their widest cell, two spaces apart"""
    widths = [len(h) for h in headers]
    for row in rows:
        widths = [max(w, len(cell)) for w, cell in zip(widths, row)]

    def line(cells: Sequence[str]) -> str:
        return "  ".join(cell.ljust(w) for cell, w in zip(cells, widths)).rstrip() + "\n"

    rule = "  ".join("-" * w for w in widths) + "\n"
    return line(headers) + rule + "".join(line(row) for row in rows)


# Traces

def trace_report(trace: FixpointTrace) -> TraceReport:
    return TraceReport(
        label=trace.label,
        order=trace.order.value,
        converged=trace.converged,
        iterations=trace.iterations,
        start=trace_report(trace.start_trace) if trace.start_trace else None,
        steps=[step.to_dict() for step in trace.steps],
        inner=[trace_report(nested) for nested in trace.inner],
    )


def render_trace(trace: FixpointTrace, level: int = 1, name: Optional[str] = None) -> str:
    """One block per step in 'atom = value' form; nested iterations indented by heading level"""
    mark = "#" * level
    title = name or trace.label
    status = f"converged after {trace.iterations} iterations" if trace.converged else "not converged"
    out = [f"{mark} {title} ({trace.order.value}, {status})\n"]
    if trace.start_trace is not None:
        out.append(render_trace(trace.start_trace, level + 1, f"{title} start: {trace.start_trace.label}"))
    for n, step in enumerate(trace.steps):
        if n > 0 and len(trace.inner) >= n:
            out.append(render_trace(trace.inner[n - 1], level + 1, f"{title} application {n}: {trace.inner[n - 1].label}"))
        out.append(f"{mark}# {title} step {n}\n")
        out.append(step.to_text())
    return "".join(out)


# Classification

def classification_entry(row: ModelClassification) -> ClassificationEntry:
    return ClassificationEntry(
        values=row.interpretation.to_dict(),
        flags=row.flags(),
        support=row.support.to_dict(),
        unfounded=[str(a) for a in row.unfounded_set] if row.unfounded_set is not None else None,
    )


def semantics_report(
    g: GroundProgram,
    rows: List[ModelClassification],
    kk: Interpretation,
    wf: Interpretation,
    stable: List[Interpretation],
) -> SemanticsReport:
    return SemanticsReport(
        **header(g),
        classifications=[classification_entry(row) for row in rows],
        kk=kk.to_dict(),
        wf=wf.to_dict(),
        stable=[model.value_list() for model in stable],
    )


def _mark(flag: bool) -> str:
    return "x" if flag else "-"


def _atom_set(atoms) -> str:
    return "{" + ",".join(str(a) for a in atoms) + "}"


FLAG_COLUMNS = [
    ("model", "model"),
    ("cl_model", "cl"),
    ("supported", "sup"),
    ("deductively_closed", "ded"),
    ("stable", "stable"),
    ("kk", "KK"),
    ("wf", "WF"),
]


def render_classification(g: GroundProgram, rows: List[ModelClassification]) -> str:
    atoms = [str(a) for a in g.base]
    with_unfounded = any(row.unfounded_set is not None for row in rows)
    headers = ["I"] + atoms + [f"Sp({a})" for a in atoms]
    if with_unfounded:
        headers.append("U")
    headers += [label for _, label in FLAG_COLUMNS]
    table = []
    for n, row in enumerate(rows, start=1):
        cells = [f"I{n}"] + row.interpretation.value_list() + row.support.value_list()
        if with_unfounded:
            cells.append(_atom_set(row.unfounded_set or []))
        flags = row.flags()
        cells += [_mark(flags[key]) for key, _ in FLAG_COLUMNS]
        table.append(cells)
    return render_table(headers, table)


def render_models(title: str, models: List[Interpretation], atoms: List[str]) -> str:
    if not models:
        return f"{title}: none\n"
    rows = [[f"M{n}"] + m.value_list() for n, m in enumerate(models, start=1)]
    return f"{title}:\n" + render_table(["M"] + atoms, rows)
