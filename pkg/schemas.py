"""
Pydantic schemas for command configuration and reports
Defines the validated CLI configuration and every JSON output shape
"""

from enum import Enum
from typing import Dict, List, Optional

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

import config
from models.bilattice import BilatticeKind
from semantics import StableCheckMethod, WellFoundedRoute

ValueMap = Dict[str, str]


class Command(str, Enum):
    KK = "kk"
    WF = "wf"
    STABLE = "stable"
    CLASSIFY = "classify"
    SUPPORT = "support"
    EVAL = "eval"
    TRACE = "trace"
    CROSSCHECK = "crosscheck"


class OutputFormat(str, Enum):
    TABLE = "table"
    JSON = "json"


class TraceOperator(str, Enum):
    PHI = "phi"
    PSI_PRIME = "psi-prime"
    SUPPORT = "support"
    PHI_PRIME = "phi-prime"


ALL_ROUTES = "all"


class CliConfig(BaseModel):
    """Validated settings for one command invocation"""
    model_config = ConfigDict(frozen=True)

    command: Command
    kind: BilatticeKind = BilatticeKind.FOUR
    route: Optional[str] = None
    method: Optional[StableCheckMethod] = None
    operator: Optional[TraceOperator] = None
    format: OutputFormat = OutputFormat.TABLE
    trace: bool = False
    all_interpretations: bool = False
    oracle: bool = False
    limit: Optional[int] = Field(None, ge=0)
    seed: int = config.DEFAULT_SEED
    count: int = Field(config.CORPUS_SIZE, ge=1)
    atoms: int = Field(4, ge=1, le=8)
    workers: int = Field(config.WORKERS, ge=1)

    @field_validator("route")
    @classmethod
    def validate_route(cls, v):
        if v is None or v == ALL_ROUTES:
            return v
        allowed = [r.value for r in WellFoundedRoute]
        if v not in allowed:
            raise ValueError(f"route must be one of {', '.join(allowed + [ALL_ROUTES])}")
        return v

    @model_validator(mode="after")
    def validate_selectors(self):
        if self.route is not None and self.command is not Command.WF:
            raise ValueError("--route only applies to the wf command")
        if self.method is not None and self.command is not Command.STABLE:
            raise ValueError("--method only applies to the stable command")
        if self.operator is not None and self.command is not Command.TRACE:
            raise ValueError("--operator only applies to the trace command")
        if self.all_interpretations and self.command is not Command.CLASSIFY:
            raise ValueError("--all only applies to the classify command")
        if self.oracle and self.command is not Command.SUPPORT:
            raise ValueError("--oracle only applies to the support command")
        if self.kind is BilatticeKind.UNIT_INTERVAL and self.command in (
            Command.CLASSIFY,
            Command.CROSSCHECK,
        ):
            raise ValueError(f"{self.command.value} enumerates interpretations and needs --kind four")
        return self


# Report schemas

class TraceReport(BaseModel):
    label: str
    order: str
    converged: bool
    iterations: int
    start: Optional["TraceReport"] = None
    steps: List[ValueMap]
    inner: List["TraceReport"] = []


class ClassificationEntry(BaseModel):
    values: ValueMap
    flags: Dict[str, bool]
    support: ValueMap
    unfounded: Optional[List[str]] = None


class ProgramHeader(BaseModel):
    program_hash: str
    kind: BilatticeKind
    atoms: List[str]


class SemanticsReport(ProgramHeader):
    """classify output"""
    classifications: List[ClassificationEntry]
    kk: ValueMap
    wf: ValueMap
    stable: List[List[str]]


class ModelReport(ProgramHeader):
    """kk and wf output"""
    semantics: str
    route: Optional[str] = None
    routes_checked: List[str] = []
    model: ValueMap
    traces: List[TraceReport] = []


class StableReport(ProgramHeader):
    method: str
    at: Optional[ValueMap] = None
    is_stable: Optional[bool] = None
    stable: List[List[str]] = []


class SupportReport(ProgramHeader):
    at: ValueMap
    support: ValueMap
    completed: ValueMap
    unfounded: Optional[List[str]] = None
    oracle_agrees: Optional[bool] = None
    trace: Optional[TraceReport] = None


class EvalReport(ProgramHeader):
    at: ValueMap
    phi: ValueMap
    classification: ClassificationEntry


class DivergenceEntry(BaseModel):
    check: str
    detail: str
    program: str


class CrosscheckSummary(BaseModel):
    seed: int
    programs: int
    interpretations: int
    divergences: List[DivergenceEntry]


TraceReport.model_rebuild()
