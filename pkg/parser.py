"""
Program and interpretation parser
Lark grammar for the rule language plus well-formedness validation
"""

from fractions import Fraction
from typing import Dict, List, Optional, Tuple

import lark
import structlog
from lark import Lark, Transformer
from lark.exceptions import UnexpectedInput, VisitError
from pydantic import TypeAdapter, ValidationError

from errors import (
    BilatError,
    BilatticeKindError,
    InterpretationError,
    ProgramParseError,
    ProgramValidationError,
)
from models.bilattice import BilatticeKind, IntervalValue, TruthValue
from models.interpretation import Interpretation
from models.program import (
    And,
    Atom,
    Const,
    Exists,
    Forall,
    Formula,
    HerbrandBase,
    KJoin,
    KMeet,
    Neg,
    Or,
    Program,
    Rule,
    Term,
    free_variables,
    iter_atoms,
)

logger = structlog.get_logger(__name__)

grammar = r"""
program: rule*
rule: atom ("<-" formula)? "."

?formula: quant | kjoin
quant: "exists" VAR ":" formula -> exists
     | "forall" VAR ":" formula -> forall

?kjoin: kmeet ("+" kmeet)*
?kmeet: disj ("*" disj)*
?disj: conj ("|" conj)*
?conj: unary ("&" unary)*
?unary: "~" unary -> neg
      | "(" formula ")"
      | atom
      | const

const: HASH_CONST -> hash_const
     | "[" NUMBER "," NUMBER "]" -> interval_const

atom: IDENT ("(" term ("," term)* ")")?
term: VAR -> var_term
    | IDENT -> const_term
    | IDENT "(" term ("," term)* ")" -> compound_term

interpretation: assignment*
assignment: atom "=" value
?value: const
      | IDENT -> word_value

HASH_CONST: /#(top|bot|t|f)/
NUMBER: /\d+\/\d+|\d+(\.\d+)?/
IDENT: /[a-z][A-Za-z0-9_]*/
VAR: /[A-Z_][A-Za-z0-9_]*/
COMMENT: /%[^\n]*/

%import common.WS
%ignore WS
%ignore COMMENT
"""

_parser = Lark(grammar, start=["program", "interpretation", "value"], parser="lalr")

_WORDS = {"f": "false", "t": "true", "bot": "bottom", "top": "top"}


def _fold(node_class, items):
    result = items[0]
    for item in items[1:]:
        result = node_class(result, item)
    return result


class ProgramBuilder(Transformer):
    """Turns a parse tree into model objects for one bilattice kind"""

    def __init__(self, kind: BilatticeKind):
        super().__init__()
        self.kind = kind

    # Terms and atoms

    def var_term(self, items):
        return Term(str(items[0]))

    def const_term(self, items):
        return Term(str(items[0]))

    def compound_term(self, items):
        token = items[0]
        raise ProgramValidationError(
            f"line {token.line}: function symbol '{token}' is not supported"
        )

    def atom(self, items):
        name = items[0]
        return Atom(str(name), tuple(items[1:]), name.line, name.column)

    # Constants

    def hash_const(self, items):
        return Const(getattr(self.kind, _WORDS[str(items[0])[1:]]))

    def interval_const(self, items):
        if self.kind is not BilatticeKind.UNIT_INTERVAL:
            raise BilatticeKindError(
                f"line {items[0].line}: interval constant under kind '{self.kind.value}'"
            )
        return Const(IntervalValue(Fraction(str(items[0])), Fraction(str(items[1]))))

    def word_value(self, items):
        word = str(items[0])
        if word not in _WORDS:
            raise InterpretationError(f"line {items[0].line}: unknown truth value '{word}'")
        return Const(getattr(self.kind, _WORDS[word]))

    # Connectives

    def neg(self, items):
        return Neg(items[0])

    def conj(self, items):
        return _fold(And, items)

    def disj(self, items):
        return _fold(Or, items)

    def kmeet(self, items):
        return _fold(KMeet, items)

    def kjoin(self, items):
        return _fold(KJoin, items)

    def exists(self, items):
        return Exists(str(items[0]), items[1])

    def forall(self, items):
        return Forall(str(items[0]), items[1])

    # Top level

    def rule(self, items):
        head = items[0]
        body = items[1] if len(items) > 1 else Const(self.kind.true)
        return Rule(head, body, head.line, head.column)

    def program(self, items):
        return Program(tuple(items), self.kind)

    def assignment(self, items):
        return (items[0], items[1].value)

    def interpretation(self, items):
        return list(items)


def _run(text: str, start: str, kind: BilatticeKind):
    try:
        tree = _parser.parse(text, start=start)
    except UnexpectedInput as e:
        raise ProgramParseError(
            f"unexpected input near {text[e.pos_in_stream:e.pos_in_stream + 10]!r}"
            if getattr(e, "pos_in_stream", None) is not None
            else "unexpected input",
            line=e.line,
            column=e.column,
        )
    except lark.exceptions.LarkError as e:
        raise ProgramParseError(str(e))
    try:
        return ProgramBuilder(kind).transform(tree)
    except VisitError as e:
        if isinstance(e.orig_exc, BilatError):
            raise e.orig_exc
        raise


def validate_program(program: Program) -> Program:
    """Arity consistency, ground-able heads and bound body variables"""
    arities: Dict[str, Tuple[int, int]] = {}
    for rule in program.rules:
        for atom in [rule.head, *iter_atoms(rule.body)]:
            known = arities.setdefault(atom.predicate, (atom.arity, atom.line))
            if known[0] != atom.arity:
                raise ProgramValidationError(
                    f"line {atom.line}: predicate '{atom.predicate}' used with arity "
                    f"{atom.arity}, but arity {known[0]} on line {known[1]}"
                )
        head_vars = rule.head.variables()
        unbound = [v for v in free_variables(rule.body) if v not in head_vars]
        if unbound:
            raise ProgramValidationError(
                f"line {rule.line}: body variable(s) {', '.join(unbound)} "
                f"do not occur in the head {rule.head}"
            )
    return program


def parse_program(text: str, kind: BilatticeKind = BilatticeKind.FOUR) -> Program:
    """Parse and validate a program in the rule language"""
    program = validate_program(_run(text, "program", kind))
    logger.debug("program.parsed", rules=len(program.rules), kind=kind.value)
    return program


def parse_value(text: str, kind: BilatticeKind) -> TruthValue:
    """Parse one truth value: f, t, bot, top (optionally with '#') or [lo,hi]"""
    text = text.strip()
    if text in _WORDS:
        return getattr(kind, _WORDS[text])
    return _run(text, "value", kind).value


def parse_interpretation(
    text: str, base: HerbrandBase, kind: BilatticeKind, json_format: Optional[bool] = None
) -> Interpretation:
    """
    Parse 'atom = value' lines, or a JSON object of atom → value
    Atoms that are not mentioned default to ⊥
    """
    if json_format is None:
        json_format = text.lstrip().startswith("{")
    mapping: Dict[Atom, TruthValue] = {}
    if json_format:
        try:
            raw = TypeAdapter(Dict[str, str]).validate_json(text)
        except ValidationError as e:
            raise InterpretationError(f"interpretation JSON must map atoms to value strings: {e}")
        for name, value in raw.items():
            mapping[base.find(name)] = parse_value(value, kind)
    else:
        pairs: List[Tuple[Atom, TruthValue]] = _run(text, "interpretation", kind)
        for atom, value in pairs:
            if atom not in base:
                raise InterpretationError(f"line {atom.line}: unknown atom '{atom}'")
            if atom in mapping:
                raise InterpretationError(f"line {atom.line}: atom '{atom}' assigned twice")
            mapping[atom] = value
    return Interpretation.from_mapping(base, kind, mapping)
