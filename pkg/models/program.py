"""
Program model
Formula AST, rules, programs and the ground program P*
"""

from dataclasses import dataclass, field
from typing import ClassVar, Dict, Iterator, List, Sequence, Tuple

from errors import InterpretationError
from models.bilattice import BilatticeKind, TruthValue


@dataclass(frozen=True)
class Term:
    """A variable (leading uppercase or underscore) or a constant"""
    name: str

    @property
    def is_variable(self) -> bool:
        return self.name[0].isupper() or self.name[0] == "_"

    def __str__(self) -> str:
        return self.name


class Formula:
    """Base class of all formula nodes"""

    precedence: ClassVar[int] = 100

    def children(self) -> Tuple["Formula", ...]:
        return ()

    def __str__(self) -> str:
        return render_formula(self)


@dataclass(frozen=True)
class Atom(Formula):
    predicate: str
    args: Tuple[Term, ...] = ()
    line: int = field(default=0, compare=False, repr=False)
    column: int = field(default=0, compare=False, repr=False)

    @property
    def arity(self) -> int:
        return len(self.args)

    @property
    def signature(self) -> Tuple[str, int]:
        return (self.predicate, len(self.args))

    @property
    def is_ground(self) -> bool:
        return not any(t.is_variable for t in self.args)

    def variables(self) -> List[str]:
        seen: List[str] = []
        for term in self.args:
            if term.is_variable and term.name not in seen:
                seen.append(term.name)
        return seen

    def __str__(self) -> str:
        if not self.args:
            return self.predicate
        return f"{self.predicate}({','.join(t.name for t in self.args)})"


@dataclass(frozen=True)
class Const(Formula):
    value: TruthValue


@dataclass(frozen=True)
class Neg(Formula):
    child: Formula
    precedence: ClassVar[int] = 6

    def children(self) -> Tuple[Formula, ...]:
        return (self.child,)


@dataclass(frozen=True)
class BinaryFormula(Formula):
    left: Formula
    right: Formula

    symbol: ClassVar[str] = "?"
    operation: ClassVar[str] = ""

    def children(self) -> Tuple[Formula, ...]:
        return (self.left, self.right)


class And(BinaryFormula):
    symbol = "&"
    operation = "meet_t"
    precedence = 5


class Or(BinaryFormula):
    symbol = "|"
    operation = "join_t"
    precedence = 4


class KMeet(BinaryFormula):
    symbol = "*"
    operation = "meet_k"
    precedence = 3


class KJoin(BinaryFormula):
    symbol = "+"
    operation = "join_k"
    precedence = 2


@dataclass(frozen=True)
class Quantified(Formula):
    variable: str
    child: Formula

    keyword: ClassVar[str] = ""
    precedence: ClassVar[int] = 1

    def children(self) -> Tuple[Formula, ...]:
        return (self.child,)


class Exists(Quantified):
    keyword = "exists"


class Forall(Quantified):
    keyword = "forall"


def render_value(value: TruthValue) -> str:
    if value.kind is BilatticeKind.FOUR:
        return f"#{value}"
    return str(value)


def render_formula(formula: Formula) -> str:
    """Render in DSL syntax with the minimal parentheses the grammar needs"""
    if isinstance(formula, Atom):
        return str(formula)
    if isinstance(formula, Const):
        return render_value(formula.value)
    if isinstance(formula, Neg):
        return "~" + _wrap(formula.child, Neg.precedence)
    if isinstance(formula, BinaryFormula):
        # left-associative: a right operand of equal precedence needs parentheses
        left = _wrap(formula.left, formula.precedence)
        right = _wrap(formula.right, formula.precedence + 1)
        return f"{left} {formula.symbol} {right}"
    if isinstance(formula, Quantified):
        return f"{formula.keyword} {formula.variable}: {render_formula(formula.child)}"
    raise TypeError(f"Unknown formula node {formula!r}")


def _wrap(formula: Formula, needed: int) -> str:
    text = render_formula(formula)
    if formula.precedence < needed:
        return f"({text})"
    return text


def substitute(formula: Formula, bindings: Dict[str, str]) -> Formula:
    """Replace free variables by constants"""
    if not bindings:
        return formula
    if isinstance(formula, Atom):
        if not any(t.is_variable and t.name in bindings for t in formula.args):
            return formula
        args = tuple(
            Term(bindings[t.name]) if t.is_variable and t.name in bindings else t
            for t in formula.args
        )
        return Atom(formula.predicate, args, formula.line, formula.column)
    if isinstance(formula, Const):
        return formula
    if isinstance(formula, Neg):
        return Neg(substitute(formula.child, bindings))
    if isinstance(formula, BinaryFormula):
        return type(formula)(
            substitute(formula.left, bindings), substitute(formula.right, bindings)
        )
    if isinstance(formula, Quantified):
        inner = {k: v for k, v in bindings.items() if k != formula.variable}
        return type(formula)(formula.variable, substitute(formula.child, inner))
    raise TypeError(f"Unknown formula node {formula!r}")


def free_variables(formula: Formula) -> List[str]:
    """Free variables in first-occurrence order"""
    found: List[str] = []

    def visit(node: Formula, bound: Tuple[str, ...]) -> None:
        if isinstance(node, Atom):
            for name in node.variables():
                if name not in bound and name not in found:
                    found.append(name)
        elif isinstance(node, Quantified):
            visit(node.child, bound + (node.variable,))
        else:
            for child in node.children():
                visit(child, bound)

    visit(formula, ())
    return found


def iter_atoms(formula: Formula) -> Iterator[Atom]:
    """All atom occurrences, left to right"""
    if isinstance(formula, Atom):
        yield formula
        return
    for child in formula.children():
        yield from iter_atoms(child)


def iter_constants(formula: Formula) -> Iterator[Const]:
    if isinstance(formula, Const):
        yield formula
        return
    for child in formula.children():
        yield from iter_constants(child)


def disjuncts(formula: Formula) -> List[Formula]:
    """Flatten top-level ∨ into its operands"""
    if isinstance(formula, Or):
        return disjuncts(formula.left) + disjuncts(formula.right)
    return [formula]


def conjuncts(formula: Formula) -> List[Formula]:
    """Flatten top-level ∧ into its operands"""
    if isinstance(formula, And):
        return conjuncts(formula.left) + conjuncts(formula.right)
    return [formula]


def is_literal(formula: Formula) -> bool:
    return isinstance(formula, Atom) or (
        isinstance(formula, Neg) and isinstance(formula.child, Atom)
    )


@dataclass(frozen=True)
class Rule:
    """head ← body; facts carry the body #t"""
    head: Atom
    body: Formula
    line: int = field(default=0, compare=False)
    column: int = field(default=0, compare=False)

    def __str__(self) -> str:
        return f"{self.head} <- {render_formula(self.body)}."


@dataclass(frozen=True)
class Program:
    """A finite, ordered list of rules over one bilattice"""
    rules: Tuple[Rule, ...]
    kind: BilatticeKind = BilatticeKind.FOUR

    def to_text(self) -> str:
        return "".join(f"{rule}\n" for rule in self.rules)

    def __len__(self) -> int:
        return len(self.rules)


class HerbrandBase:
    """Ordered set of ground atoms with a dense index, plus the Herbrand universe"""

    def __init__(self, atoms: Sequence[Atom], universe: Sequence[str] = ()):
        self.atoms: Tuple[Atom, ...] = tuple(atoms)
        self.universe: Tuple[str, ...] = tuple(universe)
        self.index: Dict[Atom, int] = {atom: n for n, atom in enumerate(self.atoms)}
        self._by_name: Dict[str, Atom] = {str(atom): atom for atom in self.atoms}

    def __len__(self) -> int:
        return len(self.atoms)

    def __iter__(self) -> Iterator[Atom]:
        return iter(self.atoms)

    def __contains__(self, atom: object) -> bool:
        return atom in self.index

    def __eq__(self, other: object) -> bool:
        return isinstance(other, HerbrandBase) and self.atoms == other.atoms

    def __hash__(self) -> int:
        return hash(self.atoms)

    def __repr__(self) -> str:
        return f"HerbrandBase({', '.join(map(str, self.atoms))})"

    def names(self) -> List[str]:
        return list(self._by_name)

    def find(self, name: str) -> Atom:
        """Look up a ground atom by its rendered name"""
        try:
            return self._by_name[name.replace(" ", "")]
        except KeyError:
            raise InterpretationError(f"Unknown atom '{name}'")


class GroundProgram:
    """
    P*: exactly one rule A ← φ_A per atom of the Herbrand base
    Bodies are stored densely, aligned with the base order
    """

    def __init__(self, base: HerbrandBase, bodies: Sequence[Formula], kind: BilatticeKind):
        if len(bodies) != len(base):
            raise ValueError("A ground program needs exactly one body per base atom")
        self.base = base
        self.bodies: Tuple[Formula, ...] = tuple(bodies)
        self.kind = kind

    def __len__(self) -> int:
        return len(self.base)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, GroundProgram)
            and self.kind == other.kind
            and self.base == other.base
            and self.bodies == other.bodies
        )

    def __hash__(self) -> int:
        return hash((self.kind, self.base, self.bodies))

    def __repr__(self) -> str:
        return f"GroundProgram({len(self)} atoms, kind={self.kind.value})"

    @property
    def atoms(self) -> Tuple[Atom, ...]:
        return self.base.atoms

    def rule_for(self, atom: Atom) -> Formula:
        try:
            return self.bodies[self.base.index[atom]]
        except KeyError:
            raise InterpretationError(f"Atom {atom} is not in the Herbrand base")

    def rules(self) -> Iterator[Tuple[Atom, Formula]]:
        return zip(self.base.atoms, self.bodies)

    def with_bodies(self, bodies: Sequence[Formula]) -> "GroundProgram":
        return GroundProgram(self.base, bodies, self.kind)

    def to_text(self) -> str:
        """Canonical rendering, one rule per base atom"""
        return "".join(
            f"{atom} <- {render_formula(body)}.\n" for atom, body in self.rules()
        )

    def is_literal_normal(self) -> bool:
        """Negation applies only to atoms or constants"""
        return all(_literal_normal(body) for body in self.bodies)

    def is_classical(self) -> bool:
        """
        Classical syntax over FOUR: every body is a disjunction of conjunctions
        of literals and the constants f, t
        """
        if self.kind is not BilatticeKind.FOUR:
            return False
        return all(is_classical_body(body, self.kind) for body in self.bodies)


def _literal_normal(formula: Formula) -> bool:
    if isinstance(formula, Neg):
        return isinstance(formula.child, (Atom, Const))
    return all(_literal_normal(child) for child in formula.children())


def is_classical_body(formula: Formula, kind: BilatticeKind = BilatticeKind.FOUR) -> bool:
    for disjunct in disjuncts(formula):
        for part in conjuncts(disjunct):
            if is_literal(part):
                continue
            if isinstance(part, Const) and part.value in (kind.false, kind.true):
                continue
            return False
    return True