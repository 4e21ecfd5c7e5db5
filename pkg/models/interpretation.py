"""
Interpretations and formula evaluation
An interpretation is a dense tuple of truth values aligned with a Herbrand base
"""

from typing import Callable, Dict, Iterator, List, Mapping, Sequence, Tuple, Union

from errors import BilatticeKindError, InterpretationError, SyntaxRestrictionError
from models.bilattice import (
    BilatticeKind,
    TruthValue,
    big_glb_t,
    big_lub_t,
)
from models.program import (
    Atom,
    BinaryFormula,
    Const,
    Exists,
    Formula,
    HerbrandBase,
    Neg,
    Quantified,
    substitute,
)


class Interpretation:
    """Total map from the Herbrand base to one bilattice"""

    __slots__ = ("base", "values", "kind")

    def __init__(self, base: HerbrandBase, values: Sequence[TruthValue], kind: BilatticeKind):
        values = tuple(values)
        if len(values) != len(base):
            raise InterpretationError(
                f"Interpretation has {len(values)} values for {len(base)} atoms"
            )
        self.base = base
        self.values: Tuple[TruthValue, ...] = values
        self.kind = kind

    # Construction

    @classmethod
    def constant(cls, base: HerbrandBase, value: TruthValue) -> "Interpretation":
        return cls(base, (value,) * len(base), value.kind)

    @classmethod
    def bottom_t(cls, base: HerbrandBase, kind: BilatticeKind) -> "Interpretation":
        """I_⊥t: everything false"""
        return cls.constant(base, kind.false)

    @classmethod
    def bottom_k(cls, base: HerbrandBase, kind: BilatticeKind) -> "Interpretation":
        """I_⊥k: everything unknown"""
        return cls.constant(base, kind.bottom)

    @classmethod
    def top_t(cls, base: HerbrandBase, kind: BilatticeKind) -> "Interpretation":
        return cls.constant(base, kind.true)

    @classmethod
    def top_k(cls, base: HerbrandBase, kind: BilatticeKind) -> "Interpretation":
        return cls.constant(base, kind.top)

    @classmethod
    def from_mapping(
        cls,
        base: HerbrandBase,
        kind: BilatticeKind,
        mapping: Mapping[Union[str, Atom], TruthValue],
    ) -> "Interpretation":
        """Atoms missing from the mapping default to ⊥"""
        values = [kind.bottom] * len(base)
        for key, value in mapping.items():
            atom = base.find(key) if isinstance(key, str) else key
            if atom not in base:
                raise InterpretationError(f"Unknown atom '{atom}'")
            if value.kind is not kind:
                raise BilatticeKindError(f"Value {value} for {atom} is not a {kind.value} value")
            values[base.index[atom]] = value
        return cls(base, values, kind)

    # Access

    def __getitem__(self, atom: Union[Atom, str]) -> TruthValue:
        if isinstance(atom, str):
            atom = self.base.find(atom)
        try:
            return self.values[self.base.index[atom]]
        except KeyError:
            raise InterpretationError(f"Atom {atom} is not in the Herbrand base")

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self) -> Iterator[Atom]:
        return iter(self.base.atoms)

    def items(self) -> Iterator[Tuple[Atom, TruthValue]]:
        return zip(self.base.atoms, self.values)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Interpretation)
            and self.values == other.values
            and self.base == other.base
        )

    def __hash__(self) -> int:
        return hash(self.values)

    def __repr__(self) -> str:
        return "Interpretation(" + ", ".join(f"{a}={v}" for a, v in self.items()) + ")"

    def replace(self, atom: Atom, value: TruthValue) -> "Interpretation":
        values = list(self.values)
        values[self.base.index[atom]] = value
        return Interpretation(self.base, values, self.kind)

    # Pointwise structure

    def _combine(self, other: "Interpretation", op: Callable) -> "Interpretation":
        self._check(other)
        return Interpretation(
            self.base, [op(a, b) for a, b in zip(self.values, other.values)], self.kind
        )

    def _check(self, other: "Interpretation") -> None:
        if other.kind is not self.kind:
            raise BilatticeKindError("Interpretations over different bilattices")
        if other.base is not self.base and other.base != self.base:
            raise InterpretationError("Interpretations over different Herbrand bases")

    def meet_t(self, other: "Interpretation") -> "Interpretation":
        return self._combine(other, TruthValue.meet_t)

    def join_t(self, other: "Interpretation") -> "Interpretation":
        return self._combine(other, TruthValue.join_t)

    def meet_k(self, other: "Interpretation") -> "Interpretation":
        return self._combine(other, TruthValue.meet_k)

    def join_k(self, other: "Interpretation") -> "Interpretation":
        return self._combine(other, TruthValue.join_k)

    def neg(self) -> "Interpretation":
        return Interpretation(self.base, [v.neg() for v in self.values], self.kind)

    def leq_t(self, other: "Interpretation") -> bool:
        self._check(other)
        return all(a.leq_t(b) for a, b in zip(self.values, other.values))

    def leq_k(self, other: "Interpretation") -> bool:
        self._check(other)
        return all(a.leq_k(b) for a, b in zip(self.values, other.values))

    def atoms_with(self, value: TruthValue) -> List[Atom]:
        return [atom for atom, v in self.items() if v == value]

    @property
    def is_classical(self) -> bool:
        """All values in {f, ⊥, t}"""
        return self.kind is BilatticeKind.FOUR and self.kind.top not in self.values

    # Serialization

    def to_dict(self) -> Dict[str, str]:
        return {str(atom): str(value) for atom, value in self.items()}

    def to_text(self) -> str:
        return "".join(f"{atom} = {value}\n" for atom, value in self.items())

    def value_list(self) -> List[str]:
        return [str(value) for value in self.values]


PointwiseOp = Callable[[Interpretation, Interpretation], Interpretation]

POINTWISE_OPS: Dict[str, PointwiseOp] = {
    "+": Interpretation.join_k,
    "*": Interpretation.meet_k,
    "&": Interpretation.meet_t,
    "|": Interpretation.join_t,
}


def pointwise_op(i: Interpretation, j: Interpretation, op: str) -> Interpretation:
    """Pointwise ⊕ (+), ⊗ (*), ∧ (&) or ∨ (|)"""
    try:
        return POINTWISE_OPS[op](i, j)
    except KeyError:
        raise ValueError(f"Unknown pointwise operation '{op}'")


def _expand(formula: Quantified, universe: Sequence[str]) -> List[Formula]:
    return [substitute(formula.child, {formula.variable: c}) for c in universe]


def eval_formula(i: Interpretation, formula: Formula) -> TruthValue:
    """I(φ): atoms looked up, connectives by their bilattice operations, ¬ recursive"""
    if isinstance(formula, Atom):
        try:
            return i.values[i.base.index[formula]]
        except KeyError:
            raise InterpretationError(f"Atom {formula} is not in the Herbrand base")
    if isinstance(formula, BinaryFormula):
        left = eval_formula(i, formula.left)
        return getattr(left, formula.operation)(eval_formula(i, formula.right))
    if isinstance(formula, Neg):
        return eval_formula(i, formula.child).neg()
    if isinstance(formula, Const):
        if formula.value.kind is not i.kind:
            raise BilatticeKindError(f"Constant {formula.value} does not belong to {i.kind.value}")
        return formula.value
    if isinstance(formula, Quantified):
        parts = (eval_formula(i, part) for part in _expand(formula, i.base.universe))
        if isinstance(formula, Exists):
            return big_lub_t(parts, i.kind)
        return big_glb_t(parts, i.kind)
    raise TypeError(f"Unknown formula node {formula!r}")


class PseudoPair:
    """⟨pos, neg⟩: positive literals read from pos, ¬A read as ¬neg(A)"""

    __slots__ = ("pos", "neg")

    def __init__(self, pos: Interpretation, neg: Interpretation):
        pos._check(neg)
        self.pos = pos
        self.neg = neg

    def __repr__(self) -> str:
        return f"PseudoPair(pos={self.pos!r}, neg={self.neg!r})"


def eval_pseudo(pp: PseudoPair, formula: Formula) -> TruthValue:
    """Evaluate under a pseudo-interpretation; negation must be literal"""
    if isinstance(formula, Atom):
        return eval_formula(pp.pos, formula)
    if isinstance(formula, BinaryFormula):
        left = eval_pseudo(pp, formula.left)
        return getattr(left, formula.operation)(eval_pseudo(pp, formula.right))
    if isinstance(formula, Neg):
        child = formula.child
        if isinstance(child, Atom):
            return eval_formula(pp.neg, child).neg()
        if isinstance(child, Const):
            return eval_formula(pp.neg, child).neg()
        raise SyntaxRestrictionError(
            f"Negation over the non-literal '{child}' cannot be read under a pseudo-interpretation"
        )
    if isinstance(formula, Const):
        return eval_formula(pp.pos, formula)
    if isinstance(formula, Quantified):
        parts = (eval_pseudo(pp, part) for part in _expand(formula, pp.pos.base.universe))
        if isinstance(formula, Exists):
            return big_lub_t(parts, pp.pos.kind)
        return big_glb_t(parts, pp.pos.kind)
    raise TypeError(f"Unknown formula node {formula!r}")
