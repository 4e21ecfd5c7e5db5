"""
Grounding and program transformations
Builds P* and derives the general reduct, the GL reduct and k-completions
"""

import hashlib
from itertools import product
from typing import Dict, List, Tuple

import structlog

from errors import BilatticeKindError, SyntaxRestrictionError
from models.bilattice import BilatticeKind
from models.interpretation import Interpretation, eval_formula
from models.program import (
    And,
    Atom,
    BinaryFormula,
    Const,
    Exists,
    Formula,
    GroundProgram,
    HerbrandBase,
    KJoin,
    Neg,
    Or,
    Program,
    Quantified,
    Term,
    iter_atoms,
    substitute,
)

logger = structlog.get_logger(__name__)


DUMMY_CONSTANT = "c"


def herbrand_universe(program: Program) -> List[str]:
    """
    Constants in order of first occurrence
    A program without constants but with a predicate of arity > 0 grounds over
    the single constant DUMMY_CONSTANT; a purely propositional one keeps an empty universe
    """
    universe: List[str] = []
    has_arguments = False
    for rule in program.rules:
        for atom in [rule.head, *iter_atoms(rule.body)]:
            has_arguments = has_arguments or atom.arity > 0
            for term in atom.args:
                if not term.is_variable and term.name not in universe:
                    universe.append(term.name)
    if not universe and has_arguments:
        return [DUMMY_CONSTANT]
    return universe


def herbrand_base(program: Program, universe: List[str]) -> HerbrandBase:
    """
    Predicates that head some rule come first, in rule order, then predicates
    that only occur in bodies; each predicate contributes all its ground
    instances in universe-product order
    """
    signatures: List[Tuple[str, int]] = []
    for rule in program.rules:
        if rule.head.signature not in signatures:
            signatures.append(rule.head.signature)
    for rule in program.rules:
        for atom in iter_atoms(rule.body):
            if atom.signature not in signatures:
                signatures.append(atom.signature)
    atoms = [
        Atom(name, tuple(Term(c) for c in args))
        for name, arity in signatures
        for args in product(universe, repeat=arity)
    ]
    return HerbrandBase(atoms, universe)


def expand_quantifiers(formula: Formula, universe: List[str], kind: BilatticeKind) -> Formula:
    """∃ becomes a ∨-chain and ∀ a ∧-chain over the universe; empty universe gives f / t"""
    if isinstance(formula, Quantified):
        parts = [
            expand_quantifiers(substitute(formula.child, {formula.variable: c}), universe, kind)
            for c in universe
        ]
        if isinstance(formula, Exists):
            return _chain(Or, parts, Const(kind.false))
        return _chain(And, parts, Const(kind.true))
    if isinstance(formula, Neg):
        return Neg(expand_quantifiers(formula.child, universe, kind))
    if isinstance(formula, BinaryFormula):
        return type(formula)(
            expand_quantifiers(formula.left, universe, kind),
            expand_quantifiers(formula.right, universe, kind),
        )
    return formula


def _chain(node_class, parts: List[Formula], empty: Formula) -> Formula:
    if not parts:
        return empty
    result = parts[0]
    for part in parts[1:]:
        result = node_class(result, part)
    return result


def build_pstar(program: Program) -> GroundProgram:
    """
    Ground every rule, merge same-head bodies with ∨ in source order, and give
    atoms that head no rule the body f
    """
    kind = program.kind
    universe = herbrand_universe(program)
    base = herbrand_base(program, universe)
    collected: Dict[Atom, List[Formula]] = {}
    for rule in program.rules:
        head_vars = rule.head.variables()
        for values in product(universe, repeat=len(head_vars)):
            bindings = dict(zip(head_vars, values))
            head = substitute(rule.head, bindings)
            head = Atom(head.predicate, head.args)
            body = expand_quantifiers(substitute(rule.body, bindings), universe, kind)
            collected.setdefault(head, []).append(body)
    bodies = [_chain(Or, collected.get(atom, []), Const(kind.false)) for atom in base]
    ground = GroundProgram(base, bodies, kind)
    logger.debug(
        "pstar.built", atoms=len(base), universe=len(universe), rules=len(program.rules)
    )
    return ground


def general_reduct(g: GroundProgram, i: Interpretation) -> GroundProgram:
    """P[I]: every body replaced by its value under I"""
    return g.with_bodies([Const(eval_formula(i, body)) for body in g.bodies])


def _reduce_negation(formula: Formula, i: Interpretation) -> Formula:
    if isinstance(formula, Neg):
        if isinstance(formula.child, Atom):
            return Const(i[formula.child].neg())
        return Const(eval_formula(i, formula))
    if isinstance(formula, BinaryFormula):
        return type(formula)(
            _reduce_negation(formula.left, i), _reduce_negation(formula.right, i)
        )
    return formula


def gl_reduct(g: GroundProgram, i: Interpretation) -> GroundProgram:
    """P^I: each negative literal ¬A replaced by the constant ¬I(A)"""
    if g.kind is not BilatticeKind.FOUR:
        raise SyntaxRestrictionError("The GL reduct is only offered over FOUR")
    if not g.is_classical():
        raise SyntaxRestrictionError("The GL reduct needs a program in classical syntax")
    return g.with_bodies([_reduce_negation(body, i) for body in g.bodies])


def k_complete(g: GroundProgram, i: Interpretation) -> GroundProgram:
    """P ⊕ I: every body A ← φ becomes A ← φ ⊕ I(A)"""
    if i.kind is not g.kind:
        raise BilatticeKindError("k-completion needs an interpretation of the program's kind")
    return g.with_bodies(
        [KJoin(body, Const(value)) for body, value in zip(g.bodies, i.values)]
    )


def program_hash(g: GroundProgram) -> str:
    """sha256 of the kind and the canonical rendering of P*"""
    digest = hashlib.sha256()
    digest.update(g.kind.value.encode())
    digest.update(b"\n")
    digest.update(g.to_text().encode())
    return digest.hexdigest()
