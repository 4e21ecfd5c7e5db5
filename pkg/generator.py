"""
Random program generator
Seeded, reproducible corpora of small propositional programs, plus a shrinker
"""

import random
from typing import Callable, Iterator, List, Optional

import structlog

from models.bilattice import BilatticeKind
from models.program import (
    And,
    Atom,
    BinaryFormula,
    Const,
    Formula,
    KJoin,
    KMeet,
    Neg,
    Or,
    Program,
    Rule,
)

logger = structlog.get_logger(__name__)

ATOM_NAMES = ("a", "b", "c", "d", "e", "g", "h", "k")
CONNECTIVES = (And, Or, KMeet, KJoin)


class ProgramGenerator:
    """
    Builds random propositional FOUR programs
    General programs use ∧, ∨, ⊗, ⊕, literal negation and all four constants;
    classical programs have DNF bodies over literals and f, t
    """

    def __init__(self, seed: int = 0, max_atoms: int = 4, max_depth: int = 3):
        self.seed = seed
        self.rng = random.Random(seed)
        self.max_atoms = min(max_atoms, len(ATOM_NAMES))
        self.max_depth = max_depth
        self.kind = BilatticeKind.FOUR

    def _atoms(self) -> List[Atom]:
        n = self.rng.randint(1, self.max_atoms)
        return [Atom(name) for name in ATOM_NAMES[:n]]

    def _literal(self, atoms: List[Atom]) -> Formula:
        atom = self.rng.choice(atoms)
        return Neg(atom) if self.rng.random() < 0.4 else atom

    def _general_body(self, atoms: List[Atom], depth: int) -> Formula:
        if depth == 0 or self.rng.random() < 0.3:
            roll = self.rng.random()
            if roll < 0.8:
                return self._literal(atoms)
            return Const(self.rng.choice(self.kind.values()))
        connective = self.rng.choice(CONNECTIVES)
        return connective(
            self._general_body(atoms, depth - 1), self._general_body(atoms, depth - 1)
        )

    def _classical_body(self, atoms: List[Atom]) -> Formula:
        disjuncts = []
        for _ in range(self.rng.randint(1, 2)):
            if self.rng.random() < 0.1:
                part: Formula = Const(self.rng.choice((self.kind.false, self.kind.true)))
            else:
                part = self._literal(atoms)
            for _ in range(self.rng.randint(0, 2)):
                part = And(part, self._literal(atoms))
            disjuncts.append(part)
        body = disjuncts[0]
        for part in disjuncts[1:]:
            body = Or(body, part)
        return body

    def _program(self, body: Callable[[List[Atom]], Formula]) -> Program:
        atoms = self._atoms()
        rules = []
        for _ in range(self.rng.randint(1, len(atoms) + 2)):
            head = self.rng.choice(atoms)
            rules.append(Rule(head, body(atoms)))
        return Program(tuple(rules), self.kind)

    def general(self) -> Program:
        return self._program(lambda atoms: self._general_body(atoms, self.max_depth))

    def classical(self) -> Program:
        return self._program(self._classical_body)

    def corpus(self, count: int, classical_share: float = 0.5) -> List[Program]:
        """count programs; at the default share every second one is classical"""
        programs = []
        classical_every = round(1 / classical_share) if classical_share > 0 else 0
        for n in range(count):
            if classical_every and n % classical_every == classical_every - 1:
                programs.append(self.classical())
            else:
                programs.append(self.general())
        logger.debug("corpus.generated", seed=self.seed, count=count)
        return programs


def _prunings(formula: Formula, kind: BilatticeKind) -> Iterator[Formula]:
    """Formulas with one node replaced by one of its children, or a non-constant leaf by f"""
    if isinstance(formula, BinaryFormula):
        yield formula.left
        yield formula.right
        for smaller in _prunings(formula.left, kind):
            yield type(formula)(smaller, formula.right)
        for smaller in _prunings(formula.right, kind):
            yield type(formula)(formula.left, smaller)
    elif isinstance(formula, Neg):
        yield formula.child
        for smaller in _prunings(formula.child, kind):
            yield Neg(smaller)
    elif not isinstance(formula, Const):
        yield Const(kind.false)


def _candidates(program: Program) -> Iterator[Program]:
    rules = program.rules
    if len(rules) > 1:
        for n in range(len(rules)):
            yield Program(rules[:n] + rules[n + 1:], program.kind)
    for n, rule in enumerate(rules):
        for body in _prunings(rule.body, program.kind):
            yield Program(rules[:n] + (Rule(rule.head, body),) + rules[n + 1:], program.kind)


def shrink(
    program: Program, still_fails: Callable[[Program], bool], max_rounds: Optional[int] = None
) -> Program:
    """
    Greedy shrinking: rule deletions are tried before body prunings, and the
    first smaller program that still fails is kept
    """
    rounds = 0
    while max_rounds is None or rounds < max_rounds:
        rounds += 1
        for candidate in _candidates(program):
            if still_fails(candidate):
                program = candidate
                break
        else:
            return program
    return program
