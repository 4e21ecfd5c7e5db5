"""
Tests for interpretations
Construction, pointwise operations and formula evaluation
"""

import pytest

from conftest import ground
from errors import BilatticeKindError, InterpretationError, SyntaxRestrictionError
from models.bilattice import BilatticeKind, FourValue, IntervalValue
from models.interpretation import (
    Interpretation,
    PseudoPair,
    eval_formula,
    eval_pseudo,
    pointwise_op,
)
from models.program import Atom, Const, Neg, Or
from parser import parse_interpretation

F, T, BOT, TOP = FourValue.FALSE, FourValue.TRUE, FourValue.BOTTOM, FourValue.TOP


def interp(g, text):
    return parse_interpretation(text, g.base, g.kind)


def test_constant_interpretations(running):
    """Test the four extreme interpretations"""
    assert Interpretation.bottom_t(running.base, running.kind).value_list() == ["f"] * 3
    assert Interpretation.bottom_k(running.base, running.kind).value_list() == ["bot"] * 3
    assert Interpretation.top_t(running.base, running.kind).value_list() == ["t"] * 3
    assert Interpretation.top_k(running.base, running.kind).value_list() == ["top"] * 3


def test_lookup_by_atom_and_name(running):
    """Test indexing by Atom and by rendered name"""
    i = interp(running, "q = t\n")
    assert i["q"] == T
    assert i[Atom("q")] == T
    with pytest.raises(InterpretationError):
        i["z"]


def test_wrong_length_rejected(running):
    """Test the value tuple must match the base"""
    with pytest.raises(InterpretationError):
        Interpretation(running.base, [T], running.kind)


def test_pointwise_operations(running):
    """Test ⊕, ⊗, ∧, ∨ apply atom by atom"""
    i = interp(running, "p = t\nq = f\nr = bot\n")
    j = interp(running, "p = f\nq = f\nr = top\n")
    assert pointwise_op(i, j, "+").value_list() == ["top", "f", "top"]
    assert pointwise_op(i, j, "*").value_list() == ["bot", "f", "bot"]
    assert pointwise_op(i, j, "&").value_list() == ["f", "f", "f"]
    assert pointwise_op(i, j, "|").value_list() == ["t", "f", "t"]
    assert i.neg().value_list() == ["f", "t", "bot"]


def test_pointwise_orders(running):
    """Test ≼t and ≼k hold only when they hold at every atom"""
    bottom = Interpretation.bottom_k(running.base, running.kind)
    i = interp(running, "p = t\nq = f\n")
    assert bottom.leq_k(i)
    assert not i.leq_k(bottom)
    assert Interpretation.bottom_t(running.base, running.kind).leq_t(i)


def test_mixing_kinds_rejected(running, exmy):
    """Test FOUR and interval interpretations do not combine"""
    with pytest.raises((BilatticeKindError, InterpretationError)):
        Interpretation.bottom_k(running.base, running.kind).join_k(
            Interpretation.bottom_k(exmy.base, exmy.kind)
        )
    with pytest.raises(BilatticeKindError):
        Interpretation.from_mapping(running.base, running.kind, {"p": IntervalValue.TRUE})


def test_eval_formula(running):
    """Test evaluation of connectives and constants"""
    i = interp(running, "p = t\nq = bot\nr = f\n")
    assert eval_formula(i, Or(Atom("r"), Neg(Atom("q")))) == BOT
    assert eval_formula(i, Const(TOP)) == TOP
    with pytest.raises(BilatticeKindError):
        eval_formula(i, Const(IntervalValue.TRUE))


def test_eval_pseudo_reads_negation_from_second_component(running):
    """Test ⟨pos, neg⟩ reads positive atoms from pos and ¬A from neg"""
    pos = interp(running, "p = t\nq = t\nr = t\n")
    neg = interp(running, "p = f\nq = f\nr = t\n")
    pair = PseudoPair(pos, neg)
    assert eval_pseudo(pair, Atom("r")) == T
    assert eval_pseudo(pair, Neg(Atom("r"))) == F
    assert eval_pseudo(pair, Neg(Atom("q"))) == T


def test_eval_pseudo_rejects_compound_negation(running):
    """Test ¬ over a non-literal has no pseudo-interpretation reading"""
    i = Interpretation.bottom_k(running.base, running.kind)
    with pytest.raises(SyntaxRestrictionError):
        eval_pseudo(PseudoPair(i, i), Neg(Or(Atom("p"), Atom("q"))))


def test_serialization(exmy):
    """Test text and dict forms"""
    i = interp(exmy, "a = [0,1]\nd = [0.7,0.7]\n")
    assert i.to_text() == "a = [0,1]\nb = [0,1]\nc = [0,1]\nd = [0.7,0.7]\n"
    assert i.to_dict()["d"] == "[0.7,0.7]"


def test_classical_interpretations(running):
    """Test is_classical excludes ⊤"""
    assert interp(running, "p = t\nq = f\n").is_classical
    assert not interp(running, "p = top\n").is_classical


def test_interpretations_are_hashable():
    """Test equal interpretations hash alike"""
    g = ground("p <- q.")
    a = Interpretation.bottom_k(g.base, BilatticeKind.FOUR)
    b = Interpretation.constant(g.base, BOT)
    assert a == b
    assert len({a, b}) == 1


if __name__ == "__main__":
    pytest.main([__file__])
