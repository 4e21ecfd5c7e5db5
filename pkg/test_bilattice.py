"""
Tests for bilattice truth values
FOUR truth tables, interlacing lemmas and interval arithmetic
"""

import random
from fractions import Fraction
from itertools import product

import pytest

from errors import BilatticeKindError
from models.bilattice import (
    BilatticeKind,
    FourValue,
    IntervalValue,
    big_glb_k,
    big_glb_t,
    big_lub_k,
    big_lub_t,
    format_rational,
)

F, T, BOT, TOP = FourValue.FALSE, FourValue.TRUE, FourValue.BOTTOM, FourValue.TOP
FOUR = (BOT, F, T, TOP)


def interval_samples(count, seed=7):
    """Random intervals with denominators up to 20, including inconsistent ones"""
    rng = random.Random(seed)
    for _ in range(count):
        yield tuple(
            IntervalValue(Fraction(rng.randint(0, 20), 20), Fraction(rng.randint(0, 20), 20))
            for _ in range(3)
        )


def four_triples():
    return product(FOUR, repeat=3)


# Lemma bodies shared by the exhaustive and the sampled checks

def interlacing_t(x, y, z):
    """x ≼t y ≼t z gives x⊗z ≼k y ≼k x⊕z"""
    if x.leq_t(y) and y.leq_t(z):
        return (x * z).leq_k(y) and y.leq_k(x + z)
    return True


def interlacing_k(x, y, z):
    """x ≼k y ≼k z gives x∧z ≼t y ≼t x∨z"""
    if x.leq_k(y) and y.leq_k(z):
        return (x & z).leq_t(y) and y.leq_t(x | z)
    return True


def between_t(x, y, _z):
    if x.leq_t(y):
        return x.leq_t(x * y) and (x * y).leq_t(y) and x.leq_t(x + y) and (x + y).leq_t(y)
    return True


def false_meet(x, y, _z):
    f = x.kind.false
    ok = True
    if x.leq_t(y):
        ok = ok and (f * x).leq_t(y)
    if x.leq_k(y):
        ok = ok and (f * y).leq_t(x)
    return ok


def join_below_t(x, y, z):
    f = x.kind.false
    if (x + z).leq_t(y):
        return z.leq_k(y + f)
    return True


def sandwich(x, y, _z):
    f = x.kind.false
    if (f * y).leq_k(x) and x.leq_k(f + y):
        return x.leq_t(y)
    return True


def same_false_meet(x, y, _z):
    f = x.kind.false
    if x.leq_k(y) and x.leq_t(y):
        return x * f == y * f
    return True


LEMMAS = [interlacing_t, interlacing_k, between_t, false_meet, join_below_t, sandwich, same_false_meet]


def test_four_truth_tables():
    """Test ∧, ∨, ⊗, ⊕ and ¬ on FOUR"""
    assert T & F == F
    assert T & BOT == BOT
    assert BOT & TOP == F
    assert BOT | TOP == T
    assert F | BOT == BOT
    assert T * F == BOT
    assert T + F == TOP
    assert BOT + T == T
    assert TOP * F == F
    assert ~T == F
    assert ~F == T
    assert ~BOT == BOT
    assert ~TOP == TOP


def test_four_orders():
    """Test ≼t and ≼k are the two diamond orders"""
    assert F.leq_t(BOT) and BOT.leq_t(T) and F.leq_t(TOP) and TOP.leq_t(T)
    assert not BOT.leq_t(TOP) and not TOP.leq_t(BOT)
    assert BOT.leq_k(F) and BOT.leq_k(T) and F.leq_k(TOP) and T.leq_k(TOP)
    assert not F.leq_k(T) and not T.leq_k(F)


def test_negation_reverses_truth_and_keeps_knowledge():
    """Test ¬ flips ≼t and preserves ≼k"""
    for x, y in product(FOUR, repeat=2):
        if x.leq_t(y):
            assert (~y).leq_t(~x)
        if x.leq_k(y):
            assert (~x).leq_k(~y)
        assert ~~x == x


def test_enumeration_order():
    """Test FOUR values are enumerated as ⊥, f, t, ⊤"""
    assert BilatticeKind.FOUR.values() == (BOT, F, T, TOP)
    with pytest.raises(BilatticeKindError):
        BilatticeKind.UNIT_INTERVAL.values()


@pytest.mark.parametrize("lemma", LEMMAS, ids=lambda lemma: lemma.__name__)
def test_lemmas_exhaustive_on_four(lemma):
    """Test each order lemma over all 4^3 FOUR triples"""
    counterexamples = [t for t in four_triples() if not lemma(*t)]
    assert counterexamples == []


@pytest.mark.parametrize("lemma", LEMMAS, ids=lambda lemma: lemma.__name__)
def test_lemmas_sampled_on_intervals(lemma):
    """Test each order lemma over 10^4 random interval triples"""
    counterexamples = [t for t in interval_samples(10_000) if not lemma(*t)]
    assert counterexamples == []


# Algebraic laws of the four operations

BINARY_OPS = {
    "and": lambda a, b: a & b,
    "or": lambda a, b: a | b,
    "meet_k": lambda a, b: a * b,
    "join_k": lambda a, b: a + b,
}
OP_PAIRS = [(outer, inner) for outer in BINARY_OPS for inner in BINARY_OPS if outer != inner]


def embed(x):
    return IntervalValue.of(x.lo, x.hi)


def monotone_in_both_orders(x, w, z):
    """x ≼t x∨w and x ≼k x⊕w; every operation keeps both"""
    above_t, above_k = x | w, x + w
    for op in BINARY_OPS.values():
        if not (op(x, z).leq_t(op(above_t, z)) and op(z, x).leq_t(op(z, above_t))):
            return False
        if not (op(x, z).leq_k(op(above_k, z)) and op(z, x).leq_k(op(z, above_k))):
            return False
    return True


def distributive(x, y, z):
    for outer, inner in OP_PAIRS:
        o, i = BINARY_OPS[outer], BINARY_OPS[inner]
        if o(x, i(y, z)) != i(o(x, y), o(x, z)):
            return False
    return True


def negation_laws(x, y, _z):
    ok = ~~x == x
    if x.leq_t(y):
        ok = ok and (~y).leq_t(~x)
    if x.leq_k(y):
        ok = ok and (~x).leq_k(~y)
    return ok


@pytest.mark.parametrize("law", [monotone_in_both_orders, distributive, negation_laws],
                         ids=lambda law: law.__name__)
def test_laws_exhaustive_on_four(law):
    """Test interlacing, distributivity and negation over all FOUR triples"""
    assert [t for t in four_triples() if not law(*t)] == []


@pytest.mark.parametrize("law", [monotone_in_both_orders, distributive, negation_laws],
                         ids=lambda law: law.__name__)
def test_laws_sampled_on_intervals(law):
    """Test interlacing, distributivity and negation over 10^4 interval triples"""
    assert [t for t in interval_samples(10_000) if not law(*t)] == []


def test_negation_sampled_on_ordered_intervals():
    """Test ¬ reverses ≼t and keeps ≼k on pairs built to be ordered"""
    for x, w, _ in interval_samples(10_000, seed=11):
        above_t, above_k = x | w, x + w
        assert (~above_t).leq_t(~x)
        assert (~x).leq_k(~above_k)


@pytest.mark.parametrize("name", list(BINARY_OPS))
def test_four_embeds_in_intervals(name):
    """Test the embedding of FOUR commutes with each binary operation"""
    op = BINARY_OPS[name]
    for x, y in product(FOUR, repeat=2):
        assert embed(op(x, y)) == op(embed(x), embed(y))


def test_four_embedding_keeps_constants_and_negation():
    """Test f, t, ⊥, ⊤ map to the interval constants and ¬ commutes"""
    assert [embed(v) for v in (F, T, BOT, TOP)] == [
        IntervalValue.FALSE, IntervalValue.TRUE, IntervalValue.BOTTOM, IntervalValue.TOP
    ]
    for x in FOUR:
        assert embed(~x) == ~embed(x)


def test_interval_operations():
    """Test componentwise min/max and negation on intervals"""
    a = IntervalValue.of("0.3", "0.5")
    b = IntervalValue.of("0.2", "0.4")
    assert a & b == IntervalValue.of("0.2", "0.4")
    assert a | b == IntervalValue.of("0.3", "0.5")
    assert a * b == IntervalValue.of("0.2", "0.5")
    assert a + b == IntervalValue.of("0.3", "0.4")
    assert ~a == IntervalValue.of("0.5", "0.7")
    assert IntervalValue.of(0, 1) | IntervalValue.of("0.2", "0.4") == IntervalValue.of("0.2", 1)


def test_interval_values_are_exact():
    """Test endpoints are Fractions and floats are refused"""
    v = IntervalValue.of("1/3", "2/3")
    assert v.lo == Fraction(1, 3)
    assert str(v) == "[1/3,2/3]"
    with pytest.raises(BilatticeKindError):
        IntervalValue.of(0.5, 1)
    with pytest.raises(BilatticeKindError):
        IntervalValue.of(0, 2)


def test_mixed_kinds_rejected():
    """Test combining a FOUR value with an interval value"""
    with pytest.raises(BilatticeKindError):
        T & IntervalValue.of(0, 1)
    with pytest.raises(BilatticeKindError):
        FourValue(2, 0)


def test_big_operations():
    """Test finite lub/glb and their empty-set values"""
    assert big_lub_t([F, BOT, TOP]) == T
    assert big_glb_t([T, BOT]) == BOT
    assert big_lub_k([F, T]) == TOP
    assert big_glb_k([F, T]) == BOT
    assert big_lub_t([], BilatticeKind.FOUR) == F
    assert big_glb_t([], BilatticeKind.FOUR) == T
    assert big_lub_k([], BilatticeKind.UNIT_INTERVAL) == IntervalValue.BOTTOM
    assert big_glb_k([], BilatticeKind.UNIT_INTERVAL) == IntervalValue.TOP
    with pytest.raises(BilatticeKindError):
        big_lub_t([])


@pytest.mark.parametrize(
    "value, text",
    [
        (Fraction(0), "0"),
        (Fraction(1), "1"),
        (Fraction(3, 10), "0.3"),
        (Fraction(1, 8), "0.125"),
        (Fraction(1, 3), "1/3"),
        (Fraction(7, 12), "7/12"),
    ],
)
def test_format_rational(value, text):
    """Test decimal rendering of terminating rationals and p/q otherwise"""
    assert format_rational(value) == text


def test_four_rendering():
    """Test FOUR names"""
    assert [str(v) for v in FOUR] == ["bot", "f", "t", "top"]
    assert repr(T) == "FourValue.T"


if __name__ == "__main__":
    pytest.main([__file__])
