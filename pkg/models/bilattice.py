"""
Bilattice truth values
Belnap's FOUR and the interval bilattice over [0,1] with exact rational endpoints
"""

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import ClassVar, Dict, Iterable, Optional, Tuple, Union

from errors import BilatticeKindError

Rational = Union[int, str, Fraction]


class BilatticeKind(str, Enum):
    """Bilattice selector"""
    FOUR = "four"
    UNIT_INTERVAL = "interval"

    @property
    def value_class(self):
        return FourValue if self is BilatticeKind.FOUR else IntervalValue

    @property
    def false(self) -> "TruthValue":
        return self.value_class.FALSE

    @property
    def true(self) -> "TruthValue":
        return self.value_class.TRUE

    @property
    def bottom(self) -> "TruthValue":
        return self.value_class.BOTTOM

    @property
    def top(self) -> "TruthValue":
        return self.value_class.TOP

    def values(self) -> Tuple["FourValue", ...]:
        """All values in enumeration order (⊥, f, t, ⊤); FOUR only"""
        if self is not BilatticeKind.FOUR:
            raise BilatticeKindError("The interval bilattice cannot be enumerated")
        return FOUR_ENUMERATION_ORDER


@dataclass(frozen=True)
class TruthValue:
    """
    A bilattice element as a pair ⟨lo, hi⟩ of lower and upper truth bounds
    Both bilattices here are interval constructions, so all operations are
    componentwise min/max and negation is ⟨1-hi, 1-lo⟩
    """
    lo: object
    hi: object

    kind: ClassVar[BilatticeKind]

    @classmethod
    def _make(cls, lo, hi) -> "TruthValue":
        return cls(lo, hi)

    def _check(self, other: "TruthValue") -> None:
        if type(other) is not type(self):
            raise BilatticeKindError(
                f"Cannot combine {self.kind.value} value {self} with {other!r}"
            )

    # Truth ordering
    def meet_t(self, other: "TruthValue") -> "TruthValue":
        self._check(other)
        return self._make(min(self.lo, other.lo), min(self.hi, other.hi))

    def join_t(self, other: "TruthValue") -> "TruthValue":
        self._check(other)
        return self._make(max(self.lo, other.lo), max(self.hi, other.hi))

    # Knowledge ordering
    def meet_k(self, other: "TruthValue") -> "TruthValue":
        self._check(other)
        return self._make(min(self.lo, other.lo), max(self.hi, other.hi))

    def join_k(self, other: "TruthValue") -> "TruthValue":
        self._check(other)
        return self._make(max(self.lo, other.lo), min(self.hi, other.hi))

    def neg(self) -> "TruthValue":
        return self._make(1 - self.hi, 1 - self.lo)

    def leq_t(self, other: "TruthValue") -> bool:
        self._check(other)
        return self.lo <= other.lo and self.hi <= other.hi

    def leq_k(self, other: "TruthValue") -> bool:
        self._check(other)
        return self.lo <= other.lo and other.hi <= self.hi

    @property
    def is_consistent(self) -> bool:
        return self.lo <= self.hi

    def __invert__(self) -> "TruthValue":
        return self.neg()

    def __and__(self, other: "TruthValue") -> "TruthValue":
        return self.meet_t(other)

    def __or__(self, other: "TruthValue") -> "TruthValue":
        return self.join_t(other)

    def __mul__(self, other: "TruthValue") -> "TruthValue":
        return self.meet_k(other)

    def __add__(self, other: "TruthValue") -> "TruthValue":
        return self.join_k(other)


@dataclass(frozen=True, repr=False)
class FourValue(TruthValue):
    """Belnap's FOUR encoded as intervals over {0, 1}: f=⟨0,0⟩ t=⟨1,1⟩ ⊥=⟨0,1⟩ ⊤=⟨1,0⟩"""
    kind: ClassVar[BilatticeKind] = BilatticeKind.FOUR

    FALSE: ClassVar["FourValue"]
    TRUE: ClassVar["FourValue"]
    BOTTOM: ClassVar["FourValue"]
    TOP: ClassVar["FourValue"]

    def __post_init__(self):
        if self.lo not in (0, 1) or self.hi not in (0, 1) or isinstance(self.lo, bool):
            raise BilatticeKindError(f"Not a FOUR value: ⟨{self.lo},{self.hi}⟩")

    @classmethod
    def _make(cls, lo, hi) -> "FourValue":
        return _FOUR_BY_BITS[(lo, hi)]

    @property
    def name(self) -> str:
        return _FOUR_NAMES[(self.lo, self.hi)]

    def __str__(self) -> str:
        return self.name

    def __repr__(self) -> str:
        return f"FourValue.{self.name.upper()}"


FourValue.FALSE = FourValue(0, 0)
FourValue.TRUE = FourValue(1, 1)
FourValue.BOTTOM = FourValue(0, 1)
FourValue.TOP = FourValue(1, 0)

_FOUR_BY_BITS: Dict[Tuple[int, int], FourValue] = {
    (v.lo, v.hi): v
    for v in (FourValue.FALSE, FourValue.TRUE, FourValue.BOTTOM, FourValue.TOP)
}
_FOUR_NAMES = {(0, 0): "f", (1, 1): "t", (0, 1): "bot", (1, 0): "top"}

FOUR_ENUMERATION_ORDER: Tuple[FourValue, ...] = (
    FourValue.BOTTOM,
    FourValue.FALSE,
    FourValue.TRUE,
    FourValue.TOP,
)


def _to_fraction(value: Rational) -> Fraction:
    if isinstance(value, (float, bool)):
        raise BilatticeKindError(f"Interval endpoints must be exact rationals, got {value!r}")
    return value if isinstance(value, Fraction) else Fraction(value)


@dataclass(frozen=True, repr=False)
class IntervalValue(TruthValue):
    """
    Interval bilattice element ⟨lo, hi⟩ with lo, hi in [0,1]
    lo > hi is allowed and denotes an inconsistent value
    """
    kind: ClassVar[BilatticeKind] = BilatticeKind.UNIT_INTERVAL

    FALSE: ClassVar["IntervalValue"]
    TRUE: ClassVar["IntervalValue"]
    BOTTOM: ClassVar["IntervalValue"]
    TOP: ClassVar["IntervalValue"]

    def __post_init__(self):
        lo = _to_fraction(self.lo)
        hi = _to_fraction(self.hi)
        if not (0 <= lo <= 1 and 0 <= hi <= 1):
            raise BilatticeKindError(f"Interval endpoints must lie in [0,1]: [{lo},{hi}]")
        object.__setattr__(self, "lo", lo)
        object.__setattr__(self, "hi", hi)

    @classmethod
    def of(cls, lo: Rational, hi: Rational) -> "IntervalValue":
        return cls(_to_fraction(lo), _to_fraction(hi))

    def __str__(self) -> str:
        return f"[{format_rational(self.lo)},{format_rational(self.hi)}]"

    def __repr__(self) -> str:
        return f"IntervalValue({self})"


IntervalValue.FALSE = IntervalValue(Fraction(0), Fraction(0))
IntervalValue.TRUE = IntervalValue(Fraction(1), Fraction(1))
IntervalValue.BOTTOM = IntervalValue(Fraction(0), Fraction(1))
IntervalValue.TOP = IntervalValue(Fraction(1), Fraction(0))


def format_rational(q: Fraction) -> str:
    """Terminating decimals print as decimals, anything else as p/q"""
    q = Fraction(q)
    den = q.denominator
    twos = fives = 0
    while den % 2 == 0:
        den //= 2
        twos += 1
    while den % 5 == 0:
        den //= 5
        fives += 1
    if den != 1:
        return f"{q.numerator}/{q.denominator}"
    places = max(twos, fives)
    if places == 0:
        return str(q.numerator)
    scaled = q.numerator * 10 ** places // q.denominator
    sign = "-" if scaled < 0 else ""
    digits = str(abs(scaled)).rjust(places + 1, "0")
    return f"{sign}{digits[:-places]}.{digits[-places:]}".rstrip("0").rstrip(".")


# Module-level forms of the operations

def meet_t(a: TruthValue, b: TruthValue) -> TruthValue:
    return a.meet_t(b)


def join_t(a: TruthValue, b: TruthValue) -> TruthValue:
    return a.join_t(b)


def meet_k(a: TruthValue, b: TruthValue) -> TruthValue:
    return a.meet_k(b)


def join_k(a: TruthValue, b: TruthValue) -> TruthValue:
    return a.join_k(b)


def neg(a: TruthValue) -> TruthValue:
    return a.neg()


def leq_t(a: TruthValue, b: TruthValue) -> bool:
    return a.leq_t(b)


def leq_k(a: TruthValue, b: TruthValue) -> bool:
    return a.leq_k(b)


def _fold(values: Iterable[TruthValue], operation: str, empty: str,
          kind: Optional[BilatticeKind]) -> TruthValue:
    result: Optional[TruthValue] = None
    for value in values:
        result = value if result is None else getattr(result, operation)(value)
    if result is None:
        if kind is None:
            raise BilatticeKindError("Empty lub/glb needs an explicit bilattice kind")
        return getattr(kind, empty)
    return result


def big_lub_t(values: Iterable[TruthValue], kind: Optional[BilatticeKind] = None) -> TruthValue:
    """∨ over a finite set; empty set gives f"""
    return _fold(values, "join_t", "false", kind)


def big_glb_t(values: Iterable[TruthValue], kind: Optional[BilatticeKind] = None) -> TruthValue:
    """∧ over a finite set; empty set gives t"""
    return _fold(values, "meet_t", "true", kind)


def big_lub_k(values: Iterable[TruthValue], kind: Optional[BilatticeKind] = None) -> TruthValue:
    """⊕ over a finite set; empty set gives ⊥"""
    return _fold(values, "join_k", "bottom", kind)


def big_glb_k(values: Iterable[TruthValue], kind: Optional[BilatticeKind] = None) -> TruthValue:
    """⊗ over a finite set; empty set gives ⊤"""
    return _fold(values, "meet_k", "top", kind)
