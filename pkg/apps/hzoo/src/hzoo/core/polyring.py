"""Exact sparse multivariate polynomials over the rationals and the Gaussian rationals.

A `Poly` is an immutable map from exponent tuples to nonzero coefficients, tagged
with its arity and coefficient field. Variables are addressed by 0-based index and
printed as x1..xd. Division and printing use graded lexicographic order.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from operator import add as _add
from types import MappingProxyType
from typing import Callable, Iterator, Mapping, Sequence, TypeAlias, Union

from hzoo.core.errors import FieldMismatchError, UsageError

Rational: TypeAlias = Fraction
"""Exact rational, always in lowest terms with a positive denominator (zero is 0/1)."""

Exponent: TypeAlias = tuple[int, ...]
"""Exponent vector of a monomial; its length is the arity of the owning polynomial."""


class CoefficientField(str, Enum):
    QQ = "QQ"
    QQ_I = "QQ_I"


def as_rational(value: int | Fraction | str) -> Fraction:
    """Coerce an int, Fraction or "a/b" string into a Fraction. Floats are refused."""
    if isinstance(value, bool) or isinstance(value, float):
        raise UsageError(f"refusing inexact value {value!r}, use an int, Fraction or 'a/b'")
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as e:
            raise UsageError(f"malformed rational {value!r}") from e
    raise UsageError(f"cannot interpret {value!r} as a rational")


@dataclass(frozen=True, slots=True)
class GaussRational:
    """Gaussian rational re + i*im with component-wise reduced parts."""

    re: Fraction = Fraction(0)
    im: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "re", as_rational(self.re))
        object.__setattr__(self, "im", as_rational(self.im))

    @staticmethod
    def lift(value: Scalar) -> GaussRational:
        if isinstance(value, GaussRational):
            return value
        return GaussRational(as_rational(value), Fraction(0))

    def conjugate(self) -> GaussRational:
        return GaussRational(self.re, -self.im)

    def norm(self) -> Fraction:
        return self.re * self.re + self.im * self.im

    def __bool__(self) -> bool:
        return bool(self.re) or bool(self.im)

    def __eq__(self, other) -> bool:
        if isinstance(other, GaussRational):
            return self.re == other.re and self.im == other.im
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.im == 0 and self.re == other
        return NotImplemented

    def __hash__(self) -> int:
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __neg__(self) -> GaussRational:
        return GaussRational(-self.re, -self.im)

    def __add__(self, other) -> GaussRational:
        if not isinstance(other, (GaussRational, int, Fraction)):
            return NotImplemented
        other = GaussRational.lift(other)
        return GaussRational(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other) -> GaussRational:
        if not isinstance(other, (GaussRational, int, Fraction)):
            return NotImplemented
        other = GaussRational.lift(other)
        return GaussRational(self.re - other.re, self.im - other.im)

    def __rsub__(self, other) -> GaussRational:
        if not isinstance(other, (int, Fraction)):
            return NotImplemented
        return GaussRational.lift(other) - self

    def __mul__(self, other) -> GaussRational:
        if not isinstance(other, (GaussRational, int, Fraction)):
            return NotImplemented
        other = GaussRational.lift(other)
        return GaussRational(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def __truediv__(self, other) -> GaussRational:
        if not isinstance(other, (GaussRational, int, Fraction)):
            return NotImplemented
        other = GaussRational.lift(other)
        n = other.norm()
        if n == 0:
            raise ZeroDivisionError("division by zero Gaussian rational")
        num = self * other.conjugate()
        return GaussRational(num.re / n, num.im / n)

    def __rtruediv__(self, other) -> GaussRational:
        if not isinstance(other, (int, Fraction)):
            return NotImplemented
        return GaussRational.lift(other) / self

    def __pow__(self, n: int) -> GaussRational:
        if not isinstance(n, int) or n < 0:
            raise UsageError("Gaussian rationals only support non-negative integer powers")
        result, base = GaussRational(Fraction(1)), self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __str__(self) -> str:
        return f"{self.re}+{self.im}i" if self.im >= 0 else f"{self.re}{self.im}i"


Scalar: TypeAlias = Union[int, Fraction, GaussRational]
Coefficient: TypeAlias = Union[Fraction, GaussRational]

I: GaussRational = GaussRational(Fraction(0), Fraction(1))
"""The imaginary unit."""


def _coerce(value: Scalar, field: CoefficientField) -> Coefficient:
    if field is CoefficientField.QQ:
        if isinstance(value, GaussRational):
            raise FieldMismatchError("Gaussian coefficient in a rational polynomial")
        return as_rational(value)
    return GaussRational.lift(value)


def grlex_key(exps: Exponent) -> tuple[int, Exponent]:
    """Sort key for graded lexicographic order (use with reverse=True for descending)."""
    return sum(exps), exps


def _heap_key(exps: Exponent) -> tuple[int, tuple[int, ...]]:
    # min-heap key whose smallest element is the grlex-largest monomial
    return -sum(exps), tuple(-e for e in exps)


def _from_heap_key(key: tuple[int, tuple[int, ...]]) -> Exponent:
    return tuple(-e for e in key[1])


class Poly:
    """Immutable sparse polynomial in x1..x_arity.

    Two polynomials are equal iff they have the same arity, the same coefficient
    field and the same term map; no stored coefficient is ever zero.
    """

    __slots__ = ("_arity", "_field", "_terms")

    def __init__(
        self,
        arity: int,
        terms: Mapping[Sequence[int], Scalar] | None = None,
        field: CoefficientField = CoefficientField.QQ,
    ):
        if not isinstance(arity, int) or arity < 0:
            raise UsageError(f"arity must be a non-negative integer, got {arity!r}")
        field = CoefficientField(field)
        canon: dict[Exponent, Coefficient] = {}
        for exps, coeff in (terms or {}).items():
            key = tuple(int(e) for e in exps)
            if len(key) != arity:
                raise UsageError(f"exponent {key} does not match arity {arity}")
            if any(e < 0 for e in key):
                raise UsageError(f"negative exponent in {key}")
            value = _coerce(coeff, field)
            if value:
                canon[key] = value
        self._arity = arity
        self._field = field
        self._terms = canon

    @classmethod
    def _canonical(
        cls, arity: int, field: CoefficientField, terms: dict[Exponent, Coefficient]
    ) -> Poly:
        # trusted constructor: terms are already typed, zero-free and well-sized
        p = object.__new__(cls)
        p._arity = arity
        p._field = field
        p._terms = terms
        return p

    #### Constructors ####

    @classmethod
    def zero(cls, arity: int, field: CoefficientField = CoefficientField.QQ) -> Poly:
        return cls(arity, {}, field)

    @classmethod
    def constant(
        cls, value: Scalar, arity: int, field: CoefficientField = CoefficientField.QQ
    ) -> Poly:
        return cls(arity, {(0,) * arity: value}, field)

    @classmethod
    def one(cls, arity: int, field: CoefficientField = CoefficientField.QQ) -> Poly:
        return cls.constant(1, arity, field)

    @classmethod
    def variable(
        cls, index: int, arity: int, field: CoefficientField = CoefficientField.QQ
    ) -> Poly:
        """The polynomial x_{index+1} in the given arity."""
        if not 0 <= index < arity:
            raise UsageError(f"variable index {index} out of range for arity {arity}")
        exps = [0] * arity
        exps[index] = 1
        return cls(arity, {tuple(exps): 1}, field)

    #### Accessors ####

    @property
    def arity(self) -> int:
        return self._arity

    @property
    def field(self) -> CoefficientField:
        return self._field

    @property
    def terms(self) -> Mapping[Exponent, Coefficient]:
        return MappingProxyType(self._terms)

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def __len__(self) -> int:
        return len(self._terms)

    def __iter__(self) -> Iterator[tuple[Exponent, Coefficient]]:
        return iter(self.sorted_terms())

    def sorted_terms(self) -> list[tuple[Exponent, Coefficient]]:
        """Terms in descending graded lexicographic order."""
        return sorted(self._terms.items(), key=lambda t: grlex_key(t[0]), reverse=True)

    def coefficient(self, exps: Sequence[int]) -> Coefficient:
        zero = Fraction(0) if self._field is CoefficientField.QQ else GaussRational()
        return self._terms.get(tuple(exps), zero)

    def leading_term(self) -> tuple[Exponent, Coefficient]:
        if self.is_zero:
            raise UsageError("the zero polynomial has no leading term")
        exps = max(self._terms, key=grlex_key)
        return exps, self._terms[exps]

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(e) for e in self._terms), default=-1)

    def variables(self) -> frozenset[int]:
        """Indices of the variables that actually occur."""
        return frozenset(i for exps in self._terms for i, e in enumerate(exps) if e)

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self._terms}) <= 1

    def is_constant(self) -> bool:
        return not self.variables()

    #### Field changes ####

    def to_gauss(self) -> Poly:
        """Lift a rational polynomial into the Gaussian field (identity on Gaussian input)."""
        if self._field is CoefficientField.QQ_I:
            return self
        return Poly._canonical(
            self._arity,
            CoefficientField.QQ_I,
            {e: GaussRational(c) for e, c in self._terms.items()},
        )

    def to_float_function(self) -> Callable[[Sequence[float]], float]:
        """Double-precision evaluator of a rational polynomial."""
        if self._field is not CoefficientField.QQ:
            raise FieldMismatchError("only rational polynomials evaluate to real floats")
        compiled = [(float(c), e) for e, c in self._terms.items()]
        arity = self._arity

        def evaluate(x: Sequence[float]) -> float:
            if len(x) != arity:
                raise UsageError(f"expected {arity} coordinates, got {len(x)}")
            total = 0.0
            for c, exps in compiled:
                term = c
                for xi, e in zip(x, exps):
                    if e:
                        term *= xi**e
                total += term
            return total

        return evaluate

    #### Operators ####

    def scale(self, value: Scalar) -> Poly:
        c = _coerce(value, self._field)
        if not c:
            return Poly.zero(self._arity, self._field)
        return Poly._canonical(
            self._arity, self._field, {e: v * c for e, v in self._terms.items()}
        )

    def _lift(self, other) -> Poly:
        if isinstance(other, Poly):
            return other
        if isinstance(other, (int, Fraction, GaussRational)):
            return Poly.constant(other, self._arity, self._field)
        return NotImplemented

    def __add__(self, other) -> Poly:
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return add(self, other)

    __radd__ = __add__

    def __sub__(self, other) -> Poly:
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return add(self, -other)

    def __rsub__(self, other) -> Poly:
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return add(other, -self)

    def __neg__(self) -> Poly:
        return Poly._canonical(
            self._arity, self._field, {e: -c for e, c in self._terms.items()}
        )

    def __mul__(self, other) -> Poly:
        if isinstance(other, Poly):
            return mul(self, other)
        if isinstance(other, (int, Fraction, GaussRational)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other) -> Poly:
        if isinstance(other, (int, Fraction, GaussRational)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, n: int) -> Poly:
        return power(self, n)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Poly):
            return NotImplemented
        return (
            self._arity == other._arity
            and self._field is other._field
            and self._terms == other._terms
        )

    def __hash__(self) -> int:
        return hash((self._arity, self._field, frozenset(self._terms.items())))

    def __repr__(self) -> str:
        from hzoo.core.printing import pretty

        return f"Poly({pretty(self)!r}, arity={self._arity}, field={self._field.value})"


@dataclass(frozen=True)
class NotDivisible:
    """Result of `exact_divide` when the divisor does not divide the dividend.

    Attributes:
        remainder_monomial: The first monomial that fell into the remainder.
    """

    remainder_monomial: Exponent


def _check_compatible(p: Poly, q: Poly) -> None:
    if p.arity != q.arity:
        raise UsageError(f"arity mismatch: {p.arity} vs {q.arity}")
    if p.field is not q.field:
        raise FieldMismatchError(f"field mismatch: {p.field.value} vs {q.field.value}")


def add(p: Poly, q: Poly) -> Poly:
    _check_compatible(p, q)
    acc = dict(p._terms)
    for exps, c in q._terms.items():
        value = acc.get(exps)
        value = c if value is None else value + c
        if value:
            acc[exps] = value
        else:
            acc.pop(exps, None)
    return Poly._canonical(p.arity, p.field, acc)


def mul(p: Poly, q: Poly) -> Poly:
    _check_compatible(p, q)
    acc: dict[Exponent, Coefficient] = {}
    for ea, ca in p._terms.items():
        for eb, cb in q._terms.items():
            key = tuple(map(_add, ea, eb))
            prev = acc.get(key)
            acc[key] = ca * cb if prev is None else prev + ca * cb
    return Poly._canonical(p.arity, p.field, {e: c for e, c in acc.items() if c})


def power(p: Poly, n: int) -> Poly:
    """p**n by binary exponentiation; p**0 is 1."""
    if not isinstance(n, int) or n < 0:
        raise UsageError(f"exponent must be a non-negative integer, got {n!r}")
    result, base = Poly.one(p.arity, p.field), p
    while n:
        if n & 1:
            result = mul(result, base)
        n >>= 1
        if n:
            base = mul(base, base)
    return result


def partial(p: Poly, i: int) -> Poly:
    """Formal partial derivative with respect to x_{i+1}."""
    if not 0 <= i < p.arity:
        raise UsageError(f"variable index {i} out of range for arity {p.arity}")
    acc: dict[Exponent, Coefficient] = {}
    for exps, c in p._terms.items():
        e = exps[i]
        if e:
            acc[exps[:i] + (e - 1,) + exps[i + 1 :]] = c * e
    return Poly._canonical(p.arity, p.field, acc)


def substitute(
    p: Poly, bindings: Mapping[int, Poly], arity: int | None = None
) -> Poly:
    """Simultaneous substitution x_i -> bindings[i].

    All replacements must share one arity and field; that arity is the arity of
    the result. Every variable occurring in p needs a binding; `arity` is only
    required when there are no bindings at all.
    """
    targets = list(bindings.values())
    if targets:
        target_arity, field = targets[0].arity, targets[0].field
        for q in targets[1:]:
            _check_compatible(targets[0], q)
        if arity is not None and arity != target_arity:
            raise UsageError(f"bindings have arity {target_arity}, expected {arity}")
    else:
        target_arity = p.arity if arity is None else arity
        field = p.field
    if p.field is not field:
        raise FieldMismatchError(
            f"cannot substitute {field.value} polynomials into a {p.field.value} polynomial"
        )
    for i in sorted(p.variables()):
        if i not in bindings:
            raise UsageError(f"missing binding for x{i + 1}")

    powers: dict[tuple[int, int], Poly] = {}

    def _power(i: int, e: int) -> Poly:
        key = (i, e)
        if key not in powers:
            powers[key] = bindings[i] if e == 1 else mul(_power(i, e - 1), bindings[i])
        return powers[key]

    acc: dict[Exponent, Coefficient] = {}
    for exps, c in p._terms.items():
        term = Poly.constant(c, target_arity, field)
        for i, e in enumerate(exps):
            if e:
                term = mul(term, _power(i, e))
        for te, tc in term._terms.items():
            prev = acc.get(te)
            acc[te] = tc if prev is None else prev + tc
    return Poly._canonical(target_arity, field, {e: c for e, c in acc.items() if c})


def eval_exact(p: Poly, point: Sequence[Scalar | str]) -> Coefficient:
    """Exact evaluation at a rational (or Gaussian-rational) point."""
    if len(point) != p.arity:
        raise UsageError(f"expected {p.arity} coordinates, got {len(point)}")
    values = [v if isinstance(v, GaussRational) else as_rational(v) for v in point]
    gaussian = p.field is CoefficientField.QQ_I or any(
        isinstance(v, GaussRational) for v in values
    )
    total: Coefficient = GaussRational() if gaussian else Fraction(0)
    cache: dict[tuple[int, int], Coefficient] = {}
    for exps, c in p._terms.items():
        term = c
        for i, e in enumerate(exps):
            if e:
                key = (i, e)
                if key not in cache:
                    cache[key] = values[i] ** e
                term = term * cache[key]
        total = total + term
    return total


def exact_divide(f: Poly, g: Poly) -> Poly | NotDivisible:
    """Long division of f by the single divisor g under graded lexicographic order.

    The remainder is zero iff g divides f, so the quotient is returned exactly
    when f == q * g and NotDivisible otherwise.
    """
    _check_compatible(f, g)
    if g.is_zero:
        raise UsageError("division by the zero polynomial")
    lead_exps, lead_coeff = g.leading_term()
    tail = [(e, c) for e, c in g._terms.items() if e != lead_exps]
    rest = dict(f._terms)
    heap = [_heap_key(e) for e in rest]
    heapq.heapify(heap)
    quotient: dict[Exponent, Coefficient] = {}
    while heap:
        exps = _from_heap_key(heapq.heappop(heap))
        coeff = rest.pop(exps, None)
        if not coeff:
            continue
        shift = tuple(a - b for a, b in zip(exps, lead_exps))
        if any(s < 0 for s in shift):
            # remainder terms are never revisited, so a nonzero one is final
            return NotDivisible(exps)
        t = coeff / lead_coeff
        quotient[shift] = t
        for ge, gc in tail:
            key = tuple(map(_add, shift, ge))
            prev = rest.get(key)
            value = -t * gc if prev is None else prev - t * gc
            if value:
                if prev is None:
                    heapq.heappush(heap, _heap_key(key))
                rest[key] = value
            elif prev is not None:
                del rest[key]
    return Poly._canonical(f.arity, f.field, quotient)


def re_im(p: Poly) -> tuple[Poly, Poly]:
    """Split a Gaussian polynomial into real and imaginary rational parts."""
    if p.field is CoefficientField.QQ:
        return p, Poly.zero(p.arity)
    re: dict[Exponent, Coefficient] = {}
    im: dict[Exponent, Coefficient] = {}
    for exps, c in p._terms.items():
        if c.re:
            re[exps] = c.re
        if c.im:
            im[exps] = c.im
    return (
        Poly._canonical(p.arity, CoefficientField.QQ, re),
        Poly._canonical(p.arity, CoefficientField.QQ, im),
    )
