"""Exact multivariate polynomial arithmetic over the rationals.

A polynomial is a finite mapping from monomials to nonzero ``Fraction``
coefficients.  A monomial is a tuple of ``(variable, exponent)`` pairs with
strictly positive integer exponents; the empty tuple is the constant monomial.
The zero polynomial has an empty term mapping.

All arithmetic is exact, so equality of polynomials is decidable and reliable;
this is what makes every "diagram commutes" check in the rest of the library a
genuine yes/no question.  Values are immutable and may be freely shared
between threads.

Variable order
--------------
Canonical printing uses graded lexicographic order.  Variables are ordered by
first appearance in a process-global registry; when several new variables are
registered in one batch they are ordered alphabetically.  Registry indices are
assigned once and never change, so stored monomials stay canonical as new
variables appear.

Grammar accepted by :func:`parse_polynomial` (whitespace insignificant)::

    poly   := term (('+'|'-') term)*
    term   := [coeff ('*')?] factor ('*' factor)* | coeff
    factor := var ('^' nat)?
    coeff  := ('-')? nat ('/' nat)?
    var    := letter (letter|digit|'_')*

As a convenience a bare leading '-' (as in ``-x``) is accepted and read as
coefficient -1, so canonical output always re-parses.
"""

from __future__ import annotations

import threading
from fractions import Fraction
from typing import Iterable, Mapping

from .errors import (
    ExponentOverflowError,
    MalformedRationalError,
    PolynomialSyntaxError,
)

Monomial = tuple[tuple[str, int], ...]

# Exponents beyond this are rejected by the parser; they would only arise from
# typos and can make later arithmetic needlessly expensive.
MAX_EXPONENT = 10**6

# Process-global variable registry: name -> order index (first come, first
# served; batches sorted alphabetically).  Indices never change once assigned,
# so stored monomials stay canonical; the lock only serializes registration.
_VAR_ORDER: dict[str, int] = {}
_VAR_LOCK = threading.Lock()


def register_variables(names: Iterable[str]) -> None:
    """Register a batch of variable names, new ones in alphabetical order."""
    with _VAR_LOCK:
        for name in sorted(set(names) - _VAR_ORDER.keys()):
            _VAR_ORDER[name] = len(_VAR_ORDER)


def _var_index(name: str) -> int:
    index = _VAR_ORDER.get(name)
    if index is None:
        with _VAR_LOCK:
            index = _VAR_ORDER.setdefault(name, len(_VAR_ORDER))
    return index


def _sort_monomial(pairs: Iterable[tuple[str, int]]) -> Monomial:
    return tuple(sorted(pairs, key=lambda pair: _var_index(pair[0])))


class Polynomial:
    """An immutable multivariate polynomial with exact rational coefficients."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Monomial, Fraction]):
        normalized: dict[Monomial, Fraction] = {}
        for monomial, coefficient in terms.items():
            coefficient = Fraction(coefficient)
            if coefficient == 0:
                continue
            monomial = _sort_monomial(
                (var, exp) for var, exp in monomial if exp != 0
            )
            normalized[monomial] = normalized.get(monomial, Fraction(0)) + coefficient
            if normalized[monomial] == 0:
                del normalized[monomial]
        object.__setattr__(self, "_terms", normalized)
        object.__setattr__(self, "_hash", None)
        self._audit()

    def _audit(self) -> None:
        # Internal invariant hook: no zero coefficients, positive exponents,
        # monomials sorted by registry order.
        for monomial, coefficient in self._terms.items():
            assert coefficient != 0, "stored zero coefficient"
            assert all(exp > 0 for _, exp in monomial), "non-positive exponent"
            indices = [_var_index(var) for var, _ in monomial]
            assert indices == sorted(indices), "monomial not in registry order"

    # -- constructors -------------------------------------------------------

    @staticmethod
    def zero() -> "Polynomial":
        return _ZERO

    @staticmethod
    def one() -> "Polynomial":
        return _ONE

    @staticmethod
    def constant(value: int | Fraction) -> "Polynomial":
        return Polynomial({(): Fraction(value)})

    @staticmethod
    def variable(name: str, exponent: int = 1) -> "Polynomial":
        if exponent < 0:
            raise ValueError("exponent must be non-negative")
        if exponent == 0:
            return _ONE
        return Polynomial({((name, exponent),): Fraction(1)})

    @staticmethod
    def parse(text: str) -> "Polynomial":
        return parse_polynomial(text)

    # -- queries -------------------------------------------------------------

    @property
    def terms(self) -> Mapping[Monomial, Fraction]:
        return dict(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_one(self) -> bool:
        return self._terms == {(): Fraction(1)}

    def is_constant(self) -> bool:
        return all(monomial == () for monomial in self._terms)

    def constant_value(self) -> Fraction:
        """The value of a constant polynomial (raises otherwise)."""
        if not self.is_constant():
            raise ValueError(f"not a constant polynomial: {self}")
        return self._terms.get((), Fraction(0))

    def total_degree(self) -> int:
        if not self._terms:
            return 0
        return max(sum(exp for _, exp in m) for m in self._terms)

    def variables(self) -> set[str]:
        return {var for m in self._terms for var, _ in m}

    # -- arithmetic ----------------------------------------------------------

    def _coerce(self, other: object) -> "Polynomial | None":
        if isinstance(other, Polynomial):
            return other
        if isinstance(other, (int, Fraction)):
            return Polynomial.constant(other)
        return None

    def __add__(self, other: object) -> "Polynomial":
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        out = dict(self._terms)
        for monomial, coefficient in rhs._terms.items():
            total = out.get(monomial, Fraction(0)) + coefficient
            if total == 0:
                out.pop(monomial, None)
            else:
                out[monomial] = total
        return Polynomial(out)

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial({m: -c for m, c in self._terms.items()})

    def __sub__(self, other: object) -> "Polynomial":
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return self + (-rhs)

    def __rsub__(self, other: object) -> "Polynomial":
        lhs = self._coerce(other)
        if lhs is None:
            return NotImplemented
        return lhs - self

    def __mul__(self, other: object) -> "Polynomial":
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        if not self._terms or not rhs._terms:
            return _ZERO
        out: dict[Monomial, Fraction] = {}
        for mono_a, coeff_a in self._terms.items():
            for mono_b, coeff_b in rhs._terms.items():
                mono = _mul_monomials(mono_a, mono_b)
                total = out.get(mono, Fraction(0)) + coeff_a * coeff_b
                if total == 0:
                    out.pop(mono, None)
                else:
                    out[mono] = total
        return Polynomial(out)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "Polynomial":
        if exponent < 0:
            raise ValueError("negative power of a polynomial")
        result = _ONE
        for _ in range(exponent):
            result = result * self
        return result

    # -- equality and printing -----------------------------------------------

    def __eq__(self, other: object) -> bool:
        if self is other:
            return True
        if isinstance(other, (int, Fraction)):
            other = Polynomial.constant(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            object.__setattr__(
                self, "_hash", hash(frozenset(self._terms.items()))
            )
        return self._hash

    def __str__(self) -> str:
        return canonical_string(self)

    def __repr__(self) -> str:
        return f"Polynomial({canonical_string(self)!r})"


def _mul_monomials(a: Monomial, b: Monomial) -> Monomial:
    if not a:
        return b
    if not b:
        return a
    exponents: dict[str, int] = dict(a)
    for var, exp in b:
        exponents[var] = exponents.get(var, 0) + exp
    return _sort_monomial(exponents.items())


_ZERO = object.__new__(Polynomial)
object.__setattr__(_ZERO, "_terms", {})
object.__setattr__(_ZERO, "_hash", None)
_ONE = object.__new__(Polynomial)
object.__setattr__(_ONE, "_terms", {(): Fraction(1)})
object.__setattr__(_ONE, "_hash", None)

ZERO = _ZERO
ONE = _ONE


# ---------------------------------------------------------------------------
# canonical printing


def _grlex_key(monomial: Monomial) -> tuple:
    # Descending graded lexicographic order: compare total degree first, then
    # the exponent vector over the monomial's variables in registry order.
    # Padding with registry index makes (x^2) > (y^2) when x precedes y.
    degree = sum(exp for _, exp in monomial)
    vector = tuple(
        (_var_index(var), -exp) for var, exp in monomial
    )
    return (-degree, vector)


def canonical_string(p: Polynomial) -> str:
    """Deterministic textual form; re-parses to an equal polynomial."""
    if p.is_zero():
        return "0"
    parts: list[str] = []
    for index, monomial in enumerate(sorted(p._terms, key=_grlex_key)):
        coefficient = p._terms[monomial]
        magnitude = abs(coefficient)
        factors = "*".join(
            f"{var}^{exp}" if exp > 1 else var for var, exp in monomial
        )
        if not factors:
            body = str(magnitude)
        elif magnitude == 1:
            body = factors
        else:
            body = f"{magnitude}*{factors}"
        if index == 0:
            parts.append(f"-{body}" if coefficient < 0 else body)
        else:
            parts.append(f" - {body}" if coefficient < 0 else f" + {body}")
    return "".join(parts)


# ---------------------------------------------------------------------------
# parsing


class _Tokenizer:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip_space(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_space()
        if self.pos >= len(self.text):
            return ""
        return self.text[self.pos]

    def take_symbol(self, symbols: str) -> str | None:
        ch = self.peek()
        if ch and ch in symbols:
            self.pos += 1
            return ch
        return None

    def take_nat(self) -> int | None:
        self.skip_space()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start:
            return None
        return int(self.text[start : self.pos])

    def take_name(self) -> str | None:
        self.skip_space()
        start = self.pos
        if self.pos < len(self.text) and (
            self.text[self.pos].isalpha()
        ):
            self.pos += 1
            while self.pos < len(self.text) and (
                self.text[self.pos].isalnum() or self.text[self.pos] == "_"
            ):
                self.pos += 1
            return self.text[start : self.pos]
        return None

    def at_end(self) -> bool:
        self.skip_space()
        return self.pos >= len(self.text)


def _parse_rational(tok: _Tokenizer, negative: bool) -> Fraction:
    numerator = tok.take_nat()
    assert numerator is not None
    if tok.take_symbol("/"):
        denom_pos = tok.pos
        denominator = tok.take_nat()
        if denominator is None:
            raise MalformedRationalError("expected denominator after '/'", denom_pos)
        if denominator == 0:
            raise MalformedRationalError("zero denominator", denom_pos)
        value = Fraction(numerator, denominator)
    else:
        value = Fraction(numerator)
    return -value if negative else value


def _parse_factor(tok: _Tokenizer) -> tuple[str, int]:
    name = tok.take_name()
    if name is None:
        raise PolynomialSyntaxError("expected a variable", tok.pos)
    exponent = 1
    if tok.take_symbol("^"):
        exp_pos = tok.pos
        exponent_value = tok.take_nat()
        if exponent_value is None:
            raise PolynomialSyntaxError("expected an exponent after '^'", exp_pos)
        if exponent_value > MAX_EXPONENT:
            raise ExponentOverflowError(
                f"exponent {exponent_value} exceeds limit {MAX_EXPONENT}", exp_pos
            )
        exponent = exponent_value
    return name, exponent


def _parse_term(tok: _Tokenizer) -> Polynomial:
    negative = tok.take_symbol("-") is not None
    coefficient: Fraction | None = None
    if tok.peek().isdigit():
        coefficient = _parse_rational(tok, negative)
        if tok.take_symbol("*"):
            pass  # explicit coeff*factor separator
        elif not (tok.peek().isalpha()):
            return Polynomial.constant(coefficient)
    elif negative:
        coefficient = Fraction(-1)  # bare '-x' convenience
    if not tok.peek().isalpha():
        raise PolynomialSyntaxError("expected a term", tok.pos)
    exponents: dict[str, int] = {}
    var, exp = _parse_factor(tok)
    exponents[var] = exponents.get(var, 0) + exp
    while tok.take_symbol("*"):
        var, exp = _parse_factor(tok)
        exponents[var] = exponents.get(var, 0) + exp
    if coefficient is None:
        coefficient = Fraction(1)
    register_variables(exponents)
    monomial = _sort_monomial(
        (var, exp) for var, exp in exponents.items() if exp > 0
    )
    return Polynomial({monomial: coefficient})


def parse_polynomial(text: str) -> Polynomial:
    """Parse ``text`` into a :class:`Polynomial`.

    Raises :class:`PolynomialSyntaxError`, :class:`MalformedRationalError` or
    :class:`ExponentOverflowError` with the offending character position.
    """
    tok = _Tokenizer(text)
    if tok.at_end():
        raise PolynomialSyntaxError("empty polynomial", tok.pos)
    result = _parse_term(tok)
    while True:
        symbol = tok.take_symbol("+-")
        if symbol is None:
            break
        term = _parse_term(tok)
        result = result + term if symbol == "+" else result - term
    if not tok.at_end():
        raise PolynomialSyntaxError(
            f"unexpected character {tok.peek()!r}", tok.pos
        )
    return result


# ---------------------------------------------------------------------------
# random generation (used by samplers and property tests)


def random_polynomial(
    rng,
    variables: tuple[str, ...] = ("x", "y", "z"),
    max_degree: int = 2,
    max_terms: int = 3,
    coefficient_bound: int = 3,
    allow_zero: bool = True,
) -> Polynomial:
    """Draw a small random polynomial from ``rng`` (a ``random.Random``)."""
    register_variables(variables)
    n_terms = rng.randint(0 if allow_zero else 1, max_terms)
    total = _ZERO
    for _ in range(n_terms):
        coefficient = Fraction(0)
        while coefficient == 0:
            coefficient = Fraction(
                rng.randint(-coefficient_bound, coefficient_bound)
            )
        degree = rng.randint(0, max_degree)
        exponents: dict[str, int] = {}
        for _ in range(degree):
            var = rng.choice(variables)
            exponents[var] = exponents.get(var, 0) + 1
        monomial = _sort_monomial(exponents.items())
        total = total + Polynomial({monomial: coefficient})
    if not allow_zero and total.is_zero():
        return Polynomial.one()
    return total
