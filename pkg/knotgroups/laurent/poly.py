"""Exact multivariate Laurent polynomials with rational coefficients."""
import logging
from fractions import Fraction
from math import gcd
from typing import Any, Dict, Iterable, Mapping, Optional, Sequence, Tuple, Union

import sympy

from knotgroups.errors import AlphabetError, NotDivisibleError, ParseError

logger = logging.getLogger(__name__)

Exponents = Tuple[int, ...]
Scalar = Union[int, Fraction]


def as_fraction(value: Any) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, sympy.Rational):
        return Fraction(int(value.p), int(value.q))
    raise TypeError(f"Cannot use {value!r} as an exact coefficient")


class LaurentPoly:
    """Finite sum of coefficient * monomial, exponents of any sign.

    Terms are kept sorted by exponent vector so equal polynomials compare and
    print identically.
    """

    __slots__ = ('variables', 'terms')

    def __init__(self, variables: Sequence[str], terms: Optional[Mapping[Exponents, Scalar]] = None):
        self.variables: Tuple[str, ...] = tuple(variables)
        if len(set(self.variables)) != len(self.variables):
            raise AlphabetError(f"Duplicate variables in {self.variables}")
        cleaned: Dict[Exponents, Fraction] = {}
        for exps, coeff in (terms or {}).items():
            exps = tuple(int(e) for e in exps)
            if len(exps) != len(self.variables):
                raise ValueError(f"Exponent vector {exps} does not fit variables {self.variables}")
            value = cleaned.get(exps, Fraction(0)) + as_fraction(coeff)
            if value:
                cleaned[exps] = value
            else:
                cleaned.pop(exps, None)
        self.terms: Dict[Exponents, Fraction] = dict(sorted(cleaned.items()))

    # Constructors

    @classmethod
    def zero(cls, variables: Sequence[str]) -> 'LaurentPoly':
        return cls(variables)

    @classmethod
    def constant(cls, variables: Sequence[str], value: Scalar) -> 'LaurentPoly':
        return cls(variables, {(0,) * len(tuple(variables)): value})

    @classmethod
    def one(cls, variables: Sequence[str]) -> 'LaurentPoly':
        return cls.constant(variables, 1)

    @classmethod
    def monomial(cls, variables: Sequence[str], exponents: Mapping[str, int],
                 coeff: Scalar = 1) -> 'LaurentPoly':
        variables = tuple(variables)
        for name in exponents:
            if name not in variables:
                raise AlphabetError(f"Unknown variable '{name}' (have {', '.join(variables)})")
        return cls(variables, {tuple(exponents.get(v, 0) for v in variables): coeff})

    @classmethod
    def variable(cls, variables: Sequence[str], name: str, exp: int = 1) -> 'LaurentPoly':
        return cls.monomial(variables, {name: exp})

    # Arithmetic

    def _coerce(self, other: Any) -> 'LaurentPoly':
        if isinstance(other, LaurentPoly):
            if other.variables != self.variables:
                raise AlphabetError(f"Variable mismatch: {self.variables} vs {other.variables}")
            return other
        if isinstance(other, (int, Fraction)):
            return LaurentPoly.constant(self.variables, other)
        return NotImplemented

    def __add__(self, other: Any) -> 'LaurentPoly':
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        terms = dict(self.terms)
        for exps, coeff in other.terms.items():
            terms[exps] = terms.get(exps, Fraction(0)) + coeff
        return LaurentPoly(self.variables, terms)

    __radd__ = __add__

    def __neg__(self) -> 'LaurentPoly':
        return LaurentPoly(self.variables, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: Any) -> 'LaurentPoly':
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other: Any) -> 'LaurentPoly':
        return (-self) + other

    def __mul__(self, other: Any) -> 'LaurentPoly':
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        terms: Dict[Exponents, Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                exps = tuple(a + b for a, b in zip(e1, e2))
                terms[exps] = terms.get(exps, Fraction(0)) + c1 * c2
        return LaurentPoly(self.variables, terms)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> 'LaurentPoly':
        if n < 0:
            if not self.is_unit_monomial():
                raise NotDivisibleError(f"{self} is not a unit, negative power undefined")
            ((exps, coeff),) = self.terms.items()
            return LaurentPoly(self.variables, {tuple(e * n for e in exps): coeff ** n})
        result = LaurentPoly.one(self.variables)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other: Any) -> bool:
        if isinstance(other, (int, Fraction)):
            other = LaurentPoly.constant(self.variables, other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.variables == other.variables and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.variables, tuple(self.terms.items())))

    def __bool__(self) -> bool:
        return bool(self.terms)

    # Queries

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def is_unit_monomial(self) -> bool:
        return len(self.terms) == 1 and abs(next(iter(self.terms.values()))) == 1

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def coefficient(self, exponents: Mapping[str, int]) -> Fraction:
        key = tuple(exponents.get(v, 0) for v in self.variables)
        return self.terms.get(key, Fraction(0))

    def augment(self) -> Fraction:
        """Value with every variable set to 1."""
        return sum(self.terms.values(), Fraction(0))

    def min_exponents(self) -> Exponents:
        if not self.terms:
            return (0,) * len(self.variables)
        return tuple(min(e[i] for e in self.terms) for i in range(len(self.variables)))

    def content(self) -> Fraction:
        """Positive gcd of the coefficients (numerator gcd over denominator lcm)."""
        if not self.terms:
            return Fraction(0)
        num, den = 0, 1
        for coeff in self.terms.values():
            num = gcd(num, coeff.numerator)
            den = den * coeff.denominator // gcd(den, coeff.denominator)
        return Fraction(num, den)

    # Transformations

    def shift(self, exponents: Sequence[int]) -> 'LaurentPoly':
        """Multiply by the monomial with these exponents."""
        return LaurentPoly(self.variables,
                           {tuple(a + b for a, b in zip(e, exponents)): c for e, c in self.terms.items()})

    def normalized(self) -> 'LaurentPoly':
        """Associate with smallest exponents zero and positive first coefficient."""
        if not self.terms:
            return self
        shifted = self.shift([-m for m in self.min_exponents()])
        if next(iter(shifted.terms.values())) < 0:
            shifted = -shifted
        return shifted

    def equal_up_to_unit(self, other: 'LaurentPoly') -> bool:
        return self.normalized() == self._coerce(other).normalized()

    def invert_variables(self) -> 'LaurentPoly':
        """Image under v -> v^-1 for every variable."""
        return LaurentPoly(self.variables, {tuple(-a for a in e): c for e, c in self.terms.items()})

    def with_variables(self, variables: Sequence[str]) -> 'LaurentPoly':
        """Same polynomial over a variable list containing every used variable."""
        variables = tuple(variables)
        positions = []
        for i, name in enumerate(self.variables):
            if name in variables:
                positions.append((i, variables.index(name)))
            elif any(e[i] for e in self.terms):
                raise AlphabetError(f"Variable '{name}' is used but missing from {variables}")
        terms = {}
        for exps, coeff in self.terms.items():
            target = [0] * len(variables)
            for i, j in positions:
                target[j] = exps[i]
            terms[tuple(target)] = coeff
        return LaurentPoly(variables, terms)

    def rename(self, mapping: Mapping[str, str]) -> 'LaurentPoly':
        return LaurentPoly([mapping.get(v, v) for v in self.variables], self.terms)

    def substitute_monomial(self, name: str, image: 'LaurentPoly') -> 'LaurentPoly':
        """Replace a variable by a unit monomial (keeps the result Laurent)."""
        if not image.is_unit_monomial():
            raise ValueError(f"Substitution image {image} is not a unit monomial")
        i = self.variables.index(name)
        result = LaurentPoly.zero(self.variables)
        for exps, coeff in self.terms.items():
            rest = list(exps)
            rest[i] = 0
            result = result + LaurentPoly(self.variables, {tuple(rest): coeff}) * image ** exps[i]
        return result

    def divide_one_minus(self, name: str) -> 'LaurentPoly':
        """Exact quotient by (1 - v) for the variable v = name.

        Each power v^e contributes (v^e - 1)/(1 - v); the leftover constant
        per coefficient group must vanish.
        """
        if name not in self.variables:
            raise AlphabetError(f"Unknown variable '{name}'")
        i = self.variables.index(name)
        sums: Dict[Exponents, Fraction] = {}
        quotient: Dict[Exponents, Fraction] = {}
        for exps, coeff in self.terms.items():
            rest = exps[:i] + exps[i + 1:]
            sums[rest] = sums.get(rest, Fraction(0)) + coeff
            e = exps[i]
            powers, sign = (range(e), -1) if e > 0 else (range(e, 0), 1)
            for k in powers:
                key = exps[:i] + (k,) + exps[i + 1:]
                quotient[key] = quotient.get(key, Fraction(0)) + sign * coeff
        if any(sums.values()):
            raise NotDivisibleError(f"{self} is not divisible by 1-{name}")
        return LaurentPoly(self.variables, quotient)

    def exact_divide(self, other: 'LaurentPoly') -> 'LaurentPoly':
        """Exact quotient self / other in the Laurent ring."""
        other = self._coerce(other)
        if other is NotImplemented:
            raise TypeError("exact_divide needs a LaurentPoly or a scalar")
        if other.is_zero:
            raise ZeroDivisionError("Division by the zero polynomial")
        if other.is_monomial():
            ((exps, coeff),) = other.terms.items()
            return self.shift([-e for e in exps]) * (1 / coeff)
        symbols = self.symbols()
        num_shift = [-m for m in self.min_exponents()]
        den_shift = [-m for m in other.min_exponents()]
        num = self.shift(num_shift).to_sympy_poly(symbols)
        den = other.shift(den_shift).to_sympy_poly(symbols)
        q, r = num.div(den)
        if not r.is_zero:
            raise NotDivisibleError(f"{self} is not divisible by {other}")
        quotient = LaurentPoly.from_sympy_poly(q, self.variables)
        return quotient.shift([d - n for n, d in zip(num_shift, den_shift)])

    def evaluate(self, values: Mapping[str, Any]) -> Any:
        """Value in any ring whose elements support +, * and integer powers."""
        total: Any = 0
        for exps, coeff in self.terms.items():
            term: Any = coeff
            for name, e in zip(self.variables, exps):
                if e:
                    term = term * values[name] ** e
            total = total + term
        return total

    # sympy bridge

    def symbols(self) -> Tuple[sympy.Symbol, ...]:
        return tuple(sympy.Symbol(v) for v in self.variables)

    def to_sympy_poly(self, symbols: Optional[Sequence[sympy.Symbol]] = None) -> sympy.Poly:
        if self.min_exponents() and min(self.min_exponents()) < 0:
            raise ValueError(f"{self} has negative exponents; shift it first")
        symbols = tuple(symbols) if symbols is not None else self.symbols()
        data = {exps: sympy.Rational(c.numerator, c.denominator) for exps, c in self.terms.items()}
        if not data:
            return sympy.Poly(0, *symbols, domain=sympy.QQ)
        return sympy.Poly.from_dict(data, *symbols, domain=sympy.QQ)

    @classmethod
    def from_sympy_poly(cls, poly: sympy.Poly, variables: Sequence[str]) -> 'LaurentPoly':
        return cls(variables, {monom: as_fraction(coeff) for monom, coeff in poly.terms()
                               if coeff != 0})

    def to_sympy(self) -> sympy.Expr:
        symbols = self.symbols()
        expr = sympy.Integer(0)
        for exps, c in self.terms.items():
            term = sympy.Rational(c.numerator, c.denominator)
            for s, e in zip(symbols, exps):
                term *= s ** e
            expr += term
        return expr

    # Printing

    def _monomial_text(self, exps: Exponents) -> str:
        parts = []
        for name, e in zip(self.variables, exps):
            if e == 1:
                parts.append(name)
            elif e:
                parts.append(f"{name}^{e}")
        return '*'.join(parts)

    def __str__(self) -> str:
        if not self.terms:
            return '0'
        pieces = []
        for exps, coeff in self.terms.items():
            mono = self._monomial_text(exps)
            magnitude = abs(coeff)
            if not mono:
                body = str(magnitude)
            elif magnitude == 1:
                body = mono
            else:
                body = f"{magnitude}*{mono}"
            sign = '-' if coeff < 0 else '+'
            pieces.append((sign, body))
        first_sign, first_body = pieces[0]
        text = ('-' if first_sign == '-' else '') + first_body
        return text + ''.join(f"{s}{b}" for s, b in pieces[1:])

    def __repr__(self) -> str:
        return f"LaurentPoly({self.variables}, {str(self)!r})"

    def format_factored(self) -> str:
        """Normalized form with its content pulled out, e.g. 2*(1+y)."""
        p = self.normalized()
        if p.is_zero:
            return '0'
        c = p.content()
        if c == 1:
            return str(p)
        inner = p * (1 / c)
        if inner == 1:
            return str(c)
        return f"{c}*({inner})"


def laurent_ring(variables: Iterable[str]) -> Tuple[LaurentPoly, ...]:
    """The variables of a Laurent ring as polynomials."""
    variables = tuple(variables)
    return tuple(LaurentPoly.variable(variables, v) for v in variables)


def parse_laurent(text: str, variables: Sequence[str]) -> LaurentPoly:
    """Parse sympy-syntax text such as `(1 - x**-2)*(y - x**2)` or `2*(1+y)`."""
    variables = tuple(variables)
    symbols = {v: sympy.Symbol(v) for v in variables}
    try:
        expr = sympy.sympify(text.replace('^', '**'), locals=symbols)
    except (sympy.SympifyError, SyntaxError, TypeError) as exc:
        raise ParseError(f"Cannot parse Laurent polynomial '{text}': {exc}") from exc
    unknown = {str(s) for s in expr.free_symbols} - set(variables)
    if unknown:
        raise ParseError(f"Unknown variables {sorted(unknown)} in '{text}'")
    num, den = sympy.fraction(sympy.together(expr))
    gens = tuple(symbols[v] for v in variables)
    den_poly = sympy.Poly(den, *gens, domain=sympy.QQ)
    if len(den_poly.terms()) != 1:
        raise ParseError(f"'{text}' has a non-monomial denominator {den}")
    (den_exps, den_coeff), = den_poly.terms()
    numerator = LaurentPoly.from_sympy_poly(sympy.Poly(sympy.expand(num), *gens, domain=sympy.QQ), variables)
    return numerator.shift([-e for e in den_exps]) * (1 / as_fraction(den_coeff))
