"""Arithmetic in Q[c]/(c^3 - c^2 - c - 1)."""
from fractions import Fraction
from typing import Any, Tuple, Union

import sympy

from knotgroups.laurent.poly import as_fraction

C = sympy.Symbol('c')
MINIMAL_POLYNOMIAL = sympy.Poly(C ** 3 - C ** 2 - C - 1, C, domain=sympy.QQ)


def minimal_polynomial_is_irreducible() -> bool:
    """Degree 3 with no rational root, confirmed by sympy's factorization."""
    no_rational_root = all(MINIMAL_POLYNOMIAL.eval(r) != 0 for r in (1, -1))
    return no_rational_root and MINIMAL_POLYNOMIAL.is_irreducible


class NumberFieldElement:
    """q0 + q1*c + q2*c^2, always reduced modulo the minimal polynomial."""

    __slots__ = ('poly',)

    def __init__(self, value: Union[sympy.Poly, int, Fraction, sympy.Expr] = 0):
        if isinstance(value, sympy.Poly):
            poly = value
        elif isinstance(value, Fraction):
            poly = sympy.Poly(sympy.Rational(value.numerator, value.denominator), C, domain=sympy.QQ)
        else:
            poly = sympy.Poly(value, C, domain=sympy.QQ)
        self.poly = poly.rem(MINIMAL_POLYNOMIAL)

    @classmethod
    def generator(cls) -> 'NumberFieldElement':
        return cls(sympy.Poly(C, C, domain=sympy.QQ))

    @classmethod
    def from_coefficients(cls, q0: Any, q1: Any = 0, q2: Any = 0) -> 'NumberFieldElement':
        q = [sympy.Rational(as_fraction(v).numerator, as_fraction(v).denominator) for v in (q0, q1, q2)]
        return cls(q[0] + q[1] * C + q[2] * C ** 2)

    def _coerce(self, other: Any) -> 'NumberFieldElement':
        if isinstance(other, NumberFieldElement):
            return other
        if isinstance(other, (int, Fraction)):
            return NumberFieldElement(other)
        return NotImplemented

    @property
    def coefficients(self) -> Tuple[Fraction, Fraction, Fraction]:
        values = [Fraction(0)] * 3
        for (degree,), coeff in self.poly.terms():
            values[degree] = as_fraction(coeff)
        return values[0], values[1], values[2]

    @property
    def is_zero(self) -> bool:
        return self.poly.is_zero

    def __add__(self, other: Any) -> 'NumberFieldElement':
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return NumberFieldElement(self.poly + other.poly)

    __radd__ = __add__

    def __neg__(self) -> 'NumberFieldElement':
        return NumberFieldElement(-self.poly)

    def __sub__(self, other: Any) -> 'NumberFieldElement':
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return NumberFieldElement(self.poly - other.poly)

    def __rsub__(self, other: Any) -> 'NumberFieldElement':
        return (-self) + other

    def __mul__(self, other: Any) -> 'NumberFieldElement':
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return NumberFieldElement(self.poly * other.poly)

    __rmul__ = __mul__

    def inverse(self) -> 'NumberFieldElement':
        if self.is_zero:
            raise ZeroDivisionError("Zero has no inverse in the number field")
        return NumberFieldElement(self.poly.invert(MINIMAL_POLYNOMIAL))

    def __truediv__(self, other: Any) -> 'NumberFieldElement':
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other: Any) -> 'NumberFieldElement':
        return NumberFieldElement(other) * self.inverse() if isinstance(other, (int, Fraction)) else NotImplemented

    def __pow__(self, n: int) -> 'NumberFieldElement':
        if n < 0:
            return self.inverse() ** (-n)
        result = NumberFieldElement(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other: Any) -> bool:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self.coefficients == other.coefficients

    def __hash__(self) -> int:
        return hash(self.coefficients)

    def __str__(self) -> str:
        names = ('', 'c', 'c^2')
        pieces = []
        for name, q in zip(names, self.coefficients):
            if not q:
                continue
            magnitude = abs(q)
            if not name:
                body = str(magnitude)
            elif magnitude == 1:
                body = name
            else:
                body = f"{magnitude}*{name}"
            pieces.append(('-' if q < 0 else '+', body))
        if not pieces:
            return '0'
        text = ('-' if pieces[0][0] == '-' else '') + pieces[0][1]
        return text + ''.join(s + b for s, b in pieces[1:])

    def __repr__(self) -> str:
        return f"NumberFieldElement({self})"
