"""Normal forms in free nilpotent groups F/γ_{c+1}F.

Every element has a unique collected form b_1^e_1 b_2^e_2 ... over the Hall
basis. Collection runs through the Magnus embedding x -> 1 + X into power
series truncated above degree c: the lowest nonvanishing degree of
series(g) - 1 is a Lie polynomial, whose coordinates on the Lie basis are
the exponents of that weight. Peeling them off weight by weight yields the
collected form exactly.

This stands in for collection from the left with commutation tables.
Both produce the same unique collected form; only the route differs.
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Optional, Sequence, Tuple

import sympy

from knotgroups.errors import VerificationError
from knotgroups.freegroup.words import Alphabet, Word
from knotgroups.ncalg.functor import SeriesCache, group_to_series, series_letters
from knotgroups.ncalg.series import Monomial, NcPoly, free_series
from knotgroups.nilpotent.hall import BasicCommutator, check_range, hall_basis
from knotgroups.presentation.presentation import GroupPresentation

logger = logging.getLogger(__name__)


def _rational(value: Fraction) -> sympy.Rational:
    return sympy.Rational(value.numerator, value.denominator)


def _binomial(e: int, j: int) -> Fraction:
    """Generalized binomial coefficient, valid for negative e."""
    result = Fraction(1)
    for i in range(j):
        result = result * (e - i) / (i + 1)
    return result


class _WeightSolver:
    """Coordinates of a homogeneous polynomial on the Lie basis of one weight."""

    def __init__(self, layer: Sequence[BasicCommutator], lie: Sequence[NcPoly]):
        self.layer = tuple(layer)
        monomials = sorted({m for poly in lie for m in poly.terms})
        self.monomials: List[Monomial] = monomials
        self._row = {m: i for i, m in enumerate(monomials)}
        self.matrix = sympy.Matrix([[_rational(poly.terms.get(m, Fraction(0))) for poly in lie]
                                    for m in monomials])
        _, pivots = self.matrix.T.rref()
        self._rows = list(pivots)
        if len(self._rows) != len(self.layer):
            raise VerificationError("Lie basis polynomials are linearly dependent")
        self._inverse = self.matrix.extract(self._rows, list(range(len(self.layer)))).inv()

    def solve(self, part: NcPoly) -> List[int]:
        vector = sympy.zeros(len(self.monomials), 1)
        for word, coeff in part.terms.items():
            if word not in self._row:
                raise VerificationError(f"{part} is not a Lie polynomial of this weight")
            vector[self._row[word]] = _rational(coeff)
        solution = self._inverse * vector.extract(self._rows, [0])
        if self.matrix * solution != vector:
            raise VerificationError(f"{part} is not in the span of the Lie basis")
        exponents = []
        for value in solution:
            if not value.is_integer:
                raise VerificationError(f"Non-integral Hall exponent {value} for {part}")
            exponents.append(int(value))
        return exponents


class FreeNilpotentGroup:
    """F/γ_{c+1}F on an alphabet of rank <= 3, class <= 5."""

    def __init__(self, alphabet: Alphabet, nilpotency_class: int):
        check_range(len(alphabet), nilpotency_class)
        self.alphabet = alphabet
        self.nilpotency_class = nilpotency_class
        self.basis: Tuple[BasicCommutator, ...] = hall_basis(len(alphabet), nilpotency_class)
        letters = series_letters(alphabet)
        self._letters = [letters[label] for label in alphabet.labels]
        self.spec = free_series(self._letters, nilpotency_class)
        self._cache = SeriesCache(self.spec)
        self._lie: List[NcPoly] = []
        for b in self.basis:
            self._lie.append(self._lie_polynomial(b))
        deviations = [group_to_series(b.word(alphabet), self.spec, self._cache) - 1 for b in self.basis]
        # Powers D^j of series(b) - 1; D^j vanishes once j * weight exceeds the class.
        self._deviation_powers: List[List[NcPoly]] = []
        for b, d in zip(self.basis, deviations):
            powers = [NcPoly.one(self.spec)]
            for _ in range(nilpotency_class // b.weight):
                powers.append(powers[-1] * d)
            self._deviation_powers.append(powers)
        self._solvers: Dict[int, _WeightSolver] = {}
        for weight in range(1, nilpotency_class + 1):
            layer = [b for b in self.basis if b.weight == weight]
            if layer:
                self._solvers[weight] = _WeightSolver(layer, [self._lie[b.index] for b in layer])
        logger.debug(f"Free nilpotent group on {alphabet.labels} of class {nilpotency_class}: "
                     f"{len(self.basis)} basic commutators")

    def _lie_polynomial(self, b: BasicCommutator) -> NcPoly:
        if b.is_generator:
            return NcPoly.letter(self.spec, self._letters[b.generator])
        left, right = self._lie[b.left.index], self._lie[b.right.index]
        return left * right - right * left

    def __eq__(self, other) -> bool:
        if not isinstance(other, FreeNilpotentGroup):
            return NotImplemented
        return self.alphabet == other.alphabet and self.nilpotency_class == other.nilpotency_class

    def __hash__(self) -> int:
        return hash((self.alphabet, self.nilpotency_class))

    @property
    def rank(self) -> int:
        return len(self.alphabet)

    def labels(self) -> List[str]:
        return [b.label(self.alphabet) for b in self.basis]

    def layer(self, weight: int) -> List[BasicCommutator]:
        return [b for b in self.basis if b.weight == weight]

    def identity(self) -> 'NilpotentElement':
        return NilpotentElement(self, (0,) * len(self.basis))

    def element(self, exponents: Dict[str, int]) -> 'NilpotentElement':
        """Element from bracket labels, e.g. {'[y,x]': 4, '[y,x,x]': -4}."""
        labels = self.labels()
        vector = [0] * len(self.basis)
        for label, exp in exponents.items():
            if label not in labels:
                raise ValueError(f"'{label}' is not a basic commutator (have {', '.join(labels)})")
            vector[labels.index(label)] = exp
        return NilpotentElement(self, tuple(vector))

    def power_series(self, b: BasicCommutator, exp: int) -> NcPoly:
        """series(b)^exp as a binomial sum in series(b) - 1."""
        result = NcPoly.zero(self.spec)
        for j, power in enumerate(self._deviation_powers[b.index]):
            result = result + _binomial(exp, j) * power
        return result

    def series(self, g: 'NilpotentElement') -> NcPoly:
        result = NcPoly.one(self.spec)
        for b, exp in zip(self.basis, g.exponents):
            if exp:
                result = result * self.power_series(b, exp)
        return result

    def from_series(self, series: NcPoly) -> 'NilpotentElement':
        """Collected form of the group element with this Magnus image."""
        if series.spec != self.spec or series.constant_term != 1:
            raise VerificationError("Series is not the image of a group element")
        exponents = [0] * len(self.basis)
        current = series
        for weight in range(1, self.nilpotency_class + 1):
            rest = current - 1
            if not rest.is_zero and rest.low_degree < weight:
                raise VerificationError(f"Series {series} does not come from the free group")
            solver = self._solvers.get(weight)
            if solver is None:
                continue
            for b, exp in zip(solver.layer, solver.solve(rest.homogeneous(weight))):
                if exp:
                    exponents[b.index] = exp
                    current = self.power_series(b, -exp) * current
        if current != 1:
            raise VerificationError(f"Collection of {series} left the remainder {current}")
        return NilpotentElement(self, tuple(exponents))

    def collect(self, w: Word) -> 'NilpotentElement':
        if w.alphabet != self.alphabet:
            w = w.relabel(self.alphabet)
        return self.from_series(group_to_series(w, self.spec, self._cache))

    def generator(self, label: str) -> 'NilpotentElement':
        vector = [0] * len(self.basis)
        vector[self.alphabet.index(label)] = 1
        return NilpotentElement(self, tuple(vector))

    def generators(self) -> List['NilpotentElement']:
        return [self.generator(label) for label in self.alphabet.labels]


@dataclass(frozen=True)
class NilpotentElement:
    group: FreeNilpotentGroup
    exponents: Tuple[int, ...]

    def __mul__(self, other: 'NilpotentElement') -> 'NilpotentElement':
        if other.group != self.group:
            raise ValueError("Elements of different nilpotent groups")
        if self.is_identity:
            return other
        if other.is_identity:
            return self
        return self.group.from_series(self.group.series(self) * self.group.series(other))

    def inverse(self) -> 'NilpotentElement':
        if self.is_identity:
            return self
        return self.group.from_series(self.group.series(self).inverse())

    def __pow__(self, n: int) -> 'NilpotentElement':
        if n == 0 or self.is_identity:
            return self.group.identity()
        base = self.group.series(self)
        if n < 0:
            base, n = base.inverse(), -n
        result = None
        while n:
            if n & 1:
                result = base if result is None else result * base
            n >>= 1
            if n:
                base = base * base
        return self.group.from_series(result)

    def commutator(self, other: 'NilpotentElement') -> 'NilpotentElement':
        """[g, h] = g^-1 h^-1 g h."""
        g, h = self.group.series(self), self.group.series(other)
        return self.group.from_series(g.inverse() * h.inverse() * g * h)

    @property
    def is_identity(self) -> bool:
        return not any(self.exponents)

    @property
    def pivot(self) -> Optional[int]:
        """Index of the first nonzero exponent."""
        for i, exp in enumerate(self.exponents):
            if exp:
                return i
        return None

    def weight_vector(self, weight: int) -> Tuple[int, ...]:
        return tuple(exp for b, exp in zip(self.group.basis, self.exponents) if b.weight == weight)

    def as_dict(self) -> Dict[str, int]:
        return {label: exp for label, exp in zip(self.group.labels(), self.exponents) if exp}

    def __str__(self) -> str:
        parts = [label if exp == 1 else f"{label}^{exp}" for label, exp in self.as_dict().items()]
        return '*'.join(parts) if parts else '1'

    def __repr__(self) -> str:
        return f"NilpotentElement({self})"


@lru_cache(maxsize=None)
def free_nilpotent_group(alphabet: Alphabet, nilpotency_class: int) -> FreeNilpotentGroup:
    return FreeNilpotentGroup(alphabet, nilpotency_class)


def collect(w: Word, nilpotency_class: int) -> NilpotentElement:
    """Collected form of w modulo γ_{c+1}."""
    return free_nilpotent_group(w.alphabet, nilpotency_class).collect(w)


def relator_mod_gamma(p: GroupPresentation, index: int, nilpotency_class: int) -> NilpotentElement:
    if not 0 <= index < len(p.relators):
        raise ValueError(f"Relator index {index} out of range for {len(p.relators)} relators")
    return collect(p.relators[index], nilpotency_class)
