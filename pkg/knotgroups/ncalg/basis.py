"""Monomial bases, regular representations and quotient dimensions."""
import logging
from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional, Tuple

import sympy

from knotgroups.errors import AlgebraSpecError
from knotgroups.freegroup.words import Word
from knotgroups.ncalg.functor import series_letters, spec_for
from knotgroups.ncalg.series import AlgebraSpec, Monomial, NcPoly, b2
from knotgroups.presentation.presentation import GroupPresentation

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class BasisReport:
    monomials: Tuple[Monomial, ...]
    per_degree: Tuple[int, ...]
    saturated: bool

    @property
    def dimension(self) -> Optional[int]:
        return len(self.monomials) if self.saturated else None

    def words(self) -> List[str]:
        return [''.join(m) or '1' for m in self.monomials]


def _extensions(spec: AlgebraSpec, word: Monomial) -> List[Monomial]:
    if spec.commutative:
        start = spec.letters.index(word[-1]) if word else 0
        candidates = [word + (l,) for l in spec.letters[start:]]
    else:
        candidates = [word + (l,) for l in spec.letters]
    return [c for c in candidates if spec.normal_word(c) == c]


def monomial_basis(spec: AlgebraSpec, degree_cap: int = 12) -> BasisReport:
    """Normal monomials by degree, up to the cap or until a degree is empty.

    Normal monomials are closed under prefixes, so an empty degree stays
    empty for all higher degrees.
    """
    layer: List[Monomial] = [()]
    monomials: List[Monomial] = [()]
    counts = [1]
    saturated = False
    for _ in range(degree_cap):
        layer = [ext for word in layer for ext in _extensions(spec, word)]
        if not layer:
            saturated = True
            break
        counts.append(len(layer))
        monomials.extend(sorted(layer))
    else:
        saturated = not [ext for word in layer for ext in _extensions(spec, word)]
    return BasisReport(tuple(monomials), tuple(counts), saturated)


def is_finite_dimensional(spec: AlgebraSpec, degree_cap: int = 64) -> bool:
    return monomial_basis(spec, degree_cap).saturated


@dataclass(frozen=True)
class RegularRepresentation:
    basis: Tuple[Monomial, ...]
    matrices: Dict[str, sympy.Matrix]

    @property
    def dimension(self) -> int:
        return len(self.basis)


def _coordinates(p: NcPoly, index: Dict[Monomial, int]) -> List[sympy.Rational]:
    column = [sympy.Integer(0)] * len(index)
    for word, coeff in p.terms.items():
        column[index[word]] = sympy.Rational(coeff.numerator, coeff.denominator)
    return column


def regular_representation(spec: AlgebraSpec, degree_cap: int = 64) -> RegularRepresentation:
    """Matrices of left multiplication by 1 + L for every letter L."""
    report = monomial_basis(spec, degree_cap)
    if not report.saturated:
        raise AlgebraSpecError(f"{spec.describe()} is not finite-dimensional below degree {degree_cap}")
    index = {m: i for i, m in enumerate(report.monomials)}
    matrices = {}
    for letter in spec.letters:
        element = NcPoly.one(spec) + NcPoly.letter(spec, letter)
        columns = [_coordinates(element * NcPoly(spec, {m: 1}), index) for m in report.monomials]
        matrices[letter] = sympy.Matrix(columns).T
    logger.debug(f"Regular representation of {spec.describe()} has dimension {len(index)}")
    return RegularRepresentation(report.monomials, matrices)


def word_matrix(w: Word, rep: RegularRepresentation) -> sympy.Matrix:
    """Image of a group word under x -> matrix of 1 + X."""
    letters = series_letters(w.alphabet)
    result = sympy.eye(rep.dimension)
    for gen_id, exp in w.syllables:
        result = result * rep.matrices[letters[w.alphabet[gen_id].label]] ** exp
    return result


def representation_check(p: GroupPresentation, spec: AlgebraSpec) -> List[bool]:
    """Per relator: does its matrix equal the identity."""
    rep = regular_representation(spec_for(p.alphabet, spec))
    identity = sympy.eye(rep.dimension)
    return [word_matrix(r, rep) == identity for r in p.relators]


def _two_sided_span(f: NcPoly, words: List[Monomial], cap: int) -> List[NcPoly]:
    spec = f.spec
    low = f.low_degree
    out = []
    for u in words:
        for v in words:
            if len(u) + len(v) + low > cap:
                continue
            out.append(NcPoly(spec, {u: 1}) * f * NcPoly(spec, {v: 1}))
    return out


def quotient_dimension(f: NcPoly, degree_cap: int = 12) -> Optional[int]:
    """dim of (base algebra)/<f>, from exact ranks at increasing truncation.

    Returns None when the value has not stabilized by the cap.
    """
    if f.is_zero:
        raise ValueError("The zero polynomial generates the zero ideal")
    base = f.spec.with_truncation(None)
    previous = None
    for cap in range(max(f.low_degree, 1), degree_cap + 1):
        spec = base.with_truncation(cap)
        words = list(monomial_basis(spec, cap).monomials)
        index = {w: i for i, w in enumerate(words)}
        g = f.reduce_in(spec)
        rows = [_coordinates(h, index) for h in _two_sided_span(g, words, cap)]
        rank = sympy.Matrix(rows).rank() if rows else 0
        dimension = len(words) - rank
        logger.debug(f"Truncation {cap}: {len(words)} monomials, ideal rank {rank}")
        if dimension == previous:
            return dimension
        previous = dimension
    return None


@dataclass(frozen=True)
class DimensionReport:
    degree: int
    k: int
    bound: int
    dimension: Optional[int]

    @property
    def within_bound(self) -> bool:
        return self.dimension is not None and self.dimension <= self.bound


def dimension_bound_check(f: NcPoly, degree_cap: int = 12) -> DimensionReport:
    """Bound 4k+1 for a leading part of degree 2k, 4k+3 for degree 2k+1."""
    base = b2()
    if (f.spec.letters, f.spec.commutative, set(f.spec.forbidden)) != (base.letters, False, set(base.forbidden)):
        raise AlgebraSpecError(f"Dimension bound applies to elements of {base.describe()}, got {f.spec.describe()}")
    if f.is_zero:
        raise ValueError("Dimension bound needs a nonzero polynomial")
    degree = f.degree
    if degree == 0:
        raise ValueError(f"{f} is a nonzero constant; the quotient is zero")
    for word in f.homogeneous(degree).terms:
        if any(a == b for a, b in zip(word, word[1:])):
            raise ValueError(f"Leading part of {f} is not alternating")
    k, odd = divmod(degree, 2)
    bound = 4 * k + 3 if odd else 4 * k + 1
    return DimensionReport(degree, k, bound, quotient_dimension(f, degree_cap))


def b2_polynomial(pairs: Iterable[Tuple[int, str]]) -> NcPoly:
    """Shorthand for elements of X^2 = Y^2 = 0."""
    return NcPoly.from_terms(b2(), pairs)
