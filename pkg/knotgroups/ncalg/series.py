"""Noncommutative polynomials modulo monomial ideals and truncation.

An AlgebraSpec fixes the letters, the forbidden subwords (generators of a
monomial ideal such as XX, YY, XYXY), an optional commutativity flag and an
optional truncation degree. Every NcPoly is kept in normal form: letters
sorted when commutative, monomials containing a forbidden subword or longer
than the truncation dropped.
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

from knotgroups.errors import AlgebraSpecError
from knotgroups.laurent.poly import as_fraction

logger = logging.getLogger(__name__)

Monomial = Tuple[str, ...]


def _monomial(word: Union[str, Sequence[str]]) -> Monomial:
    """'XYX' -> ('X', 'Y', 'X'); tuples pass through."""
    return tuple(word)


@dataclass(frozen=True)
class AlgebraSpec:
    letters: Tuple[str, ...]
    forbidden: Tuple[Monomial, ...] = ()
    commutative: bool = False
    truncate: Optional[int] = None

    def __post_init__(self):
        if not self.letters:
            raise AlgebraSpecError("An algebra needs at least one letter")
        if len(set(self.letters)) != len(self.letters):
            raise AlgebraSpecError(f"Duplicate letters in {self.letters}")
        for word in self.forbidden:
            if not word:
                raise AlgebraSpecError("Forbidden subwords must be nonempty")
            unknown = set(word) - set(self.letters)
            if unknown:
                raise AlgebraSpecError(f"Forbidden word {''.join(word)} uses unknown letters {sorted(unknown)}")
        if self.truncate is not None and self.truncate < 0:
            raise AlgebraSpecError("Truncation degree must be non-negative")

    @classmethod
    def from_text(cls, letters: Iterable[str], ideal: str = '', commutative: bool = False,
                  truncate: Optional[int] = None) -> 'AlgebraSpec':
        """Ideal text is a comma-separated list of forbidden words, e.g. `XX,YY,XYXY`."""
        forbidden = tuple(_monomial(w.strip()) for w in ideal.split(',') if w.strip())
        return cls(tuple(letters), forbidden, commutative, truncate)

    def normal_word(self, word: Sequence[str]) -> Optional[Monomial]:
        """Normal form of a monomial, or None when it vanishes."""
        word = tuple(word)
        if self.truncate is not None and len(word) > self.truncate:
            return None
        if self.commutative:
            order = {l: i for i, l in enumerate(self.letters)}
            word = tuple(sorted(word, key=order.__getitem__))
        n = len(word)
        for pattern in self.forbidden:
            m = len(pattern)
            for start in range(n - m + 1):
                if word[start:start + m] == pattern:
                    return None
        return word

    def is_nilpotent_letter(self, letter: str) -> bool:
        """Some power of the letter vanishes."""
        if self.truncate is not None:
            return True
        return any(set(word) == {letter} for word in self.forbidden)

    def extended(self, letters: Iterable[str]) -> 'AlgebraSpec':
        """Same relations over additional letters."""
        extra = tuple(l for l in letters if l not in self.letters)
        if not extra:
            return self
        return AlgebraSpec(self.letters + extra, self.forbidden, self.commutative, self.truncate)

    def with_truncation(self, truncate: Optional[int]) -> 'AlgebraSpec':
        return AlgebraSpec(self.letters, self.forbidden, self.commutative, truncate)

    def with_forbidden(self, words: Iterable[Union[str, Sequence[str]]]) -> 'AlgebraSpec':
        extra = tuple(_monomial(w) for w in words)
        return AlgebraSpec(self.letters, self.forbidden + extra, self.commutative, self.truncate)

    def describe(self) -> str:
        parts = [','.join(''.join(w) for w in self.forbidden) or '0']
        if self.commutative:
            parts.append('commutative')
        if self.truncate is not None:
            parts.append(f"deg<={self.truncate}")
        return f"Q<{','.join(self.letters)}>/({'; '.join(parts)})"


def b2(extra: Iterable[str] = (), commutative: bool = False, truncate: Optional[int] = None) -> AlgebraSpec:
    """Q[[X, Y]]/<X^2, Y^2> plus extra forbidden words."""
    forbidden = (('X', 'X'), ('Y', 'Y')) + tuple(_monomial(w) for w in extra)
    return AlgebraSpec(('X', 'Y'), forbidden, commutative, truncate)


def free_series(letters: Iterable[str], truncate: int) -> AlgebraSpec:
    """Power series in noncommuting letters truncated above `truncate`."""
    return AlgebraSpec(tuple(letters), (), False, truncate)


class NcPoly:
    """Finitely supported map monomial -> rational, in normal form for its spec."""

    __slots__ = ('spec', 'terms')

    def __init__(self, spec: AlgebraSpec, terms: Optional[Mapping[Any, Any]] = None):
        self.spec = spec
        reduced: Dict[Monomial, Fraction] = {}
        for word, coeff in (terms or {}).items():
            word = _monomial(word)
            unknown = set(word) - set(spec.letters)
            if unknown:
                raise AlgebraSpecError(f"Monomial {_word_text(word)} uses letters outside {spec.letters}")
            normal = spec.normal_word(word)
            if normal is None:
                continue
            value = reduced.get(normal, Fraction(0)) + as_fraction(coeff)
            if value:
                reduced[normal] = value
            else:
                reduced.pop(normal, None)
        self.terms: Dict[Monomial, Fraction] = dict(
            sorted(reduced.items(), key=lambda item: (len(item[0]), item[0])))

    @classmethod
    def zero(cls, spec: AlgebraSpec) -> 'NcPoly':
        return cls(spec)

    @classmethod
    def constant(cls, spec: AlgebraSpec, value: Any) -> 'NcPoly':
        return cls(spec, {(): value})

    @classmethod
    def one(cls, spec: AlgebraSpec) -> 'NcPoly':
        return cls.constant(spec, 1)

    @classmethod
    def letter(cls, spec: AlgebraSpec, name: str) -> 'NcPoly':
        if name not in spec.letters:
            raise AlgebraSpecError(f"Unknown letter '{name}'")
        return cls(spec, {(name,): 1})

    @classmethod
    def from_terms(cls, spec: AlgebraSpec, pairs: Iterable[Tuple[Any, Union[str, Sequence[str]]]]) -> 'NcPoly':
        terms: Dict[Monomial, Fraction] = {}
        for coeff, word in pairs:
            key = _monomial(word)
            terms[key] = terms.get(key, Fraction(0)) + as_fraction(coeff)
        return cls(spec, terms)

    def _coerce(self, other: Any) -> 'NcPoly':
        if isinstance(other, NcPoly):
            if other.spec != self.spec:
                raise AlgebraSpecError(f"Mixing {self.spec.describe()} and {other.spec.describe()}")
            return other
        if isinstance(other, (int, Fraction)):
            return NcPoly.constant(self.spec, other)
        return NotImplemented

    def __add__(self, other: Any) -> 'NcPoly':
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        terms = dict(self.terms)
        for word, coeff in other.terms.items():
            terms[word] = terms.get(word, Fraction(0)) + coeff
        return NcPoly(self.spec, terms)

    __radd__ = __add__

    def __neg__(self) -> 'NcPoly':
        return NcPoly(self.spec, {w: -c for w, c in self.terms.items()})

    def __sub__(self, other: Any) -> 'NcPoly':
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other: Any) -> 'NcPoly':
        return (-self) + other

    def __mul__(self, other: Any) -> 'NcPoly':
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        terms: Dict[Monomial, Fraction] = {}
        limit = self.spec.truncate
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                if limit is not None and len(w1) + len(w2) > limit:
                    continue
                word = w1 + w2
                terms[word] = terms.get(word, Fraction(0)) + c1 * c2
        return NcPoly(self.spec, terms)

    def __rmul__(self, other: Any) -> 'NcPoly':
        if isinstance(other, (int, Fraction)):
            return NcPoly(self.spec, {w: c * other for w, c in self.terms.items()})
        return NotImplemented

    def __pow__(self, n: int) -> 'NcPoly':
        if n < 0:
            return self.inverse() ** (-n)
        result = NcPoly.one(self.spec)
        for _ in range(n):
            result = result * self
        return result

    def inverse(self) -> 'NcPoly':
        """Geometric series for 1 + f with f free of constant term."""
        if self.constant_term != 1:
            raise AlgebraSpecError(f"Only series with constant term 1 are inverted here, got {self}")
        f = self - 1
        letters = {l for word in f.terms for l in word}
        if not all(self.spec.is_nilpotent_letter(l) for l in letters):
            raise AlgebraSpecError(
                f"Inverse of {self} needs a truncation degree or nilpotent letters in {self.spec.describe()}")
        result = NcPoly.one(self.spec)
        power = NcPoly.one(self.spec)
        # Mixed words need not vanish without truncation, hence the bound.
        bound = self.spec.truncate if self.spec.truncate is not None else 256
        for _ in range(bound + 1):
            power = power * (-f)
            if power.is_zero:
                return result
            result = result + power
        if self.spec.truncate is not None:
            return result
        raise AlgebraSpecError(f"Geometric series for {self} does not terminate in {self.spec.describe()}")

    @property
    def constant_term(self) -> Fraction:
        return self.terms.get((), Fraction(0))

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def degree(self) -> int:
        return max((len(w) for w in self.terms), default=-1)

    @property
    def low_degree(self) -> int:
        return min((len(w) for w in self.terms), default=-1)

    def homogeneous(self, degree: int) -> 'NcPoly':
        return NcPoly(self.spec, {w: c for w, c in self.terms.items() if len(w) == degree})

    def reduce_in(self, spec: AlgebraSpec) -> 'NcPoly':
        """Same terms re-normalized in another spec (nc_reduce)."""
        return NcPoly(spec, self.terms)

    def __eq__(self, other: Any) -> bool:
        if isinstance(other, (int, Fraction)):
            other = NcPoly.constant(self.spec, other)
        if not isinstance(other, NcPoly):
            return NotImplemented
        return self.spec == other.spec and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.spec, tuple(self.terms.items())))

    def as_pairs(self) -> List[Tuple[Fraction, str]]:
        return [(c, _word_text(w)) for w, c in self.terms.items()]

    def __str__(self) -> str:
        if not self.terms:
            return '0'
        text = ''
        for word, coeff in self.terms.items():
            magnitude = abs(coeff)
            mono = _word_text(word)
            if not word:
                body = str(magnitude)
            elif magnitude == 1:
                body = mono
            else:
                body = f"{magnitude}*{mono}"
            if not text:
                text = ('-' if coeff < 0 else '') + body
            else:
                text += ('-' if coeff < 0 else '+') + body
        return text

    def __repr__(self) -> str:
        return f"NcPoly({self})"


def _word_text(word: Monomial) -> str:
    if all(len(l) == 1 for l in word):
        return ''.join(word)
    return '*'.join(word)


def nc_reduce(terms: Union[NcPoly, Mapping[Any, Any]], spec: AlgebraSpec) -> NcPoly:
    """Normal form of a polynomial (or raw term map) in the given spec."""
    if isinstance(terms, NcPoly):
        return terms.reduce_in(spec)
    return NcPoly(spec, terms)
