"""Magnus representation of free metabelian groups by 2x2 matrices (S, T; 0, 1).

S is a unit monomial of a Laurent ring and T lies in a free module over
that ring. Matrices multiply as (S1, T1)(S2, T2) = (S1 S2, S1 T2 + T1).
"""
import logging
from dataclasses import dataclass, field
from typing import Dict, Mapping, Optional, Sequence, Tuple

from knotgroups.errors import AlphabetError
from knotgroups.freegroup.words import Word
from knotgroups.laurent.poly import LaurentPoly

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ModuleElement:
    """Finite combination sum_i coeff_i * basis_i with Laurent coefficients."""
    variables: Tuple[str, ...]
    basis: Tuple[str, ...]
    coefficients: Tuple[LaurentPoly, ...] = field(default=())

    def __post_init__(self):
        if not self.coefficients:
            object.__setattr__(self, 'coefficients',
                               tuple(LaurentPoly.zero(self.variables) for _ in self.basis))
        if len(self.coefficients) != len(self.basis):
            raise ValueError("One coefficient per basis element is required")
        for coeff in self.coefficients:
            if coeff.variables != self.variables:
                raise AlphabetError(f"Coefficient over {coeff.variables}, module over {self.variables}")

    @classmethod
    def basis_element(cls, variables: Sequence[str], basis: Sequence[str], name: str) -> 'ModuleElement':
        variables, basis = tuple(variables), tuple(basis)
        coeffs = tuple(LaurentPoly.one(variables) if b == name else LaurentPoly.zero(variables)
                       for b in basis)
        return cls(variables, basis, coeffs)

    @classmethod
    def from_mapping(cls, variables: Sequence[str], basis: Sequence[str],
                     values: Mapping[str, LaurentPoly]) -> 'ModuleElement':
        variables, basis = tuple(variables), tuple(basis)
        for name in values:
            if name not in basis:
                raise AlphabetError(f"Unknown module generator '{name}'")
        return cls(variables, basis, tuple(values.get(b, LaurentPoly.zero(variables)) for b in basis))

    def _check(self, other: 'ModuleElement'):
        if (other.variables, other.basis) != (self.variables, self.basis):
            raise AlphabetError("Module elements over different rings or bases")

    def __add__(self, other: 'ModuleElement') -> 'ModuleElement':
        self._check(other)
        return ModuleElement(self.variables, self.basis,
                             tuple(a + b for a, b in zip(self.coefficients, other.coefficients)))

    def __neg__(self) -> 'ModuleElement':
        return ModuleElement(self.variables, self.basis, tuple(-a for a in self.coefficients))

    def __sub__(self, other: 'ModuleElement') -> 'ModuleElement':
        return self + (-other)

    def scale(self, factor: LaurentPoly) -> 'ModuleElement':
        return ModuleElement(self.variables, self.basis, tuple(factor * a for a in self.coefficients))

    def coefficient(self, name: str) -> LaurentPoly:
        return self.coefficients[self.basis.index(name)]

    def as_dict(self) -> Dict[str, LaurentPoly]:
        return dict(zip(self.basis, self.coefficients))

    @property
    def is_zero(self) -> bool:
        return all(c.is_zero for c in self.coefficients)

    def __str__(self) -> str:
        parts = []
        for name, coeff in zip(self.basis, self.coefficients):
            if coeff.is_zero:
                continue
            if coeff == 1:
                parts.append(name)
            elif len(coeff.terms) == 1:
                parts.append(f"{coeff}*{name}")
            else:
                parts.append(f"({coeff})*{name}")
        return ' + '.join(parts) if parts else '0'


@dataclass(frozen=True)
class MagnusMatrix:
    scale: LaurentPoly
    translation: ModuleElement

    def __post_init__(self):
        if not self.scale.is_unit_monomial():
            raise ValueError(f"Magnus scale {self.scale} is not a unit monomial")
        if self.scale.variables != self.translation.variables:
            raise AlphabetError("Scale and translation live over different rings")

    @classmethod
    def identity(cls, variables: Sequence[str], basis: Sequence[str]) -> 'MagnusMatrix':
        return cls(LaurentPoly.one(variables), ModuleElement(tuple(variables), tuple(basis)))

    def __mul__(self, other: 'MagnusMatrix') -> 'MagnusMatrix':
        return MagnusMatrix(self.scale * other.scale,
                            other.translation.scale(self.scale) + self.translation)

    def inverse(self) -> 'MagnusMatrix':
        inv = self.scale ** -1
        return MagnusMatrix(inv, (-self.translation).scale(inv))

    def __pow__(self, n: int) -> 'MagnusMatrix':
        base = self if n >= 0 else self.inverse()
        result = MagnusMatrix.identity(self.scale.variables, self.translation.basis)
        for _ in range(abs(n)):
            result = result * base
        return result

    @property
    def is_identity(self) -> bool:
        return self.scale == 1 and self.translation.is_zero

    def __str__(self) -> str:
        return f"({self.scale}, {self.translation}; 0, 1)"


def standard_assignment(labels: Sequence[str], scales: Optional[Sequence[str]] = None,
                        translations: Optional[Sequence[str]] = None) -> Dict[str, MagnusMatrix]:
    """Generator i -> (s_i, t_i; 0, 1), the free Magnus embedding.

    By default the scale variables reuse the generator labels and the
    module basis is t_<label>.
    """
    labels = tuple(labels)
    scales = tuple(scales) if scales is not None else labels
    translations = tuple(translations) if translations is not None else tuple(f"t_{l}" for l in labels)
    if not len(labels) == len(scales) == len(translations):
        raise ValueError("Need one scale variable and one module generator per label")
    assignment = {}
    for label, s, t in zip(labels, scales, translations):
        assignment[label] = MagnusMatrix(LaurentPoly.variable(scales, s),
                                         ModuleElement.basis_element(scales, translations, t))
    return assignment


def magnus_image(w: Word, assign: Mapping[str, MagnusMatrix]) -> MagnusMatrix:
    """Product of the assigned matrices along w."""
    labels = w.alphabet.labels
    missing = [labels[g] for g in w.generators_used() if labels[g] not in assign]
    if missing:
        raise AlphabetError(f"No Magnus image assigned to {', '.join(sorted(missing))}")
    if not assign:
        raise AlphabetError("Empty Magnus assignment")
    sample = next(iter(assign.values()))
    result = MagnusMatrix.identity(sample.scale.variables, sample.translation.basis)
    inverses: Dict[str, MagnusMatrix] = {}
    for gen_id, exp in w.syllables:
        label = labels[gen_id]
        if exp > 0:
            factor = assign[label]
        else:
            if label not in inverses:
                inverses[label] = assign[label].inverse()
            factor = inverses[label]
        for _ in range(abs(exp)):
            result = result * factor
    return result
