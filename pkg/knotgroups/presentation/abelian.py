"""Abelian invariants of finitely presented groups."""
import logging
from dataclasses import dataclass
from typing import List, Sequence, Tuple

from knotgroups.freegroup.words import exponent_sums
from knotgroups.presentation.presentation import GroupPresentation
from knotgroups.presentation.snf import SnfResult, smith_normal_form

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class AbelianStructure:
    """Z^rank x Z/t1 x ... with t1 | t2 | ... and every t >= 2."""
    rank: int
    torsion: Tuple[int, ...] = ()

    def __post_init__(self):
        if self.rank < 0:
            raise ValueError("Free rank must be non-negative")
        for a, b in zip(self.torsion, self.torsion[1:]):
            if b % a != 0:
                raise ValueError(f"Torsion {self.torsion} is not a divisibility chain")
        if any(t < 2 for t in self.torsion):
            raise ValueError("Torsion coefficients must be at least 2")

    @classmethod
    def from_snf(cls, snf: SnfResult, generators: int) -> 'AbelianStructure':
        """Cokernel of the relation rows: Z^generators modulo the row lattice."""
        torsion = tuple(d for d in snf.diagonal if d > 1)
        return cls(generators - snf.rank, torsion)

    @property
    def is_trivial(self) -> bool:
        return self.rank == 0 and not self.torsion

    def exponent_divides(self, n: int) -> bool:
        """True when the group is finite with exponent dividing n."""
        return self.rank == 0 and all(n % t == 0 for t in self.torsion)

    def __str__(self) -> str:
        parts = []
        if self.rank == 1:
            parts.append("Z")
        elif self.rank > 1:
            parts.append(f"Z^{self.rank}")
        parts.extend(f"Z/{t}" for t in self.torsion)
        return ' x '.join(parts) if parts else '0'


def exponent_matrix(p: GroupPresentation) -> List[List[int]]:
    """One row of exponent sums per relator."""
    return [list(exponent_sums(r)) for r in p.relators]


def abelianization(p: GroupPresentation) -> AbelianStructure:
    snf = smith_normal_form(exponent_matrix(p), columns=p.rank)
    structure = AbelianStructure.from_snf(snf, p.rank)
    logger.debug(f"Abelianization of {p.alphabet.labels}: {structure}")
    return structure


def in_row_lattice(rows: Sequence[Sequence[int]], vector: Sequence[int], columns: int) -> bool:
    """Whether vector is an integer combination of rows.

    With U A V = D: v = yA iff (vV) = (yU^-1) D, so each coordinate of vV
    must be divisible by the matching diagonal entry and vanish past the rank.
    """
    snf = smith_normal_form(rows, columns=columns)
    if len(vector) != columns:
        raise ValueError(f"Vector length {len(vector)} does not match {columns} columns")
    transformed = [sum(int(vector[i]) * int(snf.right[i, j]) for i in range(columns))
                   for j in range(columns)]
    for j, value in enumerate(transformed):
        if j < snf.rank:
            if value % snf.diagonal[j] != 0:
                return False
        elif value != 0:
            return False
    return True


def in_relation_lattice(p: GroupPresentation, vector: Sequence[int]) -> bool:
    """Whether the abelian relation with this exponent vector follows from the relators."""
    return in_row_lattice(exponent_matrix(p), vector, p.rank)
