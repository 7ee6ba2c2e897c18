"""Lower central series layers of finitely presented groups."""
import logging
from collections import deque
from dataclasses import dataclass
from typing import Deque, Dict, List, Optional, Sequence

from knotgroups.braidrep.fixtures import trefoil_g1
from knotgroups.errors import UnsupportedRangeError
from knotgroups.freegroup.words import (
    Alphabet, Word, commutator, conjugate, generator_word, invert, multiply, power,
)
from knotgroups.nilpotent.collection import NilpotentElement, free_nilpotent_group
from knotgroups.nilpotent.hall import MAX_CLASS
from knotgroups.presentation.abelian import AbelianStructure
from knotgroups.presentation.presentation import GroupPresentation
from knotgroups.presentation.snf import smith_normal_form

logger = logging.getLogger(__name__)


def _xgcd(a: int, b: int):
    """(d, s, t) with s*a + t*b = d = gcd(a, b) > 0."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


class NormalClosure:
    """Normal closure of a set of elements of a free nilpotent group.

    Rows are kept echelonized by pivot (first nonzero Hall exponent) with a
    positive leading exponent. The row set is closed under commutators with
    the generators and with other rows, so every element of the closure
    sifts to the identity against it.
    """

    def __init__(self, elements: Sequence[NilpotentElement]):
        if not elements:
            raise ValueError("Normal closure needs at least one element")
        self.group = elements[0].group
        self.rows: Dict[int, NilpotentElement] = {}
        self._pending: Deque[NilpotentElement] = deque(elements)
        self._close()

    def _close(self):
        generators = self.group.generators()
        while self._pending:
            added = self._insert(self._pending.popleft())
            for row in added:
                for g in generators:
                    self._pending.append(row.commutator(g))
                for other in list(self.rows.values()):
                    if other is not row:
                        self._pending.append(row.commutator(other))
        logger.debug(f"Normal closure has {len(self.rows)} rows")

    def _insert(self, g: NilpotentElement) -> List[NilpotentElement]:
        """Sift g into the rows; returns rows that were created or replaced."""
        changed = []
        queue = [g]
        while queue:
            g = queue.pop()
            while not g.is_identity:
                p = g.pivot
                lead = g.exponents[p]
                row = self.rows.get(p)
                if row is None:
                    if lead < 0:
                        g = g.inverse()
                    self.rows[p] = g
                    changed.append(g)
                    break
                row_lead = row.exponents[p]
                if lead % row_lead == 0:
                    g = row ** (-(lead // row_lead)) * g
                    continue
                d, s, t = _xgcd(row_lead, lead)
                new_row = row ** s * g ** t
                self.rows[p] = new_row
                changed.append(new_row)
                queue.append(new_row ** (-(row_lead // d)) * row)
                g = new_row ** (-(lead // d)) * g
        return changed

    def sift(self, g: NilpotentElement) -> NilpotentElement:
        """Remainder of g after dividing out the rows."""
        while not g.is_identity:
            p = g.pivot
            row = self.rows.get(p)
            if row is None or g.exponents[p] % row.exponents[p] != 0:
                return g
            g = row ** (-(g.exponents[p] // row.exponents[p])) * g
        return g

    def contains(self, g: NilpotentElement) -> bool:
        return self.sift(g).is_identity

    def rows_of_weight(self, weight: int) -> List[List[int]]:
        """Weight-k coordinates of the rows whose pivot has weight k."""
        basis = self.group.basis
        return [list(row.weight_vector(weight)) for p, row in sorted(self.rows.items())
                if basis[p].weight == weight]


def normal_closure(p: GroupPresentation, nilpotency_class: int) -> Optional[NormalClosure]:
    """Relators' normal closure in F/γ_{c+1}F, or None when every relator dies there."""
    group = free_nilpotent_group(p.alphabet, nilpotency_class)
    elements = [group.collect(r) for r in p.relators]
    elements = [e for e in elements if not e.is_identity]
    return NormalClosure(elements) if elements else None


@dataclass(frozen=True)
class GradedLayer:
    """γ_kG/γ_{k+1}G with the relation matrix it was read from."""
    k: int
    structure: AbelianStructure
    basis: List[str]
    relation_matrix: List[List[int]]

    @property
    def rank(self) -> int:
        return self.structure.rank

    @property
    def torsion(self) -> List[int]:
        return list(self.structure.torsion)

    def __str__(self) -> str:
        return str(self.structure)


def lcs_quotient(p: GroupPresentation, k: int) -> GradedLayer:
    """Structure of γ_kG/γ_{k+1}G.

    In F/γ_{k+1}F the layer γ_kF is free abelian on the weight-k basic
    commutators and meets the normal closure of the relators in the rows
    whose pivot has weight k.
    """
    if not 1 <= k <= MAX_CLASS:
        raise UnsupportedRangeError(f"Layer {k} is outside 1..{MAX_CLASS}")
    group = free_nilpotent_group(p.alphabet, k)
    basis = [b.label(p.alphabet) for b in group.layer(k)]
    closure = normal_closure(p, k)
    rows = closure.rows_of_weight(k) if closure is not None else []
    snf = smith_normal_form(rows, columns=len(basis))
    structure = AbelianStructure.from_snf(snf, len(basis))
    logger.info(f"Layer {k} of <{','.join(p.alphabet.labels)}>: {structure}")
    return GradedLayer(k, structure, basis, rows)


def holds_in_quotient(p: GroupPresentation, w: Word, nilpotency_class: int) -> bool:
    """Whether w is trivial in G/γ_{c+1}G."""
    group = free_nilpotent_group(p.alphabet, nilpotency_class)
    element = group.collect(w)
    if element.is_identity:
        return True
    closure = normal_closure(p, nilpotency_class)
    return closure is not None and closure.contains(element)


def _letter(alphabet: Alphabet, label: str) -> Word:
    return generator_word(alphabet, alphabet.index(label))


def g2_printed_relations(alphabet: Alphabet) -> Dict[str, Word]:
    """The class-3 relations of trefoil-g2, each as a single word w = 1."""
    x, y = _letter(alphabet, 'x'), _letter(alphabet, 'y')
    yx = commutator(y, x)
    xyy = commutator(x, y, y)
    return {
        '[y,x]^4 = [x,y,y]^2': multiply(power(yx, 4), power(xyy, -2)),
        '([y,x]^2)^y = [y,x]^-2': multiply(conjugate(power(yx, 2), y), power(yx, 2)),
    }


def g1_printed_relations(alphabet: Alphabet, r: int) -> Dict[str, Word]:
    """Both printed weight-4 relations of trefoil-g1(r) as words w = 1."""
    x, y = _letter(alphabet, 'x'), _letter(alphabet, 'y')
    c1 = commutator(y, x, x, x)
    c2 = commutator(y, x, x, y)
    yxyx = commutator(y, x, y, x)
    return {
        '[y,x,y,x]^r = [y,x,x,y]^(r^2)': multiply(power(yxyx, r), invert(power(c2, r * r))),
        '(c2 c1^-r)^r = 1': power(multiply(c2, power(c1, -r)), r),
    }


@dataclass(frozen=True)
class VariantReport:
    name: str
    collected: str
    relator: str
    same_subgroup: bool
    holds_in_quotient: bool


def printed_relation_variants(r: int) -> List[VariantReport]:
    """Compare each printed weight-4 relation of trefoil-g1(r) with the collected relator."""
    p = trefoil_g1(r)
    group = free_nilpotent_group(p.alphabet, 4)
    relator = group.collect(p.relators[0])
    reports = []
    for name, word in g1_printed_relations(p.alphabet, r).items():
        element = group.collect(word)
        same = element == relator or element == relator.inverse()
        reports.append(VariantReport(name, str(element), str(relator), same,
                                     holds_in_quotient(p, word, 4)))
        if not same:
            logger.info(f"trefoil-g1({r}): '{name}' collects to {element}, relator is {relator}")
    return reports
