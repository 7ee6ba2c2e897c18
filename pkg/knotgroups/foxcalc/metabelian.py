"""Computations in the free metabelian group of rank 2 as a module over Z[x^{+-1}, y^{+-1}].

F2'/F2'' is the free cyclic module generated by z = [x, y] under the right
action z^g = g^-1 z g; `module_coefficient` returns the p with w = z.p.
"""
import logging
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Tuple

from knotgroups.errors import NotDivisibleError
from knotgroups.foxcalc.magnus import magnus_image, standard_assignment
from knotgroups.freegroup.endomorphism import Endomorphism, apply_endo
from knotgroups.freegroup.words import (
    Alphabet, Word, commutator, exponent_sums, generator_word, multiply, power,
)
from knotgroups.laurent.poly import LaurentPoly
from knotgroups.presentation.presentation import GroupPresentation

logger = logging.getLogger(__name__)

RANK2 = Alphabet.from_labels(['x', 'y'])


@dataclass(frozen=True)
class EndoParams:
    """x -> x^alpha y^beta [x,y]^gamma, y -> x^a y^b [x,y]^c."""
    alpha: int
    beta: int
    gamma: int
    a: int
    b: int
    c: int

    @property
    def determinant(self) -> int:
        return self.alpha * self.b - self.beta * self.a

    @property
    def is_unimodular(self) -> bool:
        return self.determinant in (1, -1)

    def endomorphism(self, alphabet: Alphabet = RANK2) -> Endomorphism:
        x_label, y_label = alphabet.labels
        x, y = generator_word(alphabet, x_label), generator_word(alphabet, y_label)
        z = commutator(x, y)
        images = {
            x_label: multiply(multiply(power(x, self.alpha), power(y, self.beta)), power(z, self.gamma)),
            y_label: multiply(multiply(power(x, self.a), power(y, self.b)), power(z, self.c)),
        }
        return Endomorphism.from_mapping(alphabet, alphabet, images)


IDENTITY_PARAMS = EndoParams(1, 0, 0, 0, 1, 0)
SWAP_PARAMS = EndoParams(0, 1, 0, 1, 0, 0)


def _ring(labels: Tuple[str, str]) -> Tuple[LaurentPoly, LaurentPoly]:
    return LaurentPoly.variable(labels, labels[0]), LaurentPoly.variable(labels, labels[1])


def geometric_ratio(p: int, q: int, labels: Tuple[str, str] = ('x', 'y')) -> LaurentPoly:
    """(1 - x^p)(1 - y^q) / ((1 - x)(1 - y))."""
    x, y = _ring(labels)
    return ((1 - x ** p).divide_one_minus(labels[0])) * ((1 - y ** q).divide_one_minus(labels[1]))


def commutator_coefficient(p: EndoParams) -> LaurentPoly:
    """Closed form of the coefficient of z in the image of z = [x, y].

    c(1 - x^alpha y^beta) - gamma(1 - x^a y^b)
      + y^beta K(alpha, b) - y^b K(a, beta),  K(p, q) = (1-x^p)(1-y^q)/((1-x)(1-y))
    """
    x, y = _ring(('x', 'y'))
    return (p.c * (1 - x ** p.alpha * y ** p.beta)
            - p.gamma * (1 - x ** p.a * y ** p.b)
            + y ** p.beta * geometric_ratio(p.alpha, p.b)
            - y ** p.b * geometric_ratio(p.a, p.beta))


def module_coefficient(w: Word) -> LaurentPoly:
    """p with w = z.p modulo F2'', for w in the commutator subgroup of a rank-2 free group.

    The Magnus translation of z^g is g^-1 tau_z, so the translation of w is
    p(x^-1, y^-1) tau_z with tau_z = x^-1 y^-1 ((1 - y) t_x + (x - 1) t_y).
    """
    labels = w.alphabet.labels
    if len(labels) != 2:
        raise ValueError(f"module_coefficient needs a rank-2 alphabet, got {labels}")
    if any(exponent_sums(w)):
        raise ValueError(f"{w} is not in the commutator subgroup (exponent sums {exponent_sums(w)})")
    xl, yl = labels
    x, y = _ring(labels)
    image = magnus_image(w, standard_assignment(labels))
    tx = image.translation.coefficient(f"t_{xl}")
    ty = image.translation.coefficient(f"t_{yl}")
    inverted = (tx * x * y).divide_one_minus(yl)
    if ty != inverted * x ** -1 * y ** -1 * (x - 1):
        raise NotDivisibleError(f"Translation of {w} is not a multiple of the translation of [{xl},{yl}]")
    return inverted.invert_variables()


def relator_annihilator(p: GroupPresentation, index: int = 0) -> LaurentPoly:
    """Module element p with [x, y].p = 1 forced by the relator."""
    if p.rank != 2:
        raise ValueError(f"relator_annihilator needs two generators, got {p.rank}")
    relator = p.relators[index]
    if any(exponent_sums(relator)):
        raise ValueError(f"Relator {relator} is not in the commutator subgroup")
    result = module_coefficient(relator)
    logger.debug(f"Annihilator of relator {index}: {result} ~ {result.format_factored()}")
    return result


def magnus_commutator_coefficient(p: EndoParams) -> LaurentPoly:
    """Coefficient of the image of [x, y] read off the Magnus representation."""
    x, y = generator_word(RANK2, 'x'), generator_word(RANK2, 'y')
    return module_coefficient(apply_endo(p.endomorphism(RANK2), commutator(x, y)))


def commutator_power_identity_check(p: int, q: int) -> Dict[str, bool]:
    """[x^p, y^q] = z.K(p, q) and [x^p, z^q] = z.q(1 - x^p) modulo F2''."""
    x, y = generator_word(RANK2, 'x'), generator_word(RANK2, 'y')
    z = commutator(x, y)
    xv, _ = _ring(('x', 'y'))
    return {
        'x^p,y^q': module_coefficient(commutator(power(x, p), power(y, q))) == geometric_ratio(p, q),
        'x^p,z^q': module_coefficient(commutator(power(x, p), power(z, q))) == q * (1 - xv ** p),
    }


@dataclass(frozen=True)
class AugmentationReport:
    r: int
    params: EndoParams
    lhs: Fraction
    rhs: Fraction

    @property
    def contradiction(self) -> bool:
        return self.lhs != self.rhs


def augmentation_contradiction(r: int, params: EndoParams) -> AugmentationReport:
    """Augment both sides of the would-be identity 2(1 + x^a y^b).coefficient = (1 - x^-r)(y - x^r)."""
    if not params.is_unimodular:
        raise ValueError(f"{params} has determinant {params.determinant}, not +-1")
    if r <= 0:
        raise ValueError("r must be positive")
    x, y = _ring(('x', 'y'))
    lhs = 2 * (1 + x ** params.a * y ** params.b) * commutator_coefficient(params)
    rhs = (1 - x ** -r) * (y - x ** r)
    return AugmentationReport(r, params, lhs.augment(), rhs.augment())


def g1_annihilator(r: int) -> LaurentPoly:
    """(1 - x^-r)(y - x^r)"""
    x, y = _ring(('x', 'y'))
    return (1 - x ** -r) * (y - x ** r)


def g2_annihilator() -> LaurentPoly:
    """2(1 + y)"""
    _, y = _ring(('x', 'y'))
    return 2 * (1 + y)


def random_unimodular_params(rng: random.Random, steps: int = 4, bound: int = 3) -> EndoParams:
    """Random GL2(Z) matrix from elementary row operations, plus random commutator exponents."""
    m = [[1, 0], [0, 1]]
    for _ in range(rng.randint(0, steps)):
        i = rng.randrange(2)
        k = rng.choice((1, -1))
        m[i] = [m[i][0] + k * m[1 - i][0], m[i][1] + k * m[1 - i][1]]
    if rng.random() < 0.5:
        m = [m[1], m[0]]
    return EndoParams(m[0][0], m[0][1], rng.randint(-bound, bound),
                      m[1][0], m[1][1], rng.randint(-bound, bound))
