"""Conjugated relation families x_i = y^-i x y^i behind the two-generator trefoil relators."""
import logging
from dataclasses import dataclass
from typing import Tuple

from knotgroups.braidrep.fixtures import trefoil_g1, trefoil_g2
from knotgroups.freegroup.endomorphism import Endomorphism, apply_endo
from knotgroups.freegroup.words import (
    Alphabet, Word, conjugate, format_word, generator_word, invert, multiply, reduce,
)

logger = logging.getLogger(__name__)

FAMILY_ALPHABET = Alphabet.from_labels(['x0', 'x1', 'x2'])


@dataclass(frozen=True)
class FamilyCheck:
    family: str
    relation: str
    substituted: str
    fixture_relator: str
    matches: bool


def shift_substitution(target: Alphabet) -> Endomorphism:
    """x_i -> y^-i x y^i."""
    x = generator_word(target, "x")
    images = {f"x{i}": conjugate(x, reduce(target, [(target.index('y'), i)])) for i in range(3)}
    return Endomorphism.from_mapping(FAMILY_ALPHABET, target, images)


def _w(*pieces: Tuple[str, int]) -> Word:
    return reduce(FAMILY_ALPHABET, [(FAMILY_ALPHABET.index(label), exp) for label, exp in pieces])


def g1_family(r: int, corrected: bool = True) -> Tuple[Word, Word]:
    """x0^-r x1 x0^r = x2^{s} x1 x2^{-s} with s = r, or s = -r for the sign-flipped variant."""
    s = r if corrected else -r
    return _w(('x0', -r), ('x1', 1), ('x0', r)), _w(('x2', s), ('x1', 1), ('x2', -s))


def g2_family() -> Tuple[Word, Word]:
    """x0 x1^-1 x0 = x2 x1^-1 x2"""
    return _w(('x0', 1), ('x1', -1), ('x0', 1)), _w(('x2', 1), ('x1', -1), ('x2', 1))


def rewriting_check(family: str, r: int = 1, corrected: bool = True) -> FamilyCheck:
    """Substitute into the family relation and compare with the fixture relator by free reduction."""
    if family == 'trefoil-g1':
        presentation = trefoil_g1(r)
        lhs, rhs = g1_family(r, corrected)
        name = f"trefoil-g1({r}){'' if corrected else ' printed'}"
    elif family == 'trefoil-g2':
        presentation = trefoil_g2()
        lhs, rhs = g2_family()
        name = 'trefoil-g2'
    else:
        raise ValueError(f"No relation family for '{family}'")
    substitution = shift_substitution(presentation.alphabet)
    relator = multiply(apply_endo(substitution, lhs), invert(apply_endo(substitution, rhs)))
    expected = presentation.relators[0]
    matches = relator == expected
    if not matches:
        logger.info(f"Family {name} gives {format_word(relator)}, fixture has {format_word(expected)}")
    return FamilyCheck(
        family=name,
        relation=f"{format_word(lhs)} = {format_word(rhs)}",
        substituted=format_word(relator),
        fixture_relator=format_word(expected),
        matches=matches,
    )
