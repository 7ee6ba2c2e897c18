"""Embedded presentations of the virtual trefoil groups, the Kishino knot group and the unknot."""
import logging
import re
from typing import List, Optional, Tuple

from knotgroups.braidrep.braids import VirtualBraidWord
from knotgroups.braidrep.wada import W3, WadaKind, link_group
from knotgroups.errors import ParseError
from knotgroups.freegroup.words import (
    Alphabet, Word, conjugate, generator_word, identity, invert, multiply, parse_word, reduce,
)
from knotgroups.presentation.presentation import GroupPresentation

logger = logging.getLogger(__name__)

FIXTURE_NAMES = ('trefoil-g1', 'trefoil-g2', 'trefoil-g3', 'kishino-g3', 'unknot-g3')

_NAME = re.compile(r'^([a-z0-9-]+?)(?:\((\d+)\))?$')

# Braid whose closure is the virtual trefoil; under W3 its link group is trefoil-g3.
VIRTUAL_TREFOIL_BRAID = "s1 s1 v1"


def _word(alphabet: Alphabet, *pieces: Tuple[str, int]) -> Word:
    return reduce(alphabet, [(alphabet.index(label), exp) for label, exp in pieces])


def trefoil_g1(r: int) -> GroupPresentation:
    """x^-r y^-1 x y x^r = y^-2 x^r y x y^-1 x^-r y^2"""
    if r <= 0:
        raise ValueError("trefoil-g1 needs a positive r")
    alphabet = Alphabet.from_labels(['x', 'y'])
    lhs = _word(alphabet, ('x', -r), ('y', -1), ('x', 1), ('y', 1), ('x', r))
    rhs = _word(alphabet, ('y', -2), ('x', r), ('y', 1), ('x', 1), ('y', -1), ('x', -r), ('y', 2))
    return GroupPresentation.from_relations(alphabet, [(lhs, rhs)])


def trefoil_g2() -> GroupPresentation:
    """x y^-1 x^-1 y x = y^-2 x y x^-1 y^-1 x y^2"""
    alphabet = Alphabet.from_labels(['x', 'y'])
    lhs = parse_word("x*y^-1*x^-1*y*x", alphabet)
    rhs = parse_word("y^-2*x*y*x^-1*y^-1*x*y^2", alphabet)
    return GroupPresentation.from_relations(alphabet, [(lhs, rhs)])


def trefoil_g3() -> GroupPresentation:
    alphabet = Alphabet.from_labels(['x1', 'x2', 'y'])
    relations = [
        (parse_word("x1", alphabet), parse_word("y*x2^-1*x1^-1*x2^-1*x1^-1*x2*y^-1", alphabet)),
        (parse_word("x2", alphabet), parse_word("y^-1*x1^2*x2*x1*x2*y", alphabet)),
    ]
    return GroupPresentation.from_relations(alphabet, relations)


def unknot_g3() -> GroupPresentation:
    """Link group of the trivial one-strand braid with its trivial relator dropped."""
    return link_group(WadaKind(W3), VirtualBraidWord(1, ())).without_trivial()


def kishino_alphabet() -> Alphabet:
    return Alphabet.from_labels(['a', 'b', 'c', 'd'])


def _conj(alphabet: Alphabet, label: str, exp: int, h: Word) -> Word:
    """(label^exp)^h = h^-1 label^exp h."""
    return conjugate(generator_word(alphabet, label, exp), h)


def kishino_relations(relation_one: Optional[str] = None) -> List[Tuple[Word, Word]]:
    """Relations (1)-(3) of G3 of the Kishino knot in a, b, c, d.

    g^h is h^-1 g h, so c^{-2d^-1} = d c^-2 d^-1 and b^{2d} = d^-1 b^2 d.
    Relation (1) reads the unprinted symbol as b; `relation_one` replaces it
    with a `lhs = rhs` string.
    """
    alphabet = kishino_alphabet()
    d = generator_word(alphabet, 'd')
    d_inv = invert(d)
    a = generator_word(alphabet, 'a')
    a_inv = invert(a)
    c = generator_word(alphabet, 'c')
    b_neg_d = _conj(alphabet, 'b', -1, d)
    c_neg2_dinv = _conj(alphabet, 'c', -2, d_inv)

    def product(*words: Word) -> Word:
        result = identity(alphabet)
        for w in words:
            result = multiply(result, w)
        return result

    if relation_one is None:
        one = (
            product(d_inv, b_neg_d, c_neg2_dinv, b_neg_d, c_neg2_dinv, a, _conj(alphabet, 'a', -2, d), d),
            product(a_inv, b_neg_d, c_neg2_dinv, a),
        )
    else:
        if '=' not in relation_one:
            raise ParseError("kishino relation (1) override must be written lhs = rhs")
        lhs_text, rhs_text = relation_one.split('=', 1)
        one = (parse_word(lhs_text, alphabet), parse_word(rhs_text, alphabet))
    two = (
        product(invert(c), generator_word(alphabet, 'b'), c),
        product(b_neg_d, _conj(alphabet, 'c', 1, d_inv), _conj(alphabet, 'b', 1, d)),
    )
    three = (
        c,
        product(b_neg_d, c_neg2_dinv, b_neg_d, c_neg2_dinv, a, _conj(alphabet, 'a', -1, d), a_inv,
                _conj(alphabet, 'c', 2, d_inv), _conj(alphabet, 'b', 2, d)),
    )
    return [one, two, three]


def kishino_g3(relation_one: Optional[str] = None, include_relation_one: bool = True) -> GroupPresentation:
    relations = kishino_relations(relation_one)
    if not include_relation_one:
        relations = relations[1:]
    return GroupPresentation.from_relations(kishino_alphabet(), relations)


def parse_fixture_name(name: str, r: Optional[int] = None) -> Tuple[str, Optional[int]]:
    """Accept `trefoil-g1(2)` as well as `trefoil-g1` with a separate r."""
    match = _NAME.match(name.strip())
    if not match or match.group(1) not in FIXTURE_NAMES:
        raise ValueError(f"Unknown fixture '{name}' (known: {', '.join(FIXTURE_NAMES)})")
    base, inline_r = match.group(1), match.group(2)
    if inline_r is not None:
        if r is not None and r != int(inline_r):
            raise ValueError(f"Conflicting r for {name}: {r}")
        r = int(inline_r)
    if base != 'trefoil-g1' and r is not None and inline_r is not None:
        raise ValueError(f"Fixture {base} takes no parameter")
    return base, r


def fixture(name: str, r: Optional[int] = None, relation_one: Optional[str] = None,
            include_relation_one: bool = True) -> GroupPresentation:
    """Presentation constant by name."""
    base, r = parse_fixture_name(name, r)
    logger.debug(f"Loading fixture {base} (r={r})")
    if base == 'trefoil-g1':
        return trefoil_g1(1 if r is None else r)
    if base == 'trefoil-g2':
        return trefoil_g2()
    if base == 'trefoil-g3':
        return trefoil_g3()
    if base == 'kishino-g3':
        return kishino_g3(relation_one, include_relation_one)
    return unknot_g3()
