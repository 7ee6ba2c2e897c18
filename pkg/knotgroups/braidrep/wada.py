"""Extended Wada representations of virtual braid groups into Aut(F_{n+1}).

F_{n+1} = <y, x1, ..., xn> with y first. Every representation sends the
virtual crossing v_i to x_i -> y x_{i+1} y^-1, x_{i+1} -> y^-1 x_i y and
never moves y.
"""
import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, List, Tuple

from knotgroups.braidrep.braids import (
    CLASSICAL, VBGenerator, VirtualBraidWord, braid, rho, sigma,
)
from knotgroups.errors import BraidError
from knotgroups.freegroup.endomorphism import (
    Endomorphism, apply_endo, compose_endo, identity_endo,
)
from knotgroups.freegroup.words import Alphabet, Word, generator_word, reduce
from knotgroups.presentation.presentation import GroupPresentation

logger = logging.getLogger(__name__)

W1, W2, W3 = 'W1', 'W2', 'W3'


@dataclass(frozen=True)
class WadaKind:
    variant: str
    r: int = 1

    def __post_init__(self):
        if self.variant not in (W1, W2, W3):
            raise ValueError(f"Unknown Wada representation '{self.variant}'")
        if self.variant == W1 and self.r <= 0:
            raise ValueError("W1 needs a positive r")

    def __str__(self) -> str:
        return f"W1,{self.r}" if self.variant == W1 else self.variant


@lru_cache(maxsize=None)
def braid_alphabet(n: int) -> Alphabet:
    return Alphabet.from_labels(['y'] + [f"x{i}" for i in range(1, n + 1)])


def _word(alphabet: Alphabet, *pieces: Tuple[str, int]) -> Word:
    return reduce(alphabet, [(alphabet.index(label), exp) for label, exp in pieces])


def _sigma_images(kind: WadaKind, xi: str, xj: str, sign: int, alphabet: Alphabet) -> Dict[str, Word]:
    """Images of x_i, x_{i+1} under sigma_i^sign."""
    r = kind.r
    if kind.variant == W1:
        if sign > 0:
            return {xi: _word(alphabet, (xi, r), (xj, 1), (xi, -r)), xj: _word(alphabet, (xi, 1))}
        return {xi: _word(alphabet, (xj, 1)), xj: _word(alphabet, (xj, -r), (xi, 1), (xj, r))}
    if kind.variant == W2:
        if sign > 0:
            return {xi: _word(alphabet, (xi, 1), (xj, -1), (xi, 1)), xj: _word(alphabet, (xi, 1))}
        return {xi: _word(alphabet, (xj, 1)), xj: _word(alphabet, (xj, 1), (xi, -1), (xj, 1))}
    if sign > 0:
        return {xi: _word(alphabet, (xi, 2), (xj, 1)),
                xj: _word(alphabet, (xj, -1), (xi, -1), (xj, 1))}
    return {xi: _word(alphabet, (xi, 1), (xj, -1), (xi, -1)),
            xj: _word(alphabet, (xi, 1), (xj, 2))}


def generator_action(kind: WadaKind, g: VBGenerator, n: int) -> Endomorphism:
    """Automorphism of F_{n+1} assigned to one braid letter."""
    if not 1 <= g.index <= n - 1:
        raise BraidError(f"{g} is out of range for {n} strands")
    alphabet = braid_alphabet(n)
    xi, xj = f"x{g.index}", f"x{g.index + 1}"
    if g.kind == CLASSICAL:
        images = _sigma_images(kind, xi, xj, g.sign, alphabet)
    else:
        images = {xi: _word(alphabet, ('y', 1), (xj, 1), ('y', -1)),
                  xj: _word(alphabet, ('y', -1), (xi, 1), ('y', 1))}
    return Endomorphism.from_mapping(alphabet, alphabet, images)


def represent(kind: WadaKind, b: VirtualBraidWord) -> Endomorphism:
    """phi_{g1} . phi_{g2} . ... . phi_{gk} for b = g1 g2 ... gk."""
    result = identity_endo(braid_alphabet(b.strands))
    for letter in b.letters:
        result = compose_endo(result, generator_action(kind, letter, b.strands))
    return result


def link_group(kind: WadaKind, b: VirtualBraidWord) -> GroupPresentation:
    """<y, x1..xn | x_i = phi(x_i)>, keeping all n relators."""
    phi = represent(kind, b)
    alphabet = phi.source
    relations = []
    for i in range(1, b.strands + 1):
        x = generator_word(alphabet, f"x{i}")
        relations.append((x, apply_endo(phi, x)))
    logger.debug(f"Link group of {b} under {kind}: {len(relations)} relations")
    return GroupPresentation.from_relations(alphabet, relations)


def virtual_braid_relations(n: int) -> List[Tuple[str, VirtualBraidWord, VirtualBraidWord]]:
    """Defining relations of VB_n as (name, lhs, rhs)."""
    relations = []
    one = braid(n, [])
    for i in range(1, n):
        relations.append((f"v{i}^2 = 1", braid(n, [rho(i), rho(i)]), one))
        if i + 1 < n:
            j = i + 1
            relations.append((f"s{i} s{j} s{i} = s{j} s{i} s{j}",
                              braid(n, [sigma(i), sigma(j), sigma(i)]),
                              braid(n, [sigma(j), sigma(i), sigma(j)])))
            relations.append((f"v{i} v{j} v{i} = v{j} v{i} v{j}",
                              braid(n, [rho(i), rho(j), rho(i)]),
                              braid(n, [rho(j), rho(i), rho(j)])))
            relations.append((f"s{i} v{j} v{i} = v{j} v{i} s{j}",
                              braid(n, [sigma(i), rho(j), rho(i)]),
                              braid(n, [rho(j), rho(i), sigma(j)])))
        for j in range(i + 2, n):
            for a, b, name in ((sigma(i), sigma(j), f"s{i} s{j}"), (rho(i), rho(j), f"v{i} v{j}"),
                               (sigma(i), rho(j), f"s{i} v{j}"), (rho(i), sigma(j), f"v{i} s{j}")):
                relations.append((f"{name} commute", braid(n, [a, b]), braid(n, [b, a])))
    return relations


def check_braid_relations(kind: WadaKind, n: int = 3) -> Dict[str, bool]:
    """Evaluate every defining relation as an endomorphism equality."""
    results = {}
    for name, lhs, rhs in virtual_braid_relations(n):
        results[name] = represent(kind, lhs) == represent(kind, rhs)
        if not results[name]:
            logger.warning(f"{kind}: relation {name} fails")
    return results


def fixes_y(e: Endomorphism) -> bool:
    y = generator_word(e.source, 'y')
    return apply_endo(e, y) == generator_word(e.target, 'y')


def inverse_action(kind: WadaKind, g: VBGenerator, n: int) -> Endomorphism:
    return generator_action(kind, g.inverse(), n)
