"""Fox derivatives with values in the abelianized group ring."""
import logging
from typing import Dict, List

from knotgroups.freegroup.words import Word, exponent_sums
from knotgroups.laurent.poly import LaurentPoly
from knotgroups.presentation.presentation import GroupPresentation

logger = logging.getLogger(__name__)

LEFT = 'left'
RIGHT = 'right'
CONVENTIONS = (LEFT, RIGHT)


def abelianize(w: Word) -> LaurentPoly:
    """Image of w in Z[g^{+-1}] with one commuting variable per generator."""
    variables = w.alphabet.labels
    return LaurentPoly(variables, {exponent_sums(w): 1})


def fox_derivative(w: Word, gen: str, convention: str = LEFT) -> LaurentPoly:
    """d_gen(w) in the abelianized ring.

    left:  d(uv) = d(u) + u * d(v)
    right: d(uv) = d(u) * v + d(v)
    """
    if convention not in CONVENTIONS:
        raise ValueError(f"Unknown Fox convention '{convention}'")
    alphabet = w.alphabet
    variables = alphabet.labels
    target = alphabet.index(gen)
    letters = w.letters()
    if convention == RIGHT:
        letters = list(reversed(letters))
    # Running abelianized prefix (left) or suffix (right); the ring is commutative.
    position = [0] * len(variables)
    terms: Dict[tuple, int] = {}
    for gen_id, sign in letters:
        if gen_id == target:
            # d(g) = 1, d(g^-1) = -g^-1
            exps = list(position)
            if sign < 0:
                exps[gen_id] -= 1
            key = tuple(exps)
            terms[key] = terms.get(key, 0) + sign
        position[gen_id] += sign
    return LaurentPoly(variables, terms)


def fox_gradient(w: Word, convention: str = LEFT) -> List[LaurentPoly]:
    return [fox_derivative(w, label, convention) for label in w.alphabet.labels]


def fox_jacobian(p: GroupPresentation, convention: str = LEFT) -> List[List[LaurentPoly]]:
    """Rows are relators, columns generators."""
    return [fox_gradient(r, convention) for r in p.relators]


def fundamental_identity_holds(w: Word, convention: str = LEFT) -> bool:
    """w - 1 == sum_g d_g(w) * (g - 1) after abelianization."""
    variables = w.alphabet.labels
    total = LaurentPoly.zero(variables)
    for label, derivative in zip(variables, fox_gradient(w, convention)):
        total = total + derivative * (LaurentPoly.variable(variables, label) - 1)
    ok = total == abelianize(w) - 1
    if not ok:
        logger.warning(f"Fundamental Fox identity fails for {w} ({convention})")
    return ok
