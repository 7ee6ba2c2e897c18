"""Hall bases of free Lie rings over small alphabets."""
import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import List, Optional, Tuple

from sympy import divisors
from sympy.ntheory import mobius

from knotgroups.errors import UnsupportedRangeError
from knotgroups.freegroup.words import Alphabet, Word, commutator, generator_word

logger = logging.getLogger(__name__)

MAX_CLASS = 5
MAX_RANK = 3


@dataclass(frozen=True)
class BasicCommutator:
    """Node of a Hall set: a generator, or [left, right] with left > right.

    `index` is the position in the Hall order (weight first, then order of
    construction), so comparisons between basic commutators are comparisons
    of indices.
    """
    index: int
    weight: int
    generator: Optional[int] = None
    left: Optional['BasicCommutator'] = None
    right: Optional['BasicCommutator'] = None

    @property
    def is_generator(self) -> bool:
        return self.generator is not None

    def leaves(self) -> List[int]:
        """Generator ids read left to right."""
        if self.is_generator:
            return [self.generator]
        return self.left.leaves() + self.right.leaves()

    def label(self, alphabet: Alphabet) -> str:
        """Left-normed bracket text, e.g. [y,x,x,y]."""
        if self.is_generator:
            return alphabet[self.generator].label
        parts = []
        node = self
        while not node.is_generator:
            parts.append(node.right.label(alphabet))
            node = node.left
        parts.append(node.label(alphabet))
        return '[' + ','.join(reversed(parts)) + ']'

    def word(self, alphabet: Alphabet) -> Word:
        """The group commutator with the same bracketing."""
        if self.is_generator:
            return generator_word(alphabet, self.generator)
        return commutator(self.left.word(alphabet), self.right.word(alphabet))


def check_range(rank: int, nilpotency_class: int):
    if not 1 <= rank <= MAX_RANK:
        raise UnsupportedRangeError(f"Rank {rank} is outside 1..{MAX_RANK}")
    if not 1 <= nilpotency_class <= MAX_CLASS:
        raise UnsupportedRangeError(f"Class {nilpotency_class} is outside 1..{MAX_CLASS}")


@lru_cache(maxsize=None)
def hall_basis(rank: int, nilpotency_class: int) -> Tuple[BasicCommutator, ...]:
    """Basic commutators of weight <= class in Hall order.

    [u, v] is basic when u and v are basic, u > v, and v >= u.right whenever
    u is itself a bracket.
    """
    check_range(rank, nilpotency_class)
    basis: List[BasicCommutator] = [BasicCommutator(i, 1, generator=i) for i in range(rank)]
    by_weight = {1: list(basis)}
    for weight in range(2, nilpotency_class + 1):
        pairs = []
        for left_weight in range(weight - 1, 0, -1):
            right_weight = weight - left_weight
            for u in by_weight[left_weight]:
                for v in by_weight[right_weight]:
                    if u.index <= v.index:
                        continue
                    if not u.is_generator and u.right.index > v.index:
                        continue
                    pairs.append((u, v))
        pairs.sort(key=lambda pair: (pair[0].index, pair[1].index))
        layer = []
        for u, v in pairs:
            node = BasicCommutator(len(basis), weight, left=u, right=v)
            basis.append(node)
            layer.append(node)
        by_weight[weight] = layer
    logger.debug(f"Hall basis rank {rank} class {nilpotency_class}: {len(basis)} elements")
    return tuple(basis)


def basis_of_weight(rank: int, weight: int) -> Tuple[BasicCommutator, ...]:
    return tuple(b for b in hall_basis(rank, weight) if b.weight == weight)


def witt_number(rank: int, weight: int) -> int:
    """Rank of the weight-k layer of the free Lie ring: (1/k) sum mu(d) n^(k/d)."""
    if weight < 1:
        raise ValueError("Weight must be positive")
    total = sum(mobius(d) * rank ** (weight // d) for d in divisors(weight))
    return int(total) // weight
