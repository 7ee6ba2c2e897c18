"""Endomorphisms between free groups given by generator images."""
import logging
from dataclasses import dataclass
from typing import Dict, Mapping, Tuple, Union

from knotgroups.errors import AlphabetError
from knotgroups.freegroup.words import (
    Alphabet, Word, generator_word, identity, invert, parse_word, reduce, format_word,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Endomorphism:
    """Homomorphism F(source) -> F(target) fixed by the images of the source generators."""
    source: Alphabet
    target: Alphabet
    images: Tuple[Word, ...]

    def __post_init__(self):
        if len(self.images) != len(self.source):
            raise AlphabetError(
                f"Expected {len(self.source)} generator images, got {len(self.images)}")
        for image in self.images:
            if image.alphabet != self.target:
                raise AlphabetError("Endomorphism image is not over the target alphabet")

    @classmethod
    def from_mapping(cls, source: Alphabet, target: Alphabet,
                     images: Mapping[str, Union[Word, str]]) -> 'Endomorphism':
        """Images keyed by source label; unlisted generators must exist in target and are fixed."""
        words = []
        for gen in source:
            image = images.get(gen.label)
            if image is None:
                image = generator_word(target, target.index(gen.label))
            elif isinstance(image, str):
                image = parse_word(image, target)
            words.append(image)
        return cls(source, target, tuple(words))

    def image(self, label: str) -> Word:
        return self.images[self.source.index(label)]

    def __call__(self, u: Word) -> Word:
        return apply_endo(self, u)

    def __str__(self) -> str:
        return ', '.join(f"{g.label} -> {format_word(img)}" for g, img in zip(self.source, self.images))


def identity_endo(alphabet: Alphabet) -> Endomorphism:
    return Endomorphism(alphabet, alphabet, tuple(generator_word(alphabet, g.id) for g in alphabet))


def apply_endo(e: Endomorphism, u: Word) -> Word:
    """Substitute generator images into u and freely reduce."""
    if u.alphabet != e.source:
        raise AlphabetError(
            f"Word over {u.alphabet.labels} but endomorphism source is {e.source.labels}")
    inverses: Dict[int, Word] = {}
    raw = []
    for gen_id, exp in u.syllables:
        if exp > 0:
            piece = e.images[gen_id]
        else:
            if gen_id not in inverses:
                inverses[gen_id] = invert(e.images[gen_id])
            piece = inverses[gen_id]
        for _ in range(abs(exp)):
            raw.extend(piece.syllables)
    if not raw:
        return identity(e.target)
    return reduce(e.target, raw)


def compose_endo(e1: Endomorphism, e2: Endomorphism) -> Endomorphism:
    """(e1 . e2)(g) = e1(e2(g))."""
    if e2.target != e1.source:
        raise AlphabetError("compose_endo requires target of e2 to equal source of e1")
    return Endomorphism(e2.source, e1.target, tuple(apply_endo(e1, img) for img in e2.images))


def is_identity_endo(e: Endomorphism) -> bool:
    return e.source == e.target and e == identity_endo(e.source)
