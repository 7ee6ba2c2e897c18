"""Finite group presentations and Tietze transformations."""
import logging
import random
from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple, Union

from knotgroups.errors import TietzeError
from knotgroups.freegroup.endomorphism import Endomorphism, apply_endo
from knotgroups.freegroup.words import (
    Alphabet, Generator, Word, cyclic_reduce, cyclically_equivalent, format_word,
    generator_word, invert, multiply, parse_word, random_word,
)

logger = logging.getLogger(__name__)

Sides = Optional[Tuple[Word, Word]]


@dataclass(frozen=True)
class GroupPresentation:
    """Generators plus reduced relators; `sides` keeps lhs = rhs forms for printing."""
    alphabet: Alphabet
    relators: Tuple[Word, ...]
    sides: Tuple[Sides, ...] = field(default=(), compare=False)

    def __post_init__(self):
        for relator in self.relators:
            if relator.alphabet != self.alphabet:
                raise TietzeError("Relator is not over the presentation alphabet")
        if self.sides and len(self.sides) != len(self.relators):
            raise ValueError("sides must align with relators")

    @classmethod
    def from_relations(cls, alphabet: Alphabet,
                       relations: Sequence[Tuple[Word, Word]]) -> 'GroupPresentation':
        """Store each relation lhs = rhs as the relator lhs * rhs^-1."""
        relators = tuple(multiply(lhs, invert(rhs)) for lhs, rhs in relations)
        return cls(alphabet, relators, tuple(relations))

    @classmethod
    def from_strings(cls, generators: Sequence[str], relators: Sequence[str]) -> 'GroupPresentation':
        """Relator strings may be written `lhs = rhs`."""
        alphabet = Alphabet.from_labels(generators)
        words: List[Word] = []
        sides: List[Sides] = []
        for text in relators:
            if '=' in text:
                lhs_text, rhs_text = text.split('=', 1)
                lhs, rhs = parse_word(lhs_text, alphabet), parse_word(rhs_text, alphabet)
                words.append(multiply(lhs, invert(rhs)))
                sides.append((lhs, rhs))
            else:
                words.append(parse_word(text, alphabet))
                sides.append(None)
        return cls(alphabet, tuple(words), tuple(sides))

    @property
    def generators(self) -> Tuple[Generator, ...]:
        return self.alphabet.generators

    @property
    def rank(self) -> int:
        return len(self.alphabet)

    def side(self, index: int) -> Sides:
        return self.sides[index] if self.sides else None

    def without_trivial(self) -> 'GroupPresentation':
        keep = [i for i, r in enumerate(self.relators) if not r.is_identity]
        return GroupPresentation(self.alphabet, tuple(self.relators[i] for i in keep),
                                 tuple(self.side(i) for i in keep))

    def relator_strings(self) -> List[str]:
        return [format_word(r) for r in self.relators]

    def relation_strings(self) -> List[str]:
        """Two-sided form where known, `r = 1` otherwise."""
        lines = []
        for i, relator in enumerate(self.relators):
            sides = self.side(i)
            if sides is not None:
                lines.append(f"{format_word(sides[0])} = {format_word(sides[1])}")
            else:
                lines.append(f"{format_word(relator)} = 1")
        return lines

    def __str__(self) -> str:
        return f"< {', '.join(self.alphabet.labels)} | {'; '.join(self.relation_strings())} >"


@dataclass(frozen=True)
class AddGenerator:
    label: str
    word: Union[str, Word]


@dataclass(frozen=True)
class RemoveGenerator:
    label: str


@dataclass(frozen=True)
class AddRelatorProduct:
    i: int
    j: int


@dataclass(frozen=True)
class RemoveRedundantRelator:
    index: int


TietzeMove = Union[AddGenerator, RemoveGenerator, AddRelatorProduct, RemoveRedundantRelator]


def _lift(p: GroupPresentation, target: Alphabet) -> List[Word]:
    return [r.relabel(target) for r in p.relators]


def tietze(p: GroupPresentation, move: TietzeMove) -> GroupPresentation:
    """Apply one Tietze transformation; raises TietzeError when inapplicable."""
    if isinstance(move, AddGenerator):
        return _add_generator(p, move)
    if isinstance(move, RemoveGenerator):
        return _remove_generator(p, move.label)
    if isinstance(move, AddRelatorProduct):
        n = len(p.relators)
        if not (0 <= move.i < n and 0 <= move.j < n):
            raise TietzeError(f"Relator indices {move.i}, {move.j} out of range for {n} relators")
        product = multiply(p.relators[move.i], p.relators[move.j])
        return GroupPresentation(p.alphabet, p.relators + (product,), _sides_plus(p, 1))
    if isinstance(move, RemoveRedundantRelator):
        return _remove_redundant(p, move.index)
    raise TietzeError(f"Unknown Tietze move {move!r}")


def _sides_plus(p: GroupPresentation, extra: int) -> Tuple[Sides, ...]:
    if not p.sides:
        return ()
    return p.sides + (None,) * extra


def _add_generator(p: GroupPresentation, move: AddGenerator) -> GroupPresentation:
    if move.label in p.alphabet.labels:
        raise TietzeError(f"Generator '{move.label}' already present")
    alphabet = p.alphabet.extend(move.label)
    word = move.word if isinstance(move.word, Word) else parse_word(move.word, p.alphabet)
    if word.alphabet != p.alphabet:
        raise TietzeError("Defining word must be over the existing generators")
    z = generator_word(alphabet, move.label)
    lifted = word.relabel(alphabet)
    relators = tuple(_lift(p, alphabet)) + (multiply(z, invert(lifted)),)
    sides = tuple(None if s is None else (s[0].relabel(alphabet), s[1].relabel(alphabet))
                  for s in p.sides) + ((z, lifted),) if p.sides else ()
    logger.debug(f"Tietze: added generator {move.label} = {format_word(word)}")
    return GroupPresentation(alphabet, relators, sides)


def _solve_for(relator: Word, gen_id: int) -> Optional[Word]:
    """If gen occurs exactly once with exponent +-1, return the word it equals."""
    positions = [k for k, (g, _) in enumerate(relator.syllables) if g == gen_id]
    if len(positions) != 1 or abs(relator.syllables[positions[0]][1]) != 1:
        return None
    k = positions[0]
    alphabet = relator.alphabet
    u = Word(alphabet, relator.syllables[:k])
    v = Word(alphabet, relator.syllables[k + 1:])
    if relator.syllables[k][1] == 1:
        # u g v = 1  =>  g = u^-1 v^-1
        return multiply(invert(u), invert(v))
    # u g^-1 v = 1  =>  g = v u
    return multiply(v, u)


def defining_relator(p: GroupPresentation, label: str) -> Optional[Tuple[int, Word]]:
    """First relator that expresses the generator through the others, with that expression."""
    gen_id = p.alphabet.index(label)
    for index, relator in enumerate(p.relators):
        solution = _solve_for(relator, gen_id)
        if solution is not None:
            return index, solution
    return None


def _remove_generator(p: GroupPresentation, label: str) -> GroupPresentation:
    found = defining_relator(p, label)
    if found is not None:
        index, solution = found
        rest = GroupPresentation(
            p.alphabet,
            tuple(r for i, r in enumerate(p.relators) if i != index),
            tuple(s for i, s in enumerate(p.sides) if i != index) if p.sides else ())
        logger.debug(f"Tietze: removed generator {label} = {format_word(solution)}")
        return _eliminate(rest, label, solution, drop_trivial=False)
    raise TietzeError(f"No relator determines generator '{label}' (it must occur exactly once in one relator)")


def _eliminate(p: GroupPresentation, label: str, word: Word, drop_trivial: bool) -> GroupPresentation:
    target = p.alphabet.without(label)
    images = {label: word.relabel(target)}
    endo = Endomorphism.from_mapping(p.alphabet, target, images)
    relators = []
    sides: List[Sides] = []
    for i, relator in enumerate(p.relators):
        image = apply_endo(endo, relator)
        if drop_trivial and cyclic_reduce(image).is_identity:
            logger.debug(f"Relator {format_word(relator)} became trivial")
            continue
        relators.append(image)
        s = p.side(i)
        sides.append(None if s is None else (apply_endo(endo, s[0]), apply_endo(endo, s[1])))
    return GroupPresentation(target, tuple(relators), tuple(sides) if p.sides else ())


def _remove_redundant(p: GroupPresentation, index: int) -> GroupPresentation:
    n = len(p.relators)
    if not 0 <= index < n:
        raise TietzeError(f"Relator index {index} out of range for {n} relators")
    candidate = p.relators[index]
    others = [r for i, r in enumerate(p.relators) if i != index]
    if not _is_consequence(candidate, others):
        raise TietzeError(f"Relator {format_word(candidate)} is not recognizably redundant")
    return GroupPresentation(
        p.alphabet, tuple(others),
        tuple(s for i, s in enumerate(p.sides) if i != index) if p.sides else ())


def _is_consequence(candidate: Word, others: Sequence[Word]) -> bool:
    """Trivial, a cyclic variant of another relator, or a product of two others."""
    if cyclic_reduce(candidate).is_identity:
        return True
    if any(cyclically_equivalent(candidate, r) for r in others):
        return True
    signed = [w for r in others for w in (r, invert(r))]
    for a in signed:
        for b in signed:
            if multiply(a, b) == candidate:
                return True
    return False


def substitute_generator(p: GroupPresentation, label: str, w: Union[Word, str]) -> GroupPresentation:
    """Replace every occurrence of a generator by w and drop relators that become trivial."""
    gen_id = p.alphabet.index(label)
    if isinstance(w, str):
        w = parse_word(w, p.alphabet)
    if w == generator_word(p.alphabet, gen_id):
        return p
    if gen_id in w.generators_used():
        raise TietzeError(f"Substituted word for '{label}' must not contain it")
    return _eliminate(p, label, w, drop_trivial=True)


def random_tietze_moves(p: GroupPresentation, count: int,
                        rng: random.Random) -> Tuple[GroupPresentation, List[TietzeMove]]:
    """Apply `count` random applicable moves; returns the result and the moves used."""
    moves: List[TietzeMove] = []
    added: List[str] = []
    current = p
    fresh = 0
    for _ in range(count):
        choice = rng.randrange(4)
        move: Optional[TietzeMove] = None
        if choice == 0 or not current.relators:
            while f"z{fresh}" in current.alphabet.labels:
                fresh += 1
            label = f"z{fresh}"
            fresh += 1
            move = AddGenerator(label, random_word(current.alphabet, rng.randint(0, 4), rng))
            added.append(label)
        elif choice == 1 and added:
            label = added.pop()
            move = RemoveGenerator(label)
        elif choice == 2:
            i = rng.randrange(len(current.relators))
            j = rng.randrange(len(current.relators))
            move = AddRelatorProduct(i, j)
        else:
            n = len(current.relators)
            i, j = rng.randrange(n), rng.randrange(n)
            current = tietze(current, AddRelatorProduct(i, j))
            moves.append(AddRelatorProduct(i, j))
            move = RemoveRedundantRelator(n)
        try:
            current = tietze(current, move)
            moves.append(move)
        except TietzeError:
            logger.debug(f"Skipped inapplicable move {move}")
    return current, moves
