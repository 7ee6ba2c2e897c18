"""Reduced words in finitely generated free groups."""
import re
import random
from dataclasses import dataclass
from typing import Dict, Iterable, Iterator, List, Sequence, Tuple, Union

from knotgroups.errors import AlphabetError, ParseError

LABEL_PATTERN = re.compile(r'^[A-Za-z][A-Za-z0-9_]*$')
_EXPONENT = re.compile(r'\^\(?(-?\d+)\)?')
_IDENTITY_FACTOR = re.compile(r'1(?:\^\(?-?\d+\)?)?(?=$|[\s*])')

Syllable = Tuple[int, int]


@dataclass(frozen=True)
class Generator:
    """A free generator: index within its alphabet plus display label."""
    id: int
    label: str


@dataclass(frozen=True)
class Alphabet:
    """Ordered generator list; ids are positions."""
    generators: Tuple[Generator, ...]

    def __post_init__(self):
        labels = [g.label for g in self.generators]
        if len(set(labels)) != len(labels):
            raise AlphabetError(f"Duplicate generator labels in {labels}")
        for position, gen in enumerate(self.generators):
            if gen.id != position:
                raise AlphabetError(f"Generator {gen.label} has id {gen.id}, expected {position}")
            if not LABEL_PATTERN.match(gen.label):
                raise AlphabetError(f"Invalid generator label '{gen.label}'")

    @classmethod
    def from_labels(cls, labels: Iterable[str]) -> 'Alphabet':
        return cls(tuple(Generator(i, label) for i, label in enumerate(labels)))

    @property
    def labels(self) -> Tuple[str, ...]:
        return tuple(g.label for g in self.generators)

    def __len__(self) -> int:
        return len(self.generators)

    def __iter__(self) -> Iterator[Generator]:
        return iter(self.generators)

    def __getitem__(self, gen_id: int) -> Generator:
        return self.generators[gen_id]

    def index(self, label: str) -> int:
        """Generator id for a label."""
        for gen in self.generators:
            if gen.label == label:
                return gen.id
        raise AlphabetError(f"Unknown generator '{label}' (alphabet {', '.join(self.labels)})")

    def extend(self, label: str) -> 'Alphabet':
        return Alphabet.from_labels(self.labels + (label,))

    def without(self, label: str) -> 'Alphabet':
        self.index(label)
        return Alphabet.from_labels(l for l in self.labels if l != label)


@dataclass(frozen=True)
class Word:
    """Freely reduced word stored as (generator id, nonzero exponent) syllables."""
    alphabet: Alphabet
    syllables: Tuple[Syllable, ...] = ()

    def __post_init__(self):
        previous = None
        for gen_id, exp in self.syllables:
            if exp == 0 or gen_id == previous or not 0 <= gen_id < len(self.alphabet):
                raise ValueError(f"Word syllables are not reduced: {self.syllables}")
            previous = gen_id

    def __mul__(self, other: 'Word') -> 'Word':
        return multiply(self, other)

    def __pow__(self, n: int) -> 'Word':
        return power(self, n)

    def __len__(self) -> int:
        return len(self.syllables)

    def __str__(self) -> str:
        return format_word(self)

    def inverse(self) -> 'Word':
        return invert(self)

    @property
    def is_identity(self) -> bool:
        return not self.syllables

    @property
    def letter_length(self) -> int:
        return sum(abs(exp) for _, exp in self.syllables)

    def letters(self) -> List[Syllable]:
        """Letter-by-letter expansion as (generator id, +1 or -1)."""
        out = []
        for gen_id, exp in self.syllables:
            step = 1 if exp > 0 else -1
            out.extend([(gen_id, step)] * abs(exp))
        return out

    def generators_used(self) -> set:
        return {gen_id for gen_id, _ in self.syllables}

    def relabel(self, target: Alphabet) -> 'Word':
        """Same word over another alphabet, matching generators by label."""
        mapping = {gen_id: target.index(self.alphabet[gen_id].label) for gen_id in self.generators_used()}
        return reduce(target, [(mapping[gen_id], exp) for gen_id, exp in self.syllables])


def _gen_id(alphabet: Alphabet, gen: Union[Generator, int, str]) -> int:
    if isinstance(gen, Generator):
        if gen.id >= len(alphabet) or alphabet[gen.id] != gen:
            raise AlphabetError(f"Generator {gen.label} is not in the alphabet")
        return gen.id
    if isinstance(gen, str):
        return alphabet.index(gen)
    if not 0 <= gen < len(alphabet):
        raise AlphabetError(f"Generator id {gen} out of range")
    return gen


def reduce(alphabet: Alphabet, raw: Iterable[Tuple[Union[Generator, int, str], int]]) -> Word:
    """Freely reduce a sequence of (generator, exponent) pairs."""
    stack: List[List[int]] = []
    for gen, exp in raw:
        gen_id = _gen_id(alphabet, gen)
        if exp == 0:
            continue
        if stack and stack[-1][0] == gen_id:
            stack[-1][1] += exp
            if stack[-1][1] == 0:
                stack.pop()
        else:
            stack.append([gen_id, exp])
    return Word(alphabet, tuple((g, e) for g, e in stack))


def identity(alphabet: Alphabet) -> Word:
    return Word(alphabet, ())


def generator_word(alphabet: Alphabet, gen: Union[Generator, int, str], exp: int = 1) -> Word:
    return reduce(alphabet, [(gen, exp)])


def _check_same(u: Word, v: Word):
    if u.alphabet != v.alphabet:
        raise AlphabetError(f"Alphabet mismatch: {u.alphabet.labels} vs {v.alphabet.labels}")


def multiply(u: Word, v: Word) -> Word:
    _check_same(u, v)
    return reduce(u.alphabet, u.syllables + v.syllables)


def invert(u: Word) -> Word:
    return Word(u.alphabet, tuple((g, -e) for g, e in reversed(u.syllables)))


def power(u: Word, n: int) -> Word:
    base = u if n >= 0 else invert(u)
    result = identity(u.alphabet)
    for _ in range(abs(n)):
        result = multiply(result, base)
    return result


def conjugate(u: Word, h: Word) -> Word:
    """u^h = h^-1 u h."""
    _check_same(u, h)
    return reduce(u.alphabet, invert(h).syllables + u.syllables + h.syllables)


def commutator(a: Word, b: Word, *rest: Word) -> Word:
    """[a, b] = a^-1 b^-1 a b, left-normed for more arguments."""
    _check_same(a, b)
    result = reduce(a.alphabet, invert(a).syllables + invert(b).syllables + a.syllables + b.syllables)
    for c in rest:
        result = commutator(result, c)
    return result


def exponent_sums(u: Word) -> Tuple[int, ...]:
    sums = [0] * len(u.alphabet)
    for gen_id, exp in u.syllables:
        sums[gen_id] += exp
    return tuple(sums)


def cyclic_reduce(u: Word) -> Word:
    """Strip cancelling first/last letters; merge a wrapping syllable."""
    syllables = list(u.syllables)
    while len(syllables) >= 2 and syllables[0][0] == syllables[-1][0]:
        gen_id = syllables[0][0]
        total = syllables[0][1] + syllables[-1][1]
        inner = syllables[1:-1]
        if total == 0:
            syllables = inner
        else:
            return Word(u.alphabet, tuple(inner + [(gen_id, total)]))
    return Word(u.alphabet, tuple(syllables))


def _rotations(letters: Sequence[Syllable]) -> Iterator[Tuple[Syllable, ...]]:
    for k in range(max(len(letters), 1)):
        yield tuple(letters[k:]) + tuple(letters[:k])


def cyclically_equivalent(u: Word, v: Word) -> bool:
    """Equal up to cyclic permutation and inversion."""
    _check_same(u, v)
    a = cyclic_reduce(u).letters()
    b = cyclic_reduce(v).letters()
    if len(a) != len(b):
        return False
    b_inv = [(g, -e) for g, e in reversed(b)]
    targets = {tuple(b), tuple(b_inv)}
    return any(rotation in targets for rotation in _rotations(a))


def rewrite_subword(u: Word, pattern: Word, replacement: Word) -> Word:
    """Replace literal occurrences of pattern (and of its inverse) letter by letter."""
    _check_same(u, pattern)
    _check_same(u, replacement)
    if pattern.is_identity:
        raise ValueError("Rewriting pattern must be nonempty")
    rules = [(pattern.letters(), replacement.letters()),
             (invert(pattern).letters(), invert(replacement).letters())]
    letters = u.letters()
    out: List[Syllable] = []
    i = 0
    while i < len(letters):
        for lhs, rhs in rules:
            if letters[i:i + len(lhs)] == lhs:
                out.extend(rhs)
                i += len(lhs)
                break
        else:
            out.append(letters[i])
            i += 1
    return reduce(u.alphabet, out)


def random_word(alphabet: Alphabet, length: int, rng: random.Random) -> Word:
    """Reduced word from `length` random letters."""
    raw = [(rng.randrange(len(alphabet)), rng.choice((1, -1))) for _ in range(length)]
    return reduce(alphabet, raw)


def parse_word(text: str, alphabet: Alphabet) -> Word:
    """Parse `x^-2*y*x1^3`; `*` and whitespace separate.

    A standalone `1` (optionally with an exponent) is the identity and may
    appear as a factor, so `x*1*y` reads as x*y. A `1` glued to other
    characters is not a factor.

    Labels are matched longest-first so `xy` reads as x*y when both are
    generators and `xy` is not.
    """
    stripped = text.strip()
    if stripped in ('', '1'):
        return identity(alphabet)
    labels = sorted(alphabet.labels, key=len, reverse=True)
    raw: List[Tuple[int, int]] = []
    pos = 0
    while pos < len(text):
        ch = text[pos]
        if ch.isspace() or ch == '*':
            pos += 1
            continue
        label = next((l for l in labels if text.startswith(l, pos)), None)
        if label is None:
            one = _IDENTITY_FACTOR.match(text, pos)
            if one and (pos == 0 or text[pos - 1].isspace() or text[pos - 1] == '*'):
                pos = one.end()
                continue
            raise ParseError(f"Unexpected '{text[pos:pos + 8]}' at position {pos} in '{text}'")
        pos += len(label)
        exp = 1
        match = _EXPONENT.match(text, pos)
        if match:
            exp = int(match.group(1))
            pos = match.end()
        raw.append((alphabet.index(label), exp))
    return reduce(alphabet, raw)


def format_word(u: Word) -> str:
    if u.is_identity:
        return '1'
    parts = []
    for gen_id, exp in u.syllables:
        label = u.alphabet[gen_id].label
        parts.append(label if exp == 1 else f"{label}^{exp}")
    return '*'.join(parts)


def parse_words(texts: Sequence[str], alphabet: Alphabet) -> List[Word]:
    return [parse_word(t, alphabet) for t in texts]


def letter_map(alphabet: Alphabet) -> Dict[str, Word]:
    """Label to single-letter word, handy when writing words programmatically."""
    return {g.label: generator_word(alphabet, g.id) for g in alphabet}
