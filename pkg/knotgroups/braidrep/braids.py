"""Virtual braid words: classical crossings s_i, their inverses S_i and virtual crossings v_i."""
import re
from dataclasses import dataclass
from typing import List, Sequence, Tuple

from knotgroups.errors import BraidError, ParseError

CLASSICAL = 'sigma'
VIRTUAL = 'rho'

_TOKEN = re.compile(r'^([sSv])(\d+)$')


@dataclass(frozen=True)
class VBGenerator:
    """sigma_i^sign or rho_i (sign is ignored for rho, which is an involution)."""
    kind: str
    index: int
    sign: int = 1

    def __post_init__(self):
        if self.kind not in (CLASSICAL, VIRTUAL):
            raise BraidError(f"Unknown braid generator kind '{self.kind}'")
        if self.sign not in (1, -1):
            raise BraidError("Braid generator sign must be +1 or -1")
        if self.index < 1:
            raise BraidError(f"Braid generator index must be positive, got {self.index}")

    def inverse(self) -> 'VBGenerator':
        if self.kind == VIRTUAL:
            return self
        return VBGenerator(self.kind, self.index, -self.sign)

    def __str__(self) -> str:
        if self.kind == VIRTUAL:
            return f"v{self.index}"
        return f"{'s' if self.sign > 0 else 'S'}{self.index}"


def sigma(i: int, sign: int = 1) -> VBGenerator:
    return VBGenerator(CLASSICAL, i, sign)


def rho(i: int) -> VBGenerator:
    return VBGenerator(VIRTUAL, i)


@dataclass(frozen=True)
class VirtualBraidWord:
    strands: int
    letters: Tuple[VBGenerator, ...] = ()

    def __post_init__(self):
        if self.strands < 1:
            raise BraidError("A braid needs at least one strand")
        for letter in self.letters:
            if letter.index > self.strands - 1:
                raise BraidError(f"{letter} is out of range for {self.strands} strands")

    def __mul__(self, other: 'VirtualBraidWord') -> 'VirtualBraidWord':
        if other.strands != self.strands:
            raise BraidError("Braid words on different strand counts")
        return VirtualBraidWord(self.strands, self.letters + other.letters)

    def inverse(self) -> 'VirtualBraidWord':
        return VirtualBraidWord(self.strands, tuple(g.inverse() for g in reversed(self.letters)))

    def __str__(self) -> str:
        return ' '.join(str(g) for g in self.letters) or '1'


def braid(strands: int, letters: Sequence[VBGenerator]) -> VirtualBraidWord:
    return VirtualBraidWord(strands, tuple(letters))


def parse_braid(text: str, strands: int) -> VirtualBraidWord:
    """Whitespace-separated tokens s<i>, S<i>, v<i>; an empty string or `1` is the trivial braid."""
    letters: List[VBGenerator] = []
    stripped = text.strip()
    if stripped in ('', '1'):
        return VirtualBraidWord(strands, ())
    for token in stripped.replace(',', ' ').split():
        match = _TOKEN.match(token)
        if not match:
            raise ParseError(f"Bad braid token '{token}' (expected s<i>, S<i> or v<i>)")
        letter, index = match.group(1), int(match.group(2))
        if letter == 'v':
            letters.append(rho(index))
        else:
            letters.append(sigma(index, 1 if letter == 's' else -1))
    return VirtualBraidWord(strands, tuple(letters))
