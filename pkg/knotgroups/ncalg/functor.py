"""Group words to power series: x -> 1 + X, x^-1 -> 1 - X + X^2 - ..."""
import logging
from dataclasses import dataclass
from typing import Callable, Dict, List, Optional, Tuple

from knotgroups.braidrep.fixtures import fixture
from knotgroups.errors import AlgebraSpecError, AlphabetError
from knotgroups.freegroup.words import Alphabet, Word
from knotgroups.ncalg.series import AlgebraSpec, NcPoly, b2
from knotgroups.presentation.presentation import GroupPresentation

logger = logging.getLogger(__name__)


def series_letters(alphabet: Alphabet) -> Dict[str, str]:
    """Generator label -> algebra letter (x -> X, z0 -> Z0)."""
    letters = {label: label.upper() for label in alphabet.labels}
    if len(set(letters.values())) != len(letters):
        raise AlphabetError(f"Generator labels {alphabet.labels} collide as algebra letters")
    return letters


def spec_for(alphabet: Alphabet, spec: AlgebraSpec) -> AlgebraSpec:
    """Spec extended by any letters the alphabet needs."""
    return spec.extended(series_letters(alphabet).values())


class SeriesCache:
    """Images of generators and their inverses for one spec."""

    def __init__(self, spec: AlgebraSpec):
        self.spec = spec
        self._images: Dict[Tuple[str, int], NcPoly] = {}

    def image(self, letter: str, sign: int) -> NcPoly:
        key = (letter, sign)
        if key not in self._images:
            base = NcPoly.one(self.spec) + NcPoly.letter(self.spec, letter)
            if sign < 0:
                base = base.inverse()
            self._images[key] = base
        return self._images[key]


def group_to_series(w: Word, spec: AlgebraSpec, cache: Optional[SeriesCache] = None) -> NcPoly:
    """Image of w with every generator sent to 1 + its letter."""
    letters = series_letters(w.alphabet)
    missing = [l for l in letters.values() if l not in spec.letters]
    if missing:
        raise AlgebraSpecError(f"Spec {spec.describe()} lacks letters {missing}")
    cache = cache if cache is not None and cache.spec == spec else SeriesCache(spec)
    result = NcPoly.one(spec)
    for gen_id, exp in w.syllables:
        factor = cache.image(letters[w.alphabet[gen_id].label], 1 if exp > 0 else -1)
        for _ in range(abs(exp)):
            result = result * factor
    return result


def relator_series(p: GroupPresentation, spec: AlgebraSpec) -> List[NcPoly]:
    """f_j = r_j(1 + X_1, ..., 1 + X_n) - 1."""
    cache = SeriesCache(spec)
    return [group_to_series(r, spec, cache) - 1 for r in p.relators]


def relation_difference(lhs: Word, rhs: Word, spec: AlgebraSpec) -> NcPoly:
    cache = SeriesCache(spec)
    return group_to_series(lhs, spec, cache) - group_to_series(rhs, spec, cache)


@dataclass(frozen=True)
class RelationCheck:
    spec: AlgebraSpec
    residuals: Tuple[NcPoly, ...]

    @property
    def holds(self) -> bool:
        return all(f.is_zero for f in self.residuals)

    def residual_strings(self) -> List[str]:
        return [str(f) for f in self.residuals]


def verify_relation(p: GroupPresentation, spec: AlgebraSpec) -> RelationCheck:
    """Whether x -> 1 + X extends to the group: every relator series reduces to 1."""
    spec = spec_for(p.alphabet, spec)
    check = RelationCheck(spec, tuple(relator_series(p, spec)))
    if not check.holds:
        logger.info(f"Relators do not vanish in {spec.describe()}: {check.residual_strings()}")
    return check


def _g1_printed(r: int) -> List[Tuple[int, str]]:
    """(XY)^2 - (YX)^2 Y + r(XY)^3 - r^2 (YX)^3 - 2 r^2 (YX)^3 Y"""
    return [(1, 'XYXY'), (-1, 'YXYXY'), (r, 'XYXYXY'), (-r * r, 'YXYXYX'), (-2 * r * r, 'YXYXYXY')]


def _g2_printed(r: int) -> List[Tuple[int, str]]:
    """2XY - 2YX - 4YXY - (YX)^3 + (XY)^3 - 2(YX)^3 Y"""
    return [(2, 'XY'), (-2, 'YX'), (-4, 'YXY'), (-1, 'YXYXYX'), (1, 'XYXYXY'), (-2, 'YXYXYXY')]


PRINTED_EXPANSIONS: Dict[str, Callable[[int], List[Tuple[int, str]]]] = {
    'trefoil-g1': _g1_printed,
    'trefoil-g2': _g2_printed,
}


@dataclass(frozen=True)
class ExpansionReport:
    fixture: str
    spec: AlgebraSpec
    printed: NcPoly
    computed: NcPoly

    @property
    def matches(self) -> bool:
        """Equal to the printed relation up to an overall sign."""
        return self.computed == self.printed or self.computed == -self.printed

    @property
    def discrepancy(self) -> NcPoly:
        return self.computed - self.printed


def expansion_report(name: str, r: int = 1, spec: Optional[AlgebraSpec] = None) -> ExpansionReport:
    """Set the printed expansion of a trefoil relation next to the computed lhs - rhs."""
    if name not in PRINTED_EXPANSIONS:
        raise ValueError(f"No printed expansion for '{name}' (have {', '.join(PRINTED_EXPANSIONS)})")
    spec = spec or b2()
    p = fixture(name, r if name == 'trefoil-g1' else None)
    lhs, rhs = p.side(0)
    computed = relation_difference(lhs, rhs, spec)
    printed = NcPoly.from_terms(spec, PRINTED_EXPANSIONS[name](r))
    report = ExpansionReport(name if name != 'trefoil-g1' else f"{name}({r})", spec, printed, computed)
    if not report.matches:
        logger.warning(f"{report.fixture}: printed expansion {printed} differs from computed {computed}")
    return report
