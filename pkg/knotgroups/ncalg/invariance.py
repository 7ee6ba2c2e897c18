"""Tietze moves against the relator ideal <f_1, ..., f_m> of a truncated series algebra."""
import logging
from dataclasses import dataclass, field
from typing import Dict, List

from knotgroups.errors import AlgebraSpecError
from knotgroups.freegroup.words import Word, parse_word
from knotgroups.ncalg.functor import SeriesCache, group_to_series, relator_series, series_letters, spec_for
from knotgroups.ncalg.series import AlgebraSpec, NcPoly
from knotgroups.presentation.presentation import (
    AddGenerator, AddRelatorProduct, GroupPresentation, RemoveGenerator, TietzeMove, defining_relator, tietze,
)

logger = logging.getLogger(__name__)


@dataclass
class TietzeCheck:
    move: str
    checks: Dict[str, bool] = field(default_factory=dict)
    holds_before: bool = False
    holds_after: bool = False
    notes: Dict[str, bool] = field(default_factory=dict)

    @property
    def consistent(self) -> bool:
        return all(self.checks.values()) and self.holds_before == self.holds_after


def substitute_letter(p: NcPoly, letter: str, image: NcPoly) -> NcPoly:
    """Replace every occurrence of a letter by a polynomial."""
    spec = p.spec
    result = NcPoly.zero(spec)
    for word, coeff in p.terms.items():
        term = NcPoly.constant(spec, coeff)
        for l in word:
            term = term * (image if l == letter else NcPoly.letter(spec, l))
        result = result + term
    return result


def _generator_checks(p: GroupPresentation, move: AddGenerator, spec: AlgebraSpec) -> Dict[str, bool]:
    """Z - W and the new relator series generate the same ideal, W = w(1 + X) - 1."""
    after = tietze(p, move)
    spec = spec_for(after.alphabet, spec)
    letter = series_letters(after.alphabet)[move.label]
    word = move.word if isinstance(move.word, Word) else parse_word(move.word, p.alphabet)
    cache = SeriesCache(spec)
    series_w = group_to_series(word.relabel(after.alphabet), spec, cache)
    w_minus_one = series_w - 1
    f_new = relator_series(after, spec)[-1]
    old_before = relator_series(p, spec)
    old_after = relator_series(after, spec)[:-1]
    return {
        'old relators unchanged': old_before == old_after,
        'new relator is unit times Z - W': f_new * series_w == NcPoly.letter(spec, letter) - w_minus_one,
        'Z = W kills new relator': substitute_letter(f_new, letter, w_minus_one).is_zero,
    }


def _product_checks(p: GroupPresentation, move: AddRelatorProduct, spec: AlgebraSpec) -> Dict[str, bool]:
    """series(r_p r_q) - 1 = f_p + f_q + f_p f_q, an element of <f_p, f_q>."""
    spec = spec_for(p.alphabet, spec)
    fs = relator_series(p, spec)
    after = tietze(p, move)
    f_product = relator_series(after, spec)[-1]
    f_p, f_q = fs[move.i], fs[move.j]
    return {
        'product expansion': f_product == f_p + f_q + f_p * f_q,
        'printed variant f_p + f_q - f_p f_q': f_product == f_p + f_q - f_p * f_q,
    }


def _holds_modulo(p: GroupPresentation, spec: AlgebraSpec, definitions: Dict[str, Word]) -> bool:
    """All relator series vanish once each defined letter is replaced by the series of its word minus 1."""
    spec = spec_for(p.alphabet, spec)
    letters = series_letters(p.alphabet)
    cache = SeriesCache(spec)
    images = {letters[label]: group_to_series(word, spec, cache) - 1 for label, word in definitions.items()}
    for f in relator_series(p, spec):
        for letter, image in images.items():
            f = substitute_letter(f, letter, image)
        if not f.is_zero:
            return False
    return True


def _definitions(p: GroupPresentation, after: GroupPresentation, move: TietzeMove):
    """Letter definitions on the side that carries an extra generator."""
    if isinstance(move, AddGenerator):
        word = move.word if isinstance(move.word, Word) else parse_word(move.word, p.alphabet)
        return {}, {move.label: word.relabel(after.alphabet)}
    if isinstance(move, RemoveGenerator):
        found = defining_relator(p, move.label)
        if found is not None:
            return {move.label: found[1]}, {}
    return {}, {}


def tietze_invariance_check(p: GroupPresentation, move: TietzeMove, spec: AlgebraSpec) -> TietzeCheck:
    """Check a move leaves the quotient by the relator ideal unchanged.

    A new generator z = w brings the letter Z together with Z = W, so the
    before and after verdicts are compared after substituting W for Z.
    """
    if spec.truncate is None:
        raise AlgebraSpecError("Tietze invariance is checked at a finite truncation degree")
    after = tietze(p, move)
    report = TietzeCheck(move=repr(move))
    defs_before, defs_after = _definitions(p, after, move)
    report.holds_before = _holds_modulo(p, spec, defs_before)
    report.holds_after = _holds_modulo(after, spec, defs_after)
    if isinstance(move, AddGenerator):
        report.checks.update(_generator_checks(p, move, spec))
    elif isinstance(move, AddRelatorProduct):
        checks = _product_checks(p, move, spec)
        report.checks['product expansion'] = checks.pop('product expansion')
        report.notes.update(checks)
    logger.debug(f"Tietze check {report.move}: {report.checks}")
    return report


def moves_invariance(p: GroupPresentation, moves: List[TietzeMove], spec: AlgebraSpec) -> List[TietzeCheck]:
    """Check a sequence of moves step by step."""
    reports = []
    current = p
    for move in moves:
        reports.append(tietze_invariance_check(current, move, spec))
        current = tietze(current, move)
    return reports
