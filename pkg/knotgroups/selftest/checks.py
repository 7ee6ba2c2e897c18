"""Randomized property checks run by the `selftest` command."""
import logging
import random
from dataclasses import dataclass
from typing import Callable, List, Optional, Tuple

from knotgroups.braidrep.braids import VirtualBraidWord, rho, sigma
from knotgroups.braidrep.fixtures import fixture
from knotgroups.braidrep.wada import W1, W2, W3, WadaKind, represent
from knotgroups.freegroup.endomorphism import compose_endo, is_identity_endo
from knotgroups.freegroup.words import Alphabet, invert, multiply, random_word
from knotgroups.foxcalc.fox import CONVENTIONS, fundamental_identity_holds
from knotgroups.foxcalc.magnus import magnus_image, standard_assignment
from knotgroups.foxcalc.metabelian import (
    augmentation_contradiction, commutator_power_identity_check, random_unimodular_params,
)
from knotgroups.ncalg.invariance import moves_invariance
from knotgroups.ncalg.series import free_series
from knotgroups.nilpotent.collection import collect
from knotgroups.presentation.abelian import abelianization
from knotgroups.presentation.presentation import random_tietze_moves

logger = logging.getLogger(__name__)

RANK2 = Alphabet.from_labels(['x', 'y'])
RANK3 = Alphabet.from_labels(['a', 'b', 'c'])


@dataclass
class CheckResult:
    name: str
    passed: bool
    trials: int
    detail: Optional[str] = None


def random_braid(strands: int, length: int, rng: random.Random) -> VirtualBraidWord:
    letters = []
    for _ in range(length):
        i = rng.randint(1, strands - 1)
        letters.append(rho(i) if rng.random() < 0.3 else sigma(i, rng.choice((1, -1))))
    return VirtualBraidWord(strands, tuple(letters))


def check_free_inverse(rng: random.Random, trials: int) -> Optional[str]:
    for _ in range(trials):
        u = random_word(RANK3, rng.randint(0, 12), rng)
        if not multiply(u, invert(u)).is_identity:
            return f"u * u^-1 != 1 for u = {u}"
    return None


def check_braid_inverse(rng: random.Random, trials: int) -> Optional[str]:
    kinds = [WadaKind(W1, 1), WadaKind(W1, 2), WadaKind(W2), WadaKind(W3)]
    for _ in range(trials):
        kind = rng.choice(kinds)
        b = random_braid(rng.randint(2, 4), rng.randint(0, 6), rng)
        if not is_identity_endo(compose_endo(represent(kind, b), represent(kind, b.inverse()))):
            return f"{kind}: represent({b}) * represent({b.inverse()}) is not the identity"
    return None


def check_fox_identity(rng: random.Random, trials: int) -> Optional[str]:
    for _ in range(trials):
        u = random_word(RANK3, rng.randint(0, 10), rng)
        for convention in CONVENTIONS:
            if not fundamental_identity_holds(u, convention):
                return f"fundamental identity fails for {u} ({convention})"
    return None


def check_magnus_homomorphism(rng: random.Random, trials: int) -> Optional[str]:
    assign = standard_assignment(RANK2.labels)
    for _ in range(trials):
        u = random_word(RANK2, rng.randint(0, 8), rng)
        v = random_word(RANK2, rng.randint(0, 8), rng)
        if magnus_image(multiply(u, v), assign) != magnus_image(u, assign) * magnus_image(v, assign):
            return f"Magnus image is not multiplicative on {u}, {v}"
    return None


def check_collection_homomorphism(rng: random.Random, trials: int) -> Optional[str]:
    for _ in range(trials):
        c = rng.randint(1, 4)
        u = random_word(RANK2, rng.randint(0, 8), rng)
        v = random_word(RANK2, rng.randint(0, 8), rng)
        if collect(u, c) * collect(v, c) != collect(multiply(u, v), c):
            return f"collect is not multiplicative on {u}, {v} at class {c}"
    return None


def check_commutator_powers(rng: random.Random, trials: int) -> Optional[str]:
    for _ in range(trials):
        p, q = rng.randint(1, 4), rng.randint(1, 4)
        results = commutator_power_identity_check(p, q)
        failed = [name for name, ok in results.items() if not ok]
        if failed:
            return f"commutator power identities {failed} fail for p={p}, q={q}"
    return None


def check_augmentation(rng: random.Random, trials: int) -> Optional[str]:
    for _ in range(trials):
        params = random_unimodular_params(rng)
        r = rng.randint(1, 5)
        report = augmentation_contradiction(r, params)
        if not report.contradiction:
            return f"no augmentation contradiction for r={r}, {params}"
    return None


def check_tietze_abelianization(rng: random.Random, trials: int) -> Optional[str]:
    names = ['trefoil-g1', 'trefoil-g2', 'trefoil-g3']
    for _ in range(trials):
        p = fixture(rng.choice(names))
        moved, moves = random_tietze_moves(p, rng.randint(1, 4), rng)
        if abelianization(moved) != abelianization(p):
            return f"abelianization changed under {moves}"
    return None


def check_tietze_series(rng: random.Random, trials: int, truncate: int = 4) -> Optional[str]:
    spec = free_series(['X', 'Y'], truncate)
    for _ in range(trials):
        p = fixture('trefoil-g2')
        _, moves = random_tietze_moves(p, rng.randint(1, 3), rng)
        for report in moves_invariance(p, moves, spec):
            if not report.consistent:
                return f"Tietze move {report.move} changed the relator ideal checks: {report.checks}"
    return None


CHECKS: List[Tuple[str, Callable[[random.Random, int], Optional[str]], int]] = [
    ('free inverse', check_free_inverse, 1),
    ('braid representation inverse', check_braid_inverse, 1),
    ('fox fundamental identity', check_fox_identity, 1),
    ('magnus homomorphism', check_magnus_homomorphism, 1),
    ('collection homomorphism', check_collection_homomorphism, 1),
    ('commutator power identities', check_commutator_powers, 10),
    ('augmentation contradiction', check_augmentation, 1),
    ('tietze abelianization', check_tietze_abelianization, 5),
    ('tietze series invariance', check_tietze_series, 20),
]


def run_checks(seed: int, iterations: int,
               only: Optional[List[str]] = None) -> List[CheckResult]:
    """Run each check with its own generator seeded from `seed`.

    Expensive checks run one trial per `divisor` iterations.
    """
    results = []
    for name, check, divisor in CHECKS:
        if only and name not in only:
            continue
        trials = max(1, iterations // divisor)
        rng = random.Random(f"{seed}:{name}")
        failure = check(rng, trials)
        results.append(CheckResult(name, failure is None, trials, failure))
        if failure:
            logger.warning(f"Self-test '{name}' failed: {failure}")
        else:
            logger.info(f"Self-test '{name}' passed {trials} trials")
    return results
