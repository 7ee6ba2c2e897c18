"""End-to-end library pipelines: braid to presentation to invariants."""
import json

from knotgroups.braidrep.braids import parse_braid
from knotgroups.braidrep.fixtures import VIRTUAL_TREFOIL_BRAID, trefoil_g3
from knotgroups.braidrep.wada import W3, WadaKind, link_group
from knotgroups.foxcalc.fox import fox_jacobian
from knotgroups.freegroup.words import random_word
from knotgroups.ncalg.functor import verify_relation
from knotgroups.ncalg.invariance import moves_invariance
from knotgroups.ncalg.series import b2, free_series
from knotgroups.nilpotent.lcs import lcs_quotient
from knotgroups.presentation.abelian import abelianization
from knotgroups.presentation.presentation import (
    AddGenerator, AddRelatorProduct, GroupPresentation, RemoveGenerator, random_tietze_moves, tietze,
)
from knotgroups.validation.schemas import PresentationPayload


def test_virtual_trefoil_from_braid():
    """Braid closure gives a presentation whose invariants match the stored fixture."""
    p = link_group(WadaKind(W3), parse_braid(VIRTUAL_TREFOIL_BRAID, 2))
    assert abelianization(p) == abelianization(trefoil_g3())
    jacobian = fox_jacobian(p)
    assert len(jacobian) == 2
    # Each relator row of the Jacobian augments to its exponent sums.
    for row, relator in zip(jacobian, p.relators):
        assert [d.augment() for d in row] == [sum(e for g, e in relator.syllables if g == i)
                                              for i in range(p.rank)]


def test_presentation_payload_file(temp_dir, g1):
    path = f"{temp_dir}/g1.json"
    with open(path, 'w') as f:
        f.write(PresentationPayload.from_presentation(g1).model_dump_json())
    with open(path) as f:
        restored = PresentationPayload.model_validate(json.load(f)).to_presentation()
    assert restored == g1
    assert str(lcs_quotient(restored, 2)) == "Z"


def test_moves_keep_relation_verdicts(g2):
    spec = free_series(['X', 'Y'], 4)
    moves = [AddGenerator('z', 'x*y'), RemoveGenerator('z'), AddRelatorProduct(0, 0)]
    reports = moves_invariance(g2, moves, spec)
    assert all(r.consistent for r in reports), [r.checks for r in reports if not r.consistent]
    after = g2
    for move in moves:
        after = tietze(after, move)
    assert abelianization(after) == abelianization(g2)


def test_g2_metabelian_and_algebra_agree(g2):
    """2(1 + y) kills [x, y]; the relator dies once X and Y commute in B2."""
    assert verify_relation(g2, b2(commutative=True)).holds
    assert str(lcs_quotient(g2, 2)) == "Z/4"


def test_random_presentations_keep_relation_verdicts(rank2, rng):
    spec = free_series(['X', 'Y'], 4)
    for _ in range(20):
        relators = tuple(random_word(rank2, rng.randint(1, 6), rng) for _ in range(rng.randint(1, 2)))
        p = GroupPresentation(rank2, relators)
        _, moves = random_tietze_moves(p, rng.randint(1, 3), rng)
        for report in moves_invariance(p, moves, spec):
            assert report.consistent, (p.relator_strings(), report.move, report.checks)
