"""Unit tests for virtual braids, Wada representations and fixtures."""
import pytest

from knotgroups.braidrep.braids import parse_braid, rho, sigma
from knotgroups.braidrep.fixtures import (
    FIXTURE_NAMES, VIRTUAL_TREFOIL_BRAID, fixture, kishino_g3, parse_fixture_name, trefoil_g1, trefoil_g3,
    unknot_g3,
)
from knotgroups.braidrep.rewriting import rewriting_check
from knotgroups.braidrep.wada import (
    W1, W2, W3, WadaKind, braid_alphabet, check_braid_relations, fixes_y, generator_action, link_group,
    represent,
)
from knotgroups.errors import BraidError, ParseError
from knotgroups.freegroup.endomorphism import compose_endo, is_identity_endo
from knotgroups.freegroup.words import format_word
from knotgroups.presentation.abelian import abelianization

KINDS = [WadaKind(W1, 1), WadaKind(W1, 2), WadaKind(W2), WadaKind(W3)]


def test_parse_braid():
    b = parse_braid("s1 S2 v1", 3)
    assert str(b) == "s1 S2 v1"
    assert str(b.inverse()) == "v1 s2 S1"
    assert str(parse_braid("1", 2)) == "1"


def test_parse_braid_errors():
    with pytest.raises(BraidError):
        parse_braid("s3", 3)
    with pytest.raises(ParseError):
        parse_braid("q1", 3)


def test_virtual_crossing_is_involution():
    assert rho(2).inverse() == rho(2)
    assert sigma(1).inverse() == sigma(1, -1)


@pytest.mark.parametrize("kind", KINDS, ids=str)
def test_braid_relations_hold(kind):
    results = check_braid_relations(kind, 3)
    assert results
    assert all(results.values()), [name for name, ok in results.items() if not ok]


@pytest.mark.parametrize("kind", KINDS, ids=str)
def test_letters_are_automorphisms(kind):
    for letter in (sigma(1), sigma(2), sigma(1, -1), rho(1), rho(2)):
        forward = generator_action(kind, letter, 3)
        backward = generator_action(kind, letter.inverse(), 3)
        assert is_identity_endo(compose_endo(forward, backward))
        assert fixes_y(forward)


def test_w3_classical_crossing_images():
    phi = generator_action(WadaKind(W3), sigma(1), 2)
    assert format_word(phi.image('x1')) == "x1^2*x2"
    assert format_word(phi.image('x2')) == "x2^-1*x1^-1*x2"
    assert format_word(phi.image('y')) == "y"


def test_represent_trivial_braid():
    assert is_identity_endo(represent(WadaKind(W3), parse_braid("", 3)))
    assert braid_alphabet(2).labels == ('y', 'x1', 'x2')


def test_wada_kind_validation():
    with pytest.raises(ValueError):
        WadaKind('W4')
    with pytest.raises(ValueError):
        WadaKind(W1, 0)


def test_virtual_trefoil_link_group():
    """The W3 link group of s1 s1 v1 is the trefoil-g3 presentation."""
    p = link_group(WadaKind(W3), parse_braid(VIRTUAL_TREFOIL_BRAID, 2))
    g3 = trefoil_g3()
    assert [r.relabel(g3.alphabet) for r in p.relators] == list(g3.relators)
    assert abelianization(p) == abelianization(g3)


def test_link_group_of_classical_braid():
    """Closure of s1 s1 s1: one relator per strand, free rank two."""
    p = link_group(WadaKind(W3), parse_braid("s1 s1 s1", 2))
    assert len(p.relators) == 2
    assert abelianization(p).rank == 2


def test_fixture_names():
    for name in FIXTURE_NAMES:
        assert fixture(name).relators or name == 'unknot-g3'
    assert parse_fixture_name('trefoil-g1(2)') == ('trefoil-g1', 2)
    assert parse_fixture_name('trefoil-g1', 3) == ('trefoil-g1', 3)
    assert fixture('trefoil-g1(2)') == trefoil_g1(2)


def test_fixture_name_errors():
    with pytest.raises(ValueError):
        parse_fixture_name('trefoil-g4')
    with pytest.raises(ValueError):
        parse_fixture_name('kishino-g3(2)')
    with pytest.raises(ValueError):
        parse_fixture_name('trefoil-g1(2)', 3)
    with pytest.raises(ValueError):
        trefoil_g1(0)


def test_trefoil_g1_relation_text():
    assert trefoil_g1(2).relation_strings() == ["x^-2*y^-1*x*y*x^2 = y^-2*x^2*y*x*y^-1*x^-2*y^2"]


def test_unknot_has_no_relators():
    p = unknot_g3()
    assert p.alphabet.labels == ('y', 'x1')
    assert p.relators == ()
    assert str(abelianization(p)) == "Z^2"


def test_kishino_fixture_relation_one_toggle():
    assert len(kishino_g3().relators) == 3
    assert len(kishino_g3(include_relation_one=False).relators) == 2
    override = kishino_g3(relation_one="a*b = b*a")
    assert override.relation_strings()[0] == "a*b = b*a"
    with pytest.raises(ParseError):
        kishino_g3(relation_one="a*b")


def test_rewriting_g2_family():
    check = rewriting_check('trefoil-g2')
    assert check.matches
    assert check.relation == "x0*x1^-1*x0 = x2*x1^-1*x2"


@pytest.mark.parametrize("r", [1, 2, 3])
def test_rewriting_g1_family(r):
    assert rewriting_check('trefoil-g1', r).matches
    printed = rewriting_check('trefoil-g1', r, corrected=False)
    assert not printed.matches
    assert printed.family.endswith('printed')


def test_rewriting_unknown_family():
    with pytest.raises(ValueError):
        rewriting_check('kishino-g3')


@pytest.mark.parametrize("kind", KINDS, ids=str)
def test_virtual_crossing_squares_to_identity(kind):
    assert is_identity_endo(represent(kind, parse_braid("v1 v1", 2)))


def test_trivial_one_strand_braid():
    p = link_group(WadaKind(W3), parse_braid("", 1))
    assert len(p.relators) == 1
    assert abelianization(p).rank == 2
