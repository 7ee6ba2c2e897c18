"""Unit tests for Fox calculus, the Magnus embedding and metabelian annihilators."""
import pytest

from knotgroups.braidrep.fixtures import trefoil_g1
from knotgroups.foxcalc.fox import LEFT, RIGHT, fox_derivative, fox_jacobian, fundamental_identity_holds
from knotgroups.foxcalc.magnus import magnus_image, standard_assignment
from knotgroups.foxcalc.metabelian import (
    IDENTITY_PARAMS, SWAP_PARAMS, EndoParams, augmentation_contradiction, commutator_coefficient,
    commutator_power_identity_check, g1_annihilator, g2_annihilator, geometric_ratio,
    magnus_commutator_coefficient, module_coefficient, random_unimodular_params, relator_annihilator,
)
from knotgroups.freegroup.words import Alphabet, commutator, parse_word, random_word
from knotgroups.laurent.poly import laurent_ring


def test_left_derivatives(rank2):
    x, y = laurent_ring(rank2.labels)
    w = parse_word("x*y*x^-1", rank2)
    assert fox_derivative(w, 'x', LEFT) == 1 - y
    assert fox_derivative(w, 'y', LEFT) == x


def test_right_derivatives(rank2):
    x, y = laurent_ring(rank2.labels)
    w = parse_word("x*y*x^-1", rank2)
    assert fox_derivative(w, 'x', RIGHT) == x ** -1 * y - x ** -1
    assert fox_derivative(w, 'y', RIGHT) == x ** -1


def test_unknown_convention(rank2):
    with pytest.raises(ValueError):
        fox_derivative(parse_word("x", rank2), 'x', 'middle')


def test_fundamental_identity(rng):
    alphabets = [Alphabet.from_labels(labels) for labels in (['x'], ['x', 'y'], ['x', 'y', 'z'])]
    for _ in range(100):
        w = random_word(rng.choice(alphabets), rng.randint(0, 20), rng)
        assert fundamental_identity_holds(w, LEFT)
        assert fundamental_identity_holds(w, RIGHT)


def test_jacobian_shape(g2, g3):
    assert len(fox_jacobian(g2)) == 1
    assert len(fox_jacobian(g2)[0]) == 2
    assert len(fox_jacobian(g3)) == 2
    assert len(fox_jacobian(g3)[0]) == 3


def test_magnus_image_is_multiplicative(rank2, rng):
    assign = standard_assignment(rank2.labels)
    for _ in range(10):
        u = random_word(rank2, 6, rng)
        v = random_word(rank2, 6, rng)
        assert magnus_image(u * v, assign) == magnus_image(u, assign) * magnus_image(v, assign)
        assert (magnus_image(u, assign) * magnus_image(u.inverse(), assign)).is_identity


def test_module_coefficient_of_commutator(rank2):
    x, y = parse_word("x", rank2), parse_word("y", rank2)
    assert module_coefficient(commutator(x, y)) == 1
    assert module_coefficient(commutator(y, x)) == -1
    with pytest.raises(ValueError):
        module_coefficient(x)


def test_commutator_power_identities():
    for p in range(1, 4):
        for q in range(1, 4):
            assert all(commutator_power_identity_check(p, q).values())


def test_geometric_ratio():
    x, y = laurent_ring(('x', 'y'))
    assert geometric_ratio(2, 1) == 1 + x
    assert geometric_ratio(1, 1) == 1


def test_commutator_coefficient_of_identity():
    assert commutator_coefficient(IDENTITY_PARAMS) == 1
    assert magnus_commutator_coefficient(IDENTITY_PARAMS) == 1
    assert SWAP_PARAMS.determinant == -1
    assert commutator_coefficient(SWAP_PARAMS) == -1
    assert magnus_commutator_coefficient(SWAP_PARAMS) == -1


def test_commutator_coefficient_matches_magnus(rng):
    for _ in range(100):
        params = random_unimodular_params(rng)
        coefficient = commutator_coefficient(params)
        assert coefficient == magnus_commutator_coefficient(params), params
        assert coefficient.augment() == params.determinant


def test_g2_annihilator(g2):
    poly = relator_annihilator(g2)
    assert poly.format_factored() == "2*(1+y)"
    assert poly.equal_up_to_unit(g2_annihilator())


@pytest.mark.parametrize("r", [1, 2, 3])
def test_g1_annihilator(r):
    poly = relator_annihilator(trefoil_g1(r))
    assert poly.equal_up_to_unit(g1_annihilator(r))
    assert poly.augment() == 0


def test_annihilator_needs_rank_two(g3):
    with pytest.raises(ValueError):
        relator_annihilator(g3)


def test_augmentation_contradiction():
    report = augmentation_contradiction(1, IDENTITY_PARAMS)
    assert report.lhs == 4
    assert report.rhs == 0
    assert report.contradiction


def test_augmentation_rejects_non_unimodular():
    with pytest.raises(ValueError):
        augmentation_contradiction(1, EndoParams(2, 0, 0, 0, 1, 0))


def test_random_unimodular_params(rng):
    for _ in range(100):
        params = random_unimodular_params(rng)
        assert params.is_unimodular
        report = augmentation_contradiction(rng.randint(1, 5), params)
        assert abs(report.lhs) == 4
        assert report.rhs == 0
