"""Unit tests for the power series functor and its quotients."""
import pytest

from knotgroups.braidrep.fixtures import trefoil_g1
from knotgroups.errors import AlgebraSpecError
from knotgroups.freegroup.words import random_word
from knotgroups.ncalg.basis import (
    b2_polynomial, dimension_bound_check, is_finite_dimensional, monomial_basis, quotient_dimension,
    regular_representation, representation_check,
)
from knotgroups.ncalg.functor import expansion_report, group_to_series, series_letters, verify_relation
from knotgroups.ncalg.invariance import substitute_letter, tietze_invariance_check
from knotgroups.ncalg.series import AlgebraSpec, NcPoly, b2, free_series, nc_reduce
from knotgroups.presentation.presentation import AddGenerator, AddRelatorProduct


def test_spec_validation():
    with pytest.raises(AlgebraSpecError):
        AlgebraSpec(('X', 'X'))
    with pytest.raises(AlgebraSpecError):
        AlgebraSpec.from_text(['X', 'Y'], 'XZ')
    spec = AlgebraSpec.from_text(['X', 'Y'], 'XX, YY')
    assert spec == b2()
    assert spec.describe() == "Q<X,Y>/(XX,YY)"


def test_normal_form():
    spec = b2()
    p = NcPoly.from_terms(spec, [(1, 'XX'), (2, 'XY'), (-1, 'YX')])
    assert str(p) == "2*XY-YX"
    commuting = NcPoly.from_terms(b2(commutative=True), [(2, 'XY'), (-1, 'YX')])
    assert str(commuting) == "XY"


def test_inverse_in_nilpotent_algebra():
    spec = b2()
    x = NcPoly.letter(spec, 'X')
    assert str((1 + x).inverse()) == "1-X"


def test_inverse_in_truncated_algebra():
    spec = free_series(['X', 'Y'], 3)
    x = NcPoly.letter(spec, 'X')
    assert str((1 + x) ** -1) == "1-X+XX-XXX"
    assert (1 + x) * (1 + x).inverse() == 1


def test_inverse_needs_nilpotence():
    spec = AlgebraSpec(('X', 'Y'))
    x = NcPoly.letter(spec, 'X')
    with pytest.raises(AlgebraSpecError):
        (1 + x).inverse()
    with pytest.raises(AlgebraSpecError):
        (2 + x).inverse()


def test_mixing_specs_rejected():
    with pytest.raises(AlgebraSpecError):
        NcPoly.letter(b2(), 'X') + NcPoly.letter(free_series(['X', 'Y'], 2), 'X')


def test_series_letters(rank2):
    assert series_letters(rank2) == {'x': 'X', 'y': 'Y'}


def test_group_to_series_is_multiplicative(rank2, rng):
    spec = free_series(['X', 'Y'], 4)
    for _ in range(100):
        u = random_word(rank2, 6, rng)
        v = random_word(rank2, 6, rng)
        assert group_to_series(u * v, spec) == group_to_series(u, spec) * group_to_series(v, spec)
        assert group_to_series(u * u.inverse(), spec) == 1


def test_g2_relation_in_commutative_b2(g2):
    assert verify_relation(g2, b2(commutative=True)).holds
    assert not verify_relation(g2, b2()).holds


@pytest.mark.parametrize("r", [1, 2])
def test_g1_relation_needs_alternating_words(r):
    g1 = trefoil_g1(r)
    assert verify_relation(g1, b2(extra=['XYXY', 'YXYX'])).holds
    residual = verify_relation(g1, b2(extra=['XYXY'])).residual_strings()
    assert residual in ([f"{2 * r}*YXYX"], [f"-{2 * r}*YXYX"])


def test_monomial_basis_dimensions():
    alternating = monomial_basis(b2(extra=['XYXY', 'YXYX']))
    assert alternating.dimension == 7
    assert alternating.per_degree == (1, 2, 2, 2)
    assert alternating.words()[:3] == ['1', 'X', 'Y']
    commuting = monomial_basis(b2(commutative=True))
    assert commuting.dimension == 4
    assert commuting.per_degree == (1, 2, 1)
    assert monomial_basis(b2(), degree_cap=6).dimension is None
    assert not is_finite_dimensional(b2(), degree_cap=6)


def test_representation_check(g1, g2):
    assert representation_check(g2, b2(commutative=True)) == [True]
    assert representation_check(g1, b2(extra=['XYXY', 'YXYX'])) == [True]
    with pytest.raises(AlgebraSpecError):
        representation_check(g2, b2())


@pytest.mark.parametrize("terms, dimension", [
    ([(1, 'XYXY')], 8),
    ([(1, 'XY'), (-1, 'YX')], 4),
    ([(1, 'XY')], 4),
    ([(1, 'X')], 2),
])
def test_quotient_dimension(terms, dimension):
    assert quotient_dimension(b2_polynomial(terms)) == dimension


def test_alternating_quotient_basis():
    report = monomial_basis(b2(extra=['XYXY']))
    assert report.words() == ['1', 'X', 'Y', 'XY', 'YX', 'XYX', 'YXY', 'YXYX']
    assert report.dimension == 8


def test_alternating_quotient_regular_representation():
    rep = regular_representation(b2(extra=['XYXY']))
    assert rep.dimension == 8
    for letter in ('X', 'Y'):
        matrix = rep.matrices[letter]
        assert matrix.shape == (8, 8)
        assert all(entry.is_integer for entry in matrix)
        assert matrix.det() in (1, -1)


def test_quotient_dimension_of_zero():
    with pytest.raises(ValueError):
        quotient_dimension(b2_polynomial([]))


def test_dimension_bound():
    report = dimension_bound_check(b2_polynomial([(1, 'XY'), (-1, 'YX')]))
    assert (report.degree, report.k, report.bound, report.dimension) == (2, 1, 5, 4)
    assert report.within_bound


def test_dimension_bound_rejects_degenerate_input():
    with pytest.raises(ValueError):
        dimension_bound_check(b2_polynomial([(3, '')]))
    with pytest.raises(ValueError):
        dimension_bound_check(NcPoly.from_terms(AlgebraSpec(('X', 'Y')), [(1, 'XX')]))


def test_dimension_bound_needs_b2_elements():
    for spec in (AlgebraSpec(('X', 'Y')), b2(commutative=True), b2(extra=['XYXY'])):
        with pytest.raises(AlgebraSpecError):
            dimension_bound_check(NcPoly.from_terms(spec, [(1, 'XY')]))
    reordered = AlgebraSpec.from_text(['X', 'Y'], 'YY, XX')
    assert dimension_bound_check(NcPoly.from_terms(reordered, [(1, 'XY')])).within_bound


def test_substitute_letter():
    spec = free_series(['X', 'Y'], 3)
    p = NcPoly.from_terms(spec, [(1, 'XY'), (2, 'Y')])
    y = NcPoly.letter(spec, 'Y')
    assert str(substitute_letter(p, 'X', y)) == "2*Y+YY"


def test_tietze_add_generator_invariance(g2):
    check = tietze_invariance_check(g2, AddGenerator('z', 'x*y'), free_series(['X', 'Y'], 4))
    assert all(check.checks.values()), check.checks
    assert check.consistent


def test_tietze_relator_product_invariance(g2):
    check = tietze_invariance_check(g2, AddRelatorProduct(0, 0), free_series(['X', 'Y'], 4))
    assert check.checks['product expansion']
    assert not check.notes['printed variant f_p + f_q - f_p f_q']
    assert check.consistent


def test_tietze_check_needs_truncation(g2):
    with pytest.raises(AlgebraSpecError):
        tietze_invariance_check(g2, AddRelatorProduct(0, 0), b2())


def test_expansion_report_names():
    assert expansion_report('trefoil-g1', 2).fixture == 'trefoil-g1(2)'
    with pytest.raises(ValueError):
        expansion_report('kishino-g3')


def test_nc_reduce_into_quotient():
    free = AlgebraSpec(('X', 'Y'))
    p = NcPoly.from_terms(free, [(1, 'XX'), (1, 'XY'), (3, 'YXY')])
    assert str(nc_reduce(p, b2())) == "XY+3*YXY"
    assert str(nc_reduce(p, b2(commutative=True))) == "XY"
    assert nc_reduce({('Y', 'Y'): 1}, b2()).is_zero
