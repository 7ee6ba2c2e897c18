"""Unit tests for the Kishino non-freeness certificate."""
from knotgroups.braidrep.fixtures import kishino_g3
from knotgroups.foxcalc.fox import LEFT
from knotgroups.foxcalc.kishino import (
    CONCLUSION, VERDICT, calibrate_convention, common_zero, kishino_abelian_relations, kishino_module_relation,
    kishino_pipeline, kishino_quotient, unimodularity_certificate,
)
from knotgroups.laurent.numberfield import NumberFieldElement


def test_abelian_relations(kishino):
    report = kishino_abelian_relations(kishino)
    assert report.a_equals_c_inverse_cubed
    assert report.b_equals_c
    assert report.holds


def test_module_relation_products_agree():
    report = kishino_module_relation()
    assert report.products_agree
    assert not report.residual.is_zero
    assert report.dc.scale == report.bd.scale


def test_quotient_fates(kishino):
    report = kishino_quotient(kishino)
    assert [f.fate for f in report.fates] == ['consequence', 'trivial', 'defining relation']
    assert report.one_relator
    assert report.presentation.alphabet.labels == ('a', 'c', 'd')


def test_quotient_without_relation_one():
    report = kishino_quotient(kishino_g3(include_relation_one=False))
    assert [f.fate for f in report.fates] == ['trivial', 'defining relation']


def test_calibrated_convention():
    assert calibrate_convention() == LEFT


def test_common_zero_lies_in_number_field():
    point = common_zero()
    c0 = point['c']
    assert c0 ** 3 - c0 ** 2 - c0 - 1 == NumberFieldElement(0)
    assert point['d'] * (c0 * c0 + c0) == -1
    assert not point['a'].is_zero


def test_certificate():
    cert = unimodularity_certificate()
    assert cert.fox_convention == 'left'
    assert all(cert.printed_matches.values())
    assert cert.cleared_vector[1] == str(cert.fox_derivatives['c'])
    assert all(value == "0" for value in cert.evaluations)
    assert all(cert.nonzero_checks.values())
    assert cert.verdict == VERDICT == 'NOT-UNIMODULAR'
    assert cert.conclusion == CONCLUSION == 'G3(Kishino) is not free of rank 2'


def test_pipeline_verified():
    report = kishino_pipeline()
    assert report.verified
