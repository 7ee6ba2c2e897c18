"""Unit tests for the pydantic payload schemas."""
import pytest
from pydantic import ValidationError

from knotgroups.validation.schemas import AlgebraSpecRequest, PresentationPayload, SelftestPayload


def test_presentation_payload_round_trip(g1):
    payload = PresentationPayload.from_presentation(g1)
    assert payload.generators == ['x', 'y']
    assert payload.relations == g1.relation_strings()
    assert payload.to_presentation() == g1


def test_presentation_payload_rejects_duplicates():
    with pytest.raises(ValidationError):
        PresentationPayload(generators=['x', 'x'], relators=[])


def test_presentation_payload_rejects_bad_labels():
    with pytest.raises(ValidationError):
        PresentationPayload(generators=['x-1'], relators=[])
    with pytest.raises(ValidationError):
        PresentationPayload(generators=[], relators=[])


def test_presentation_payload_rejects_unknown_letters():
    with pytest.raises(ValidationError):
        PresentationPayload(generators=['x', 'y'], relators=["x*z"])


def test_algebra_spec_request_defaults():
    spec = AlgebraSpecRequest().to_spec()
    assert spec.letters == ('X', 'Y')
    assert spec.describe() == "Q<X,Y>/(XX,YY)"


@pytest.mark.parametrize("fields", [
    {'letters': ['x']},
    {'letters': ['XY']},
    {'letters': []},
    {'ideal': 'XZ'},
    {'truncate': -1},
])
def test_algebra_spec_request_rejects(fields):
    with pytest.raises(ValidationError):
        AlgebraSpecRequest(**fields)


def test_selftest_payload_needs_iterations():
    with pytest.raises(ValidationError):
        SelftestPayload(seed=0, iterations=0, results=[], passed=True)
