"""Unit tests for free group words and endomorphisms."""
import pytest

from knotgroups.errors import AlphabetError, ParseError
from knotgroups.freegroup.endomorphism import (
    Endomorphism, apply_endo, compose_endo, identity_endo, is_identity_endo,
)
from knotgroups.freegroup.words import (
    Alphabet, Word, commutator, conjugate, cyclic_reduce, cyclically_equivalent, exponent_sums,
    format_word, invert, multiply, parse_word, power, random_word, rewrite_subword,
)


def test_parse_and_format(rank2):
    alphabet = Alphabet.from_labels(['x', 'y', 'x1'])
    w = parse_word("x^-2*y*x1^3", alphabet)
    assert format_word(w) == "x^-2*y*x1^3"
    assert w.letter_length == 6


def test_parse_reduces(rank2):
    assert format_word(parse_word("x*y*y^-1*x", rank2)) == "x^2"
    assert parse_word("1", rank2).is_identity
    assert parse_word("x x^(-1)", rank2).is_identity


def test_parse_errors(rank2):
    with pytest.raises(ParseError):
        parse_word("x+y", rank2)
    with pytest.raises(ParseError):
        parse_word("q", rank2)


def test_parse_identity_factor(rank2):
    assert format_word(parse_word("x*1*y", rank2)) == "x*y"
    assert format_word(parse_word("1 * x^2 * 1^3", rank2)) == "x^2"
    assert parse_word("1*1", rank2).is_identity
    with pytest.raises(ParseError):
        parse_word("x1", rank2)
    with pytest.raises(ParseError):
        parse_word("x*12", rank2)


def test_alphabet_rejects_duplicates():
    with pytest.raises(AlphabetError):
        Alphabet.from_labels(['x', 'x'])


def test_unreduced_word_rejected(rank2):
    with pytest.raises(ValueError):
        Word(rank2, ((0, 1), (0, 2)))


def test_inverse_cancels(rank2):
    w = parse_word("x*y^-2*x^3", rank2)
    assert multiply(w, invert(w)).is_identity
    assert format_word(power(w, -1)) == "x^-3*y^2*x^-1"


def test_commutator_and_conjugate(rank2):
    x, y = parse_word("x", rank2), parse_word("y", rank2)
    assert format_word(commutator(x, y)) == "x^-1*y^-1*x*y"
    assert format_word(conjugate(x, y)) == "y^-1*x*y"
    # left-normed: [x, y, x] = [[x, y], x]
    assert commutator(x, y, x) == commutator(commutator(x, y), x)
    assert exponent_sums(commutator(x, y, y)) == (0, 0)


def test_cyclic_reduction(rank2):
    assert format_word(cyclic_reduce(parse_word("y*x*y^-1", rank2))) == "x"
    assert format_word(cyclic_reduce(parse_word("x*y*x", rank2))) == "y*x^2"


def test_cyclically_equivalent(rank2):
    xy = parse_word("x*y", rank2)
    assert cyclically_equivalent(xy, parse_word("y*x", rank2))
    assert cyclically_equivalent(xy, parse_word("y^-1*x^-1", rank2))
    assert not cyclically_equivalent(xy, parse_word("x*y^-1", rank2))


def test_rewrite_subword(rank2):
    w = parse_word("x*y*x", rank2)
    assert format_word(rewrite_subword(w, parse_word("x*y", rank2), parse_word("y", rank2))) == "y*x"
    with pytest.raises(ValueError):
        rewrite_subword(w, parse_word("1", rank2), parse_word("y", rank2))


def test_alphabet_mismatch(rank2):
    other = Alphabet.from_labels(['a', 'b'])
    with pytest.raises(AlphabetError):
        multiply(parse_word("x", rank2), parse_word("a", other))


def test_relabel_matches_labels(rank2):
    wider = Alphabet.from_labels(['y', 'z', 'x'])
    w = parse_word("x*y^2", rank2).relabel(wider)
    assert format_word(w) == "x*y^2"
    assert w.alphabet == wider


def test_random_word_is_reduced(rank2, rng):
    for _ in range(20):
        w = random_word(rank2, 10, rng)
        assert w.letter_length <= 10
        assert multiply(w, invert(w)).is_identity


def test_endomorphism_apply_and_compose(rank2):
    swap = Endomorphism.from_mapping(rank2, rank2, {'x': "y", 'y': "x"})
    assert format_word(apply_endo(swap, parse_word("x^2*y^-1", rank2))) == "y^2*x^-1"
    assert is_identity_endo(compose_endo(swap, swap))
    assert not is_identity_endo(swap)


def test_endomorphism_inverse_pair(rank2):
    """x -> xy and x -> xy^-1 are mutually inverse."""
    e = Endomorphism.from_mapping(rank2, rank2, {'x': "x*y"})
    f = Endomorphism.from_mapping(rank2, rank2, {'x': "x*y^-1"})
    assert compose_endo(e, f) == identity_endo(rank2)
    assert format_word(e(parse_word("x^-1", rank2))) == "y^-1*x^-1"
