"""Unit tests for the randomized self-test runner."""
from knotgroups.selftest.checks import CHECKS, run_checks

CHEAP = ['free inverse', 'fox fundamental identity', 'magnus homomorphism', 'augmentation contradiction']


def test_cheap_checks_pass():
    results = run_checks(seed=7, iterations=4, only=CHEAP)
    assert [r.name for r in results] == CHEAP
    assert all(r.passed for r in results), [r.detail for r in results if not r.passed]
    assert all(r.trials == 4 for r in results)


def test_expensive_checks_run_fewer_trials():
    results = run_checks(seed=1, iterations=20, only=['commutator power identities'])
    assert results[0].trials == 2
    assert results[0].passed


def test_same_seed_same_outcome():
    first = run_checks(seed=3, iterations=2, only=['free inverse', 'collection homomorphism'])
    second = run_checks(seed=3, iterations=2, only=['free inverse', 'collection homomorphism'])
    assert [(r.name, r.passed, r.detail) for r in first] == [(r.name, r.passed, r.detail) for r in second]


def test_every_check_is_named_once():
    names = [name for name, _, _ in CHECKS]
    assert len(names) == len(set(names))
