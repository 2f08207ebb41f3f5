"""Tests for the validation suites"""

import dataclasses

import pytest

from concurrence_bounds import checks
from concurrence_bounds.generators import gellmann_basis

DIMENSIONS = ((2, 2), (2, 3), (3, 3))


@pytest.mark.parametrize(
    "suite",
    [
        checks.check_purity_identity,
        checks.check_round_trip,
        checks.check_pure_vector_norm,
        checks.check_pure_range,
        checks.check_pure_exactness,
        checks.check_c2_convexity,
    ],
)
def test_sampled_suites_pass(suite):
    result = suite(DIMENSIONS, samples=6, seed=42)
    assert result.total == 18
    assert result.ok, result.failures


def test_scalar_lemma_suite():
    result = checks.check_scalar_lemma(points=10000)
    assert result.total == len(checks.SCALAR_LEMMA_DIMENSIONS)
    assert result.ok


def test_two_qubit_oracle_suite():
    result = checks.check_two_qubit_oracle(samples=12, seed=7, trials=30)
    assert result.passed == 12


def test_two_qubit_oracle_suite_on_default_seed():
    result = checks.check_two_qubit_oracle(samples=200, seed=42, trials=5)
    assert result.ok, result.failures[:3]
    assert result.total == 200


def test_example_closed_forms_suite():
    result = checks.check_example_closed_forms()
    assert result.total == 42
    assert result.ok, result.failures


def test_run_all_covers_every_suite():
    results = checks.run_all(((2, 2),), samples=2, seed=1, trials=5, scalar_points=50)
    assert [result.name for result in results] == [
        "purity_identity",
        "round_trip",
        "pure_vector_norm",
        "pure_range",
        "pure_exactness",
        "c2_convexity",
        "scalar_lemma",
        "two_qubit_oracle",
        "example_closed_forms",
    ]
    assert all(result.ok for result in results)


def test_broken_generator_scale_fails_purity_identity(mocker):
    """A wrongly scaled basis breaks the purity identities and names the seed"""

    def broken_basis(d):
        basis = gellmann_basis(d)
        return dataclasses.replace(basis, scale=basis.scale * 1.1)

    mocker.patch("concurrence_bounds.bloch.gellmann_basis", side_effect=broken_basis)
    result = checks.check_purity_identity(((2, 2),), samples=4, seed=42)
    assert not result.ok
    assert result.failures[0].seed == 42
    assert "Tr rho^2" in result.failures[0].detail


def test_suite_result_counts():
    result = checks.SuiteResult("demo")
    result.record("a", 1, None)
    result.record("b", 2, "broken")
    assert (result.total, result.passed, result.ok) == (2, 1, False)
    assert result.failures == [checks.CaseFailure("demo", "b", 2, "broken")]
