"""
Property-based validation suites for the ``check`` command.

Every case draws its state from ``seed + index``, so a failing case is
reproduced by rebuilding the state with the reported seed.
"""

from __future__ import annotations

import itertools
import logging
import math
from dataclasses import dataclass, field
from functools import partial
from typing import NamedTuple

import numpy as np

from concurrence_bounds.bloch import (
    decompose,
    purity_from_bloch,
    reconstruct,
    vector_norm_sq,
)
from concurrence_bounds.bounds import (
    caf_concurrence_lb,
    k_constant,
    pure_c2,
    pure_concurrence,
    scalar_lemma_slack,
    thm1_c2_from_t,
    thm1_concurrence_from_t,
    thm2_c2_lb,
    thm2_coefficient,
    thm2_concurrence_lb,
)
from concurrence_bounds.exceptions import ConcurrenceBoundsError, ParamOutOfRangeError
from concurrence_bounds.linalg import (
    PureState,
    partial_trace_a,
    partial_trace_b,
    partial_transpose_a,
    purity,
    trace_norm,
)
from concurrence_bounds.states import (
    decomposition_upper_bound,
    example1_state,
    example2_slice,
    haar_random_pure,
    random_mixed,
    wootters_concurrence,
)

log = logging.getLogger(__name__)

IDENTITY_TOLERANCE = 1e-10
EXACTNESS_TOLERANCE = 1e-9
ORACLE_TOLERANCE = 1e-8
DECOMPOSITION_TOLERANCE = 1e-6
SCALAR_LEMMA_TOLERANCE = 1e-12
SCALAR_LEMMA_DIMENSIONS = tuple(
    pair for pair in itertools.product(range(2, 5), repeat=2) if pair[0] <= pair[1]
)
EXAMPLE_GRID = np.linspace(0.0, 1.0, 21)


class CaseFailure(NamedTuple):
    """One failed case with the seed that reproduces it"""

    suite: str
    case: str
    seed: object
    detail: str


@dataclass
class SuiteResult:
    """Pass and failure counts of one validation suite"""

    name: str
    total: int = 0
    failures: list = field(default_factory=list)

    @property
    def passed(self):
        return self.total - len(self.failures)

    @property
    def ok(self):
        return not self.failures

    def record(self, case, seed, detail):
        """Count one case; ``detail`` is None when it passed"""
        self.total += 1
        if detail is not None:
            self.failures.append(CaseFailure(self.name, case, seed, detail))
            log.error("%s failed for %s (seed %s): %s", self.name, case, seed, detail)


def _deviation(label, actual, expected, tolerance):
    deviation = abs(actual - expected)
    if deviation > tolerance:
        return (
            f"{label} = {actual!r}, expected {expected!r} "
            f"(deviation {deviation:.3e})"
        )
    return None


def _mixed_cases(dimensions, samples, seed):
    """(label, seed, builder) for random mixed states cycling through every rank"""
    for d1, d2 in dimensions:
        size = d1 * d2
        for index in range(samples):
            case_seed = seed + index
            rank = 1 + index % size
            yield (
                f"{d1}x{d2} rank {rank}",
                case_seed,
                partial(random_mixed, d1, d2, rank, case_seed),
            )


def _pure_cases(dimensions, samples, seed):
    for d1, d2 in dimensions:
        for index in range(samples):
            case_seed = seed + index
            yield (
                f"{d1}x{d2} pure",
                case_seed,
                partial(haar_random_pure, d1, d2, case_seed),
            )


def _run(name, cases, check):
    """
    Apply ``check`` to every case built by the (label, seed, build) triples.

    A package error raised while building or checking a case counts as a
    failure of that case.
    """
    result = SuiteResult(name)
    for case, case_seed, build in cases:
        try:
            detail = check(build())
        except ConcurrenceBoundsError as ex:
            detail = f"{type(ex).__name__}: {ex}"
        result.record(case, case_seed, detail)
    return result


def _purity_identity(rho):
    triple = purity_from_bloch(decompose(rho))
    direct = (
        purity(rho.mat),
        purity(partial_trace_b(rho)),
        purity(partial_trace_a(rho)),
    )
    for label, actual, expected in zip(
        ("Tr rho^2", "Tr rho_A^2", "Tr rho_B^2"), triple, direct
    ):
        if detail := _deviation(label, actual, expected, IDENTITY_TOLERANCE):
            return detail
    return None


def _round_trip(rho):
    error = float(np.max(np.abs(reconstruct(decompose(rho)) - rho.mat)))
    return _deviation("max entry error", error, 0.0, IDENTITY_TOLERANCE)


def _pure_vector_norm(psi):
    d1, d2 = psi.d1, psi.d2
    dec = decompose(psi.density())
    expected = (d1 * d2 - 1) / ((d1 - 1) * (d2 - 1))
    triple = purity_from_bloch(dec)
    return _deviation(
        "|u|^2", vector_norm_sq(dec), expected, IDENTITY_TOLERANCE
    ) or _deviation("reduced purities", triple.a, triple.b, IDENTITY_TOLERANCE)


def _pure_range(psi):
    t_squared = decompose(psi.density()).t_frobenius ** 2
    upper = k_constant(psi.d1, psi.d2) + 1
    if not 1 - EXACTNESS_TOLERANCE <= t_squared <= upper + EXACTNESS_TOLERANCE:
        return f"||T||_F^2 = {t_squared!r} outside [1, {upper!r}]"
    return None


def _pure_exactness(psi):
    d1, d2 = psi.d1, psi.d2
    rho = psi.density()
    t_f = decompose(rho).t_frobenius
    exact_c, exact_c2 = pure_concurrence(psi), pure_c2(psi)
    detail = (
        _deviation(
            "C from T",
            thm1_concurrence_from_t(t_f, d1, d2),
            exact_c,
            EXACTNESS_TOLERANCE,
        )
        or _deviation(
            "C_2 from T", thm1_c2_from_t(t_f, d1, d2), exact_c2, EXACTNESS_TOLERANCE
        )
        or _deviation("C_2 bound", thm2_c2_lb(rho), exact_c2, EXACTNESS_TOLERANCE)
    )
    bound = thm2_concurrence_lb(rho)
    if detail is None and bound > exact_c + EXACTNESS_TOLERANCE:
        detail = f"C bound {bound!r} exceeds exact C {exact_c!r}"
    return detail


def _c2_convexity(rho):
    eigenvalues, eigenvectors = np.linalg.eigh(rho.mat)
    average = sum(
        weight * pure_c2(PureState(rho.d1, rho.d2, vector))
        for weight, vector in zip(eigenvalues, eigenvectors.T)
        if weight > 0
    )
    bound = thm2_c2_lb(rho)
    if bound > average + EXACTNESS_TOLERANCE:
        return f"C_2 bound {bound!r} exceeds decomposition average {average!r}"
    return None


def check_purity_identity(dimensions, samples, seed):
    """Purities read off the Bloch vectors match the direct traces"""
    return _run(
        "purity_identity", _mixed_cases(dimensions, samples, seed), _purity_identity
    )


def check_round_trip(dimensions, samples, seed):
    """reconstruct(decompose(rho)) gives rho back"""
    return _run("round_trip", _mixed_cases(dimensions, samples, seed), _round_trip)


def check_pure_vector_norm(dimensions, samples, seed):
    """
    For pure states |u|^2 = (d1 d2 - 1)/((d1 - 1)(d2 - 1)) and both reduced
    purities agree.
    """
    return _run(
        "pure_vector_norm", _pure_cases(dimensions, samples, seed), _pure_vector_norm
    )


def check_pure_range(dimensions, samples, seed):
    """For pure states 1 <= ||T||_F^2 <= K + 1"""
    return _run("pure_range", _pure_cases(dimensions, samples, seed), _pure_range)


def check_pure_exactness(dimensions, samples, seed):
    """
    On pure states the correlation formulas give C and C_2 exactly, the
    correlation C_2 bound is tight and the correlation C bound stays below C.
    """
    return _run(
        "pure_exactness", _pure_cases(dimensions, samples, seed), _pure_exactness
    )


def check_c2_convexity(dimensions, samples, seed):
    """The C_2 bound of a mixed state stays below the eigen-decomposition average"""
    return _run("c2_convexity", _mixed_cases(dimensions, samples, seed), _c2_convexity)


def check_scalar_lemma(points):
    """sqrt(x^2 - 1) >= sqrt((a + 1)/(a - 1)) (x - 1) on [1, a] with a = sqrt(K + 1)"""

    def slack_on_grid(dims):
        a = math.sqrt(k_constant(*dims) + 1)
        slack = float(np.min(scalar_lemma_slack(np.linspace(1.0, a, points), a)))
        if slack < -SCALAR_LEMMA_TOLERANCE:
            return f"minimum slack {slack!r} on [1, {a!r}]"
        return None

    cases = (
        (f"{d1}x{d2}", None, lambda dims=(d1, d2): dims)
        for d1, d2 in SCALAR_LEMMA_DIMENSIONS
    )
    return _run("scalar_lemma", cases, slack_on_grid)


def check_two_qubit_oracle(samples, seed, trials):
    """
    On two qubits the clamped lower bounds stay below the exact concurrence,
    which stays below an explicit decomposition average.
    """

    def sandwich(seeded):
        rho, case_seed = seeded
        exact = wootters_concurrence(rho)
        correlation = max(0.0, thm2_concurrence_lb(rho))
        witness = max(0.0, caf_concurrence_lb(rho))
        if correlation > exact + ORACLE_TOLERANCE:
            return f"correlation bound {correlation!r} exceeds C = {exact!r}"
        if witness > exact + ORACLE_TOLERANCE:
            return f"PPT/realignment bound {witness!r} exceeds C = {exact!r}"
        upper = decomposition_upper_bound(rho, trials, case_seed)
        if exact > upper + DECOMPOSITION_TOLERANCE:
            return f"C = {exact!r} exceeds decomposition average {upper!r}"
        return None

    cases = (
        (case, case_seed, lambda build=build, s=case_seed: (build(), s))
        for case, case_seed, build in _mixed_cases(((2, 2),), samples, seed)
    )
    return _run("two_qubit_oracle", cases, sandwich)


def _example1_closed_forms(x):
    rho = example1_state(x)
    t_f = decompose(rho).t_frobenius
    return (
        _deviation("||T||_F^2", t_f**2, 13 * x**2 / 9, IDENTITY_TOLERANCE)
        or _deviation(
            "C bound",
            thm2_concurrence_lb(rho),
            thm2_coefficient(4, 4) * (math.sqrt(13) * x / 3 - 1),
            IDENTITY_TOLERANCE,
        )
        or _deviation(
            "||rho^T_A||_tr",
            trace_norm(partial_transpose_a(rho)),
            max(1.0, (7 + 9 * x) / 8),
            IDENTITY_TOLERANCE,
        )
    )


def _example2_closed_forms(q1):
    rho = example2_slice(q1)
    expected = (18 * q1**2 - 4 * q1 + 1) / 9
    return _deviation(
        "||T||_F^2", decompose(rho).t_frobenius ** 2, expected, IDENTITY_TOLERANCE
    ) or _deviation(
        "rho_A - I/4",
        float(np.max(np.abs(partial_trace_b(rho) - np.eye(4) / 4))),
        0.0,
        IDENTITY_TOLERANCE,
    )


def _closed_form_cases(label, closed_form):
    for point in EXAMPLE_GRID:
        value = float(point)
        yield f"{label}={value:.2f}", None, lambda v=value: partial(closed_form, v)


def check_example_closed_forms():
    """Bounds of the two 4x4 families against their closed forms"""
    cases = itertools.chain(
        _closed_form_cases("example1 x", _example1_closed_forms),
        _closed_form_cases("example2 q1", _example2_closed_forms),
    )
    return _run("example_closed_forms", cases, lambda closed_form: closed_form())


def run_all(dimensions, samples, seed, trials, scalar_points):
    """Run every suite and return their results in a fixed order"""
    if seed < 0:
        raise ParamOutOfRangeError("seed", seed, "[0, inf)")
    log.info(
        "Running validation suites: dimensions=%s samples=%d seed=%d",
        dimensions,
        samples,
        seed,
    )
    return [
        check_purity_identity(dimensions, samples, seed),
        check_round_trip(dimensions, samples, seed),
        check_pure_vector_norm(dimensions, samples, seed),
        check_pure_range(dimensions, samples, seed),
        check_pure_exactness(dimensions, samples, seed),
        check_c2_convexity(dimensions, samples, seed),
        check_scalar_lemma(scalar_points),
        check_two_qubit_oracle(samples, seed, trials),
        check_example_closed_forms(),
    ]
