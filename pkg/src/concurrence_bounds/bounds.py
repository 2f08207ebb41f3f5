"""
Concurrence and 2-concurrence: exact pure-state values and mixed-state lower
bounds.

Raw bounds may be negative; only BoundReport clamps them at zero, so crossovers
of raw values can be located exactly.
"""

from __future__ import annotations

import logging
import math
from dataclasses import asdict, dataclass
from typing import Optional

import numpy as np

from concurrence_bounds.bloch import decompose, purity_from_bloch
from concurrence_bounds.constants import (
    DETECTION_TOLERANCE,
    PURE_PURITY_TOLERANCE,
    PURE_RANGE_TOLERANCE,
)
from concurrence_bounds.exceptions import OutOfPureRangeError, ParamOutOfRangeError
from concurrence_bounds.linalg import (
    PureState,
    partial_transpose_a,
    purity,
    realign,
    trace_norm,
)

log = logging.getLogger(__name__)


def k_constant(d1, d2):
    """K = (d1 + d2) / ((d1 - 1)(d2 - 1))"""
    return (d1 + d2) / ((d1 - 1) * (d2 - 1))


def thm2_coefficient(d1, d2):
    """sqrt(2)(sqrt(K + 1) + 1) / K, the slope of the correlation concurrence bound"""
    k = k_constant(d1, d2)
    return math.sqrt(2) * (math.sqrt(k + 1) + 1) / k


def scalar_lemma_slack(x, a):
    """
    sqrt(x^2 - 1) - sqrt((a + 1)/(a - 1)) (x - 1), nonnegative for 1 <= x <= a.

    Accepts scalars or arrays of x.
    """
    x = np.asarray(x, dtype=np.float64)
    return np.sqrt(np.clip(x**2 - 1, 0.0, None)) - np.sqrt((a + 1) / (a - 1)) * (x - 1)


def pure_concurrence(psi: PureState):
    """C(psi) = sqrt(2 (1 - Tr rho_A^2))"""
    return math.sqrt(2 * max(0.0, pure_c2(psi)))


def pure_c2(psi: PureState):
    """C_2(psi) = 1 - Tr rho_A^2"""
    return 1 - purity(psi.reduced_a())


def _check_pure_range(t_f, d1, d2):
    upper = k_constant(d1, d2) + 1
    t_squared = t_f**2
    below = t_squared < 1 - PURE_RANGE_TOLERANCE
    if below or t_squared >= upper + PURE_RANGE_TOLERANCE:
        raise OutOfPureRangeError(t_squared, upper)


def thm1_c2_from_t(t_f, d1, d2):
    """Exact 2-concurrence of a pure state from ||T||_F"""
    _check_pure_range(t_f, d1, d2)
    return (t_f**2 - 1) / k_constant(d1, d2)


def thm1_concurrence_from_t(t_f, d1, d2):
    """Exact concurrence of a pure state from ||T||_F"""
    return math.sqrt(2 * max(0.0, thm1_c2_from_t(t_f, d1, d2)))


def thm2_concurrence_from_t(t_f, d1, d2):
    """Correlation concurrence bound as a function of ||T||_F alone"""
    return thm2_coefficient(d1, d2) * (t_f - 1)


def thm2_c2_from_t(t_f, d1, d2):
    """Correlation 2-concurrence bound as a function of ||T||_F alone"""
    return (t_f**2 - 1) / k_constant(d1, d2)


def thm2_concurrence_lb(rho):
    """Raw correlation-matrix lower bound on C(rho)"""
    return thm2_concurrence_from_t(decompose(rho).t_frobenius, rho.d1, rho.d2)


def thm2_c2_lb(rho):
    """Raw correlation-matrix lower bound on C_2(rho)"""
    return thm2_c2_from_t(decompose(rho).t_frobenius, rho.d1, rho.d2)


def _max_witness_norm(rho):
    return max(trace_norm(partial_transpose_a(rho)), trace_norm(realign(rho)))


def _caf_from_norm(norm, d1, d2):
    m = min(d1, d2)
    return math.sqrt(2 / (m * (m - 1))) * (norm - 1)


def _qc_from_norm(norm, d1, d2):
    m = min(d1, d2)
    return max(norm - 1, 0.0) ** 2 / (m * (m - 1))


def caf_concurrence_lb(rho):
    """
    sqrt(2 / (m(m-1))) (max(||rho^{T_A}||_tr, ||R(rho)||_tr) - 1) with m = min(d1, d2).
    """
    return _caf_from_norm(_max_witness_norm(rho), rho.d1, rho.d2)


def qc_c2_lb(rho):
    """
    (max(||rho^{T_A}||_tr, ||R(rho)||_tr) - 1)^2 / (m(m-1)), the difference
    floored at zero before squaring.
    """
    return _qc_from_norm(_max_witness_norm(rho), rho.d1, rho.d2)


def _check_unit_interval(name, value):
    if not 0 <= value <= 1:
        raise ParamOutOfRangeError(name, value, "[0, 1]")


def example2_pra_lb(q1):
    """(1/(2 sqrt 6)) (y + |y|) with y = (2/3) q1 - 1/6"""
    _check_unit_interval("q1", q1)
    y = 2 * q1 / 3 - 1 / 6
    return (y + abs(y)) / (2 * math.sqrt(6))


def example2_old_lb(q1):
    """(1/(4 sqrt 6)) (y + |y|) with y = (3 q1 - 1) / 2"""
    _check_unit_interval("q1", q1)
    y = (3 * q1 - 1) / 2
    return (y + abs(y)) / (4 * math.sqrt(6))


@dataclass(frozen=True)
class BoundReport:
    """All lower bounds computed for one state"""

    d1: int
    d2: int
    t_frobenius: float
    t_trace_norm: float
    k_const: float
    thm2_c: float
    thm2_c2: float
    ppt_trace_norm: float
    realign_trace_norm: float
    caf_c: float
    qc_c2: float
    best_c: float
    best_c2: float
    purity: float
    purity_a: float
    purity_b: float
    exact_c: Optional[float] = None
    exact_c2: Optional[float] = None
    wootters_c: Optional[float] = None

    @property
    def detected_by_ppt(self):
        return self.ppt_trace_norm > 1 + DETECTION_TOLERANCE

    @property
    def detected_by_realignment(self):
        return self.realign_trace_norm > 1 + DETECTION_TOLERANCE

    @property
    def detected_by_correlation(self):
        return self.t_frobenius > 1 + DETECTION_TOLERANCE

    def as_dict(self):
        data = asdict(self)
        data.update(
            detected_by_ppt=self.detected_by_ppt,
            detected_by_realignment=self.detected_by_realignment,
            detected_by_correlation=self.detected_by_correlation,
        )
        return data


def _dominant_pure_state(rho):
    _, eigenvectors = np.linalg.eigh(rho.mat)
    amps = eigenvectors[:, -1]
    return PureState(rho.d1, rho.d2, amps / np.linalg.norm(amps))


def full_report(rho):
    """
    Evaluate every bound on ``rho``.

    best_c = max(0, thm2_c, caf_c) and best_c2 = max(0, thm2_c2, qc_c2). Exact
    values are attached for pure states, and the two-qubit exact concurrence
    when d1 = d2 = 2.
    """
    # Local import: states builds on this module for its oracles.
    from concurrence_bounds.states import wootters_concurrence  # noqa: PLC0415

    d1, d2 = rho.d1, rho.d2
    dec = decompose(rho)
    t_f = dec.t_frobenius
    ppt_norm = trace_norm(partial_transpose_a(rho))
    realign_norm = trace_norm(realign(rho))
    witness_norm = max(ppt_norm, realign_norm)
    thm2_c = thm2_concurrence_from_t(t_f, d1, d2)
    thm2_c2 = thm2_c2_from_t(t_f, d1, d2)
    caf_c = _caf_from_norm(witness_norm, d1, d2)
    qc_c2 = _qc_from_norm(witness_norm, d1, d2)
    purities = purity_from_bloch(dec)

    exact_c = exact_c2 = None
    if purities.total >= 1 - PURE_PURITY_TOLERANCE:
        psi = _dominant_pure_state(rho)
        exact_c, exact_c2 = pure_concurrence(psi), pure_c2(psi)
    wootters_c = wootters_concurrence(rho) if d1 == d2 == 2 else None  # noqa: PLR2004

    report = BoundReport(
        d1=d1,
        d2=d2,
        t_frobenius=t_f,
        t_trace_norm=dec.t_trace_norm,
        k_const=k_constant(d1, d2),
        thm2_c=thm2_c,
        thm2_c2=thm2_c2,
        ppt_trace_norm=ppt_norm,
        realign_trace_norm=realign_norm,
        caf_c=caf_c,
        qc_c2=qc_c2,
        best_c=max(0.0, thm2_c, caf_c),
        best_c2=max(0.0, thm2_c2, qc_c2),
        purity=purities.total,
        purity_a=purities.a,
        purity_b=purities.b,
        exact_c=exact_c,
        exact_c2=exact_c2,
        wootters_c=wootters_c,
    )
    log.debug("Bound report for %dx%d state: %s", d1, d2, report)
    return report
