"""
State constructors and independent oracles.

Random families draw from ``numpy.random.default_rng(seed)`` (PCG64), so every
sampled state is reproducible from its seed on any platform.
"""

from __future__ import annotations

import enum
import logging
import math
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from concurrence_bounds.bounds import pure_concurrence
from concurrence_bounds.constants import (
    EXAMPLE2_COHERENCE_POSITIONS,
    WEIGHT_SUM_TOLERANCE,
)
from concurrence_bounds.exceptions import (
    DimensionTooSmallError,
    MissingParameterError,
    ParamOutOfRangeError,
    WrongDimensionError,
)
from concurrence_bounds.linalg import (
    DensityMatrix,
    PureState,
    hermitian_sqrt,
    singular_values,
)

log = logging.getLogger(__name__)

PAULI_Y = np.array([[0, -1j], [1j, 0]], dtype=np.complex128)
SPIN_FLIP = np.kron(PAULI_Y, PAULI_Y)

# Eigenvalues below this fraction of the largest are dropped from decompositions
_RANK_CUTOFF = 1e-14


class StateFamily(enum.Enum):
    """State families selectable with --family"""

    EXAMPLE1 = "example1"
    EXAMPLE2 = "example2"
    MAX_ENTANGLED = "maxent"
    ISOTROPIC = "isotropic"
    HAAR_PURE = "haar"
    RANDOM_MIXED = "mixed"


def _check_unit_interval(name, value):
    if not 0 <= value <= 1:
        raise ParamOutOfRangeError(name, value, "[0, 1]")


def _check_dimension(d):
    if d < 2:  # noqa: PLR2004
        raise DimensionTooSmallError(d)


def example1_state(x):
    """rho_x = x |phi><phi| + (1 - x) I_16 / 16 with |phi> = (|00> + |33>) / sqrt(2)"""
    _check_unit_interval("x", x)
    phi = np.zeros(16, dtype=np.complex128)
    phi[0] = phi[15] = 1 / math.sqrt(2)
    mat = x * np.outer(phi, phi.conj()) + (1 - x) * np.eye(16) / 16
    return DensityMatrix(4, 4, mat)


def example2_state(q1, q2, q3, q4):
    """
    rho = diag(q1, q4, q3, q2, q2, q1, q4, q3, q3, q2, q1, q4, q4, q3, q2, q1) / 4
          + (q1 / 4) sum_{i != j} E_ij over the |ii> positions.

    The coherences form the rank-one block q1 J / 4 on the |ii> positions, so
    every non-negative weight vector summing to 1 gives a valid state.
    """
    weights = {"q1": q1, "q2": q2, "q3": q3, "q4": q4}
    for name, value in weights.items():
        if value < 0:
            raise ParamOutOfRangeError(name, value, "[0, inf)")
    total = sum(weights.values())
    if abs(total - 1) > WEIGHT_SUM_TOLERANCE:
        raise ParamOutOfRangeError("q1+q2+q3+q4", total, "{1}")

    diagonal = [q1, q4, q3, q2, q2, q1, q4, q3, q3, q2, q1, q4, q4, q3, q2, q1]
    mat = np.diag(np.asarray(diagonal, dtype=np.complex128)) / 4
    for i in EXAMPLE2_COHERENCE_POSITIONS:
        for j in EXAMPLE2_COHERENCE_POSITIONS:
            if i != j:
                mat[i, j] = q1 / 4
    return DensityMatrix(4, 4, mat)


def example2_slice(q1):
    """The one-parameter slice q2 = q4 = (1 - q1)/2, q3 = 0"""
    _check_unit_interval("q1", q1)
    rest = (1 - q1) / 2
    return example2_state(q1, rest, 0.0, rest)


def max_entangled(d):
    """sum_i |ii> / sqrt(d)"""
    _check_dimension(d)
    amps = np.zeros(d * d, dtype=np.complex128)
    amps[np.arange(d) * (d + 1)] = 1 / math.sqrt(d)
    return PureState(d, d, amps)


def isotropic_state(d, p):
    """p |Phi_d><Phi_d| + (1 - p) I / d^2"""
    _check_unit_interval("p", p)
    phi = max_entangled(d).amps
    size = d * d
    mat = p * np.outer(phi, phi.conj()) + (1 - p) * np.eye(size) / size
    return DensityMatrix(d, d, mat)


def werner_state(p):
    """Two-qubit Werner state p |Psi-><Psi-| + (1 - p) I / 4"""
    _check_unit_interval("p", p)
    psi_minus = np.array([0, 1, -1, 0], dtype=np.complex128) / math.sqrt(2)
    mat = p * np.outer(psi_minus, psi_minus.conj()) + (1 - p) * np.eye(4) / 4
    return DensityMatrix(2, 2, mat)


def product_state(psi_a, psi_b):
    """|a> (x) |b> for normalized local vectors"""
    psi_a = np.asarray(psi_a, dtype=np.complex128)
    psi_b = np.asarray(psi_b, dtype=np.complex128)
    return PureState(len(psi_a), len(psi_b), np.kron(psi_a, psi_b))


def seeded_rng(seed):
    """PCG64 generator for a non-negative integer seed"""
    if isinstance(seed, bool) or not isinstance(seed, (int, np.integer)) or seed < 0:
        raise ParamOutOfRangeError("seed", seed, "[0, inf)")
    return np.random.default_rng(seed)


def _complex_gaussian(rng, shape):
    return rng.standard_normal(shape) + 1j * rng.standard_normal(shape)


def haar_random_unitary(d, rng):
    """Haar-distributed d x d unitary from the QR decomposition of a Ginibre matrix"""
    q, r = np.linalg.qr(_complex_gaussian(rng, (d, d)))
    phases = np.diagonal(r) / np.abs(np.diagonal(r))
    return q * phases


def haar_random_pure(d1, d2, seed):
    """Normalized vector of independent standard complex Gaussians"""
    _check_dimension(d1)
    _check_dimension(d2)
    amps = _complex_gaussian(seeded_rng(seed), d1 * d2)
    return PureState(d1, d2, amps / np.linalg.norm(amps))


def random_mixed(d1, d2, rank, seed):
    """G G^dagger / Tr(G G^dagger) with G a (d1 d2) x rank complex Ginibre matrix"""
    _check_dimension(d1)
    _check_dimension(d2)
    if not 1 <= rank <= d1 * d2:
        raise ParamOutOfRangeError("rank", rank, f"[1, {d1 * d2}]")
    g = _complex_gaussian(seeded_rng(seed), (d1 * d2, rank))
    mat = g @ g.conj().T
    return DensityMatrix(d1, d2, mat / np.trace(mat).real)


def wootters_concurrence(rho):
    """
    Exact two-qubit concurrence max(0, mu1 - mu2 - mu3 - mu4), where mu are the
    decreasing square roots of the eigenvalues of rho (sy (x) sy) rho* (sy (x) sy).

    They are taken as the singular values of sqrt(rho) sqrt(rho~), with
    sqrt(rho~) = (sy (x) sy) sqrt(rho)* (sy (x) sy), so no square root is taken
    of rounding-level eigenvalues.
    """
    if (rho.d1, rho.d2) != (2, 2):
        msg = f"Exact concurrence needs a 2x2 state, got {rho.d1}x{rho.d2}"
        raise WrongDimensionError(msg)
    root = hermitian_sqrt(rho.mat)
    flipped_root = SPIN_FLIP @ root.conj() @ SPIN_FLIP
    mu = singular_values(root @ flipped_root)
    return float(max(0.0, mu[0] - mu[1] - mu[2] - mu[3]))


def _decomposition_average(vectors, d1, d2):
    """sum_i p_i C(psi_i) for the subnormalized columns of ``vectors``"""
    blocks = vectors.T.reshape(-1, d1, d2)
    weights = np.einsum("kij,kij->k", blocks, blocks.conj()).real
    keep = weights > 0
    blocks = blocks[keep] / np.sqrt(weights[keep])[:, np.newaxis, np.newaxis]
    reduced = np.einsum("kij,klj->kil", blocks, blocks.conj())
    purities = np.einsum("kij,kji->k", reduced, reduced).real
    concurrences = np.sqrt(2 * np.clip(1 - purities, 0.0, None))
    return float(weights[keep] @ concurrences)


def decomposition_upper_bound(rho, trials, seed):
    """
    Smallest average pure-state concurrence over ``trials`` pure-state
    decompositions of ``rho``.

    The first trial is the eigendecomposition itself; the rest mix the weighted
    eigenvectors with Haar-random unitaries. Every decomposition upper-bounds
    the convex roof, so the result is always >= C(rho).
    """
    if trials < 1:
        raise ParamOutOfRangeError("trials", trials, "[1, inf)")
    eigenvalues, eigenvectors = np.linalg.eigh(rho.mat)
    keep = eigenvalues > _RANK_CUTOFF * eigenvalues[-1]
    vectors = eigenvectors[:, keep] * np.sqrt(eigenvalues[keep])
    rank = vectors.shape[1]
    if rank == 1:
        amps = vectors[:, 0] / np.linalg.norm(vectors[:, 0])
        return pure_concurrence(PureState(rho.d1, rho.d2, amps))

    rng = seeded_rng(seed)
    best = _decomposition_average(vectors, rho.d1, rho.d2)
    for _ in range(trials - 1):
        mixed = vectors @ haar_random_unitary(rank, rng).T
        best = min(best, _decomposition_average(mixed, rho.d1, rho.d2))
    return best


@dataclass(frozen=True)
class StateFamilySpec:
    """A named state family plus the parameters needed to build one member"""

    family: StateFamily
    params: dict = field(default_factory=dict)
    seed: Optional[int] = None

    def param(self, name, default=None):
        value = self.params.get(name, default)
        if value is None:
            raise MissingParameterError(name, self.family.value)
        return value

    def build(self):
        """Construct the DensityMatrix of this family member"""
        family = self.family
        if family is StateFamily.EXAMPLE1:
            return example1_state(self.param("x"))
        if family is StateFamily.EXAMPLE2:
            q1 = self.param("q1")
            if all(self.params.get(name) is None for name in ("q2", "q3", "q4")):
                return example2_slice(q1)
            return example2_state(
                q1, self.param("q2"), self.param("q3"), self.param("q4")
            )
        if family is StateFamily.MAX_ENTANGLED:
            return max_entangled(self.param("d1", 2)).density()
        if family is StateFamily.ISOTROPIC:
            return isotropic_state(self.param("d1", 2), self.param("x"))
        seed = 0 if self.seed is None else self.seed
        d1, d2 = self.param("d1", 2), self.param("d2", 2)
        if family is StateFamily.HAAR_PURE:
            return haar_random_pure(d1, d2, seed).density()
        return random_mixed(d1, d2, self.param("rank", d1 * d2), seed)
