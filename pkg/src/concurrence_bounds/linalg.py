"""
Dense complex linear algebra for bipartite states.

Matrices are numpy ``complex128`` arrays stored row-major. A bipartite index
pair (i, j), i on subsystem A and j on subsystem B, maps to the composite
index ``i * d2 + j``; every reshuffle below relies on that convention through
``_as_tensor``, which views a d1*d2 x d1*d2 matrix as ``rho[i, j, k, l]`` with
``rho_{ij,kl} = <ij| rho |kl>``.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass

import numpy as np

from concurrence_bounds.constants import (
    HERMITIAN_TOLERANCE,
    NORMALIZATION_TOLERANCE,
    PSD_TOLERANCE,
    SINGULAR_VALUE_CUTOFF,
    TRACE_TOLERANCE,
)
from concurrence_bounds.exceptions import (
    DimensionMismatchError,
    DimensionTooSmallError,
    NotFiniteError,
    NotHermitianError,
    NotNormalizedError,
    NotPSDError,
    NotUnitTraceError,
)

log = logging.getLogger(__name__)


def _frozen(array):
    """Return a read-only complex copy of the given array"""
    frozen = np.array(array, dtype=np.complex128, copy=True)
    frozen.flags.writeable = False
    return frozen


def _check_dimensions(*dimensions):
    for dimension in dimensions:
        if dimension < 2:  # noqa: PLR2004
            raise DimensionTooSmallError(dimension)


def _check_finite(array):
    bad = int(np.count_nonzero(~np.isfinite(array)))
    if bad:
        log.warning("Rejected state: %d non-finite entries", bad)
        raise NotFiniteError(bad, 0)


def hermiticity_violation(m):
    """Relative distance of ``m`` from its conjugate transpose"""
    m = np.asarray(m)
    return np.linalg.norm(m - m.conj().T) / max(1.0, np.linalg.norm(m))


def is_hermitian(m, tol=HERMITIAN_TOLERANCE):
    """Check ||m - m^dagger||_F <= tol * max(1, ||m||_F)"""
    m = np.asarray(m)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:  # noqa: PLR2004
        return False
    return hermiticity_violation(m) <= tol


@dataclass(frozen=True, eq=False)
class DensityMatrix:
    """
    Bipartite mixed state on C^d1 (x) C^d2.

    Construction validates Hermiticity, unit trace and positivity and raises the
    matching InvalidStateError subclass with the measured violation.
    """

    d1: int
    d2: int
    mat: np.ndarray

    def __post_init__(self):
        _check_dimensions(self.d1, self.d2)
        size = self.d1 * self.d2
        mat = _frozen(self.mat)
        if mat.shape != (size, size):
            msg = f"Expected a {size}x{size} matrix for d1={self.d1}, d2={self.d2}"
            raise DimensionMismatchError(msg)
        _check_finite(mat)
        object.__setattr__(self, "mat", mat)

        violation = hermiticity_violation(mat)
        if violation > HERMITIAN_TOLERANCE:
            log.warning("Rejected state: Hermiticity violation %.3e", violation)
            raise NotHermitianError(violation, HERMITIAN_TOLERANCE)
        trace_error = abs(np.trace(mat) - 1)
        if trace_error > TRACE_TOLERANCE:
            log.warning("Rejected state: trace off by %.3e", trace_error)
            raise NotUnitTraceError(trace_error, TRACE_TOLERANCE)
        smallest = np.linalg.eigvalsh(mat)[0]
        if smallest < PSD_TOLERANCE:
            log.warning("Rejected state: smallest eigenvalue %.3e", smallest)
            raise NotPSDError(smallest, PSD_TOLERANCE)

    @property
    def size(self):
        return self.d1 * self.d2

    @classmethod
    def from_pure(cls, psi):
        """Projector |psi><psi| of a PureState"""
        return cls(psi.d1, psi.d2, np.outer(psi.amps, psi.amps.conj()))


@dataclass(frozen=True, eq=False)
class PureState:
    """Normalized bipartite state vector"""

    d1: int
    d2: int
    amps: np.ndarray

    def __post_init__(self):
        _check_dimensions(self.d1, self.d2)
        amps = _frozen(self.amps).reshape(-1)
        if amps.shape != (self.d1 * self.d2,):
            msg = f"Expected {self.d1 * self.d2} amplitudes, got {amps.size}"
            raise DimensionMismatchError(msg)
        _check_finite(amps)
        norm_error = abs(np.linalg.norm(amps) - 1)
        if norm_error > NORMALIZATION_TOLERANCE:
            raise NotNormalizedError(norm_error, NORMALIZATION_TOLERANCE)
        object.__setattr__(self, "amps", amps)

    def density(self):
        return DensityMatrix.from_pure(self)

    def reduced_a(self):
        """rho_A = Tr_B |psi><psi| computed from the d1 x d2 coefficient matrix"""
        coefficients = self.amps.reshape(self.d1, self.d2)
        return coefficients @ coefficients.conj().T


def kron(a, b):
    """Tensor product a (x) b"""
    a = np.asarray(a, dtype=np.complex128)
    return np.kron(a, np.asarray(b, dtype=np.complex128))


def frobenius_norm(a):
    """sqrt(sum |a_ij|^2), which equals |vec(a)|"""
    return float(np.linalg.norm(np.asarray(a), "fro"))


def singular_values(a):
    """Singular values in decreasing order, with the negligible tail set to zero"""
    values = np.linalg.svd(np.asarray(a, dtype=np.complex128), compute_uv=False)
    if values.size and values[0] > 0:
        values[values < SINGULAR_VALUE_CUTOFF * values[0]] = 0.0
    return values


def trace_norm(a):
    """Ky-Fan (trace) norm: the sum of singular values"""
    return float(np.sum(singular_values(a)))


def _as_tensor(rho, dims=None):
    """
    View a DensityMatrix, or a raw square matrix with explicit ``dims``, as the
    tensor rho[i, j, k, l].
    """
    if isinstance(rho, DensityMatrix):
        return rho.mat.reshape(rho.d1, rho.d2, rho.d1, rho.d2), rho.d1, rho.d2
    if dims is None:
        msg = "dims=(d1, d2) is required for a raw matrix"
        raise DimensionMismatchError(msg)
    d1, d2 = dims
    mat = np.asarray(rho, dtype=np.complex128)
    if mat.shape != (d1 * d2, d1 * d2):
        msg = f"Matrix of shape {mat.shape} does not match dims {dims}"
        raise DimensionMismatchError(msg)
    return mat.reshape(d1, d2, d1, d2), d1, d2


def partial_transpose_a(rho, dims=None):
    """rho^{T_A} = sum rho_{ij,kl} |kj><il|"""
    tensor, d1, d2 = _as_tensor(rho, dims)
    size = d1 * d2
    return np.ascontiguousarray(tensor.transpose(2, 1, 0, 3)).reshape(size, size)


def realign(rho, dims=None):
    """
    Realignment R(rho) = sum rho_{ij,kl} |ik><jl|.

    Rows are indexed by (i, k) on A x A and columns by (j, l) on B x B, so the
    result is d1^2 x d2^2.
    """
    tensor, d1, d2 = _as_tensor(rho, dims)
    return np.ascontiguousarray(tensor.transpose(0, 2, 1, 3)).reshape(
        d1 * d1, d2 * d2
    )


def partial_trace_b(rho, dims=None):
    """Reduced state of subsystem A"""
    tensor, _, _ = _as_tensor(rho, dims)
    return np.einsum("ijkj->ik", tensor)


def partial_trace_a(rho, dims=None):
    """Reduced state of subsystem B"""
    tensor, _, _ = _as_tensor(rho, dims)
    return np.einsum("ijil->jl", tensor)


def purity(m):
    """Tr(m^2) as the real part of sum m_ij m_ji"""
    m = np.asarray(m)
    return float(np.einsum("ij,ji->", m, m).real)


def min_eigenvalue_hermitian(m):
    """Smallest eigenvalue of a Hermitian matrix"""
    m = np.asarray(m, dtype=np.complex128)
    violation = hermiticity_violation(m)
    if violation > HERMITIAN_TOLERANCE:
        raise NotHermitianError(violation, HERMITIAN_TOLERANCE)
    return float(np.linalg.eigvalsh(m)[0])


def hermitian_sqrt(m):
    """
    Square root of a positive semidefinite Hermitian matrix.

    Eigenvalues below SINGULAR_VALUE_CUTOFF times the largest are set to zero
    before the root is taken, so rounding noise on a null space does not grow
    to its square root.
    """
    eigenvalues, eigenvectors = np.linalg.eigh(np.asarray(m, dtype=np.complex128))
    eigenvalues = np.clip(eigenvalues, 0.0, None)
    eigenvalues[eigenvalues < SINGULAR_VALUE_CUTOFF * eigenvalues[-1]] = 0.0
    roots = np.sqrt(eigenvalues)
    return (eigenvectors * roots) @ eigenvectors.conj().T
