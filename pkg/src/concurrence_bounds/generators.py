"""
Generalized Gell-Mann generators of SU(d).

The d^2 - 1 generators come in a fixed order: the d(d-1)/2 symmetric matrices
E_jk + E_kj, then the d(d-1)/2 antisymmetric matrices -i E_jk + i E_kj (both
enumerated over j < k lexicographically), then the d - 1 diagonal matrices.
Norms and trace norms of Bloch quantities do not depend on the order, but
serialized correlation matrices do.
"""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from concurrence_bounds.exceptions import DimensionTooSmallError, IndexOutOfRangeError

log = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class GeneratorBasis:
    """
    Unscaled generators lambda_1..lambda_{d^2-1}, Tr(lambda_i lambda_j) = 2 delta_ij,
    plus the factors of the scaled variants:
    lambda~_i = sqrt(d(d-1)/2) lambda_i and lambda~_0 = sqrt(d-1) I.
    """

    d: int
    lambdas: np.ndarray
    scale: float
    scale0: float

    def __len__(self):
        return len(self.lambdas)

    def scaled_stack(self):
        """All scaled generators lambda~_0..lambda~_{d^2-1} as one (d^2, d, d) array"""
        identity = self.scale0 * np.eye(self.d, dtype=np.complex128)
        return np.concatenate([identity[np.newaxis], self.scale * self.lambdas])


def _symmetric(d, j, k):
    m = np.zeros((d, d), dtype=np.complex128)
    m[j, k] = m[k, j] = 1
    return m


def _antisymmetric(d, j, k):
    m = np.zeros((d, d), dtype=np.complex128)
    m[j, k] = -1j
    m[k, j] = 1j
    return m


def _diagonal(d, level):
    m = np.zeros((d, d), dtype=np.complex128)
    m[np.arange(level), np.arange(level)] = 1
    m[level, level] = -level
    return np.sqrt(2 / (level * (level + 1))) * m


@lru_cache(maxsize=None)
def gellmann_basis(d):
    """
    Build (and cache per dimension) the generalized Gell-Mann basis of SU(d).

    Raises:
        DimensionTooSmallError: d < 2
    """
    if d < 2:  # noqa: PLR2004
        raise DimensionTooSmallError(d)
    pairs = list(itertools.combinations(range(d), 2))
    lambdas = np.array(
        [_symmetric(d, j, k) for j, k in pairs]
        + [_antisymmetric(d, j, k) for j, k in pairs]
        + [_diagonal(d, level) for level in range(1, d)]
    )
    lambdas.flags.writeable = False
    log.debug("Built SU(%d) generator basis with %d elements", d, len(lambdas))
    return GeneratorBasis(
        d=d,
        lambdas=lambdas,
        scale=float(np.sqrt(d * (d - 1) / 2)),
        scale0=float(np.sqrt(d - 1)),
    )


def scaled_generator(basis, i):
    """lambda~_0 = sqrt(d-1) I and lambda~_i = sqrt(d(d-1)/2) lambda_i for i >= 1"""
    if not 0 <= i <= len(basis):
        raise IndexOutOfRangeError(i, basis.d)
    if i == 0:
        return basis.scale0 * np.eye(basis.d, dtype=np.complex128)
    return basis.scale * basis.lambdas[i - 1]


def expand_hermitian(basis, h):
    """
    Coefficients of ``h`` in {I} + {lambda_i}:
    h = c0 I + sum c_i lambda_i with c0 = Tr(h)/d and c_i = Tr(h lambda_i)/2.
    """
    h = np.asarray(h, dtype=np.complex128)
    c0 = np.trace(h).real / basis.d
    coefficients = np.einsum("ij,nji->n", h, basis.lambdas).real / 2
    return c0, coefficients


def from_coefficients(basis, c0, coefficients):
    """Inverse of expand_hermitian"""
    return c0 * np.eye(basis.d, dtype=np.complex128) + np.einsum(
        "n,nij->ij", np.asarray(coefficients, dtype=np.float64), basis.lambdas
    )
