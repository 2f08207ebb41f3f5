"""
Generalized Bloch representation of bipartite states.

    rho = (I + sum r_i l~_i (x) l~_0 + sum s_j l~_0 (x) l~_j
             + sum t_ij l~_i (x) l~_j) / (d1 d2)

with u_ij = Tr(rho l~_i (x) l~_j) / ((d1 - 1)(d2 - 1)), r_i = u_i0, s_j = u_0j and
t_ij = u_ij for i, j >= 1.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from concurrence_bounds.constants import IMAGINARY_RESIDUE_TOLERANCE
from concurrence_bounds.exceptions import (
    ComplexCoefficientError,
    DimensionMismatchError,
    DimensionTooSmallError,
)
from concurrence_bounds.generators import gellmann_basis
from concurrence_bounds.linalg import frobenius_norm, trace_norm

log = logging.getLogger(__name__)


class PurityTriple(NamedTuple):
    """Tr rho^2, Tr rho_A^2 and Tr rho_B^2"""

    total: float
    a: float
    b: float


def _real_frozen(values):
    frozen = np.array(values, dtype=np.float64, copy=True)
    frozen.flags.writeable = False
    return frozen


@dataclass(frozen=True, eq=False)
class BlochDecomposition:
    """Local vectors R, S and the correlation matrix T of one state"""

    d1: int
    d2: int
    r: np.ndarray
    s: np.ndarray
    t: np.ndarray

    def __post_init__(self):
        n1, n2 = self.d1**2 - 1, self.d2**2 - 1
        r, s, t = (_real_frozen(v) for v in (self.r, self.s, self.t))
        if r.shape != (n1,) or s.shape != (n2,) or t.shape != (n1, n2):
            msg = (
                f"Bloch fields of shapes {r.shape}, {s.shape}, {t.shape} do not "
                f"match d1={self.d1}, d2={self.d2}"
            )
            raise DimensionMismatchError(msg)
        object.__setattr__(self, "r", r)
        object.__setattr__(self, "s", s)
        object.__setattr__(self, "t", t)

    @property
    def u(self):
        """The vector representation (R, S, vec(T))"""
        return np.concatenate([self.r, self.s, self.t.ravel()])

    @property
    def t_frobenius(self):
        return frobenius_norm(self.t)

    @property
    def t_trace_norm(self):
        return trace_norm(self.t)

    def coefficient_matrix(self):
        """u_ab for a, b = 0..d^2-1 with u_00 = 0"""
        u = np.zeros((self.d1**2, self.d2**2))
        u[1:, 0] = self.r
        u[0, 1:] = self.s
        u[1:, 1:] = self.t
        return u


def _scaled_stacks(d1, d2):
    for dimension in (d1, d2):
        if dimension < 2:  # noqa: PLR2004
            raise DimensionTooSmallError(dimension)
    return gellmann_basis(d1).scaled_stack(), gellmann_basis(d2).scaled_stack()


def decompose(rho):
    """
    Bloch decomposition of a DensityMatrix.

    Raises:
        DimensionTooSmallError: d1 < 2 or d2 < 2
        ComplexCoefficientError: a defining trace has an imaginary part above
            tolerance
    """
    d1, d2 = rho.d1, rho.d2
    stack_a, stack_b = _scaled_stacks(d1, d2)
    tensor = rho.mat.reshape(d1, d2, d1, d2)
    traces = np.einsum("ijkl,aki,blj->ab", tensor, stack_a, stack_b)
    traces[0, 0] = 0
    residue = float(np.max(np.abs(traces.imag)))
    if residue > IMAGINARY_RESIDUE_TOLERANCE:
        msg = f"Bloch coefficient traces have imaginary residue {residue:.3e}"
        raise ComplexCoefficientError(msg)
    log.debug("Bloch coefficient imaginary residue %.3e", residue)
    u = traces.real / ((d1 - 1) * (d2 - 1))
    return BlochDecomposition(d1=d1, d2=d2, r=u[1:, 0], s=u[0, 1:], t=u[1:, 1:])


def reconstruct(dec):
    """Density matrix rebuilt from its Bloch decomposition"""
    d1, d2 = dec.d1, dec.d2
    stack_a, stack_b = _scaled_stacks(d1, d2)
    size = d1 * d2
    expansion = np.einsum(
        "ab,aik,bjl->ijkl", dec.coefficient_matrix(), stack_a, stack_b
    ).reshape(size, size)
    return (np.eye(size, dtype=np.complex128) + expansion) / size


def vector_norm_sq(dec):
    """|u|^2 = |R|^2 + |S|^2 + ||T||_F^2"""
    return float(dec.r @ dec.r + dec.s @ dec.s + np.sum(dec.t**2))


def purity_from_bloch(dec):
    """
    (Tr rho^2, Tr rho_A^2, Tr rho_B^2) from |u|^2, |R|^2 and |S|^2 alone.

    Both reduced purities carry the (d1 - 1)(d2 - 1) factor; rho_A depends only
    on R and rho_B only on S.
    """
    d1, d2 = dec.d1, dec.d2
    factor = (d1 - 1) * (d2 - 1)
    return PurityTriple(
        total=(1 + factor * vector_norm_sq(dec)) / (d1 * d2),
        a=(1 + factor * float(dec.r @ dec.r)) / d1,
        b=(1 + factor * float(dec.s @ dec.s)) / d2,
    )
