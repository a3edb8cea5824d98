"""Basis pairs, overlap statistics, outcome distributions and Haar sampling."""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from itertools import combinations

import numpy as np

from .errors import DimensionMismatch, NotUnitary, OutOfRange
from .linalg import as_matrix, is_unitary, unitarity_deviation

UNITARY_TOL = 1e-8


@dataclass(frozen=True, eq=False)
class BasisPair:
    """Two orthonormal bases related by ``U[m, n] = <a_m|b_n>``.

    States are written in the A basis, so ``|a_m>`` is the m-th standard
    vector and ``|b_n>`` is the n-th column of ``U``.
    """

    unitary: np.ndarray
    metadata: dict = field(default_factory=dict)

    def __post_init__(self):
        u = as_matrix(self.unitary)
        if u.shape[0] != u.shape[1]:
            raise DimensionMismatch(f"overlap matrix must be square, got {u.shape}")
        if u.shape[0] < 2:
            raise OutOfRange("basis pairs need dimension >= 2")
        if not is_unitary(u, UNITARY_TOL):
            raise NotUnitary(
                f"overlap matrix is not unitary (max |U^dagger U - I| = {unitarity_deviation(u):.3e})"
            )
        u = u.copy()
        u.setflags(write=False)
        object.__setattr__(self, "unitary", u)

    @property
    def dim(self) -> int:
        return self.unitary.shape[0]


@dataclass(frozen=True)
class OverlapStats:
    c: float
    c_prime: float
    c21: float
    c22: float


def gram_schmidt(m) -> np.ndarray:
    """Orthonormalise columns in order (QR with a positive diagonal)."""
    q, r = np.linalg.qr(as_matrix(m))
    ph = np.diag(r).copy()
    ph[np.abs(ph) == 0] = 1.0
    return q * (ph / np.abs(ph))


def random_unitary(dim: int, seed) -> np.ndarray:
    rng = np.random.default_rng(seed)
    g = rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))
    return gram_schmidt(g)


def overlap_matrix(pair: BasisPair) -> np.ndarray:
    return np.abs(pair.unitary)


def overlap_stats(pair: BasisPair) -> OverlapStats:
    sq = overlap_matrix(pair) ** 2
    d = pair.dim
    c = math.sqrt(float(sq.max()))
    # two cells in one row (c21) or one column (c22)
    c21 = max(math.sqrt(sq[m, n] + sq[m, n2]) for m in range(d) for n, n2 in combinations(range(d), 2))
    c22 = max(math.sqrt(sq[m, n] + sq[m2, n]) for n in range(d) for m, m2 in combinations(range(d), 2))
    return OverlapStats(c=c, c_prime=max(c21, c22), c21=c21, c22=c22)


def probabilities(pair: BasisPair, psi, which: str = "A") -> np.ndarray:
    """Outcome distribution of ``psi`` in basis A (``p``) or B (``q``).

    ``psi`` may also be a stack of states with shape ``(..., d)``.
    """
    psi = np.asarray(psi, dtype=np.complex128)
    if psi.shape[-1] != pair.dim:
        raise DimensionMismatch(f"state has dimension {psi.shape[-1]}, pair has {pair.dim}")
    if which == "A":
        amp = psi
    elif which == "B":
        # <b_n|psi> = sum_m conj(U[m, n]) psi_m
        amp = psi @ pair.unitary.conj()
    else:
        raise ValueError(f"which must be 'A' or 'B', not {which!r}")
    return amp.real ** 2 + amp.imag ** 2


def sample_haar_state(dim: int, seed) -> np.ndarray:
    """Haar-random pure state; ``seed`` is anything ``default_rng`` accepts."""
    if dim < 1:
        raise OutOfRange("dim must be >= 1")
    rng = np.random.default_rng(seed)
    z = rng.standard_normal(dim) + 1j * rng.standard_normal(dim)
    return z / np.linalg.norm(z)


def haar_states(dim: int, count: int, seed) -> np.ndarray:
    """``count`` Haar states as rows, drawn from a single generator."""
    rng = np.random.default_rng(seed)
    z = rng.standard_normal((count, dim)) + 1j * rng.standard_normal((count, dim))
    return z / np.linalg.norm(z, axis=1, keepdims=True)
