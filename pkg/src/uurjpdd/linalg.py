"""Dense complex linear algebra for the tiny matrices this package handles.

Index sets ``R`` and ``S`` are 1-based, matching the basis labels
``|a_1>, ..., |a_d>`` and ``|b_1>, ..., |b_d>``.
"""
from __future__ import annotations

from typing import Iterable

import numpy as np

from . import _backend
from .errors import DimensionMismatch, IndexOutOfRange, NonFinite, NotSelfAdjoint

SELF_ADJOINT_TOL = 1e-10


def as_matrix(m) -> np.ndarray:
    a = np.asarray(m, dtype=np.complex128)
    if a.ndim != 2:
        raise DimensionMismatch(f"expected a 2-d array, got shape {a.shape}")
    if not np.all(np.isfinite(a)):
        raise NonFinite("matrix has NaN or Inf entries")
    return a


def _checked_hermitian(m) -> np.ndarray:
    a = as_matrix(m)
    if a.shape[0] != a.shape[1]:
        raise DimensionMismatch(f"matrix is not square: {a.shape}")
    asym = float(np.max(np.abs(a - a.conj().T))) if a.size else 0.0
    if asym > SELF_ADJOINT_TOL:
        raise NotSelfAdjoint(f"max |M - M^dagger| = {asym:.3e} exceeds {SELF_ADJOINT_TOL}")
    return 0.5 * (a + a.conj().T)


def hermitian_eigh(m, tol: float = 1e-13) -> tuple[np.ndarray, np.ndarray]:
    """Eigenvalues (ascending) and eigenvectors (columns) by cyclic Jacobi."""
    a = _checked_hermitian(m)
    w, v = _backend.jacobi_eigh(a, tol, 64, True)
    order = np.argsort(w, kind="stable")
    return w[order], v[:, order]


def hermitian_max_eigenvalue(m, tol: float = 1e-13) -> float:
    """Largest eigenvalue of a self-adjoint matrix.

    The input is symmetrised as ``(M + M^dagger)/2`` before the Jacobi sweeps.
    Raises :class:`NotSelfAdjoint` when the asymmetry exceeds 1e-10 and
    :class:`NonFinite` for NaN/Inf entries.
    """
    return float(_backend.max_eigenvalue(_checked_hermitian(m), tol, 64))


def is_unitary(u, tol: float = 1e-8) -> bool:
    a = as_matrix(u)
    if a.shape[0] != a.shape[1]:
        raise DimensionMismatch(f"matrix is not square: {a.shape}")
    dev = a.conj().T @ a - np.eye(a.shape[0])
    return bool(np.max(np.abs(dev)) <= tol)


def unitarity_deviation(u) -> float:
    a = as_matrix(u)
    return float(np.max(np.abs(a.conj().T @ a - np.eye(a.shape[0]))))


def _index_list(indices: Iterable[int], d: int, name: str) -> list[int]:
    idx = sorted(set(int(i) for i in indices))
    for i in idx:
        if not 1 <= i <= d:
            raise IndexOutOfRange(f"{name} index {i} outside 1..{d}")
    return [i - 1 for i in idx]


def projector_sum(pair, R: Iterable[int], S: Iterable[int]) -> np.ndarray:
    """``P_R + Q_S`` written in the A basis.

    ``P_R`` is diagonal with ones on ``R``; ``Q_S`` sums ``u_n u_n^dagger``
    over the columns ``u_n`` of the overlap unitary with ``n`` in ``S``.
    """
    u = pair.unitary
    d = u.shape[0]
    rows = _index_list(R, d, "R")
    cols = _index_list(S, d, "S")
    us = u[:, cols]
    m = us @ us.conj().T
    m[rows, rows] += 1.0
    return 0.5 * (m + m.conj().T)
