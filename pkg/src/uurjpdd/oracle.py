"""Brute-force maximisation of sums of ``p_m q_n`` over states and regions.

This path never touches the norm table: each region is optimised directly
over pure states with a multi-start fixed-point ascent, using numpy's
``eigh`` rather than the package's Jacobi kernels.
"""
from __future__ import annotations

import warnings
from dataclasses import dataclass
from itertools import combinations, permutations
from typing import Iterable

import numpy as np

from .errors import DimensionCapExceeded, EmptyTrialsWarning, OutOfRange
from .jpdd import Cell, is_partition_shaped, partitions_of
from .measurement import BasisPair, haar_states
from .omega import omega_table

REGION_MAX_CAP = 5
EXHAUSTIVE_CAP = 3
MIXED_CAP = 4
TIE_TOL = 1e-9


@dataclass(frozen=True)
class OracleReport:
    k: int
    oracle_value: float
    formula_value: float
    gap: float
    best_region: frozenset
    best_region_is_partition_shaped: bool
    best_partition_value: float
    exhaustive: bool
    regions_searched: int
    starts_used: int
    converged: bool


def _cells(region: Iterable[Cell], d: int) -> tuple[np.ndarray, np.ndarray]:
    cells = sorted(set(region))
    if not cells:
        raise OutOfRange("region must contain at least one cell")
    for i, j in cells:
        if not (1 <= i <= d and 1 <= j <= d):
            raise OutOfRange(f"cell {(i, j)} outside the {d}x{d} grid")
    rows = np.array([i - 1 for i, _ in cells])
    cols = np.array([j - 1 for _, j in cells])
    return rows, cols


def _objective(p: np.ndarray, q: np.ndarray, rows: np.ndarray, cols: np.ndarray) -> np.ndarray:
    return np.sum(p[..., rows] * q[..., cols], axis=-1)


def _stationarity_operator(u, uh, rows, cols, p, q):
    # psi is stationary on the sphere iff it is an eigenvector of
    # M = 1/2 sum_{(m,n)} (q_n |a_m><a_m| + p_m |b_n><b_n|)
    n, d = p.shape
    wa = np.zeros((n, d))
    wb = np.zeros((n, d))
    np.add.at(wa.T, rows, q[:, cols].T)
    np.add.at(wb.T, cols, p[:, rows].T)
    m = 0.5 * ((u[None, :, :] * wb[:, None, :]) @ uh)
    m[:, np.arange(d), np.arange(d)] += 0.5 * wa
    return m


def _ascent(pair: BasisPair, rows, cols, psi: np.ndarray, tol: float, max_iter: int):
    """Fixed-point ascent, one row of ``psi`` per start.

    Each start jumps to the top eigenvector of M(psi). When that jump does
    not increase the objective the start takes a shifted power step
    ``(M + shift) psi`` instead; with the shift at the cell count the
    objective plus ``shift * |psi|^4`` is convex, so that step cannot
    decrease it.
    """
    u = pair.unitary
    uh = u.conj().T
    shift = float(len(rows))

    def objective(x):
        return _objective(np.abs(x) ** 2, np.abs(x @ u.conj()) ** 2, rows, cols)

    f = objective(psi)
    done = np.zeros(psi.shape[0], dtype=bool)
    for _ in range(max_iter):
        p = np.abs(psi) ** 2
        q = np.abs(psi @ u.conj()) ** 2
        m = _stationarity_operator(u, uh, rows, cols, p, q)
        jump = np.linalg.eigh(m)[1][:, :, -1]
        f_jump = objective(jump)
        power = np.einsum("sij,sj->si", m, psi) + shift * psi
        power /= np.linalg.norm(power, axis=1, keepdims=True)
        f_power = objective(power)
        take_jump = f_jump >= f
        new_psi = np.where(take_jump[:, None], jump, power)
        new_f = np.maximum(np.where(take_jump, f_jump, f_power), f)
        # converged starts stay frozen
        psi = np.where(done[:, None], psi, new_psi)
        step = new_f - f
        f = np.where(done, f, new_f)
        done |= step < tol
        if done.all():
            break
    return float(f.max()), bool(done.all())


def region_max(
    pair: BasisPair,
    region: Iterable[Cell],
    starts: int = 64,
    seed=1,
    tol: float = 1e-10,
    max_iter: int = 500,
    *,
    with_status: bool = False,
):
    """Best value of ``sum_{(m,n) in region} p_m q_n`` over pure states.

    Heuristic global search: ``starts`` Haar-random initial states, each
    iterated to the top eigenvector of the stationarity operator.
    """
    d = pair.dim
    if d > REGION_MAX_CAP:
        raise DimensionCapExceeded(f"region_max supports d <= {REGION_MAX_CAP}, got {d}")
    if starts < 1:
        raise OutOfRange("starts must be >= 1")
    rows, cols = _cells(region, d)
    val, conv = _ascent(pair, rows, cols, haar_states(d, starts, seed), tol, max_iter)
    val = min(val, 1.0)  # rounding only: the objective never exceeds (sum p)(sum q) = 1
    return (val, conv) if with_status else val


def all_regions(k: int, d: int) -> list[frozenset]:
    grid = [(i, j) for i in range(1, d + 1) for j in range(1, d + 1)]
    return [frozenset(c) for c in combinations(grid, k)]


def partition_shaped_regions(k: int, d: int) -> list[frozenset]:
    """Every k-cell region that is a Young diagram up to row/column relabelling."""
    found: set[frozenset] = set()
    for shape in partitions_of(k, d):
        n = len(shape)
        for row_labels in permutations(range(1, d + 1), n):
            for col_order in permutations(range(1, d + 1), shape[0]):
                found.add(frozenset(
                    (row_labels[i], col_order[j]) for i in range(n) for j in range(shape[i])
                ))
    return sorted(found, key=sorted)


def brute_force_omega_k(
    pair: BasisPair,
    k: int,
    starts: int = 64,
    seed=1,
    exhaustive: bool | None = None,
    tol: float = 1e-10,
) -> OracleReport:
    """Maximise over regions of ``k`` cells and over states.

    ``exhaustive`` searches every k-subset of the grid (d <= 3); otherwise
    only partition-shaped regions are tried (d <= 5). ``None`` picks the
    exhaustive search whenever the dimension allows it.
    """
    d = pair.dim
    if not 1 <= k <= d:
        raise OutOfRange(f"k={k} outside 1..{d}")
    if exhaustive is None:
        exhaustive = d <= EXHAUSTIVE_CAP
    if exhaustive and d > EXHAUSTIVE_CAP:
        raise DimensionCapExceeded(f"exhaustive region search supports d <= {EXHAUSTIVE_CAP}, got {d}")
    if d > REGION_MAX_CAP:
        raise DimensionCapExceeded(f"oracle supports d <= {REGION_MAX_CAP}, got {d}")

    regions = all_regions(k, d) if exhaustive else partition_shaped_regions(k, d)
    best_val, best_region, best_shaped = -np.inf, None, False
    best_partition = -np.inf
    all_converged = True
    for region in regions:
        val, conv = region_max(pair, region, starts, seed, tol, with_status=True)
        all_converged &= conv
        shaped = is_partition_shaped(region)
        if shaped:
            best_partition = max(best_partition, val)
        # near-ties resolve towards partition-shaped regions
        if val > best_val + TIE_TOL or (shaped and not best_shaped and val > best_val - TIE_TOL):
            best_val, best_region, best_shaped = max(val, best_val), region, shaped

    formula = float(omega_table(pair).omega_k[k - 1])
    return OracleReport(
        k=k,
        oracle_value=best_val,
        formula_value=formula,
        gap=formula - best_val,
        best_region=best_region,
        best_region_is_partition_shaped=best_shaped,
        best_partition_value=best_partition,
        exhaustive=exhaustive,
        regions_searched=len(regions),
        starts_used=starts,
        converged=all_converged,
    )


def mixed_state_spot_check(pair: BasisPair, region: Iterable[Cell], trials: int, seed=1) -> float:
    """Largest objective seen over random mixtures of Haar pure states."""
    d = pair.dim
    if d > MIXED_CAP:
        raise DimensionCapExceeded(f"mixed-state spot check supports d <= {MIXED_CAP}, got {d}")
    rows, cols = _cells(region, d)
    if trials <= 0:
        warnings.warn("mixed_state_spot_check called with no trials", EmptyTrialsWarning, stacklevel=2)
        return 0.0
    rng = np.random.default_rng(seed)
    z = rng.standard_normal((trials, d, d)) + 1j * rng.standard_normal((trials, d, d))
    psi = z / np.linalg.norm(z, axis=2, keepdims=True)
    w = rng.dirichlet(np.ones(d), size=trials)
    p = np.einsum("tj,tjm->tm", w, np.abs(psi) ** 2)
    q = np.einsum("tj,tjn->tn", w, np.abs(psi @ pair.unitary.conj()) ** 2)
    return float(_objective(p, q, rows, cols).max())
