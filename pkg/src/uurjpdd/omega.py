"""The Omega_k values and the majorization vector built from them.

``N(r, s)`` is the squared largest eigenvalue of ``P_R + Q_S`` maximised over
all subsets with ``|R| = r`` and ``|S| = s``. A partition ``(k_1, ..., k_n)``
is valued as

    (1/4) * [N(1, k_1) + sum_{i >= 2} (N(i, k_i) - N(i - 1, k_i))]

and ``Omega_k`` is the best value over partitions of ``k``.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field

import numpy as np

from . import _backend
from .errors import DimensionCapExceeded, OutOfRange
from .jpdd import Partition, partitions_of
from .measurement import BasisPair

log = logging.getLogger(__name__)

DEFAULT_DIM_CAP = 8
ENVELOPE_REPORT_TOL = 1e-6


def _mask_to_set(mask: int) -> frozenset[int]:
    return frozenset(i + 1 for i in range(mask.bit_length()) if mask >> i & 1)


@dataclass(frozen=True, eq=False)
class NormTable:
    dim: int
    values: np.ndarray
    best_r: np.ndarray = field(repr=False)
    best_s: np.ndarray = field(repr=False)

    def __call__(self, r: int, s: int) -> float:
        return float(self.values[r, s])

    def argmax_subsets(self, r: int, s: int) -> tuple[frozenset[int], frozenset[int]]:
        """The first maximising ``(R, S)`` pair in colex order, 1-based."""
        return _mask_to_set(int(self.best_r[r, s])), _mask_to_set(int(self.best_s[r, s]))


@dataclass(frozen=True, eq=False)
class OmegaTable:
    dim: int
    omega_k: np.ndarray
    raw_omega_k: np.ndarray
    per_partition: dict[Partition, float]
    argmax_partition: list[Partition]
    findings: list[str] = field(default_factory=list)


def build_norm_table(pair: BasisPair, dim_cap: int = DEFAULT_DIM_CAP) -> NormTable:
    d = pair.dim
    if d > dim_cap:
        raise DimensionCapExceeded(
            f"d={d} exceeds the norm-table cap {dim_cap} ({4 ** d} eigensolves); raise dim_cap explicitly"
        )
    values, best_r, best_s = _backend.norm_table(np.ascontiguousarray(pair.unitary))
    for a in (values, best_r, best_s):
        a.setflags(write=False)
    return NormTable(d, values, best_r, best_s)


def omega_partition_value(p: Partition, table: NormTable) -> float:
    total = table(1, p[0])
    for i in range(2, len(p) + 1):
        k = p[i - 1]
        total += table(i, k) - table(i - 1, k)
    return 0.25 * total


def omega_k(k: int, pair: BasisPair, table: NormTable) -> tuple[float, Partition]:
    if not 1 <= k <= pair.dim:
        raise OutOfRange(f"k={k} outside 1..{pair.dim}")
    best, arg = -np.inf, None
    for p in partitions_of(k, pair.dim):
        v = omega_partition_value(p, table)
        if v > best:
            best, arg = v, p
    return best, arg


def omega_table(pair: BasisPair, table: NormTable | None = None, dim_cap: int = DEFAULT_DIM_CAP) -> OmegaTable:
    if table is None:
        table = build_norm_table(pair, dim_cap)
    d = pair.dim
    per_partition: dict[Partition, float] = {}
    raw = np.empty(d)
    argmax: list[Partition] = []
    for k in range(1, d + 1):
        val, arg = omega_k(k, pair, table)
        raw[k - 1] = val
        argmax.append(arg)
        for p in partitions_of(k, d):
            per_partition[p] = omega_partition_value(p, table)

    # running maximum and [0, 1] clamp; large corrections are reported
    env = np.clip(np.maximum.accumulate(raw), 0.0, 1.0)
    findings = []
    for k in np.flatnonzero(np.abs(env - raw) > ENVELOPE_REPORT_TOL):
        msg = f"Omega_{k + 1}: raw value {raw[k]:.12g} adjusted to {env[k]:.12g} by envelope/clamp"
        log.info(msg)
        findings.append(msg)
    return OmegaTable(d, env, raw, per_partition, argmax, findings)


def omega_vector(pair: BasisPair, dim_cap: int = DEFAULT_DIM_CAP) -> tuple[np.ndarray, OmegaTable]:
    """Length-d^2 vector ``(Omega_1, Omega_2 - Omega_1, ..., 0, ...)``.

    Entries keep their construction order; compare against sorted copies.
    """
    tab = omega_table(pair, dim_cap=dim_cap)
    d = pair.dim
    w = np.zeros(d * d)
    w[:d] = np.diff(tab.omega_k, prepend=0.0)
    return w, tab
