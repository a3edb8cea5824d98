"""Entropic lower bounds and the Haar-sampled audit of the majorization claim."""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import OutOfRange
from .majorization import UncertaintyMeasure, measure_value, shannon
from .measurement import BasisPair, overlap_stats, probabilities, sample_haar_state
from .omega import DEFAULT_DIM_CAP, omega_vector

C_STAR = 0.834  # upper end of the middle branch of the piecewise Shannon bound
INV_SQRT2 = 1.0 / math.sqrt(2.0)
BRANCH_TOL = 1e-12

MU_BRANCH = "MU_branch"
MIDDLE_UNAVAILABLE = "middle_unavailable"
G_BRANCH = "G_branch"


@dataclass(frozen=True)
class BoundReport:
    c: float
    b_mu: float
    b_jpdd: float
    measure: UncertaintyMeasure
    piecewise_branch: str | None
    piecewise_value: float | None
    omega: np.ndarray = field(repr=False)
    warnings: list[str] = field(default_factory=list)


@dataclass(frozen=True)
class VerificationReport:
    samples: int
    violations_majorization: int
    worst_prefix_deficit: float
    violations_entropy: int
    worst_entropy_gap: float
    seed: int
    violating_indices: list[int] = field(default_factory=list)


def mu_bound(c: float, log_base: str = "e") -> float:
    """``-2 log c``."""
    if not 0 < c <= 1 + BRANCH_TOL:
        raise OutOfRange(f"c={c} outside (0, 1]")
    c = min(c, 1.0)
    val = -2.0 * (math.log(c) if log_base == "e" else math.log2(c))
    return max(val, 0.0)


def shannon_branch(c: float) -> str:
    """Branch label of the piecewise Shannon bound at overlap ``c``.

    Classification only, in any dimension; the middle branch's bound is not
    available here.
    """
    if c <= INV_SQRT2 + BRANCH_TOL:
        return MU_BRANCH
    if c < C_STAR:
        return MIDDLE_UNAVAILABLE
    return G_BRANCH


def jpdd_bound(
    pair: BasisPair, m: UncertaintyMeasure | None = None, dim_cap: int = DEFAULT_DIM_CAP
) -> BoundReport:
    m = m or UncertaintyMeasure()
    omega, table = omega_vector(pair, dim_cap)
    c = overlap_stats(pair).c
    b_mu = mu_bound(c, m.log_base)
    b_jpdd = max(measure_value(m, omega), 0.0)
    notes = list(table.findings)
    branch = value = None
    if m.kind == "shannon":
        branch = shannon_branch(c)
        if branch == MU_BRANCH:
            value = b_mu
        elif branch == G_BRANCH:
            value = b_jpdd
        else:
            value = max(b_mu, b_jpdd)
            notes.append("middle branch H_1(c) unavailable; reporting max(b_mu, b_jpdd)")
    return BoundReport(c, b_mu, b_jpdd, m, branch, value, omega, notes)


def verify_uur(pair: BasisPair, samples: int = 10_000, seed: int = 1, tol: float = 1e-9) -> VerificationReport:
    """Check ``p (x) q`` is majorized by omega, and ``H(p) + H(q) >= H(omega)``,
    on Haar-random states. Sample ``i`` is ``sample_haar_state(d, (seed, i))``.
    """
    if samples < 1:
        raise OutOfRange("samples must be >= 1")
    omega, _ = omega_vector(pair)
    d = pair.dim
    psi = np.stack([sample_haar_state(d, (seed, i)) for i in range(samples)])
    p = probabilities(pair, psi, "A")
    q = probabilities(pair, psi, "B")

    joint = np.einsum("si,sj->sij", p, q).reshape(samples, d * d)
    joint = -np.sort(-joint, axis=1)
    w = -np.sort(-omega)
    deficit = np.max(np.cumsum(joint, axis=1) - np.cumsum(w)[None, :], axis=1)
    total_gap = np.abs(joint.sum(axis=1) - w.sum())
    bad_major = (deficit > tol) | (total_gap > tol)

    h_omega = float(shannon(omega))
    ent_gap = shannon(p) + shannon(q) - h_omega
    bad_ent = ent_gap < -tol

    return VerificationReport(
        samples=samples,
        violations_majorization=int(bad_major.sum()),
        worst_prefix_deficit=float(deficit.max()),
        violations_entropy=int(bad_ent.sum()),
        worst_entropy_gap=float(ent_gap.min()),
        seed=seed,
        violating_indices=[int(i) for i in np.flatnonzero(bad_major | bad_ent)[:100]],
    )
