"""Majorization order, tensor-product distributions and Schur-concave measures."""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import InvalidParameter, LengthMismatch

DEFAULT_TOL = 1e-9


@dataclass(frozen=True)
class UncertaintyMeasure:
    """Shannon, Renyi(alpha) or Tsallis(q) entropy.

    ``param`` is alpha for Renyi and q for Tsallis. ``log_base`` is ``"e"``
    or ``"2"``; Tsallis entropy has no logarithm and ignores it.
    """

    kind: str = "shannon"
    param: float | None = None
    log_base: str = "e"

    def __post_init__(self):
        if self.kind not in ("shannon", "renyi", "tsallis"):
            raise InvalidParameter(f"unknown measure kind {self.kind!r}")
        if self.log_base not in ("e", "2"):
            raise InvalidParameter(f"log_base must be 'e' or '2', not {self.log_base!r}")
        if self.kind != "shannon":
            if self.param is None or not math.isfinite(self.param) or self.param <= 0 or self.param == 1:
                raise InvalidParameter(f"{self.kind} parameter must be positive and != 1, got {self.param}")

    @classmethod
    def parse(cls, text: str, log_base: str = "e") -> "UncertaintyMeasure":
        """Parse ``shannon``, ``renyi:ALPHA`` or ``tsallis:Q``."""
        kind, _, arg = text.strip().lower().partition(":")
        if kind == "shannon":
            if arg:
                raise InvalidParameter("shannon takes no parameter")
            return cls("shannon", None, log_base)
        if kind in ("renyi", "tsallis"):
            try:
                value = float(arg)
            except ValueError:
                raise InvalidParameter(f"{kind} needs a numeric parameter, e.g. {kind}:2") from None
            return cls(kind, value, log_base)
        raise InvalidParameter(f"unknown measure {text!r}")

    def __str__(self):
        return self.kind if self.param is None else f"{self.kind}:{self.param:g}"


def tensor_distribution(p, q) -> np.ndarray:
    """Entries ``p_i q_j`` in row-major order."""
    return np.outer(np.asarray(p, dtype=float), np.asarray(q, dtype=float)).ravel()


def _sorted_desc(v) -> np.ndarray:
    return -np.sort(-np.asarray(v, dtype=float))


def pad(x, length: int) -> np.ndarray:
    x = np.asarray(x, dtype=float)
    if x.shape[-1] > length:
        raise LengthMismatch(f"cannot pad length {x.shape[-1]} down to {length}")
    widths = [(0, 0)] * (x.ndim - 1) + [(0, length - x.shape[-1])]
    return np.pad(x, widths)


def prefix_deficit(y, x) -> float:
    """Largest amount by which a sorted prefix sum of ``x`` exceeds that of ``y``."""
    y = np.asarray(y, dtype=float)
    x = np.asarray(x, dtype=float)
    if x.shape[-1] != y.shape[-1]:
        raise LengthMismatch(f"lengths differ ({y.shape[-1]} vs {x.shape[-1]}); pad first")
    return float(np.max(np.cumsum(_sorted_desc(x)) - np.cumsum(_sorted_desc(y))))


def majorizes(y, x, tol: float = DEFAULT_TOL) -> bool:
    """True iff ``x`` is majorized by ``y``: sorted prefix sums of ``y`` dominate
    those of ``x`` and the totals agree, all within ``tol``."""
    y = np.asarray(y, dtype=float)
    x = np.asarray(x, dtype=float)
    if x.shape != y.shape:
        raise LengthMismatch(f"lengths differ ({y.shape} vs {x.shape}); pad first")
    if abs(float(y.sum() - x.sum())) > tol:
        return False
    return prefix_deficit(y, x) <= tol


def _log(x, base: str):
    return np.log(x) if base == "e" else np.log2(x)


def measure_value(m: UncertaintyMeasure, v) -> float:
    v = np.asarray(v, dtype=float)
    v = np.where(v < 0, 0.0, v)  # clamp rounding noise
    nz = v[v > 0]
    if m.kind == "shannon":
        return float(-np.sum(nz * _log(nz, m.log_base)))
    if m.kind == "renyi":
        return float(_log(np.sum(nz ** m.param), m.log_base) / (1.0 - m.param))
    return float((1.0 - np.sum(nz ** m.param)) / (m.param - 1.0))


def shannon(v, log_base: str = "e") -> np.ndarray:
    """Row-wise Shannon entropy of a stack of distributions."""
    v = np.asarray(v, dtype=float)
    with np.errstate(divide="ignore", invalid="ignore"):
        terms = np.where(v > 0, v * _log(np.where(v > 0, v, 1.0), log_base), 0.0)
    return -terms.sum(axis=-1)
