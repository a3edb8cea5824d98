"""Named overlap unitaries and the JSON unitary file format."""
from __future__ import annotations

import json
import math
from pathlib import Path

import numpy as np

from .linalg import is_unitary, unitarity_deviation
from .measurement import BasisPair, gram_schmidt

REORTHO_TOL = 1e-2

# 4x4 overlap matrix of the theta-family example, printed to two significant
# figures: U(theta) = FIG7_COS * cos(theta) + FIG7_SIN * sin(theta).
# Entry (2, 4) follows the row-pair rotation pattern (row 2 of U(theta) equals
# row 1 of U(theta + pi/2)); the printed value duplicates entry (2, 3).
FIG7_COS = np.array([
    [0.63, 0.67, -0.13, -0.37],
    [0.54, -0.62, 0.43, -0.36],
    [-0.30, 0.4, 0.86, -0.098],
    [-0.47, -0.072, -0.23, -0.85],
])
FIG7_SIN = np.array([
    [0.54, -0.62, 0.43, -0.36],
    [-0.63, -0.67, 0.13, 0.37],
    [-0.47, -0.072, -0.23, -0.85],
    [0.30, -0.4, -0.86, 0.098],
])


def identity(d: int = 2) -> BasisPair:
    return BasisPair(np.eye(d, dtype=complex), {"preset": f"identity:{d}"})


def hadamard() -> BasisPair:
    return BasisPair(np.array([[1, 1], [1, -1]]) / math.sqrt(2), {"preset": "hadamard"})


def fourier(d: int) -> BasisPair:
    m, n = np.meshgrid(np.arange(d), np.arange(d), indexing="ij")
    return BasisPair(np.exp(2j * np.pi * m * n / d) / math.sqrt(d), {"preset": f"fourier:{d}"})


def qubit_rotation(c: float) -> BasisPair:
    """Real qubit rotation whose largest overlap modulus is ``c``."""
    s = math.sqrt(max(1.0 - c * c, 0.0))
    return BasisPair(np.array([[c, -s], [s, c]]), {"preset": f"rotation:{c}"})


def fig7_raw(theta: float) -> np.ndarray:
    return FIG7_COS * math.cos(theta) + FIG7_SIN * math.sin(theta)


def fig7(theta: float = 0.0) -> BasisPair:
    """The printed theta-family, re-orthonormalised column by column."""
    raw = fig7_raw(theta)
    dev = unitarity_deviation(raw)
    return BasisPair(
        gram_schmidt(raw),
        {"preset": "fig7", "theta": theta, "reorthonormalized": True, "pre_correction_deviation": dev},
    )


def preset(name: str, theta: float = 0.0) -> BasisPair:
    kind, _, arg = name.partition(":")
    if kind == "identity":
        return identity(int(arg) if arg else 2)
    if kind == "hadamard":
        return hadamard()
    if kind == "fourier":
        if not arg:
            raise ValueError("fourier preset needs a dimension, e.g. fourier:3")
        return fourier(int(arg))
    if kind == "fig7":
        return fig7(theta)
    if kind == "rotation":
        return qubit_rotation(float(arg))
    raise ValueError(f"unknown preset {name!r}")


def read_unitary(path, reorthonormalize: bool = False) -> BasisPair:
    """Load ``{"dim": d, "matrix": [[[re, im], ...], ...]}``.

    With ``reorthonormalize`` the matrix may be off by up to 1e-2 and is
    Gram-Schmidt corrected; otherwise it must be unitary to 1e-8.
    """
    doc = json.loads(Path(path).read_text())
    if not isinstance(doc, dict) or "dim" not in doc or "matrix" not in doc:
        raise ValueError("unitary file needs keys 'dim' and 'matrix'")
    d = int(doc["dim"])
    arr = np.asarray(doc["matrix"], dtype=float)
    if arr.shape != (d, d, 2):
        raise ValueError(f"matrix must be {d}x{d} [re, im] pairs, got shape {arr.shape}")
    u = arr[..., 0] + 1j * arr[..., 1]
    meta = {"source": str(path)}
    if reorthonormalize:
        dev = unitarity_deviation(u)
        if dev > REORTHO_TOL:
            raise ValueError(f"matrix too far from unitary to correct (deviation {dev:.3e} > {REORTHO_TOL})")
        meta.update(reorthonormalized=True, pre_correction_deviation=dev)
        u = gram_schmidt(u)
    elif not is_unitary(u, 1e-8):
        raise ValueError(f"matrix is not unitary within 1e-8 (deviation {unitarity_deviation(u):.3e})")
    return BasisPair(u, meta)


def write_unitary(pair: BasisPair, path) -> None:
    u = pair.unitary
    doc = {
        "dim": pair.dim,
        "matrix": [[[float(z.real), float(z.imag)] for z in row] for row in u],
    }
    # json uses repr() for floats, which round-trips exactly
    Path(path).write_text(json.dumps(doc, indent=1) + "\n")
