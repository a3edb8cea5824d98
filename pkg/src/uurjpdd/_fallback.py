"""Pure-Python kernels, used when the compiled ``_kernels`` module is absent.

Both modules expose the same three functions with identical semantics:

``jacobi_eigh(a, tol, max_sweeps, vectors)``
    cyclic complex Jacobi on a self-adjoint matrix, eigenvalues unsorted.
``max_eigenvalue(a, tol, max_sweeps)``
    largest eigenvalue from the same iteration.
``norm_table(u, tol)``
    squared largest eigenvalue of P_R + Q_S maximised over every pair of
    subsets, bucketed by (|R|, |S|).
"""
import math

import numpy as np

EPS = np.finfo(float).eps


TIE_TOL = 1e-12


def _off_norm(a):
    off = a[~np.eye(a.shape[0], dtype=bool)]
    return math.sqrt(float(np.sum(off.real ** 2 + off.imag ** 2)))


def jacobi_eigh(a, tol=1e-13, max_sweeps=64, vectors=False):
    a = np.array(a, dtype=np.complex128, copy=True)
    d = a.shape[0]
    v = np.eye(d, dtype=np.complex128) if vectors else None
    floor = max(tol, 4.0 * EPS * float(np.linalg.norm(a)))
    for _ in range(max_sweeps):
        if _off_norm(a) <= floor:
            break
        for p in range(d - 1):
            for q in range(p + 1, d):
                h = a[p, q]
                ah = abs(h)
                if ah < 1e-300:
                    continue
                phase = h / ah
                app = a[p, p].real
                aqq = a[q, q].real
                tau = (aqq - app) / (2.0 * ah)
                if abs(tau) > 1e150:
                    t = 0.5 / tau
                else:
                    t = math.copysign(1.0, tau) / (abs(tau) + math.sqrt(1.0 + tau * tau))
                c = 1.0 / math.sqrt(1.0 + t * t)
                s = t * c
                sp = s * phase
                sc = s * phase.conjugate()
                colp = a[:, p].copy()
                colq = a[:, q].copy()
                a[:, p] = c * colp - sc * colq
                a[:, q] = sp * colp + c * colq
                a[p, :] = a[:, p].conj()
                a[q, :] = a[:, q].conj()
                a[p, p] = app - t * ah
                a[q, q] = aqq + t * ah
                a[p, q] = 0.0
                a[q, p] = 0.0
                if v is not None:
                    vp = v[:, p].copy()
                    vq = v[:, q].copy()
                    v[:, p] = c * vp - sc * vq
                    v[:, q] = sp * vp + c * vq
    return np.diag(a).real.copy(), v


def max_eigenvalue(a, tol=1e-13, max_sweeps=64):
    w, _ = jacobi_eigh(a, tol, max_sweeps, False)
    return float(np.max(w))


def norm_table(u, tol=1e-13):
    u = np.ascontiguousarray(u, dtype=np.complex128)
    d = u.shape[0]
    values = np.full((d + 1, d + 1), -1.0)
    best_r = np.zeros((d + 1, d + 1), dtype=np.int64)
    best_s = np.zeros((d + 1, d + 1), dtype=np.int64)
    # increasing bitmask order visits each fixed-size family in colex order
    for smask in range(1 << d):
        cols = [n for n in range(d) if smask >> n & 1]
        q = u[:, cols] @ u[:, cols].conj().T if cols else np.zeros((d, d), dtype=np.complex128)
        q = 0.5 * (q + q.conj().T)
        for rmask in range(1 << d):
            m = q.copy()
            rows = [i for i in range(d) if rmask >> i & 1]
            m[rows, rows] += 1.0
            lam = max_eigenvalue(m, tol)
            val = lam * lam
            r, s = len(rows), len(cols)
            if val > values[r, s] + TIE_TOL:
                values[r, s] = val
                best_r[r, s] = rmask
                best_s[r, s] = smask
    return values, best_r, best_s
