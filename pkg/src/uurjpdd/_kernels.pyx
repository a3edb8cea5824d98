# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled Jacobi and projector-sum kernels.

Mirrors ``_fallback`` operation for operation so the two backends agree to
rounding.
"""
import numpy as np
cimport numpy as cnp
from libc.math cimport sqrt, fabs, copysign

cnp.import_array()

cdef double EPS = 2.220446049250313e-16
cdef double TIE_TOL = 1e-12


cdef inline double _abs2(double complex z) nogil:
    return z.real * z.real + z.imag * z.imag


cdef double _jacobi(double complex[:, ::1] a, double complex[:, ::1] v,
                    bint vectors, double tol, int max_sweeps) nogil:
    """In-place cyclic Jacobi. Returns the largest diagonal entry on exit."""
    cdef Py_ssize_t d = a.shape[0]
    cdef Py_ssize_t p, q, k
    cdef int sweep
    cdef double off, fro, floor, ah, app, aqq, tau, t, c, s, best
    cdef double complex h, phase, sp, sc, xp, xq

    fro = 0.0
    for p in range(d):
        for q in range(d):
            fro += _abs2(a[p, q])
    floor = 4.0 * EPS * sqrt(fro)
    if tol > floor:
        floor = tol

    for sweep in range(max_sweeps):
        off = 0.0
        for p in range(d):
            for q in range(d):
                if p != q:
                    off += _abs2(a[p, q])
        if sqrt(off) <= floor:
            break
        for p in range(d - 1):
            for q in range(p + 1, d):
                h = a[p, q]
                ah = sqrt(_abs2(h))
                if ah < 1e-300:
                    continue
                phase = h / ah
                app = a[p, p].real
                aqq = a[q, q].real
                tau = (aqq - app) / (2.0 * ah)
                if fabs(tau) > 1e150:
                    t = 0.5 / tau
                else:
                    t = copysign(1.0, tau) / (fabs(tau) + sqrt(1.0 + tau * tau))
                c = 1.0 / sqrt(1.0 + t * t)
                s = t * c
                sp = s * phase
                sc = s * phase.conjugate()
                for k in range(d):
                    xp = a[k, p]
                    xq = a[k, q]
                    a[k, p] = c * xp - sc * xq
                    a[k, q] = sp * xp + c * xq
                for k in range(d):
                    a[p, k] = a[k, p].conjugate()
                    a[q, k] = a[k, q].conjugate()
                a[p, p] = app - t * ah
                a[q, q] = aqq + t * ah
                a[p, q] = 0.0
                a[q, p] = 0.0
                if vectors:
                    for k in range(d):
                        xp = v[k, p]
                        xq = v[k, q]
                        v[k, p] = c * xp - sc * xq
                        v[k, q] = sp * xp + c * xq

    best = a[0, 0].real
    for p in range(1, d):
        if a[p, p].real > best:
            best = a[p, p].real
    return best


def jacobi_eigh(a, double tol=1e-13, int max_sweeps=64, bint vectors=False):
    cdef double complex[:, ::1] work = np.array(a, dtype=np.complex128, order="C", copy=True)
    cdef Py_ssize_t d = work.shape[0]
    vmat = np.eye(d, dtype=np.complex128)
    cdef double complex[:, ::1] vv = vmat
    _jacobi(work, vv, vectors, tol, max_sweeps)
    w = np.array([work[i, i].real for i in range(d)])
    return w, (vmat if vectors else None)


def max_eigenvalue(a, double tol=1e-13, int max_sweeps=64):
    cdef double complex[:, ::1] work = np.array(a, dtype=np.complex128, order="C", copy=True)
    cdef double complex[:, ::1] dummy = np.zeros((1, 1), dtype=np.complex128)
    return _jacobi(work, dummy, False, tol, max_sweeps)


def norm_table(u, double tol=1e-13):
    cdef const double complex[:, ::1] uu = np.ascontiguousarray(u, dtype=np.complex128)
    cdef Py_ssize_t d = uu.shape[0]
    if d > 20:
        raise ValueError("norm_table kernel supports d <= 20")
    values_arr = np.full((d + 1, d + 1), -1.0)
    best_r_arr = np.zeros((d + 1, d + 1), dtype=np.int64)
    best_s_arr = np.zeros((d + 1, d + 1), dtype=np.int64)
    cdef double[:, ::1] values = values_arr
    cdef long long[:, ::1] best_r = best_r_arr
    cdef long long[:, ::1] best_s = best_s_arr
    cdef double complex[:, ::1] q = np.zeros((d, d), dtype=np.complex128)
    cdef double complex[:, ::1] work = np.zeros((d, d), dtype=np.complex128)
    cdef double complex[:, ::1] dummy = np.zeros((1, 1), dtype=np.complex128)
    cdef long long smask, rmask, nmask = 1LL << d
    cdef Py_ssize_t i, j, n
    cdef int r, s
    cdef double lam, val
    cdef double complex acc

    with nogil:
        # increasing bitmask order visits each fixed-size family in colex order
        for smask in range(nmask):
            s = 0
            for n in range(d):
                if (smask >> n) & 1:
                    s += 1
            for i in range(d):
                for j in range(i, d):
                    acc = 0.0
                    for n in range(d):
                        if (smask >> n) & 1:
                            acc = acc + uu[i, n] * uu[j, n].conjugate()
                    q[i, j] = acc
                    q[j, i] = acc.conjugate()
                q[i, i] = q[i, i].real
            for rmask in range(nmask):
                r = 0
                for i in range(d):
                    for j in range(d):
                        work[i, j] = q[i, j]
                    if (rmask >> i) & 1:
                        work[i, i] = work[i, i] + 1.0
                        r += 1
                lam = _jacobi(work, dummy, False, tol, 64)
                val = lam * lam
                if val > values[r, s] + TIE_TOL:
                    values[r, s] = val
                    best_r[r, s] = rmask
                    best_s[r, s] = smask
    return values_arr, best_r_arr, best_s_arr
