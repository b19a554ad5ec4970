# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled cyclic Jacobi eigensolver for complex Hermitian matrices.

Same algorithm as _jacobi_py, with the pivot and update loops in C.
"""

import numpy as np

cimport numpy as cnp
from libc.math cimport fabs, sqrt

cnp.import_array()


def jacobi_eigh(a, double tol=1e-14, int max_sweeps=60):
    """Eigenvalues and eigenvectors of a Hermitian matrix.

    Returns (w, v) with w ascending and v unitary, columns are the
    eigenvectors.  The input is not modified.
    """
    h_arr = np.array(a, dtype=np.complex128, copy=True, order="C")
    cdef int n = h_arr.shape[0]
    v_arr = np.eye(n, dtype=np.complex128)
    if n == 1:
        return h_arr.real.reshape(1).copy(), v_arr

    cdef double complex[:, :] h = h_arr
    cdef double complex[:, :] v = v_arr
    cdef double scale = 0.0
    cdef int i, j, p, q, sweep
    cdef double off, apq, tau, t, c, s, thresh
    cdef double complex hpq, u, cu, tp, tq

    for i in range(n):
        for j in range(n):
            scale += (h[i, j].real * h[i, j].real
                      + h[i, j].imag * h[i, j].imag)
    scale = sqrt(scale)
    if scale == 0.0:
        return np.zeros(n), v_arr
    thresh = tol * scale

    converged = False
    for sweep in range(max_sweeps):
        off = 0.0
        for i in range(n - 1):
            for j in range(i + 1, n):
                off += 2.0 * (h[i, j].real * h[i, j].real
                              + h[i, j].imag * h[i, j].imag)
        if sqrt(off) <= thresh:
            converged = True
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                hpq = h[p, q]
                apq = sqrt(hpq.real * hpq.real + hpq.imag * hpq.imag)
                if apq <= thresh / n:
                    continue
                u = hpq / apq
                cu = u.conjugate()
                tau = (h[p, p].real - h[q, q].real) / (2.0 * apq)
                if tau >= 0.0:
                    t = 1.0 / (tau + sqrt(1.0 + tau * tau))
                else:
                    t = -1.0 / (-tau + sqrt(1.0 + tau * tau))
                c = 1.0 / sqrt(1.0 + t * t)
                s = t * c

                for i in range(n):
                    tp = h[i, p]
                    tq = h[i, q]
                    h[i, p] = c * tp + s * cu * tq
                    h[i, q] = -s * u * tp + c * tq
                for i in range(n):
                    tp = h[p, i]
                    tq = h[q, i]
                    h[p, i] = c * tp + s * u * tq
                    h[q, i] = -s * cu * tp + c * tq
                h[p, q] = 0.0
                h[q, p] = 0.0
                h[p, p] = h[p, p].real
                h[q, q] = h[q, q].real

                for i in range(n):
                    tp = v[i, p]
                    tq = v[i, q]
                    v[i, p] = c * tp + s * cu * tq
                    v[i, q] = -s * u * tp + c * tq
    if not converged:
        off = 0.0
        for i in range(n - 1):
            for j in range(i + 1, n):
                off += 2.0 * (h[i, j].real * h[i, j].real
                              + h[i, j].imag * h[i, j].imag)
        if sqrt(off) > thresh:
            raise RuntimeError("jacobi rotation did not converge")

    w = np.diag(h_arr).real.copy()
    order = np.argsort(w, kind="stable")
    return w[order], v_arr[:, order]
