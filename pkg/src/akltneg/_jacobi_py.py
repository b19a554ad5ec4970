"""Cyclic Jacobi eigensolver for dense complex Hermitian matrices.

Pure numpy implementation, used when the compiled extension is not
available.  Row and column updates are vectorized, only the pivot loop
runs in Python.
"""

import numpy as np


def jacobi_eigh(a, tol=1e-14, max_sweeps=60):
    """Eigenvalues and eigenvectors of a Hermitian matrix.

    Returns (w, v) with w ascending and v unitary, columns are the
    eigenvectors: a @ v[:, k] == w[k] * v[:, k].  The input is not
    modified.  Hermiticity is the caller's responsibility; only the
    lower triangle is trusted implicitly through the rotations.
    """
    h = np.array(a, dtype=np.complex128, copy=True)
    n = h.shape[0]
    v = np.eye(n, dtype=np.complex128)
    if n == 1:
        return h.real.reshape(1).copy(), v

    scale = np.linalg.norm(h)
    if scale == 0.0:
        return np.zeros(n), v
    thresh = tol * scale
    iu = np.triu_indices(n, 1)

    for _ in range(max_sweeps):
        off = np.sqrt(2.0) * np.linalg.norm(h[iu])
        if off <= thresh:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                hpq = h[p, q]
                apq = abs(hpq)
                if apq <= thresh / n:
                    continue
                u = hpq / apq
                tau = (h[p, p].real - h[q, q].real) / (2.0 * apq)
                if tau >= 0.0:
                    t = 1.0 / (tau + np.sqrt(1.0 + tau * tau))
                else:
                    t = -1.0 / (-tau + np.sqrt(1.0 + tau * tau))
                c = 1.0 / np.sqrt(1.0 + t * t)
                s = t * c

                cp = h[:, p].copy()
                cq = h[:, q].copy()
                h[:, p] = c * cp + s * np.conj(u) * cq
                h[:, q] = -s * u * cp + c * cq
                rp = h[p, :].copy()
                rq = h[q, :].copy()
                h[p, :] = c * rp + s * u * rq
                h[q, :] = -s * np.conj(u) * rp + c * rq
                h[p, q] = 0.0
                h[q, p] = 0.0
                h[p, p] = h[p, p].real
                h[q, q] = h[q, q].real

                vp = v[:, p].copy()
                vq = v[:, q].copy()
                v[:, p] = c * vp + s * np.conj(u) * vq
                v[:, q] = -s * u * vp + c * vq
    else:
        if np.sqrt(2.0) * np.linalg.norm(h[iu]) > thresh:
            raise RuntimeError("jacobi rotation did not converge")

    w = np.diag(h).real.copy()
    order = np.argsort(w, kind="stable")
    return w[order], v[:, order]
