"""numba @njit kernels for the batched 3x3 spectral pipeline."""

import numpy as np
from numba import njit, prange

_JACOBI_TOL = 1e-14
_MAX_SWEEPS = 50


@njit(cache=True)
def _eigh3(a_in, vals, vecs):
    a = a_in.copy()
    v = np.eye(3)
    scale = 0.0
    for r in range(3):
        for c in range(3):
            scale += a[r, c] * a[r, c]
    scale = np.sqrt(scale) + 1e-300

    for _ in range(_MAX_SWEEPS):
        off = np.sqrt(a[0, 1] ** 2 + a[0, 2] ** 2 + a[1, 2] ** 2)
        if off <= _JACOBI_TOL * scale:
            break
        for p in range(2):
            for q in range(p + 1, 3):
                apq = a[p, q]
                if abs(apq) < 1e-300:
                    continue
                theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                sgn = 1.0 if theta >= 0.0 else -1.0
                t = sgn / (abs(theta) + np.sqrt(theta * theta + 1.0))
                c = 1.0 / np.sqrt(t * t + 1.0)
                s = t * c
                app = a[p, p]
                aqq = a[q, q]
                a[p, p] = app - t * apq
                a[q, q] = aqq + t * apq
                a[p, q] = 0.0
                a[q, p] = 0.0
                for r in range(3):
                    if r != p and r != q:
                        arp = a[r, p]
                        arq = a[r, q]
                        a[r, p] = c * arp - s * arq
                        a[p, r] = a[r, p]
                        a[r, q] = s * arp + c * arq
                        a[q, r] = a[r, q]
                for r in range(3):
                    vrp = v[r, p]
                    vrq = v[r, q]
                    v[r, p] = c * vrp - s * vrq
                    v[r, q] = s * vrp + c * vrq

    # insertion sort ascending, carrying eigenvector columns
    for r in range(3):
        vals[r] = a[r, r]
    for i in range(1, 3):
        key = vals[i]
        c0 = v[0, i]
        c1 = v[1, i]
        c2 = v[2, i]
        j = i - 1
        while j >= 0 and vals[j] > key:
            vals[j + 1] = vals[j]
            v[0, j + 1] = v[0, j]
            v[1, j + 1] = v[1, j]
            v[2, j + 1] = v[2, j]
            j -= 1
        vals[j + 1] = key
        v[0, j + 1] = c0
        v[1, j + 1] = c1
        v[2, j + 1] = c2
    for r in range(3):
        for c in range(3):
            vecs[r, c] = v[r, c]


@njit(cache=True, parallel=True)
def eigh3_batch(A):
    n = A.shape[0]
    vals = np.empty((n, 3))
    vecs = np.empty((n, 3, 3))
    for i in prange(n):
        _eigh3(A[i], vals[i], vecs[i])
    return vals, vecs


@njit(cache=True)
def _det3(a):
    return (
        a[0, 0] * (a[1, 1] * a[2, 2] - a[1, 2] * a[2, 1])
        - a[0, 1] * (a[1, 0] * a[2, 2] - a[1, 2] * a[2, 0])
        + a[0, 2] * (a[1, 0] * a[2, 1] - a[1, 1] * a[2, 0])
    )


@njit(cache=True, parallel=True)
def polar_pipeline(A):
    """Per matrix: R, U = (A^T A)^{1/2}, singular values ascending, det A.

    Negative eigenvalues of A^T A from roundoff are clamped at zero before
    the square root.  Singular values below 1e-300 are floored when inverting
    U so degenerate inputs still yield a finite orthogonal-ish factor.
    """
    n = A.shape[0]
    R = np.empty((n, 3, 3))
    U = np.empty((n, 3, 3))
    svals = np.empty((n, 3))
    dets = np.empty(n)
    for i in prange(n):
        a = A[i]
        m = a.T @ a
        w = np.empty(3)
        v = np.empty((3, 3))
        _eigh3(m, w, v)
        s = np.empty(3)
        for k in range(3):
            wk = w[k] if w[k] > 0.0 else 0.0
            s[k] = np.sqrt(wk)
        u = np.empty((3, 3))
        uinv = np.empty((3, 3))
        for r in range(3):
            for c in range(3):
                acc = 0.0
                accinv = 0.0
                for k in range(3):
                    acc += v[r, k] * s[k] * v[c, k]
                    accinv += v[r, k] / max(s[k], 1e-300) * v[c, k]
                u[r, c] = acc
                uinv[r, c] = accinv
        r = a @ uinv
        # two Newton steps toward orthogonality; quadratic cleanup of the
        # O(eps * cond) error that A @ U^{-1} carries for stiff inputs
        for _ in range(2):
            r = 0.5 * (3.0 * r - r @ (r.T @ r))
        R[i] = r
        U[i] = u
        svals[i] = s
        dets[i] = _det3(a)
    return R, U, svals, dets
