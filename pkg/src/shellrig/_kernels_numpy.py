"""Pure-numpy fallback kernels: vectorized cyclic Jacobi across the batch."""

import numpy as np

_JACOBI_TOL = 1e-14
_MAX_SWEEPS = 50
_PAIRS = ((0, 1), (0, 2), (1, 2))


def eigh3_batch(A):
    """Eigenvalues (ascending) and eigenvector columns of symmetric (n,3,3)."""
    a = np.array(A, dtype=float, copy=True)
    n = a.shape[0]
    v = np.tile(np.eye(3), (n, 1, 1))
    scale = np.sqrt(np.einsum("nij,nij->n", a, a)) + 1e-300

    for _ in range(_MAX_SWEEPS):
        off = np.sqrt(a[:, 0, 1] ** 2 + a[:, 0, 2] ** 2 + a[:, 1, 2] ** 2)
        if np.all(off <= _JACOBI_TOL * scale):
            break
        for p, q in _PAIRS:
            apq = a[:, p, q]
            rotate = np.abs(apq) > 1e-300
            denom = np.where(rotate, 2.0 * apq, 1.0)
            theta = np.where(rotate, (a[:, q, q] - a[:, p, p]) / denom, 0.0)
            sgn = np.where(theta >= 0.0, 1.0, -1.0)
            t = sgn / (np.abs(theta) + np.sqrt(theta * theta + 1.0))
            t = np.where(rotate, t, 0.0)
            c = 1.0 / np.sqrt(t * t + 1.0)
            s = t * c

            app = a[:, p, p].copy()
            aqq = a[:, q, q].copy()
            a[:, p, p] = app - t * apq
            a[:, q, q] = aqq + t * apq
            a[:, p, q] = 0.0
            a[:, q, p] = 0.0
            r = 3 - p - q  # the remaining index
            arp = a[:, r, p].copy()
            arq = a[:, r, q].copy()
            a[:, r, p] = c * arp - s * arq
            a[:, p, r] = a[:, r, p]
            a[:, r, q] = s * arp + c * arq
            a[:, q, r] = a[:, r, q]

            vp = v[:, :, p].copy()
            vq = v[:, :, q].copy()
            v[:, :, p] = c[:, None] * vp - s[:, None] * vq
            v[:, :, q] = s[:, None] * vp + c[:, None] * vq

    vals = np.stack([a[:, 0, 0], a[:, 1, 1], a[:, 2, 2]], axis=1)
    order = np.argsort(vals, axis=1, kind="stable")
    vals = np.take_along_axis(vals, order, axis=1)
    v = np.take_along_axis(v, order[:, None, :], axis=2)
    return vals, v


def polar_pipeline(A):
    """R, U = (A^T A)^{1/2}, singular values ascending, det A; batched."""
    a = np.asarray(A, dtype=float)
    m = np.einsum("nji,njk->nik", a, a)
    w, v = eigh3_batch(m)
    s = np.sqrt(np.clip(w, 0.0, None))
    U = np.einsum("nik,nk,njk->nij", v, s, v)
    Uinv = np.einsum("nik,nk,njk->nij", v, 1.0 / np.maximum(s, 1e-300), v)
    R = np.einsum("nij,njk->nik", a, Uinv)
    # two Newton steps toward orthogonality (cleans up O(eps * cond) error)
    for _ in range(2):
        R = 0.5 * (3.0 * R - R @ (np.swapaxes(R, -2, -1) @ R))
    dets = np.linalg.det(a)
    return R, U, s, dets
