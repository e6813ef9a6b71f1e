"""Batch evaluation of Weyl-dimension sums over many weights.

For an integer character sum_z c_z [z] and weights lam_1..lam_n (given as
lam + rho), computes

    sum_z c_z * prod_alpha <A_z (lam + rho) + p t_z, alpha^vee>

i.e. the dimension times prod_alpha <rho, alpha^vee>. Two int64 paths: a numba
``@njit`` loop and a vectorized numpy version. Set ``TILTVAL_DISABLE_NUMBA=1``
to force numpy. Inputs whose worst-case magnitude could overflow int64 go
through exact Python integers instead (see ``fits_int64``).
"""

from __future__ import annotations

import os

import numpy as np

try:
    import numba
except ImportError:  # pragma: no cover
    numba = None

DISABLE_ENV = "TILTVAL_DISABLE_NUMBA"
_INT64_SAFE = 2**62


def numba_enabled() -> bool:
    return numba is not None and os.environ.get(DISABLE_ENV, "0") not in ("1", "true", "yes")


def weyl_numerators_numpy(points, mats, trans, coeffs, coroots, p):
    # images[t, n, :] = A_t @ pt_n + p * t_t
    images = np.einsum("tij,nj->tni", mats, points) + p * trans[:, None, :]
    pairings = images @ coroots.T  # (T, n, N)
    prods = np.prod(pairings, axis=2)
    return coeffs @ prods


if numba is not None:

    @numba.njit(cache=True, nogil=True)
    def _weyl_numerators_jit(points, mats, trans, coeffs, coroots, p):
        n, r = points.shape
        T = mats.shape[0]
        N = coroots.shape[0]
        out = np.zeros(n, dtype=np.int64)
        img = np.empty(r, dtype=np.int64)
        for k in range(n):
            acc = 0
            for t in range(T):
                for i in range(r):
                    v = p * trans[t, i]
                    for j in range(r):
                        v += mats[t, i, j] * points[k, j]
                    img[i] = v
                prod = 1
                for a in range(N):
                    pr = 0
                    for i in range(r):
                        pr += coroots[a, i] * img[i]
                    prod *= pr
                acc += coeffs[t] * prod
            out[k] = acc
        return out

else:  # pragma: no cover
    _weyl_numerators_jit = None


def weyl_numerators_exact(points, mats, trans, coeffs, coroots, p) -> list[int]:
    out = []
    for pt in points:
        pt = [int(a) for a in pt]
        acc = 0
        for A, t, c in zip(mats, trans, coeffs):
            img = [sum(int(A[i][j]) * pt[j] for j in range(len(pt))) + p * int(t[i]) for i in range(len(pt))]
            prod = 1
            for cor in coroots:
                prod *= sum(int(a) * b for a, b in zip(cor, img))
            acc += int(c) * prod
        out.append(acc)
    return out


def fits_int64(points, mats, trans, coeffs, coroots, p) -> bool:
    """Conservative bound on every intermediate of the int64 paths."""
    if len(points) == 0 or len(coeffs) == 0:
        return True
    pt_max = int(np.abs(points).max())
    r = points.shape[1]
    img_max = r * int(np.abs(mats).max()) * pt_max + abs(p) * int(np.abs(trans).max())
    pair_max = int(np.abs(coroots).sum(axis=1).max()) * img_max
    bound = int(np.abs(coeffs).sum()) * pair_max ** coroots.shape[0]
    return bound < _INT64_SAFE


def weyl_numerators(points, mats, trans, coeffs, coroots, p, backend: str | None = None) -> list[int]:
    """Dispatch to numba, numpy or exact integers. Returns Python ints."""
    points = np.asarray(points, dtype=np.int64).reshape(len(points), -1)
    mats = np.asarray(mats, dtype=np.int64)
    trans = np.asarray(trans, dtype=np.int64)
    coeffs = np.asarray(coeffs, dtype=np.int64)
    coroots = np.asarray(coroots, dtype=np.int64)
    if backend is None:
        if not fits_int64(points, mats, trans, coeffs, coroots, p):
            backend = "exact"
        else:
            backend = "numba" if numba_enabled() else "numpy"
    if backend == "exact" or len(coeffs) == 0:
        return weyl_numerators_exact(points, mats, trans, coeffs, coroots, p)
    if backend == "numba":
        if _weyl_numerators_jit is None:
            raise RuntimeError("numba is not available")
        return [int(x) for x in _weyl_numerators_jit(points, mats, trans, coeffs, coroots, np.int64(p))]
    if backend == "numpy":
        return [int(x) for x in weyl_numerators_numpy(points, mats, trans, coeffs, coroots, p)]
    raise ValueError(f"unknown backend {backend!r}")
