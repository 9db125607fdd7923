"""Independent cross-checks for the exact pipeline.

``float_nullity`` is approximate by design (SVD in double precision). The
brute-force orthogonality check is exact but deliberately avoids the
factorised inner product used everywhere else.
"""
from __future__ import annotations

from itertools import combinations

import numpy as np

from .algebra import G0, RationalMatrix
from .states import StateSet


def to_float_array(m: RationalMatrix) -> np.ndarray:
    a = np.zeros((m.rows, m.cols))
    for k, x in enumerate(m.entries):
        if x:
            a[divmod(k, m.cols)] = float(x)
    return a


def float_nullity(m: RationalMatrix, tol: float = 1e-8) -> int:
    """Approximate ``cols - rank``: counts singular values below ``tol * sigma_max`` plus missing ones."""
    if m.cols == 0:
        return 0
    if m.rows == 0:
        return m.cols
    s = np.linalg.svd(to_float_array(m), compute_uv=False)
    smax = s.max() if s.size else 0.0
    if smax == 0.0:
        return m.cols
    return int(np.count_nonzero(s < tol * smax)) + (m.cols - s.size)


def _joint(state) -> dict[int, object]:
    n = len(state.b)
    out = {}
    for i, x in enumerate(state.a):
        for j, y in enumerate(state.b):
            z = x * y
            if z:
                out[i * n + j] = z
    return out


def brute_force_orthogonality(states: StateSet) -> bool:
    """Pairwise inner products of the expanded ``m*n`` amplitude vectors (zeros skipped)."""
    vecs = [_joint(s) for s in states]
    for u, v in combinations(vecs, 2):
        acc = G0
        for k, x in u.items():
            y = v.get(k)
            if y is not None:
                acc = acc + x.conj() * y
        if acc:
            return False
    return True


def min_eigenvalue(h) -> float:
    """Smallest eigenvalue of a Hermitian matrix in floating point (spot check only)."""
    a = np.array([[complex(z) for z in row] for row in h])
    return float(np.linalg.eigvalsh(a).min())
