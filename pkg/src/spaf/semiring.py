"""Matrix kernels over the (max,min), (min,+) and Boolean semirings.

All products are the naive cubic ones, vectorised row-block by row-block with
numpy. Capacity kernels only compare entries, so they accept either real
capacities (``inf`` diagonal) or integer ranks (``d+1`` diagonal).

Distance matrices are float arrays using ``UNREACHABLE = inf``: addition
saturates and an unreachable entry never wins a min.
"""

from __future__ import annotations

from typing import Sequence

import numpy as np

UNREACHABLE = np.inf

# Rows per block; keeps the (rows, n, n) temporaries around a few MB.
_BLOCK_ELEMS = 1 << 20


def _check_square(a: np.ndarray, b: np.ndarray) -> int:
    if a.ndim != 2 or a.shape[0] != a.shape[1] or a.shape != b.shape:
        raise ValueError(f"dimension mismatch: {a.shape} vs {b.shape}")
    return a.shape[0]


def _row_blocks(n: int):
    step = max(1, _BLOCK_ELEMS // max(1, n * n))
    for start in range(0, n, step):
        yield slice(start, min(n, start + step))


def maxmin_product(a: np.ndarray, b: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """(max,min)-product ``q[i,j] = max_k min(a[i,k], b[k,j])`` and its witnesses.

    ``witness[i, j]`` is the smallest k attaining the maximum (0-indexed).
    """
    n = _check_square(a, b)
    dtype = np.result_type(a, b)
    q = np.empty((n, n), dtype=dtype)
    w = np.empty((n, n), dtype=np.intp)
    if n == 0:
        return q, w
    for rows in _row_blocks(n):
        # t[i, k, j] = min(a[i, k], b[k, j])
        t = np.minimum(a[rows, :, None], b[None, :, :])
        k = t.argmax(axis=1)  # first maximum -> smallest k
        w[rows] = k
        q[rows] = np.take_along_axis(t, k[:, None, :], axis=1)[:, 0, :]
    return q, w


def maxmin_identity(n: int, top=np.inf, dtype=float) -> np.ndarray:
    eye = np.zeros((n, n), dtype=dtype)
    np.fill_diagonal(eye, top)
    return eye


def maxmin_closure(c: np.ndarray) -> np.ndarray:
    """Bottleneck closure ``I + C + C^2 + ...`` by repeated squaring.

    The input must already carry the top element on its diagonal (the
    capacity-matrix convention), so squaring covers all path lengths up to
    the current power and ``ceil(log2(n-1))`` squarings suffice.
    """
    cur = np.array(c, copy=True)
    n = cur.shape[0]
    length = 1
    while length < n - 1:
        nxt, _ = maxmin_product(cur, cur)
        length *= 2
        if np.array_equal(nxt, cur):
            break
        cur = nxt
    return cur


def minplus_product(
    a: np.ndarray,
    b: np.ndarray,
    restrict: Sequence[Sequence[int]] | None = None,
) -> np.ndarray:
    """(min,+)-product; with ``restrict`` row i only minimises over k in restrict[i]."""
    n = _check_square(a, b)
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    if restrict is None:
        q = np.empty((n, n))
        for rows in _row_blocks(n):
            q[rows] = (a[rows, :, None] + b[None, :, :]).min(axis=1)
        return q
    if len(restrict) != n:
        raise ValueError("restrict needs one index set per row")
    q = np.full((n, n), UNREACHABLE)
    for i, ks in enumerate(restrict):
        ks = np.asarray(sorted(ks), dtype=np.intp)
        if ks.size:
            q[i] = (a[i, ks][:, None] + b[ks, :]).min(axis=0)
    return q


def minplus_identity(n: int) -> np.ndarray:
    z = np.full((n, n), UNREACHABLE)
    np.fill_diagonal(z, 0.0)
    return z


def bool_closure(b: np.ndarray) -> np.ndarray:
    """Reflexive-transitive closure of a 0/1 matrix via repeated Boolean squaring."""
    cur = np.asarray(b, dtype=bool).copy()
    np.fill_diagonal(cur, True)
    m = cur.astype(np.int64)
    while True:
        nxt = (m @ m) > 0
        if np.array_equal(nxt, cur):
            return cur.astype(np.uint8)
        cur = nxt
        m = cur.astype(np.int64)
