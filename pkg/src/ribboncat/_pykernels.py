"""Pure-Python/numpy implementations of the integer hot kernels.

Same signatures as the compiled ``_ckernels`` extension; selected by
:mod:`ribboncat.kernels` when the extension is missing or disabled.
"""

from __future__ import annotations

import math

import numpy as np

BACKEND = "python"


def associativity_violation(N: np.ndarray):
    """First (a, b, c, d) in lexicographic order where (ab)c and a(bc) differ at d.

    Returns ``(a, b, c, d, lhs, rhs)`` or ``None``.
    """
    N = np.asarray(N, dtype=np.int64)
    lhs = np.einsum("abe,ecd->abcd", N, N)
    rhs = np.einsum("bcf,afd->abcd", N, N)
    bad = np.argwhere(lhs != rhs)
    if bad.size == 0:
        return None
    a, b, c, d = (int(v) for v in bad[0])
    return a, b, c, d, int(lhs[a, b, c, d]), int(rhs[a, b, c, d])


def extended_hom_matrix(N: np.ndarray, t_labels, t_dims) -> np.ndarray:
    """M[x][y] = sum_k d_k N[t_k][x][y]."""
    N = np.asarray(N, dtype=np.int64)
    r = N.shape[0]
    M = np.zeros((r, r), dtype=np.int64)
    for k, dk in zip(t_labels, t_dims):
        M += int(dk) * N[int(k)]
    return M


def gram_factorizations(M: np.ndarray, row_order, limit: int):
    """All nonnegative integer m with m m^T = M, up to column permutation.

    Rows are assigned in ``row_order``; a row may open fresh columns, which
    are kept in nonincreasing order of their entry to break the permutation
    symmetry among columns first touched by the same row. Returns at most
    ``limit`` raw solutions as lists of row tuples indexed like ``M``
    (columns in opening order), and a flag telling whether the search was
    cut off by ``limit``.
    """
    M = np.asarray(M, dtype=np.int64)
    r = M.shape[0]
    order = [int(i) for i in row_order]
    rows: dict[int, list[int]] = {}
    solutions: list[list[tuple[int, ...]]] = []
    truncated = False

    def fresh_parts(residual: int, cap: int):
        # Multisets (nonincreasing) of positive ints whose squares sum to residual.
        if residual == 0:
            yield []
            return
        top = min(cap, math.isqrt(residual))
        for v in range(top, 0, -1):
            for rest in fresh_parts(residual - v * v, v):
                yield [v] + rest

    def search(pos: int, ncols: int) -> bool:
        nonlocal truncated
        if pos == r:
            width = ncols
            solutions.append([tuple(rows[i] + [0] * (width - len(rows[i]))) for i in range(r)])
            if len(solutions) >= limit:
                truncated = True
                return True
            return False
        i = order[pos]
        prev = order[:pos]
        target = [int(M[i, j]) for j in prev]
        diag = int(M[i, i])
        # Pad earlier rows to the current width.
        padded = {j: rows[j] + [0] * (ncols - len(rows[j])) for j in prev}
        vec = [0] * ncols

        def assign(col: int, norm: int) -> bool:
            if col == ncols:
                # Every Gram entry against earlier rows must be met exactly.
                for t, j in zip(target, prev):
                    if sum(a * b for a, b in zip(vec, padded[j])) != t:
                        return False
                residual = diag - norm
                stop = False
                for parts in fresh_parts(residual, residual):
                    rows[i] = vec + parts
                    for j in prev:
                        rows[j] = padded[j] + [0] * len(parts)
                    if search(pos + 1, ncols + len(parts)):
                        stop = True
                    for j in prev:
                        rows[j] = padded[j]
                    if stop:
                        break
                rows.pop(i, None)
                return stop
            cap = math.isqrt(diag - norm)
            for v in range(cap, -1, -1):
                vec[col] = v
                ok = True
                if v:
                    # Partial dot products may not exceed their targets.
                    for t, j in zip(target, prev):
                        if sum(a * b for a, b in zip(vec[: col + 1], padded[j][: col + 1])) > t:
                            ok = False
                            break
                if ok and assign(col + 1, norm + v * v):
                    vec[col] = 0
                    return True
            vec[col] = 0
            return False

        return assign(0, 0)

    search(0, 0)
    return solutions, truncated
