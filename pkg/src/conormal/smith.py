"""Smith normal form over the integers with unimodular transforms.

All arithmetic is done on numpy object arrays holding Python ints, so
intermediate coefficient growth never overflows.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

__all__ = ["SmithDecomposition", "smith_normal_form", "as_int_matrix"]


def as_int_matrix(M) -> np.ndarray:
    """Copy ``M`` into a 2-d object array of Python ints."""
    a = np.array(M, dtype=object)
    if a.ndim == 1 and a.size == 0:
        a = a.reshape(0, 0)
    if a.ndim != 2:
        raise ValueError(f"expected a 2-d matrix, got {a.ndim} dimensions")
    out = np.empty(a.shape, dtype=object)
    for idx, v in np.ndenumerate(a):
        if isinstance(v, (bool, np.bool_)) or int(v) != v:
            raise TypeError(f"non-integer entry {v!r}")
        out[idx] = int(v)
    return out


def _eye(k: int) -> np.ndarray:
    out = np.zeros((k, k), dtype=object)
    for i in range(k):
        out[i, i] = 1
    return out


@dataclass(frozen=True, eq=False)
class SmithDecomposition:
    """``U @ M @ V == D`` with ``D`` diagonal, entries ``diag`` then zeros.

    ``V_inv`` is the inverse of ``V``; it carries vectors into the
    coordinates of the basis formed by the columns of ``V``, the last
    ``n - rank`` of which span the kernel of ``M``.
    """

    U: np.ndarray
    V: np.ndarray
    V_inv: np.ndarray
    diag: tuple[int, ...]
    shape: tuple[int, int]

    @property
    def rank(self) -> int:
        return len(self.diag)

    @property
    def D(self) -> np.ndarray:
        out = np.zeros(self.shape, dtype=object)
        for k, v in enumerate(self.diag):
            out[k, k] = v
        return out

    def kernel_basis(self) -> np.ndarray:
        """Columns form a basis of the integer kernel of ``M``."""
        return self.V[:, self.rank :]


def _nearest_quotient(a, p):
    # Rounded rather than floored quotients keep the transforms smaller.
    return (2 * a + p) // (2 * p)


def smith_normal_form(M) -> SmithDecomposition:
    A = as_int_matrix(M)
    m, n = A.shape
    U, V, Vi = _eye(m), _eye(n), _eye(n)

    def swap_rows(i, j):
        if i != j:
            A[[i, j]] = A[[j, i]]
            U[[i, j]] = U[[j, i]]

    def swap_cols(i, j):
        if i != j:
            A[:, [i, j]] = A[:, [j, i]]
            V[:, [i, j]] = V[:, [j, i]]
            Vi[[i, j]] = Vi[[j, i]]

    diag: list[int] = []
    for t in range(min(m, n)):
        sub = A[t:, t:]
        nz = np.argwhere(sub != 0)
        if nz.size == 0:
            break
        mags = list(np.abs(sub[nz[:, 0], nz[:, 1]]))
        i, j = nz[mags.index(min(mags))]
        swap_rows(t, t + int(i))
        swap_cols(t, t + int(j))

        while True:
            p = A[t, t]
            rows = np.nonzero(A[t + 1 :, t])[0] + t + 1
            if rows.size:
                q = _nearest_quotient(A[rows, t], p)
                A[rows] -= np.multiply.outer(q, A[t])
                U[rows] -= np.multiply.outer(q, U[t])
            cols = np.nonzero(A[t, t + 1 :])[0] + t + 1
            if cols.size:
                q = _nearest_quotient(A[t, cols], p)
                A[:, cols] -= np.multiply.outer(A[:, t], q)
                V[:, cols] -= np.multiply.outer(V[:, t], q)
                Vi[t] += q.dot(Vi[cols])

            rows = np.nonzero(A[t + 1 :, t])[0] + t + 1
            cols = np.nonzero(A[t, t + 1 :])[0] + t + 1
            if rows.size or cols.size:
                # A remainder survived; it is smaller than the pivot, so promote it.
                cand = [(abs(A[r, t]), r, t) for r in rows] + [(abs(A[t, c]), t, c) for c in cols]
                _, r, c = min(cand)
                swap_rows(t, int(r))
                swap_cols(t, int(c))
                continue

            rest = A[t + 1 :, t + 1 :]
            if rest.size:
                bad = np.argwhere(rest % p != 0)
                if bad.size:
                    r = int(bad[0, 0]) + t + 1
                    A[t] += A[r]
                    U[t] += U[r]
                    continue
            break

        if A[t, t] < 0:
            A[t] = -A[t]
            U[t] = -U[t]
        diag.append(int(A[t, t]))

    return SmithDecomposition(U, V, Vi, tuple(diag), (m, n))

