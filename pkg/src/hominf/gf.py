"""Linear algebra over prime fields GF(p).

Two independent routes are provided on purpose:

* a sparse, dict-column reducer (`ColumnReduction`) used by everything in
  the library, and
* a dense numpy eliminator (`dense_rank`, `dense_solve`) kept as the
  brute-force oracle for small matrices.

Sparse columns are dicts mapping row index -> nonzero residue mod p.
Reduction is the deterministic "low pivot" scheme: each stored pivot is
keyed by its largest nonzero row, and incoming columns are reduced
against pivots in that order.  No randomness, no row permutations, so
every rank / solve / kernel result is reproducible bit for bit.
"""

from __future__ import annotations

import numpy as np

__all__ = [
    "is_prime",
    "ColumnReduction",
    "kernel_basis",
    "sparse_rank",
    "sparse_solve",
    "mat_vec",
    "dense_from_columns",
    "dense_rank",
    "dense_solve",
]


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


class ColumnReduction:
    """Incremental column reducer over GF(p).

    Supports three uses through one deterministic state:

    * rank queries (`rank` counts stored pivots),
    * membership solves (`solve` expresses a target in the inserted
      columns, or returns None),
    * kernel extraction (`insert` reports combinations for columns that
      reduce to zero).

    Inserted columns get consecutive ids 0, 1, ...; combinations are
    dicts id -> coefficient such that sum(comb[j] * column_j) equals the
    reconstructed vector.
    """

    def __init__(self, p: int):
        if not is_prime(p):
            raise ValueError(f"modulus {p} is not prime")
        self.p = p
        # low row -> (reduced column, combination over inserted ids)
        self._pivots: dict[int, tuple[dict[int, int], dict[int, int]]] = {}
        self.rank = 0
        self.n_inserted = 0

    def _axpy(self, dst: dict[int, int], src: dict[int, int], factor: int) -> None:
        p = self.p
        for k, v in src.items():
            nv = (dst.get(k, 0) + factor * v) % p
            if nv:
                dst[k] = nv
            else:
                dst.pop(k, None)

    def residual(self, column: dict[int, int]) -> tuple[dict[int, int], dict[int, int]]:
        """Reduce `column` against the stored pivots without inserting.

        Returns (residual, combination) with
        residual = column - sum(combination[j] * inserted_column_j).
        """
        p = self.p
        col = {r: v % p for r, v in column.items() if v % p}
        comb: dict[int, int] = {}
        pivots = self._pivots
        while col:
            low = max(col)
            hit = pivots.get(low)
            if hit is None:
                break
            pcol, pcomb = hit
            factor = (col[low] * pow(pcol[low], p - 2, p)) % p
            self._axpy(col, pcol, -factor)
            self._axpy(comb, pcomb, factor)
        return col, comb

    def insert(self, column: dict[int, int]) -> dict[int, int] | None:
        """Insert a column; returns a kernel combination if it was dependent.

        The return value is None when the column became a new pivot.
        Otherwise it is a dict id -> coeff over previously inserted
        columns with column = sum(coeff * column_j), i.e. the new column
        is dependent and (e_new - comb) spans a kernel vector.
        """
        col, comb = self.residual(column)
        cid = self.n_inserted
        self.n_inserted += 1
        if not col:
            return comb
        self._pivots[max(col)] = (col, self._merge_self(comb, cid))
        self.rank += 1
        return None

    def _merge_self(self, comb: dict[int, int], cid: int) -> dict[int, int]:
        # pivot = column_cid - sum(comb * earlier columns); store as combination
        out = {j: (-v) % self.p for j, v in comb.items()}
        out[cid] = 1
        return out

    def solve(self, target: dict[int, int]) -> dict[int, int] | None:
        """Express `target` as a combination of inserted columns, or None."""
        col, comb = self.residual(target)
        if col:
            return None
        return comb


def kernel_basis(columns: list[dict[int, int]], p: int) -> list[dict[int, int]]:
    """Basis of the kernel of the matrix with the given columns.

    Each basis vector is a dict column-index -> coefficient.  The basis
    is the canonical one produced by left-to-right reduction: one vector
    per dependent column, supported on that column and earlier ones.
    """
    red = ColumnReduction(p)
    basis: list[dict[int, int]] = []
    for j, col in enumerate(columns):
        comb = red.insert(col)
        if comb is not None:
            vec = {i: (-v) % p for i, v in comb.items()}
            vec[j] = 1
            basis.append(vec)
    return basis


def sparse_rank(columns: list[dict[int, int]], p: int) -> int:
    red = ColumnReduction(p)
    for col in columns:
        red.insert(col)
    return red.rank


def sparse_solve(
    columns: list[dict[int, int]], target: dict[int, int], p: int
) -> dict[int, int] | None:
    """Solve sum(x_j * column_j) = target over GF(p); None when infeasible."""
    red = ColumnReduction(p)
    for col in columns:
        red.insert(col)
    return red.solve(target)


def mat_vec(columns: list[dict[int, int]], x: dict[int, int], p: int) -> dict[int, int]:
    """Product of the column matrix with a sparse coefficient vector."""
    out: dict[int, int] = {}
    for j, c in x.items():
        c %= p
        if not c:
            continue
        for r, v in columns[j].items():
            nv = (out.get(r, 0) + c * v) % p
            if nv:
                out[r] = nv
            else:
                out.pop(r, None)
    return out


# ---------------------------------------------------------------------------
# Dense oracle route (numpy).  Kept deliberately independent of the sparse
# code path above; used for brute-force cross checks on small matrices.
# ---------------------------------------------------------------------------


def dense_from_columns(columns: list[dict[int, int]], nrows: int, p: int) -> np.ndarray:
    M = np.zeros((nrows, len(columns)), dtype=np.int64)
    for j, col in enumerate(columns):
        for r, v in col.items():
            M[r, j] = v % p
    return M


def dense_rank(M: np.ndarray, p: int) -> int:
    A = np.array(M, dtype=np.int64) % p
    rows, cols = A.shape
    r = 0
    for c in range(cols):
        pivot = None
        for i in range(r, rows):
            if A[i, c] % p:
                pivot = i
                break
        if pivot is None:
            continue
        if pivot != r:
            A[[r, pivot]] = A[[pivot, r]]
        inv = pow(int(A[r, c]), p - 2, p)
        A[r] = (A[r] * inv) % p
        for i in range(rows):
            if i != r and A[i, c]:
                A[i] = (A[i] - A[i, c] * A[r]) % p
        r += 1
        if r == rows:
            break
    return r


def dense_solve(A: np.ndarray, b: np.ndarray, p: int) -> np.ndarray | None:
    """One solution of A x = b over GF(p), or None.  Gauss-Jordan, dense."""
    A = np.array(A, dtype=np.int64) % p
    b = np.array(b, dtype=np.int64) % p
    rows, cols = A.shape
    aug = np.concatenate([A, b.reshape(-1, 1)], axis=1)
    pivcol: list[int] = []
    r = 0
    for c in range(cols):
        pivot = None
        for i in range(r, rows):
            if aug[i, c] % p:
                pivot = i
                break
        if pivot is None:
            continue
        if pivot != r:
            aug[[r, pivot]] = aug[[pivot, r]]
        inv = pow(int(aug[r, c]), p - 2, p)
        aug[r] = (aug[r] * inv) % p
        for i in range(rows):
            if i != r and aug[i, c]:
                aug[i] = (aug[i] - aug[i, c] * aug[r]) % p
        pivcol.append(c)
        r += 1
        if r == rows:
            break
    for i in range(r, rows):
        if aug[i, cols] % p:
            return None
    # also rows beyond pivots inside the eliminated block
    for i in range(rows):
        if not aug[i, :cols].any() and aug[i, cols] % p:
            return None
    x = np.zeros(cols, dtype=np.int64)
    for i, c in enumerate(pivcol):
        x[c] = aug[i, cols] % p
    return x
