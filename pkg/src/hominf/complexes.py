"""Simplicial complexes, chains over GF(p), and boundary solves.

Simplices are tuples of vertex indices in strictly ascending order.  For
each dimension the simplex list is sorted lexicographically and the
position in that list is the simplex index, so indices never depend on
insertion order.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from . import gf

__all__ = [
    "FieldSpec",
    "SimplicialComplex",
    "Chain",
    "BoundaryMatrix",
    "Infeasible",
    "ComplexError",
    "ChainError",
    "boundary_of_simplex",
    "boundary_matrix",
    "chain_boundary",
    "rank_gf",
    "betti",
    "solve_boundary",
    "betti_dense",
    "solve_boundary_dense",
]


class ComplexError(ValueError):
    pass


class ChainError(ValueError):
    pass


@dataclass(frozen=True)
class FieldSpec:
    """Prime field GF(p); coefficients live in 0..p-1."""

    p: int = 2

    def __post_init__(self):
        if not gf.is_prime(self.p):
            raise ValueError(f"field modulus must be prime, got {self.p}")


class SimplicialComplex:
    """Finite abstract simplicial complex closed under faces."""

    def __init__(self, n_vertices: int, simplices_by_dim: dict[int, list[tuple[int, ...]]],
                 vertex_labels: list | None = None, validate: bool = True):
        self.n_vertices = n_vertices
        self.vertex_labels = vertex_labels
        self._simplices: dict[int, list[tuple[int, ...]]] = {}
        self._index: dict[int, dict[tuple[int, ...], int]] = {}
        for d in sorted(simplices_by_dim):
            uniq = sorted(set(simplices_by_dim[d]))
            self._simplices[d] = uniq
            self._index[d] = {s: i for i, s in enumerate(uniq)}
        if 0 not in self._simplices and n_vertices:
            verts = [(v,) for v in range(n_vertices)]
            self._simplices[0] = verts
            self._index[0] = {s: i for i, s in enumerate(verts)}
        if validate:
            self._validate()

    def _validate(self) -> None:
        for d, simps in self._simplices.items():
            for s in simps:
                if len(s) != d + 1:
                    raise ComplexError(f"simplex {s} stored in dimension {d}")
                if any(s[i] >= s[i + 1] for i in range(len(s) - 1)):
                    raise ComplexError(f"vertex tuple {s} is not strictly ascending")
                if s[-1] >= self.n_vertices or s[0] < 0:
                    raise ComplexError(f"simplex {s} has out-of-range vertices")
                if d > 0:
                    lower = self._index.get(d - 1, {})
                    for face in combinations(s, d):
                        if face not in lower:
                            raise ComplexError(f"missing face {face} of {s}")

    @classmethod
    def from_maximal(cls, n_vertices: int, maximal: list[tuple[int, ...]],
                     vertex_labels: list | None = None) -> "SimplicialComplex":
        """Build the closure of a list of (not necessarily maximal) simplices."""
        by_dim: dict[int, set[tuple[int, ...]]] = {}
        for s in maximal:
            t = tuple(sorted(set(s)))
            for k in range(1, len(t) + 1):
                for face in combinations(t, k):
                    by_dim.setdefault(k - 1, set()).add(face)
        return cls(n_vertices, {d: sorted(v) for d, v in by_dim.items()},
                   vertex_labels=vertex_labels, validate=False)

    # -- queries ------------------------------------------------------------

    @property
    def dimension(self) -> int:
        return max(self._simplices) if self._simplices else -1

    def dims(self) -> list[int]:
        return sorted(self._simplices)

    def n_simplices(self, d: int) -> int:
        return len(self._simplices.get(d, ()))

    def simplices(self, d: int) -> list[tuple[int, ...]]:
        return self._simplices.get(d, [])

    def simplex(self, d: int, idx: int) -> tuple[int, ...]:
        return self._simplices[d][idx]

    def index_of(self, simplex: tuple[int, ...]) -> int:
        d = len(simplex) - 1
        idx = self._index.get(d, {}).get(tuple(simplex))
        if idx is None:
            raise ComplexError(f"simplex {simplex} not in complex")
        return idx

    def has_simplex(self, simplex: tuple[int, ...]) -> bool:
        d = len(simplex) - 1
        return tuple(simplex) in self._index.get(d, {})

    def total_simplices(self) -> int:
        return sum(len(v) for v in self._simplices.values())

    def __repr__(self):
        counts = ", ".join(f"{d}:{len(s)}" for d, s in sorted(self._simplices.items()))
        return f"SimplicialComplex({counts})"


@dataclass
class Chain:
    """Sparse chain: dimension plus simplex-index -> nonzero GF(p) coefficient."""

    dim: int
    coeffs: dict[int, int] = field(default_factory=dict)

    def normalized(self, p: int) -> "Chain":
        return Chain(self.dim, {i: v % p for i, v in self.coeffs.items() if v % p})

    def add(self, other: "Chain", p: int) -> "Chain":
        if self.dim != other.dim:
            raise ChainError("cannot add chains of different dimensions")
        out = dict(self.coeffs)
        for i, v in other.coeffs.items():
            nv = (out.get(i, 0) + v) % p
            if nv:
                out[i] = nv
            else:
                out.pop(i, None)
        return Chain(self.dim, out)

    def scale(self, c: int, p: int) -> "Chain":
        c %= p
        if c == 0:
            return Chain(self.dim, {})
        return Chain(self.dim, {i: (v * c) % p for i, v in self.coeffs.items()})

    def neg(self, p: int) -> "Chain":
        return self.scale(p - 1, p)

    def is_zero(self) -> bool:
        return not self.coeffs

    def support(self) -> list[int]:
        return sorted(self.coeffs)

    def __eq__(self, other):
        return isinstance(other, Chain) and self.dim == other.dim and self.coeffs == other.coeffs


@dataclass
class BoundaryMatrix:
    """Sparse boundary operator: columns are n-simplices, rows (n-1)-simplices."""

    n: int
    nrows: int
    columns: list[dict[int, int]]

    @property
    def ncols(self) -> int:
        return len(self.columns)


class Infeasible:
    """Returned by constrained solves when no solution exists in the window."""

    def __init__(self, reason: str = "", window_limited: bool = False):
        self.reason = reason
        self.window_limited = window_limited

    def __bool__(self):
        return False

    def __repr__(self):
        flag = ", window_limited" if self.window_limited else ""
        return f"Infeasible({self.reason!r}{flag})"


def boundary_of_simplex(K: SimplicialComplex, simplex: tuple[int, ...], f: FieldSpec) -> Chain:
    """Alternating-sign boundary of one simplex, as a chain one dimension down."""
    s = tuple(simplex)
    d = len(s) - 1
    if d < 1:
        raise ChainError("boundary of a vertex is not defined")
    if not K.has_simplex(s):
        raise ComplexError(f"simplex {s} not in complex")
    p = f.p
    coeffs: dict[int, int] = {}
    for i in range(d + 1):
        face = s[:i] + s[i + 1:]
        sign = 1 if i % 2 == 0 else p - 1
        coeffs[K.index_of(face)] = sign
    return Chain(d - 1, {i: v for i, v in coeffs.items() if v % p}).normalized(p)


def boundary_matrix(K: SimplicialComplex, n: int, f: FieldSpec) -> BoundaryMatrix:
    if n < 1:
        raise ChainError("boundary matrices are defined for n >= 1")
    nrows = K.n_simplices(n - 1)
    cols = []
    for s in K.simplices(n):
        cols.append(boundary_of_simplex(K, s, f).coeffs)
    return BoundaryMatrix(n, nrows, cols)


def chain_boundary(K: SimplicialComplex, c: Chain, f: FieldSpec) -> Chain:
    """Boundary of a chain; dimension-0 chains have zero boundary."""
    if c.dim == 0:
        return Chain(-1, {})
    p = f.p
    out: dict[int, int] = {}
    for idx, coeff in c.coeffs.items():
        s = K.simplex(c.dim, idx)
        for i in range(len(s)):
            face = s[:i] + s[i + 1:]
            sign = coeff if i % 2 == 0 else (-coeff) % p
            r = K.index_of(face)
            nv = (out.get(r, 0) + sign) % p
            if nv:
                out[r] = nv
            else:
                out.pop(r, None)
    return Chain(c.dim - 1, out)


def rank_gf(M: BoundaryMatrix | list[dict[int, int]], f: FieldSpec) -> int:
    cols = M.columns if isinstance(M, BoundaryMatrix) else M
    return gf.sparse_rank(cols, f.p)


def betti(K: SimplicialComplex, n: int, f: FieldSpec) -> int:
    """dim Ker(boundary_n) - dim Im(boundary_{n+1}) over GF(p)."""
    cn = K.n_simplices(n)
    if cn == 0:
        return 0
    rank_n = 0 if n == 0 else rank_gf(boundary_matrix(K, n, f), f)
    rank_np1 = 0
    if K.n_simplices(n + 1):
        rank_np1 = rank_gf(boundary_matrix(K, n + 1, f), f)
    return cn - rank_n - rank_np1


def solve_boundary(
    z: Chain,
    K: SimplicialComplex,
    f: FieldSpec,
    support: list[int] | None = None,
) -> Chain | Infeasible:
    """Find x of dimension z.dim+1 with boundary x = z, or report Infeasible.

    `support` restricts the solution to the given (z.dim+1)-simplex
    indices.  The precondition that z is a cycle is checked and raising;
    infeasibility inside the support set is exact (by elimination).
    """
    p = f.p
    z = z.normalized(p)
    if z.dim >= 1 and not chain_boundary(K, z, f).is_zero():
        raise ChainError("target chain is not a cycle")
    n = z.dim + 1
    if z.is_zero():
        return Chain(n, {})
    all_cols = K.n_simplices(n)
    col_ids = list(range(all_cols)) if support is None else sorted(set(support))
    red = gf.ColumnReduction(p)
    columns = []
    for j in col_ids:
        col = boundary_of_simplex(K, K.simplex(n, j), f).coeffs
        columns.append(col)
        red.insert(col)
    comb = red.solve(z.coeffs)
    if comb is None:
        return Infeasible("no filling within the given support")
    x = Chain(n, {col_ids[j]: v % p for j, v in comb.items() if v % p})
    return x


# ---------------------------------------------------------------------------
# Dense brute-force twins, for oracle cross-checks on small complexes.
# ---------------------------------------------------------------------------


def betti_dense(K: SimplicialComplex, n: int, f: FieldSpec) -> int:
    cn = K.n_simplices(n)
    if cn == 0:
        return 0
    rank_n = 0
    if n >= 1:
        B = boundary_matrix(K, n, f)
        rank_n = gf.dense_rank(gf.dense_from_columns(B.columns, B.nrows, f.p), f.p)
    rank_np1 = 0
    if K.n_simplices(n + 1):
        B1 = boundary_matrix(K, n + 1, f)
        rank_np1 = gf.dense_rank(gf.dense_from_columns(B1.columns, B1.nrows, f.p), f.p)
    return cn - rank_n - rank_np1


def solve_boundary_dense(
    z: Chain, K: SimplicialComplex, f: FieldSpec, support: list[int] | None = None
) -> Chain | Infeasible:
    import numpy as np

    p = f.p
    n = z.dim + 1
    nrows = K.n_simplices(z.dim)
    col_ids = list(range(K.n_simplices(n))) if support is None else sorted(set(support))
    B = [boundary_of_simplex(K, K.simplex(n, j), f).coeffs for j in col_ids]
    A = gf.dense_from_columns(B, nrows, p)
    b = np.zeros(nrows, dtype=np.int64)
    for i, v in z.normalized(p).coeffs.items():
        b[i] = v
    x = gf.dense_solve(A, b, p)
    if x is None:
        return Infeasible("no filling within the given support")
    return Chain(n, {col_ids[j]: int(x[j]) % p for j in range(len(col_ids)) if x[j] % p})
