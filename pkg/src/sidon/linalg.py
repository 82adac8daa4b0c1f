"""Dense exact linear algebra over F_q on numpy int64 arrays.

All matrices are numpy arrays with entries reduced into [0, q); row
reduction is plain Gaussian elimination with modular pivot inverses, which
is ample for every system this package builds (the largest is a few hundred
rows by a few thousand columns).  Entries stay well inside int64: the
intermediate products are bounded by q^2 times a row length.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import ParameterError


def _as_matrix(M, q: int) -> np.ndarray:
    A = np.asarray(M, dtype=np.int64)
    if A.ndim != 2:
        raise ParameterError("expected a 2-D matrix")
    return A % q


def rref(M, q: int):
    """Reduced row echelon form and pivot columns of M over F_q."""
    R = _as_matrix(M, q).copy()
    rows, cols = R.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(R[r:, c])[0]
        if nz.size == 0:
            continue
        p = r + int(nz[0])
        if p != r:
            R[[r, p]] = R[[p, r]]
        R[r] = (R[r] * pow(int(R[r, c]), -1, q)) % q
        col = R[:, c].copy()
        col[r] = 0
        R = (R - np.outer(col, R[r])) % q
        pivots.append(c)
        r += 1
    return R, pivots


@dataclass
class EliminationResult:
    """Outcome of Gaussian elimination: rank, kernel, echelon form, solver."""

    matrix: np.ndarray
    q: int
    row_echelon: np.ndarray
    pivots: list[int]
    _transform: np.ndarray = field(repr=False)

    @property
    def rank(self) -> int:
        return len(self.pivots)

    @property
    def kernel_dim(self) -> int:
        return self.matrix.shape[1] - self.rank

    def kernel_basis(self) -> np.ndarray:
        """Right-kernel basis, systematic in the free columns; shape (nullity, cols)."""
        cols = self.matrix.shape[1]
        free = [c for c in range(cols) if c not in set(self.pivots)]
        basis = np.zeros((len(free), cols), dtype=np.int64)
        for idx, fc in enumerate(free):
            basis[idx, fc] = 1
            for row, pc in enumerate(self.pivots):
                basis[idx, pc] = (-int(self.row_echelon[row, fc])) % self.q
        return basis

    def solve(self, rhs):
        """One solution x of M x = rhs, or None if inconsistent."""
        b = np.asarray(rhs, dtype=np.int64) % self.q
        if b.shape != (self.matrix.shape[0],):
            raise ParameterError("right-hand side has the wrong length")
        y = (self._transform @ b) % self.q
        if np.any(y[self.rank:]):
            return None
        x = np.zeros(self.matrix.shape[1], dtype=np.int64)
        for row, pc in enumerate(self.pivots):
            x[pc] = y[row]
        return x


def gaussian_elim(M, q: int) -> EliminationResult:
    """Eliminate M over F_q, retaining the row transform for later solves."""
    A = _as_matrix(M, q)
    rows = A.shape[0]
    aug = np.concatenate([A, np.eye(rows, dtype=np.int64)], axis=1)
    R, pivots = rref(aug, q)
    # pivots inside the original columns describe A itself; the identity block
    # records the row transform T with T @ A = echelon
    main_pivots = [p for p in pivots if p < A.shape[1]]
    T = R[:, A.shape[1]:]
    E = R[:, : A.shape[1]]
    return EliminationResult(matrix=A, q=q, row_echelon=E, pivots=main_pivots, _transform=T)


def matrix_rank(M, q: int) -> int:
    return len(rref(M, q)[1])


def random_invertible(m: int, q: int, rng) -> np.ndarray:
    """Uniform invertible m x m matrix over F_q by rejection sampling."""
    if m < 1:
        raise ParameterError("matrix size must be >= 1")
    while True:
        A = np.array(
            [[rng.below(q) for _ in range(m)] for _ in range(m)], dtype=np.int64
        )
        if matrix_rank(A, q) == m:
            return A


def invert_matrix(M, q: int) -> np.ndarray:
    """Inverse of a square matrix over F_q."""
    A = _as_matrix(M, q)
    m = A.shape[0]
    if A.shape != (m, m):
        raise ParameterError("matrix must be square")
    R, pivots = rref(np.concatenate([A, np.eye(m, dtype=np.int64)], axis=1), q)
    if pivots[:m] != list(range(m)):
        raise ParameterError("matrix is singular")
    return R[:, m:]


def kronecker(A, B, q: int) -> np.ndarray:
    """Kronecker product over F_q; rank multiplies."""
    return np.kron(_as_matrix(A, q), _as_matrix(B, q)) % q


def triu_pairs(n: int) -> list[tuple[int, int]]:
    """Upper-triangle index pairs (i, j), i <= j, row-major; length n(n+1)/2."""
    return [(i, j) for i in range(n) for j in range(i, n)]


def matricize(w, q: int) -> np.ndarray:
    """Arrange a length-n(n+1)/2 vector into the symmetric n x n matrix it indexes.

    The vector is read in upper-triangle row-major order (1,1), (1,2), ...,
    (1,n), (2,2), ..., (n,n).
    """
    w = np.asarray(w, dtype=np.int64) % q
    L = w.shape[0]
    n = int((np.sqrt(8 * L + 1) - 1) / 2)
    if n * (n + 1) // 2 != L:
        raise ParameterError(f"length {L} is not a triangular number")
    S = np.zeros((n, n), dtype=np.int64)
    for idx, (i, j) in enumerate(triu_pairs(n)):
        S[i, j] = w[idx]
        S[j, i] = w[idx]
    return S


def vectorize_symmetric(S, q: int) -> np.ndarray:
    """Inverse of matricize on symmetric input."""
    S = _as_matrix(S, q)
    n = S.shape[0]
    return np.array([S[i, j] for i, j in triu_pairs(n)], dtype=np.int64)


@dataclass
class RankOneDecomposition:
    """S = mu * v^T v with v's first nonzero entry 1; w = sqrt(mu) * v when mu is square."""

    v: np.ndarray
    mu: int
    w: np.ndarray | None


def rank_one_decompose(S, q: int) -> RankOneDecomposition | None:
    """Decompose a symmetric rank-one matrix; None when rank(S) != 1."""
    S = _as_matrix(S, q)
    if matrix_rank(S, q) != 1:
        return None
    i0 = int(np.nonzero(np.any(S != 0, axis=1))[0][0])
    row = S[i0].copy()
    j0 = int(np.nonzero(row)[0][0])
    v = (row * pow(int(row[j0]), -1, q)) % q
    mu = int(S[j0, j0])
    if not np.array_equal((mu * np.outer(v, v)) % q, S):
        # symmetric rank-one over odd characteristic always decomposes
        return None
    w = None
    from .ffcore import PrimeField, sqrt as field_sqrt

    root = field_sqrt(PrimeField(q), mu)
    if root is not None and mu != 0:
        w = (root * v) % q
    return RankOneDecomposition(v=v, mu=mu, w=w)
