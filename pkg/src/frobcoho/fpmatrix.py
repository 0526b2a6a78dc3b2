"""Exact dense linear algebra over the prime field F_p.

Everything downstream (Lie algebra actions, cohomology of periodic
complexes, Hom spaces) reduces to rank/kernel/solve computations over
F_p with p a small prime.  Matrices are stored as int64 numpy arrays
with entries in [0, p).  Products are routed through float64 so that
numpy can use BLAS; this is exact because every intermediate value is
bounded by p^2 * max(dim) << 2^53.

Row reduction uses the first nonzero entry as pivot, so echelon forms,
kernel bases and particular solutions are reproducible across runs.
"""

from __future__ import annotations

import numpy as np

_PRIMES = frozenset({2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37})


def is_prime(p: int) -> bool:
    if p in _PRIMES:
        return True
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


def _check_prime(p: int) -> None:
    if not is_prime(p):
        raise ValueError(f"modulus {p} is not prime")


def _matmul(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    # float64 BLAS path; exact for these sizes (see module docstring)
    if a.shape[1] == 0:
        return np.zeros((a.shape[0], b.shape[1]), dtype=np.int64)
    c = a.astype(np.float64) @ b.astype(np.float64)
    return (c % p).astype(np.int64)


def _rref(mat: np.ndarray, p: int) -> tuple[np.ndarray, tuple[int, ...]]:
    """Reduced row echelon form with deterministic first-nonzero pivoting."""
    a = mat.copy()
    rows, cols = a.shape
    pivots = []
    r = 0
    for c in range(cols):
        if r >= rows:
            break
        nz = np.nonzero(a[r:, c])[0]
        if nz.size == 0:
            continue
        k = r + int(nz[0])
        if k != r:
            a[[r, k]] = a[[k, r]]
        inv = pow(int(a[r, c]), p - 2, p)
        a[r] = (a[r] * inv) % p
        col = a[:, c].copy()
        col[r] = 0
        a -= np.outer(col, a[r])
        a %= p
        pivots.append(c)
        r += 1
    return a, tuple(pivots)


class FpMatrix:
    """Dense matrix over F_p with exact rank/kernel/solve primitives."""

    __slots__ = ("p", "a", "_rref_cache")

    def __init__(self, p: int, data):
        _check_prime(p)
        a = np.asarray(data, dtype=np.int64)
        if a.ndim != 2:
            raise ValueError("FpMatrix needs a 2-d array")
        self.p = p
        self.a = a % p
        self._rref_cache = None

    @classmethod
    def zeros(cls, p: int, rows: int, cols: int) -> "FpMatrix":
        return cls(p, np.zeros((rows, cols), dtype=np.int64))

    @classmethod
    def identity(cls, p: int, n: int) -> "FpMatrix":
        return cls(p, np.eye(n, dtype=np.int64))

    @classmethod
    def from_columns(cls, p: int, columns, nrows: int) -> "FpMatrix":
        cols = list(columns)
        if not cols:
            return cls.zeros(p, nrows, 0)
        return cls(p, np.column_stack(cols))

    @property
    def rows(self) -> int:
        return self.a.shape[0]

    @property
    def cols(self) -> int:
        return self.a.shape[1]

    @property
    def shape(self) -> tuple[int, int]:
        return self.a.shape

    @property
    def T(self) -> "FpMatrix":
        return FpMatrix(self.p, self.a.T)

    def column(self, j: int) -> np.ndarray:
        return self.a[:, j].copy()

    def columns(self):
        return [self.a[:, j].copy() for j in range(self.cols)]

    def is_zero(self) -> bool:
        return not self.a.any()

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, FpMatrix)
            and self.p == other.p
            and self.shape == other.shape
            and np.array_equal(self.a, other.a)
        )

    def __hash__(self):
        return hash((self.p, self.shape, self.a.tobytes()))

    def __repr__(self) -> str:
        return f"FpMatrix(p={self.p}, {self.a.tolist()})"

    def _same_field(self, other: "FpMatrix") -> None:
        if self.p != other.p:
            raise ValueError("mixed moduli")

    def __add__(self, other: "FpMatrix") -> "FpMatrix":
        self._same_field(other)
        return FpMatrix(self.p, self.a + other.a)

    def __sub__(self, other: "FpMatrix") -> "FpMatrix":
        self._same_field(other)
        return FpMatrix(self.p, self.a - other.a)

    def __neg__(self) -> "FpMatrix":
        return FpMatrix(self.p, -self.a)

    def __rmul__(self, scalar: int) -> "FpMatrix":
        return FpMatrix(self.p, self.a * (scalar % self.p))

    def __matmul__(self, other):
        if isinstance(other, FpMatrix):
            self._same_field(other)
            if self.cols != other.rows:
                raise ValueError("shape mismatch")
            return FpMatrix(self.p, _matmul(self.a, other.a, self.p))
        vec = np.asarray(other, dtype=np.int64) % self.p
        return _matmul(self.a, vec.reshape(-1, 1), self.p)[:, 0]

    def __pow__(self, n: int) -> "FpMatrix":
        if self.rows != self.cols:
            raise ValueError("matrix power needs a square matrix")
        if n < 0:
            raise ValueError("negative powers unsupported")
        result = FpMatrix.identity(self.p, self.rows)
        base = self
        while n:
            if n & 1:
                result = result @ base
            base = base @ base
            n >>= 1
        return result

    def rref(self) -> tuple["FpMatrix", tuple[int, ...]]:
        if self._rref_cache is None:
            r, piv = _rref(self.a, self.p)
            self._rref_cache = (FpMatrix(self.p, r), piv)
        return self._rref_cache

    def rank(self) -> int:
        return len(self.rref()[1])

    def kernel_basis(self) -> "FpMatrix":
        """Basis of the right kernel, returned as the columns of a matrix.

        Free variables are enumerated in increasing column order; each basis
        vector has a 1 in its free slot, so the output is deterministic.
        """
        r, pivots = self.rref()
        n = self.cols
        free = [j for j in range(n) if j not in set(pivots)]
        if not free:
            return FpMatrix.zeros(self.p, n, 0)
        basis = np.zeros((n, len(free)), dtype=np.int64)
        for k, j in enumerate(free):
            basis[j, k] = 1
            for row, pc in enumerate(pivots):
                basis[pc, k] = (-int(r.a[row, j])) % self.p
        return FpMatrix(self.p, basis)

    def column_space_basis(self) -> "FpMatrix":
        """Pivot columns of the original matrix (greedy left-to-right)."""
        _, pivots = self.rref()
        return FpMatrix(self.p, self.a[:, list(pivots)])

    def solve(self, rhs: "FpMatrix") -> "FpMatrix":
        """A particular solution X of self @ X = rhs (free variables 0)."""
        self._same_field(rhs)
        if rhs.rows != self.rows:
            raise ValueError("shape mismatch")
        aug = np.concatenate([self.a, rhs.a], axis=1)
        red, pivots = _rref(aug, self.p)
        if any(c >= self.cols for c in pivots):
            raise ValueError("inconsistent linear system")
        x = np.zeros((self.cols, rhs.cols), dtype=np.int64)
        for row, pc in enumerate(pivots):
            x[pc] = red[row, self.cols:]
        return FpMatrix(self.p, x)

    def contains_column(self, vec: np.ndarray) -> bool:
        try:
            self.solve(FpMatrix(self.p, np.asarray(vec).reshape(-1, 1)))
            return True
        except ValueError:
            return False


def rank(m: FpMatrix) -> int:
    return m.rank()


def kernel_basis(m: FpMatrix) -> FpMatrix:
    return m.kernel_basis()


def subquotient_dim(kernel_of: FpMatrix, image_of: FpMatrix) -> int:
    """dim(ker A / im B) for composable A, B with A @ B = 0 (checked)."""
    if kernel_of.cols != image_of.rows:
        raise ValueError("shape mismatch")
    if not (kernel_of @ image_of).is_zero():
        raise ValueError("A @ B != 0: not a subquotient")
    return (kernel_of.cols - kernel_of.rank()) - image_of.rank()


def generalized_eigenspace(m: FpMatrix, lam: int) -> FpMatrix:
    """Basis of ker (M - lam I)^dim, the generalized eigenspace at lam."""
    if m.rows != m.cols:
        raise ValueError("needs a square matrix")
    n = m.rows
    shifted = m - (lam % m.p) * FpMatrix.identity(m.p, n)
    return (shifted ** n).kernel_basis()


def independent_columns(mat: FpMatrix) -> tuple[int, ...]:
    """Indices of a maximal independent column set, chosen left to right."""
    return mat.rref()[1]


def graded_kernel(mat: FpMatrix, col_weights) -> tuple[FpMatrix, list[int]]:
    """Kernel basis of a weight-graded map, one block per column weight.

    Valid when the nonzero columns of weight w land in a single target
    weight (true for every action matrix in this package); the kernel then
    splits across weights and each basis vector is weight-homogeneous.
    Returns (basis columns, weight per column).
    """
    col_weights = list(col_weights)
    if mat.cols != len(col_weights):
        raise ValueError("weight list does not match column count")
    n = mat.cols
    vecs = []
    weights = []
    for w in sorted(set(col_weights)):
        idx = [j for j in range(n) if col_weights[j] == w]
        sub = FpMatrix(mat.p, mat.a[:, idx])
        kb = sub.kernel_basis()
        for k in range(kb.cols):
            v = np.zeros(n, dtype=np.int64)
            v[idx] = kb.a[:, k]
            vecs.append(v)
            weights.append(w)
    return FpMatrix.from_columns(mat.p, vecs, n), weights
