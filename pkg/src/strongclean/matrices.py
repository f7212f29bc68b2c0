"""Dense exact matrices over the ring tower.

Determinants and characteristic polynomials use Berkowitz's algorithm, which
needs no division and is therefore sound over rings with zero divisors.
"""

from __future__ import annotations

import itertools
from typing import Callable, Iterable, Sequence

from .errors import GuardError, NotMonicError, RingMismatchError, SchemaError, ShapeError, VerificationError
from .poly import Polynomial
from .rings import Ring

MAX_DIM = 8
CYCLIC_SEARCH_BUDGET = 1 << 16


class Matrix:
    __slots__ = ("ring", "entries")

    def __init__(self, ring: Ring, rows: Iterable[Iterable]):
        entries = tuple(tuple(r) for r in rows)
        if not entries or not entries[0]:
            raise ShapeError("matrices must have at least one row and one column")
        width = len(entries[0])
        if any(len(r) != width for r in entries):
            raise ShapeError("ragged rows")
        if len(entries) > MAX_DIM or width > MAX_DIM:
            raise GuardError(f"matrix dimension exceeds {MAX_DIM}")
        self.ring = ring
        self.entries = entries

    @classmethod
    def from_ints(cls, ring: Ring, rows) -> Matrix:
        return cls(ring, ((ring.from_int(k) for k in r) for r in rows))

    @classmethod
    def identity(cls, ring: Ring, n: int) -> Matrix:
        return cls(ring, ((ring.one if i == j else ring.zero for j in range(n)) for i in range(n)))

    @classmethod
    def zeros(cls, ring: Ring, rows: int, cols: int | None = None) -> Matrix:
        return cls(ring, ((ring.zero,) * (cols or rows) for _ in range(rows)))

    @classmethod
    def diag(cls, ring: Ring, values: Sequence) -> Matrix:
        n = len(values)
        return cls(ring, ((values[i] if i == j else ring.zero for j in range(n)) for i in range(n)))

    @classmethod
    def from_columns(cls, ring: Ring, columns: Sequence[Sequence]) -> Matrix:
        return cls(ring, zip(*columns))

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def cols(self) -> int:
        return len(self.entries[0])

    def is_square(self) -> bool:
        return self.rows == self.cols

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def column(self, j: int) -> tuple:
        return tuple(r[j] for r in self.entries)

    def transpose(self) -> Matrix:
        return Matrix(self.ring, zip(*self.entries))

    def map(self, ring: Ring, fn: Callable) -> Matrix:
        """Apply a ring homomorphism entry-wise."""
        return Matrix(ring, ((fn(x) for x in r) for r in self.entries))

    def minor(self, i: int, j: int) -> Matrix:
        return Matrix(self.ring, (r[:j] + r[j + 1:] for k, r in enumerate(self.entries) if k != i))

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.ring == other.ring and self.entries == other.entries

    def __hash__(self):
        return hash((self.ring, self.entries))

    def __repr__(self):
        return f"Matrix({self.ring}, {self})"

    def __str__(self):
        f = self.ring.format
        return "[" + ", ".join("[" + ", ".join(f(x) for x in r) + "]" for r in self.entries) + "]"

    # --- arithmetic

    def _same_shape(self, other: Matrix):
        if not isinstance(other, Matrix):
            raise TypeError(f"expected Matrix, got {type(other).__name__}")
        if other.ring != self.ring:
            raise RingMismatchError(f"{self.ring} vs {other.ring}")
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ShapeError(f"{self.rows}x{self.cols} vs {other.rows}x{other.cols}")

    def __add__(self, other: Matrix) -> Matrix:
        self._same_shape(other)
        add = self.ring.add
        return Matrix(self.ring, (map(add, a, b) for a, b in zip(self.entries, other.entries)))

    def __sub__(self, other: Matrix) -> Matrix:
        self._same_shape(other)
        sub = self.ring.sub
        return Matrix(self.ring, (map(sub, a, b) for a, b in zip(self.entries, other.entries)))

    def __neg__(self) -> Matrix:
        neg = self.ring.neg
        return Matrix(self.ring, (map(neg, r) for r in self.entries))

    def __matmul__(self, other: Matrix) -> Matrix:
        if not isinstance(other, Matrix):
            return NotImplemented
        if other.ring != self.ring:
            raise RingMismatchError(f"{self.ring} vs {other.ring}")
        if self.cols != other.rows:
            raise ShapeError(f"{self.rows}x{self.cols} @ {other.rows}x{other.cols}")
        R = self.ring
        cols = list(zip(*other.entries))
        return Matrix(R, ((_dot(R, r, c) for c in cols) for r in self.entries))

    def scale(self, c) -> Matrix:
        mul = self.ring.mul
        return Matrix(self.ring, ((mul(c, x) for x in r) for r in self.entries))

    def apply(self, vec: Sequence) -> tuple:
        R = self.ring
        return tuple(_dot(R, r, vec) for r in self.entries)

    def __pow__(self, e: int) -> Matrix:
        self._require_square()
        result = Matrix.identity(self.ring, self.rows)
        for _ in range(e):
            result = result @ self
        return result

    def _require_square(self):
        if not self.is_square():
            raise ShapeError(f"matrix is {self.rows}x{self.cols}, expected square")


def _dot(R: Ring, xs, ys):
    acc = R.zero
    for x, y in zip(xs, ys):
        acc = R.add(acc, R.mul(x, y))
    return acc


def mat_arith(op: str, A: Matrix, B) -> Matrix:
    """add, sub, mul (matrix product) or scalar_mul (B is a raw ring value)."""
    if op == "add":
        return A + B
    if op == "sub":
        return A - B
    if op == "mul":
        return A @ B
    if op == "scalar_mul":
        return A.scale(B)
    raise ValueError(f"unknown operation {op!r}")


def _berkowitz(A: Matrix) -> list:
    """Coefficients of det(tI - A), highest degree first."""
    R = A.ring
    M = A.entries
    n = A.rows
    vect = [R.one, R.neg(M[n - 1][n - 1])]
    for r in range(n - 2, -1, -1):
        k = n - r - 1
        row = M[r][r + 1:]
        col = [M[i][r] for i in range(r + 1, n)]
        sub = [list(M[i][r + 1:]) for i in range(r + 1, n)]
        # q = 1, -a_rr, -R C, -R S C, ..., -R S^(k-1) C
        q = [R.one, R.neg(M[r][r])]
        v = col
        for _ in range(k):
            q.append(R.neg(_dot(R, row, v)))
            v = [_dot(R, s, v) for s in sub]
        vect = [
            R.sum(R.mul(q[i - j], vect[j]) for j in range(max(0, i - k - 1), min(i, k) + 1))
            for i in range(k + 2)
        ]
    return vect


def charpoly(A: Matrix) -> Polynomial:
    """det(tI - A), monic of degree n."""
    A._require_square()
    return Polynomial(A.ring, reversed(_berkowitz(A)))


def determinant(A: Matrix):
    A._require_square()
    R = A.ring
    c0 = _berkowitz(A)[-1]
    return c0 if A.rows % 2 == 0 else R.neg(c0)


def adjugate(A: Matrix) -> Matrix:
    """Transpose of the signed cofactor matrix."""
    A._require_square()
    R = A.ring
    n = A.rows
    if n == 1:
        return Matrix(R, [[R.one]])
    cof = [
        [determinant(A.minor(i, j)) if (i + j) % 2 == 0 else R.neg(determinant(A.minor(i, j))) for j in range(n)]
        for i in range(n)
    ]
    return Matrix(R, zip(*cof))


def try_invert_matrix(A: Matrix) -> Matrix | None:
    A._require_square()
    R = A.ring
    d = R.inv(determinant(A))
    if d is None:
        return None
    inv = adjugate(A).scale(d)
    if A @ inv != Matrix.identity(R, A.rows):
        raise VerificationError("adjugate inverse failed A*A^-1 = I")
    return inv


def companion(h: Polynomial) -> Matrix:
    """Ones on the subdiagonal, last column -a_0, ..., -a_{n-1}."""
    if not h.is_monic():
        raise NotMonicError(f"{h} is not monic")
    n = h.degree
    if n < 1:
        raise SchemaError("companion matrix needs degree >= 1")
    R = h.ring
    rows = []
    for i in range(n):
        row = [R.one if i == j + 1 else R.zero for j in range(n - 1)]
        row.append(R.neg(h.coeffs[i]))
        rows.append(row)
    return Matrix(R, rows)


def is_companion_like(A: Matrix) -> bool:
    """True if A agrees with a companion matrix strictly below the diagonal."""
    if not A.is_square():
        return False
    R = A.ring
    n = A.rows
    for i in range(n):
        for j in range(i):
            want = R.one if i == j + 1 else R.zero
            if A[i, j] != want:
                return False
    return True


def krylov_matrix(A: Matrix, alpha: Sequence) -> Matrix:
    """(alpha | A alpha | ... | A^(n-1) alpha)."""
    A._require_square()
    if len(alpha) != A.rows:
        raise ShapeError(f"vector of length {len(alpha)} for {A.rows}x{A.cols} matrix")
    cols = [tuple(alpha)]
    for _ in range(A.rows - 1):
        cols.append(A.apply(cols[-1]))
    return Matrix.from_columns(A.ring, cols)


def _cyclic_candidates(R: Ring, n: int, budget: int):
    card = R.cardinality
    basis = [tuple(R.one if i == j else R.zero for j in range(n)) for i in range(n)]
    yield from basis
    if card is not None and card ** n <= budget:
        yield from itertools.product(list(R.elements()), repeat=n)
        return
    small = list(dict.fromkeys((R.zero, R.one, R.neg(R.one))))
    yield from itertools.product(small, repeat=n)


def is_cyclic(A: Matrix, budget: int = CYCLIC_SEARCH_BUDGET) -> tuple | None:
    """Search for alpha with an invertible Krylov matrix.

    Exhaustive over finite rings small enough for `budget`; otherwise only
    the standard basis and 0/+-1 vectors are tried, so None means "not found"
    rather than "not cyclic".
    """
    A._require_square()
    R = A.ring
    n = A.rows
    if is_companion_like(A):
        return tuple(R.one if i == 0 else R.zero for i in range(n))
    for alpha in _cyclic_candidates(R, n, budget):
        if R.is_unit(determinant(krylov_matrix(A, alpha))):
            return tuple(alpha)
    return None


def cyclic_search_is_exhaustive(R: Ring, n: int, budget: int = CYCLIC_SEARCH_BUDGET) -> bool:
    card = R.cardinality
    return card is not None and card ** n <= budget


def conjugate(A: Matrix, gamma: Matrix) -> Matrix:
    """gamma^-1 A gamma."""
    inv = try_invert_matrix(gamma)
    if inv is None:
        raise SchemaError("conjugating matrix is not invertible")
    return inv @ A @ gamma
