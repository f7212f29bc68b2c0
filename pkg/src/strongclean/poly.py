"""Dense univariate polynomials over a ring from the tower.

Coefficients are stored lowest degree first and never carry trailing
zeros, so the zero polynomial has an empty coefficient tuple and degree -1.
"""

from __future__ import annotations

from typing import TYPE_CHECKING, Callable, Iterable

from .errors import NotMonicError, RingMismatchError, ShapeError
from .rings import Ring, _format_terms

if TYPE_CHECKING:
    from .matrices import Matrix


class Polynomial:
    __slots__ = ("ring", "coeffs")

    def __init__(self, ring: Ring, coeffs: Iterable = ()):
        c = list(coeffs)
        while c and ring.is_zero(c[-1]):
            c.pop()
        self.ring = ring
        self.coeffs = tuple(c)

    @classmethod
    def from_ints(cls, ring: Ring, ints: Iterable[int]) -> Polynomial:
        return cls(ring, (ring.from_int(k) for k in ints))

    @classmethod
    def constant(cls, ring: Ring, c) -> Polynomial:
        return cls(ring, (c,))

    @classmethod
    def one(cls, ring: Ring) -> Polynomial:
        return cls(ring, (ring.one,))

    @classmethod
    def t(cls, ring: Ring) -> Polynomial:
        return cls(ring, (ring.zero, ring.one))

    @classmethod
    def linear(cls, ring: Ring, root) -> Polynomial:
        """t - root."""
        return cls(ring, (ring.neg(root), ring.one))

    @classmethod
    def monic(cls, ring: Ring, lower: Iterable) -> Polynomial:
        """t^d + lower[d-1] t^(d-1) + ... + lower[0]."""
        return cls(ring, (*lower, ring.one))

    # --- basic properties

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lead(self):
        return self.coeffs[-1] if self.coeffs else self.ring.zero

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == self.ring.one

    def coeff(self, i: int):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else self.ring.zero

    def padded(self, length: int) -> tuple:
        """Coefficients low-first, zero padded to `length`."""
        return self.coeffs + (self.ring.zero,) * (length - len(self.coeffs))

    def sort_key(self):
        return (self.degree, tuple(self.ring.sort_key(c) for c in self.coeffs))

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.ring == other.ring and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.ring, self.coeffs))

    def __repr__(self):
        return f"Polynomial({self.ring}, {self})"

    def __str__(self):
        monos = [""] + ["t" if i == 1 else f"t^{i}" for i in range(1, len(self.coeffs))]
        return _format_terms(self.ring, self.coeffs[::-1], monos[::-1])

    # --- arithmetic

    def _same(self, other: Polynomial):
        if not isinstance(other, Polynomial):
            raise TypeError(f"expected Polynomial, got {type(other).__name__}")
        if other.ring != self.ring:
            raise RingMismatchError(f"{self.ring} vs {other.ring}")

    def __add__(self, other: Polynomial) -> Polynomial:
        self._same(other)
        R = self.ring
        n = max(len(self.coeffs), len(other.coeffs))
        return Polynomial(R, (R.add(a, b) for a, b in zip(self.padded(n), other.padded(n))))

    def __sub__(self, other: Polynomial) -> Polynomial:
        self._same(other)
        R = self.ring
        n = max(len(self.coeffs), len(other.coeffs))
        return Polynomial(R, (R.sub(a, b) for a, b in zip(self.padded(n), other.padded(n))))

    def __neg__(self) -> Polynomial:
        return Polynomial(self.ring, (self.ring.neg(c) for c in self.coeffs))

    def __mul__(self, other: Polynomial) -> Polynomial:
        self._same(other)
        R = self.ring
        if not self.coeffs or not other.coeffs:
            return Polynomial(R)
        out = [R.zero] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if R.is_zero(a):
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = R.add(out[i + j], R.mul(a, b))
        return Polynomial(R, out)

    def scale(self, c) -> Polynomial:
        R = self.ring
        return Polynomial(R, (R.mul(c, a) for a in self.coeffs))

    def shift(self, k: int) -> Polynomial:
        """Multiply by t^k."""
        if not self.coeffs:
            return self
        return Polynomial(self.ring, (self.ring.zero,) * k + self.coeffs)

    def __pow__(self, e: int) -> Polynomial:
        result = Polynomial.one(self.ring)
        for _ in range(e):
            result = result * self
        return result

    def __call__(self, r):
        """Horner evaluation at a raw ring value."""
        R = self.ring
        acc = R.zero
        for c in reversed(self.coeffs):
            acc = R.add(R.mul(acc, r), c)
        return acc

    def map(self, ring: Ring, fn: Callable) -> Polynomial:
        """Apply a ring homomorphism coefficient-wise."""
        return Polynomial(ring, (fn(c) for c in self.coeffs))

    def divmod_monic(self, d: Polynomial) -> tuple[Polynomial, Polynomial]:
        return divide_by_monic(self, d)


def poly_arith(op: str, p: Polynomial, q: Polynomial) -> Polynomial:
    if op == "add":
        return p + q
    if op == "sub":
        return p - q
    if op == "mul":
        return p * q
    raise ValueError(f"unknown operation {op!r}")


def divide_by_monic(p: Polynomial, d: Polynomial) -> tuple[Polynomial, Polynomial]:
    """Exact division with remainder by a monic divisor: p = d*q + r, deg r < deg d."""
    p._same(d)
    if not d.is_monic():
        raise NotMonicError(f"divisor {d} is not monic")
    R = p.ring
    m = d.degree
    rem = list(p.coeffs)
    if len(rem) <= m:
        return Polynomial(R), p
    quo = [R.zero] * (len(rem) - m)
    for k in range(len(rem) - 1, m - 1, -1):
        c = rem[k]
        if R.is_zero(c):
            continue
        quo[k - m] = c
        for i, dc in enumerate(d.coeffs):
            rem[k - m + i] = R.sub(rem[k - m + i], R.mul(c, dc))
    return Polynomial(R, quo), Polynomial(R, rem[:m])


def eval_poly(p: Polynomial, r):
    return p(r)


def eval_at_matrix(p: Polynomial, A: Matrix) -> Matrix:
    """Sum of c_i A^i with A^0 = I, by Horner's scheme."""
    from .matrices import Matrix

    if A.ring != p.ring:
        raise RingMismatchError(f"{p.ring} vs {A.ring}")
    if not A.is_square():
        raise ShapeError(f"matrix is {A.rows}x{A.cols}, expected square")
    n = A.rows
    acc = Matrix.zeros(A.ring, n, n)
    eye = Matrix.identity(A.ring, n)
    for c in reversed(p.coeffs):
        acc = acc @ A + eye.scale(c)
    return acc
