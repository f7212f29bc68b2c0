"""Sylvester matrices, resultants and Bezout certificates.

Coprimality of f, g in R[t] (the ideal (f, g) is everything) is decided by
whether res(f, g) is a unit; the Bezout pair is read off the adjugate of the
Sylvester matrix.  No Euclidean algorithm is used because the coefficient
rings are generally not fields.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import NotMonicError, SchemaError, UnsupportedRingError, VerificationError
from .matrices import Matrix, adjugate, determinant, try_invert_matrix
from .poly import Polynomial, divide_by_monic
from .rings import Integers, IntegersMod, Ring


@dataclass(frozen=True)
class BezoutCertificate:
    """u*f + v*g = 1."""

    u: Polynomial
    v: Polynomial
    f: Polynomial
    g: Polynomial

    def __post_init__(self):
        one = Polynomial.one(self.f.ring)
        if self.u * self.f + self.v * self.g != one:
            raise VerificationError(f"u*f + v*g != 1 for f={self.f}, g={self.g}")


def _sylvester_rows(f: Polynomial, g: Polynomial) -> list[list]:
    R = f.ring
    m, n = f.degree, g.degree
    size = m + n
    fh = f.coeffs[::-1]
    gh = g.coeffs[::-1]
    rows = []
    for i in range(n):
        rows.append([R.zero] * i + list(fh) + [R.zero] * (size - m - 1 - i))
    for i in range(m):
        rows.append([R.zero] * i + list(gh) + [R.zero] * (size - n - 1 - i))
    return rows


def sylvester_matrix(f: Polynomial, g: Polynomial) -> Matrix:
    """deg g shifted rows of f followed by deg f shifted rows of g.

    Coefficients are laid out highest degree first, so that a row vector
    (a_{n-1}, ..., a_0, b_{m-1}, ..., b_0) times this matrix gives the
    coefficients of a*f + b*g, highest first.
    """
    f._same(g)
    if not f.is_monic():
        raise NotMonicError(f"{f} is not monic")
    if g.is_zero():
        raise SchemaError("g must be nonzero")
    if f.degree + g.degree < 1:
        raise SchemaError("both degrees are zero")
    return Matrix(f.ring, _sylvester_rows(f, g))


def _one(f: Polynomial) -> Polynomial:
    return Polynomial.one(f.ring)


def resultant(f: Polynomial, g: Polynomial):
    """det of the Sylvester matrix; res(f, 1) = res(1, g) = 1 by convention."""
    f._same(g)
    R = f.ring
    if f == _one(f) or g == _one(g):
        return R.one
    return determinant(sylvester_matrix(f, g))


def bezout_certificate(f: Polynomial, g: Polynomial) -> BezoutCertificate | None:
    """(u, v) with u*f + v*g = 1 when res(f, g) is a unit, else None."""
    f._same(g)
    R = f.ring
    zero = Polynomial(R)
    if f == _one(f):
        return BezoutCertificate(_one(f), zero, f, g)
    if g == _one(g):
        return BezoutCertificate(zero, _one(g), f, g)
    S = sylvester_matrix(f, g)
    res = determinant(S)
    rinv = R.inv(res)
    if rinv is None:
        return None
    # w^T S = res * e_last  <=>  w^T = e_last adj(S)
    w = adjugate(S).entries[-1]
    n = g.degree
    u = Polynomial(R, reversed(w[:n])).scale(rinv)
    v = Polynomial(R, reversed(w[n:])).scale(rinv)
    return BezoutCertificate(u, v, f, g)


def _orient(f: Polynomial, g: Polynomial) -> tuple[Polynomial, Polynomial]:
    if f.is_monic():
        return f, g
    if g.is_monic():
        return g, f
    raise NotMonicError("neither argument is monic")


def coprime(f: Polynomial, g: Polynomial) -> bool:
    f, g = _orient(f, g)
    return f.ring.is_unit(resultant(f, g))


class SylvesterSolver:
    """Solves a*f + b*g = rhs with deg a < deg g and deg b < deg f.

    The Sylvester matrix of (f, g) is inverted once; each call is a single
    vector-matrix product.  Requires res(f, g) to be a unit.
    """

    def __init__(self, f: Polynomial, g: Polynomial):
        f._same(g)
        self.f, self.g = f, g
        self.ring = f.ring
        self.inverse = None
        if f.degree > 0 and g.degree > 0:
            S = sylvester_matrix(f, g)
            self.inverse = try_invert_matrix(S)
            if self.inverse is None:
                raise SchemaError(f"res({f}, {g}) is not a unit")
        elif not (f.is_monic() and g.is_monic()):
            raise NotMonicError("degenerate solve needs monic arguments")

    def __call__(self, rhs: Polynomial) -> tuple[Polynomial, Polynomial]:
        R = self.ring
        f, g = self.f, self.g
        m, n = f.degree, g.degree
        if rhs.degree >= m + n:
            raise SchemaError(f"right-hand side degree {rhs.degree} >= {m + n}")
        if m == 0:
            return rhs, Polynomial(R)
        if n == 0:
            return Polynomial(R), rhs
        vec = rhs.padded(m + n)[::-1]
        w = self.inverse.transpose().apply(vec)
        a = Polynomial(R, reversed(w[:n]))
        b = Polynomial(R, reversed(w[n:]))
        if a * f + b * g != rhs:
            raise VerificationError("Sylvester solve does not reproduce the right-hand side")
        return a, b


def solve_sylvester(f: Polynomial, g: Polynomial, rhs: Polynomial) -> tuple[Polynomial, Polynomial]:
    return SylvesterSolver(f, g)(rhs)


# --- coprimality modulo every maximal ideal -----------------------------


@dataclass(frozen=True)
class ResidueCheck:
    """Result of testing coprimality over every residue field.

    `witness` is the modulus (a prime for Z and Z/n, or the residue ring
    otherwise) where a common factor was found, and `common_factor` that
    factor over the residue field.
    """

    coprime: bool
    witness: object = None
    common_factor: Polynomial | None = None

    def __bool__(self):
        return self.coprime


def _monic_polys(F: Ring, d: int):
    elems = list(F.elements())
    for lower in itertools.product(elems, repeat=d):
        yield Polynomial.monic(F, lower)


def common_monic_factor(f: Polynomial, g: Polynomial) -> Polynomial | None:
    """Exhaustive search for a monic common divisor of degree >= 1 over a finite field."""
    F = f.ring
    if f.is_zero() and g.is_zero():
        return Polynomial.t(F)
    top = min(d for d in (f.degree, g.degree) if d >= 0)
    if f.is_zero() or g.is_zero():
        top = max(f.degree, g.degree)
    for d in range(1, top + 1):
        for c in _monic_polys(F, d):
            if divide_by_monic(f, c)[1].is_zero() and divide_by_monic(g, c)[1].is_zero():
                return c
    return None


def _prime_factors(n: int) -> list[int]:
    n = abs(n)
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            out.append(p)
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        out.append(n)
    return out


def _primes():
    p = 2
    while True:
        if all(p % q for q in range(2, int(p**0.5) + 1)):
            yield p
        p += 1


def coprime_all_residues(f: Polynomial, g: Polynomial) -> ResidueCheck:
    """Test that the images of f and g are coprime over every residue field R/M."""
    f, g = _orient(f, g)
    R = f.ring
    if f == _one(f) or g == _one(g):
        return ResidueCheck(True)
    if isinstance(R, Integers):
        r = resultant(f, g)
        if r in (1, -1):
            return ResidueCheck(True)
        primes = _prime_factors(r) if r != 0 else _primes()
        for p in primes:
            Fp = IntegersMod(p)
            fb = f.map(Fp, Fp.from_int)
            gb = g.map(Fp, Fp.from_int)
            c = common_monic_factor(fb, gb)
            if c is not None:
                return ResidueCheck(False, p, c)
        raise VerificationError(f"no residue witness for res = {r}")
    if isinstance(R, IntegersMod):
        for p in _prime_factors(R.n):
            Fp = IntegersMod(p)
            c = common_monic_factor(f.map(Fp, Fp.from_int), g.map(Fp, Fp.from_int))
            if c is not None:
                return ResidueCheck(False, p, c)
        return ResidueCheck(True)
    ld = R.local_data()
    if ld is None:
        raise UnsupportedRingError(f"no residue-field reduction available for {R}")
    F = ld.residue
    c = common_monic_factor(f.map(F, ld.reduce), g.map(F, ld.reduce))
    if c is not None:
        return ResidueCheck(False, F, c)
    return ResidueCheck(True)
