"""Transport of S0/S1 factorizations to ring extensions.

Two families are covered.  Truncated power series base[[x]]/(x^N) and the
quotients base[x]/(x^m) are lifted order by order in x.  The group ring
base[C2] is lifted in one linear solve, which works in characteristic 2.
Each step solves against the Sylvester matrix of the base pair, whose
determinant is the (unit) resultant.
"""

from __future__ import annotations

from dataclasses import dataclass

from .clean import CleanCertificate, SrFactorization, build_witness, sr_member
from .errors import GuardError, SchemaError, UnsupportedRingError, VerificationError
from .matrices import Matrix, charpoly
from .poly import Polynomial
from .resultant import SylvesterSolver, bezout_certificate
from .rings import GroupRingC2, QuotientXPow, Ring, TruncatedPowerSeries, _Truncated

GROUP_RING_MARKER = "C2"
MAX_TOWER_DEPTH = 2


def _reduction(R: Ring):
    """The evaluation x -> 0 (truncated series) or g -> 1 (group ring)."""
    if isinstance(R, _Truncated):
        return R.constant
    if isinstance(R, GroupRingC2):
        return R.augment
    raise UnsupportedRingError(f"no lifting reduction for {R}")


@dataclass(frozen=True)
class LiftedFactorization:
    """H = H0*H1 over an extension ring reducing to a base S0/S1 factorization."""

    H: Polynomial
    H0: Polynomial
    H1: Polynomial
    base: SrFactorization
    order: int | str

    def __post_init__(self):
        R = self.H.ring
        if self.H0 * self.H1 != self.H:
            raise VerificationError("H0*H1 != H")
        red = _reduction(R)
        B = self.base.ring
        if self.H0.map(B, red) != self.base.h0 or self.H1.map(B, red) != self.base.h1:
            raise VerificationError("lifted pair does not reduce to the base pair")
        if not sr_member(self.H0, R.zero) or not sr_member(self.H1, R.one):
            raise VerificationError("lifted pair left S0 / S1")

    @property
    def ring(self) -> Ring:
        return self.H.ring

    def as_sr_factorization(self) -> SrFactorization:
        cert = bezout_certificate(self.H0, self.H1)
        if cert is None:
            raise VerificationError("resultant of the lifted pair is not a unit")
        return SrFactorization(self.H, self.H0, self.H1, cert)


def _check_base(A: Matrix, fac: SrFactorization) -> Polynomial:
    R = A.ring
    H = charpoly(A)
    B = fac.ring
    if getattr(R, "base", None) != B:
        raise SchemaError(f"factorization over {B} does not match extension {R}")
    if H.map(B, _reduction(R)) != fac.h:
        raise SchemaError(f"charpoly of the reduced matrix is not {fac.h}")
    return H


def _truncated_lift(A: Matrix, fac: SrFactorization) -> LiftedFactorization:
    R = A.ring
    if not isinstance(R, _Truncated):
        raise SchemaError(f"expected a truncated series ring, got {R}")
    H = _check_base(A, fac)
    B = fac.ring
    N = R.length
    n = H.degree
    # c[j] is the coefficient of x^j in H, as a polynomial in t over the base
    c = [Polynomial(B, (H.coeff(i)[j] for i in range(n + 1))) for j in range(N)]
    a = [fac.h0]
    b = [fac.h1]
    solve = SylvesterSolver(fac.h1, fac.h0)
    for j in range(1, N):
        rhs = c[j]
        for k in range(1, j):
            rhs = rhs - a[k] * b[j - k]
        # a_j*h1 + b_j*h0 = rhs, deg a_j < deg h0, deg b_j < deg h1
        aj, bj = solve(rhs)
        a.append(aj)
        b.append(bj)
        got = Polynomial(B)
        for k in range(j + 1):
            got = got + a[k] * b[j - k]
        if got != c[j]:
            raise VerificationError(f"order {j} coefficient mismatch")

    def assemble(parts, degree):
        return Polynomial(R, (tuple(p.coeff(i) for p in parts) for i in range(degree + 1)))

    H0 = assemble(a, fac.h0.degree)
    H1 = assemble(b, fac.h1.degree)
    return LiftedFactorization(H, H0, H1, fac, N)


def lift_series(A: Matrix, fac: SrFactorization) -> LiftedFactorization:
    """Lift fac (over base) to A's characteristic polynomial over base[[x]]/(x^N)."""
    if not isinstance(A.ring, TruncatedPowerSeries):
        raise SchemaError(f"expected a power-series ring, got {A.ring}")
    return _truncated_lift(A, fac)


def lift_quotient(A: Matrix, fac: SrFactorization) -> LiftedFactorization:
    """Same lifting over base[x]/(x^m)."""
    if not isinstance(A.ring, QuotientXPow):
        raise SchemaError(f"expected a quotient ring base[x]/(x^m), got {A.ring}")
    return _truncated_lift(A, fac)


def tower_levels(R: Ring) -> list[Ring]:
    """Truncated layers from outermost to innermost."""
    levels = []
    while isinstance(R, _Truncated):
        levels.append(R)
        R = R.base
    return levels


def lift_tower(A: Matrix, fac: SrFactorization) -> LiftedFactorization:
    """Lift through up to two nested truncated layers, innermost first."""
    levels = tower_levels(A.ring)
    if not levels:
        raise SchemaError(f"{A.ring} is not a truncated series ring")
    if len(levels) > MAX_TOWER_DEPTH:
        raise GuardError(f"tower depth {len(levels)} exceeds {MAX_TOWER_DEPTH}")
    bases = [R.base for R in levels]
    if fac.ring not in bases:
        raise SchemaError(f"factorization over {fac.ring} is not over a layer of {A.ring}")
    # matrices at each level that still needs lifting, innermost last
    mats = [A]
    for R in levels[: bases.index(fac.ring)]:
        mats.append(mats[-1].map(R.base, R.constant))
    current = fac
    lifted = None
    for M in reversed(mats):
        lifted = _truncated_lift(M, current)
        current = lifted.as_sr_factorization()
    return lifted


def lift_groupring(A: Matrix, fac: SrFactorization) -> LiftedFactorization:
    """Lift fac (a factorization of H at g = 1) to base[C2] in characteristic 2.

    Writing H0 = P0 + g(h0 - P0) and H1 = P1 + g(h1 - P1) with P0, P1 monic
    over the base, H0*H1 = H reduces in characteristic 2 to the single
    equation h0*P1 + h1*P0 = s, where s is the g-part of H.
    """
    R = A.ring
    if not isinstance(R, GroupRingC2):
        raise SchemaError(f"expected a group ring, got {R}")
    B = R.base
    if B.add(B.one, B.one) != B.zero:
        raise UnsupportedRingError(f"group ring lifting needs characteristic 2, got {B}")
    H = _check_base(A, fac)
    h0, h1 = fac.h0, fac.h1
    embed = lambda p: p.map(R, R.embed)  # noqa: E731
    if h0.degree == 0:
        return LiftedFactorization(H, embed(h0), H, fac, GROUP_RING_MARKER)
    if h1.degree == 0:
        return LiftedFactorization(H, H, embed(h1), fac, GROUP_RING_MARKER)
    m, s = h0.degree, h1.degree
    g_part = Polynomial(B, (x[1] for x in H.coeffs))
    t = Polynomial.t(B)
    rhs = g_part - h0 * t**s - h1 * t**m
    if rhs.degree >= m + s:
        raise VerificationError("leading terms did not cancel; base is not characteristic 2")
    y, z = SylvesterSolver(h1, h0)(rhs)
    P0 = t**m + y
    P1 = t**s + z

    def assemble(P, h):
        Q = h - P
        return Polynomial(R, ((P.coeff(i), Q.coeff(i)) for i in range(h.degree + 1)))

    H0 = assemble(P0, h0)
    H1 = assemble(P1, h1)
    return LiftedFactorization(H, H0, H1, fac, GROUP_RING_MARKER)


def lifted_certificate(A: Matrix, lifted: LiftedFactorization) -> CleanCertificate:
    if charpoly(A) != lifted.H:
        raise SchemaError("lifted factorization does not match charpoly(A)")
    return build_witness(A, lifted.as_sr_factorization())
