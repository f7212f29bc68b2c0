"""Strongly clean decisions and certificates.

A square matrix A is strongly clean when A = E + U with E idempotent, U
invertible and EU = UE.  For a monic h the matrices with characteristic
polynomial h are all strongly clean exactly when h splits as h0*h1 with h0,
h1 monic, h0(0) and h1(1) units and (h0, h1) = 1 (an S0/S1 coprime
factorization).  The same criterion decides each cyclic matrix on its own.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Iterator

from .errors import GuardError, NotMonicError, SchemaError, UnsupportedRingError, VerificationError
from .matrices import (
    Matrix,
    charpoly,
    companion,
    determinant,
    is_cyclic,
    try_invert_matrix,
)
from .poly import Polynomial, divide_by_monic, eval_at_matrix
from .resultant import BezoutCertificate, SylvesterSolver, bezout_certificate
from .rings import Integers, IntegersMod, QuotientXPow, Ring, TruncatedPowerSeries, GroupRingC2, DualExtension, GaloisField4

FACTOR_SEARCH_BUDGET = 1 << 16
BRUTE_FORCE_BUDGET = 1 << 20
BRUTE_FORCE_CAP = 1 << 30
HENSEL_MAX_ROUNDS = 64


class Source(Enum):
    TRIVIAL_UNIT = "trivial_unit"
    TRIVIAL_UNIPOTENT = "trivial_unipotent"
    FACTORIZATION = "factorization"
    BRUTE_FORCE = "brute_force"
    SPECIAL_FORM_2X2 = "special_form_2x2"


@dataclass(frozen=True)
class SrFactorization:
    """h = h0*h1 with h0 in S0, h1 in S1 and a Bezout certificate for (h0, h1)."""

    h: Polynomial
    h0: Polynomial
    h1: Polynomial
    bezout: BezoutCertificate

    def __post_init__(self):
        if not (self.h0.is_monic() and self.h1.is_monic()):
            raise VerificationError("factors must be monic")
        if self.h0 * self.h1 != self.h:
            raise VerificationError(f"{self.h0} * {self.h1} != {self.h}")
        R = self.h.ring
        if not sr_member(self.h0, R.zero) or not sr_member(self.h1, R.one):
            raise VerificationError("factor outside S0 / S1")
        if (self.bezout.f, self.bezout.g) != (self.h0, self.h1):
            raise VerificationError("Bezout certificate is for a different pair")

    @property
    def ring(self) -> Ring:
        return self.h.ring


@dataclass(frozen=True)
class CleanCertificate:
    """A = E + U with E^2 = E, EU = UE and U * U_inverse = I."""

    E: Matrix
    U: Matrix
    U_inverse: Matrix
    source: Source
    factorization: SrFactorization | None = None

    def failures(self, A: Matrix) -> list[str]:
        from .verify import certificate_failures

        return certificate_failures(A, self.E, self.U, self.U_inverse)


class VerdictKind(Enum):
    STRONGLY_CLEAN = "strongly_clean"
    NOT_STRONGLY_CLEAN = "not_strongly_clean"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class Verdict:
    kind: VerdictKind
    certificate: CleanCertificate | None = None
    reason: str = ""

    @classmethod
    def clean(cls, cert: CleanCertificate, reason: str = "") -> Verdict:
        return cls(VerdictKind.STRONGLY_CLEAN, cert, reason)

    @classmethod
    def not_clean(cls, reason: str) -> Verdict:
        return cls(VerdictKind.NOT_STRONGLY_CLEAN, None, reason)

    @classmethod
    def unknown(cls, reason: str) -> Verdict:
        return cls(VerdictKind.UNKNOWN, None, reason)

    @property
    def is_clean(self) -> bool:
        return self.kind is VerdictKind.STRONGLY_CLEAN


def sr_member(f: Polynomial, r) -> bool:
    """f is monic and f(r) is a unit."""
    return f.is_monic() and f.ring.is_unit(f(r))


def projective_free_supported(R: Ring) -> bool:
    if isinstance(R, (Integers, GaloisField4)):
        return True
    if isinstance(R, IntegersMod):
        return R.prime_power is not None
    if isinstance(R, GroupRingC2):
        return R.base.characteristic == 2 and projective_free_supported(R.base)
    if isinstance(R, (DualExtension, TruncatedPowerSeries, QuotientXPow)):
        return projective_free_supported(R.base)
    return False


def require_projective_free(R: Ring):
    if not projective_free_supported(R):
        raise UnsupportedRingError(f"{R} is not in the supported projective-free family")


# --- monic factor enumeration -------------------------------------------


def _check_monic(h: Polynomial):
    if not h.is_monic() or h.degree < 1:
        raise NotMonicError(f"{h} must be monic of degree >= 1")


def _exhaustive_cost(R: Ring, n: int) -> int | None:
    card = R.cardinality
    if card is None:
        return None
    return sum(card**d for d in range(1, n))


def _exhaustive_pairs(h: Polynomial) -> Iterator[tuple[Polynomial, Polynomial]]:
    R = h.ring
    n = h.degree
    one = Polynomial.one(R)
    yield one, h
    elems = list(R.elements())
    for d in range(1, n):
        for lower in itertools.product(elems, repeat=d):
            h0 = Polynomial.monic(R, lower)
            q, r = divide_by_monic(h, h0)
            if r.is_zero():
                yield h0, q
    yield h, one


def _signed_divisors(k: int) -> list[int]:
    k = abs(k)
    out = []
    for d in range(1, int(k**0.5) + 1):
        if k % d == 0:
            out.extend({d, k // d})
    out.sort()
    return [s * d for d in out for s in (1, -1)]


def _sample_points():
    yield 0
    k = 1
    while True:
        yield -k
        yield k
        k += 1


def _lagrange_basis(points: list[int]) -> list[list[Fraction]]:
    """Coefficient lists (low first) of the Lagrange basis polynomials."""
    basis = []
    for i, xi in enumerate(points):
        coeffs = [Fraction(1)]
        denom = 1
        for j, xj in enumerate(points):
            if j == i:
                continue
            coeffs = [Fraction(0)] + coeffs
            for k in range(len(coeffs) - 1):
                coeffs[k] -= xj * coeffs[k + 1]
            denom *= xi - xj
        basis.append([c / denom for c in coeffs])
    return basis


def _integer_monic_divisors(h: Polynomial, d: int, budget: int) -> list[Polynomial]:
    """All monic divisors of degree d of a monic integer polynomial (Kronecker)."""
    R = h.ring
    points = []
    for k in _sample_points():
        if h(k) != 0:
            points.append(k)
        if len(points) == d:
            break
    divisors = [_signed_divisors(h(k)) for k in points]
    total = 1
    for ds in divisors:
        total *= len(ds)
    if total > budget:
        raise GuardError(f"Kronecker search needs {total} candidates, budget {budget}")
    basis = _lagrange_basis(points)
    found = []
    for values in itertools.product(*divisors):
        # interpolate the non-leading part q with q(k) = g(k) - k^d
        targets = [v - k**d for v, k in zip(values, points)]
        coeffs = [sum(y * b[c] for y, b in zip(targets, basis)) for c in range(d)]
        if any(c.denominator != 1 for c in coeffs):
            continue
        g = Polynomial.monic(R, [int(c) for c in coeffs])
        if divide_by_monic(h, g)[1].is_zero():
            found.append(g)
    return found


def _kronecker_pairs(h: Polynomial, budget: int) -> Iterator[tuple[Polynomial, Polynomial]]:
    n = h.degree
    one = Polynomial.one(h.ring)
    by_degree: dict[int, list[Polynomial]] = {0: [one], n: [h]}
    for d in range(1, n // 2 + 1):
        by_degree[d] = _integer_monic_divisors(h, d, budget)
    for d in range(n // 2 + 1, n):
        by_degree[d] = [divide_by_monic(h, g)[0] for g in by_degree[n - d]]
    for d in range(n + 1):
        for g in sorted(set(by_degree[d]), key=Polynomial.sort_key):
            yield g, divide_by_monic(h, g)[0]


def _strategy(h: Polynomial, budget: int) -> str:
    R = h.ring
    if isinstance(R, Integers):
        return "kronecker"
    cost = _exhaustive_cost(R, h.degree)
    if cost is not None and cost <= budget:
        return "exhaustive"
    if R.nil_reduction() is not None:
        return "lift"
    if cost is None:
        raise UnsupportedRingError(f"no factor enumeration strategy for {R}")
    raise GuardError(f"exhaustive factor search over {R} needs {cost} candidates, budget {budget}")


def enumerate_monic_factor_pairs(h: Polynomial, budget: int = FACTOR_SEARCH_BUDGET):
    """Every ordered pair of monic (h0, h1) with h0*h1 = h.

    Ordered by degree of h0, then coefficients.  Exhaustive over Z
    (Kronecker) and over finite rings within `budget`.
    """
    _check_monic(h)
    strategy = _strategy(h, budget)
    if strategy == "kronecker":
        return _kronecker_pairs(h, budget)
    if strategy == "exhaustive":
        return _exhaustive_pairs(h)
    raise UnsupportedRingError(
        f"full factor enumeration over {h.ring} exceeds the budget; only coprime pairs can be lifted"
    )


def hensel_lift(h: Polynomial, g0: Polynomial, g1: Polynomial) -> tuple[Polynomial, Polynomial]:
    """Lift a coprime factorization of h modulo a nil ideal to one of h.

    g0, g1 live over the nil-reduction base of h's ring.  Each round solves
    G0*d1 + d0*G1 = h - G0*G1 with the Sylvester matrix of the current pair,
    which squares the ideal containing the error.
    """
    R = h.ring
    nil = R.nil_reduction()
    G0 = g0.map(R, nil.section)
    G1 = g1.map(R, nil.section)
    if G0.degree == 0:
        return G0, h
    if G1.degree == 0:
        return h, G1
    for _ in range(HENSEL_MAX_ROUNDS):
        err = h - G0 * G1
        if err.is_zero():
            return G0, G1
        d1, d0 = SylvesterSolver(G0, G1)(err)
        G0, G1 = G0 + d0, G1 + d1
    raise VerificationError(f"Hensel lifting over {R} did not converge")


def coprime_factor_pairs(h: Polynomial, budget: int = FACTOR_SEARCH_BUDGET):
    """Yield (h0, h1, bezout) for every ordered coprime monic factorization of h."""
    _check_monic(h)
    R = h.ring
    if _strategy(h, budget) != "lift":
        for h0, h1 in enumerate_monic_factor_pairs(h, budget):
            cert = bezout_certificate(h0, h1)
            if cert is not None:
                yield h0, h1, cert
        return
    # coprime factorizations correspond one-to-one with those modulo a nil ideal
    nil = R.nil_reduction()
    hb = h.map(nil.base, nil.reduce)
    for g0, g1, _ in coprime_factor_pairs(hb, budget):
        H0, H1 = hensel_lift(h, g0, g1)
        cert = bezout_certificate(H0, H1)
        if cert is None:
            raise VerificationError(f"lifted pair ({H0}, {H1}) lost coprimality")
        yield H0, H1, cert


def find_sr_factorization(
    h: Polynomial, budget: int = FACTOR_SEARCH_BUDGET, trace: list | None = None
) -> SrFactorization | None:
    """First h = h0*h1 with h0 in S0, h1 in S1 and (h0, h1) = 1.

    When `trace` is a list, every examined pair is appended to it.
    """
    _check_monic(h)
    R = h.ring
    if _strategy(h, budget) == "lift":
        for h0, h1, cert in coprime_factor_pairs(h, budget):
            if trace is not None:
                trace.append((h0, h1))
            if sr_member(h0, R.zero) and sr_member(h1, R.one):
                return SrFactorization(h, h0, h1, cert)
        return None
    for h0, h1 in enumerate_monic_factor_pairs(h, budget):
        if trace is not None:
            trace.append((h0, h1))
        if not (sr_member(h0, R.zero) and sr_member(h1, R.one)):
            continue
        cert = bezout_certificate(h0, h1)
        if cert is not None:
            return SrFactorization(h, h0, h1, cert)
    return None


# --- certificates --------------------------------------------------------


def _certify(A: Matrix, E: Matrix, source: Source, fac: SrFactorization | None = None) -> CleanCertificate:
    U = A - E
    U_inv = try_invert_matrix(U)
    if U_inv is None:
        raise VerificationError(f"A - E is not invertible ({source.value})")
    cert = CleanCertificate(E, U, U_inv, source, fac)
    bad = cert.failures(A)
    if bad:
        raise VerificationError(f"certificate checks failed: {', '.join(bad)}")
    return cert


def build_witness(A: Matrix, fac: SrFactorization) -> CleanCertificate:
    """E = (u*h0)(A) where u*h0 + v*h1 = 1.

    u*h0 is 1 modulo h1 and 0 modulo h0, so by Cayley-Hamilton E is the
    idempotent projecting onto the part of A where h1 vanishes.
    """
    if A.ring != fac.ring:
        raise SchemaError(f"factorization over {fac.ring}, matrix over {A.ring}")
    if charpoly(A) != fac.h:
        raise SchemaError(f"charpoly(A) = {charpoly(A)} but factorization is of {fac.h}")
    E = eval_at_matrix(fac.bezout.u * fac.h0, A)
    return _certify(A, E, Source.FACTORIZATION, fac)


def _trivial(A: Matrix) -> CleanCertificate | None:
    R = A.ring
    n = A.rows
    if R.is_unit(determinant(A)):
        return _certify(A, Matrix.zeros(R, n), Source.TRIVIAL_UNIT)
    eye = Matrix.identity(R, n)
    if R.is_unit(determinant(eye - A)):
        return _certify(A, eye, Source.TRIVIAL_UNIPOTENT)
    return None


# --- brute force ----------------------------------------------------------


@functools.lru_cache(maxsize=32)
def idempotents(R: Ring, n: int, budget: int = BRUTE_FORCE_BUDGET) -> tuple[Matrix, ...]:
    """All n x n idempotent matrices over a finite ring, in enumeration order."""
    card = R.cardinality
    if card is None:
        raise UnsupportedRingError(f"{R} is infinite")
    total = card ** (n * n)
    if total > min(budget, BRUTE_FORCE_CAP):
        raise GuardError(f"brute force needs {total} candidates, budget {budget}")
    out = []
    for flat in itertools.product(list(R.elements()), repeat=n * n):
        E = Matrix(R, (flat[i * n:(i + 1) * n] for i in range(n)))
        if E @ E == E:
            out.append(E)
    return tuple(out)


def brute_force(A: Matrix, budget: int = BRUTE_FORCE_BUDGET) -> Verdict:
    """Search every idempotent E for AE = EA with A - E invertible."""
    if not A.is_square():
        raise SchemaError("matrix must be square")
    R = A.ring
    candidates = idempotents(R, A.rows, budget)
    for E in candidates:
        if A @ E != E @ A:
            continue
        if R.is_unit(determinant(A - E)):
            return Verdict.clean(_certify(A, E, Source.BRUTE_FORCE))
    return Verdict.not_clean(f"exhausted all {len(candidates)} idempotents")


# --- decision pipeline ------------------------------------------------------


def decide(A: Matrix, budget: int | None = None) -> Verdict:
    if not A.is_square():
        raise SchemaError("matrix must be square")
    R = A.ring
    require_projective_free(R)
    cert = _trivial(A)
    if cert is not None:
        return Verdict.clean(cert)
    h = charpoly(A)
    fac = find_sr_factorization(h, budget or FACTOR_SEARCH_BUDGET)
    if fac is not None:
        return Verdict.clean(build_witness(A, fac))
    if is_cyclic(A) is not None:
        kind = "companion" if A == companion(h) else "cyclic"
        return Verdict.not_clean(f"{kind}, no S0/S1 coprime factorization of {h}")
    if R.is_finite:
        return brute_force(A, budget or BRUTE_FORCE_BUDGET)
    if A.rows == 2 and _integer_series_base(R):
        cert = _special_form_certificate(A)
        if cert is not None:
            return Verdict.clean(cert, "special 2x2 form")
    return Verdict.unknown("non-cyclic over infinite ring; the factorization criterion only covers the for-all direction")


# --- 2x2 matrices over Z[[x]] ----------------------------------------------


def _integer_series_base(R: Ring) -> bool:
    return isinstance(R, Integers) or (
        isinstance(R, (TruncatedPowerSeries, QuotientXPow)) and isinstance(R.base, Integers)
    )


def _constant_part(A: Matrix) -> Matrix:
    R = A.ring
    if isinstance(R, Integers):
        return A
    return A.map(R.base, R.constant)


def _is_idempotent(P: Matrix) -> bool:
    return P @ P == P


def special_forms(A0: Matrix) -> list[tuple[str, Matrix]]:
    """Which of the four integer special forms A0 matches, with the idempotent used.

    (i) diag(0,1): A0 nontrivial idempotent; (ii) diag(0,-1): -A0 nontrivial
    idempotent; (iii) diag(2,1): A0 - I nontrivial idempotent; (iv)
    diag(2,-1): (A0 + I)/3 integral and a nontrivial idempotent.
    """
    Z = Integers()
    eye = Matrix.identity(Z, 2)
    zero = Matrix.zeros(Z, 2)
    found = []

    def nontrivial(P):
        return _is_idempotent(P) and P != zero and P != eye

    if nontrivial(A0):
        found.append(("diag(0,1)", eye - A0))
    if nontrivial(-A0):
        found.append(("diag(0,-1)", eye + A0))
    if nontrivial(A0 - eye):
        found.append(("diag(2,1)", A0 - eye))
    shifted = A0 + eye
    if all(x % 3 == 0 for row in shifted.entries for x in row):
        P = Matrix(Z, ((x // 3 for x in row) for row in shifted.entries))
        if nontrivial(P):
            found.append(("diag(2,-1)", P))
    return found


def _solve_rational(rows: list[list[Fraction]], rhs: list[Fraction]) -> list[Fraction] | None | str:
    """Gauss-Jordan over Q.  Returns the unique solution, None if
    inconsistent, or "underdetermined"."""
    m = [r[:] + [b] for r, b in zip(rows, rhs)]
    ncols = len(rows[0])
    pivots = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        piv = m[r][c]
        m[r] = [x / piv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
    if any(all(x == 0 for x in row[:-1]) and row[-1] != 0 for row in m):
        return None
    if len(pivots) < ncols:
        return "underdetermined"
    sol = [Fraction(0)] * ncols
    for i, c in enumerate(pivots):
        sol[c] = m[i][-1]
    return sol


def _mat_q(a, b):
    return [[sum(a[i][k] * b[k][j] for k in range(2)) for j in range(2)] for i in range(2)]


def lift_commuting_idempotent(A: Matrix, E0: Matrix) -> tuple[Matrix | None, str]:
    """Extend an integer idempotent E0 commuting with A(0) to E(x) commuting with A(x).

    Works order by order over Q: at order j the unknown E_j satisfies
    E0 E_j + E_j E0 - E_j = -sum E_k E_{j-k} and [A0, E_j] = -sum [A_k, E_{j-k}].
    Returns (E, "") on success, or (None, reason) when the rational solution
    is not integral, does not exist, or is not unique.
    """
    R = A.ring
    N = R.length
    # A_k as rational 2x2 arrays
    Ak = [[[Fraction(A[i, j][k]) for j in range(2)] for i in range(2)] for k in range(N)]
    Es = [[[Fraction(E0[i, j]) for j in range(2)] for i in range(2)]]
    e0, a0 = Es[0], Ak[0]
    # linear maps X -> E0 X + X E0 - X and X -> A0 X - X A0, as 8x4 rows
    rows = []
    for i in range(2):
        for j in range(2):
            row = []
            for p in range(2):
                for q in range(2):
                    row.append((e0[i][p] if q == j else 0) + (e0[q][j] if p == i else 0) - (1 if (p, q) == (i, j) else 0))
            rows.append(row)
    for i in range(2):
        for j in range(2):
            row = []
            for p in range(2):
                for q in range(2):
                    row.append((a0[i][p] if q == j else 0) - (a0[q][j] if p == i else 0))
            rows.append(row)
    rows = [[Fraction(x) for x in r] for r in rows]
    for order in range(1, N):
        idem = [[Fraction(0)] * 2 for _ in range(2)]
        comm = [[Fraction(0)] * 2 for _ in range(2)]
        for k in range(1, order):
            prod = _mat_q(Es[k], Es[order - k])
            idem = [[idem[i][j] - prod[i][j] for j in range(2)] for i in range(2)]
        for k in range(1, order + 1):
            left = _mat_q(Ak[k], Es[order - k])
            right = _mat_q(Es[order - k], Ak[k])
            comm = [[comm[i][j] - left[i][j] + right[i][j] for j in range(2)] for i in range(2)]
        rhs = [idem[0][0], idem[0][1], idem[1][0], idem[1][1], comm[0][0], comm[0][1], comm[1][0], comm[1][1]]
        sol = _solve_rational(rows, rhs)
        if sol is None:
            return None, f"no commuting idempotent lift exists at order {order}"
        if sol == "underdetermined":
            return None, f"commuting idempotent lift not unique at order {order}"
        if any(x.denominator != 1 for x in sol):
            return None, f"unique commuting idempotent lift is non-integral at order {order}"
        Es.append([[sol[0], sol[1]], [sol[2], sol[3]]])
    E = Matrix(R, ((tuple(int(Es[k][i][j]) for k in range(N)) for j in range(2)) for i in range(2)))
    return E, ""


def _special_form_certificate(A: Matrix) -> CleanCertificate | None:
    """Certificate from the special-form idempotents, or None."""
    R = A.ring
    A0 = _constant_part(A)
    Z = Integers()
    eye = Matrix.identity(Z, 2)
    candidates = []
    for _, E0 in special_forms(A0):
        for cand in (E0, eye - E0):
            if cand not in candidates and A0 @ cand == cand @ A0 and Z.is_unit(determinant(A0 - cand)):
                candidates.append(cand)
    for E0 in candidates:
        if isinstance(R, Integers):
            return _certify(A, E0, Source.SPECIAL_FORM_2X2)
        E, _ = lift_commuting_idempotent(A, E0)
        if E is not None:
            return _certify(A, E, Source.SPECIAL_FORM_2X2)
    return None


def classify_2x2_Z_powerseries(A: Matrix) -> Verdict:
    """Strong cleanness of a 2x2 matrix over Z[[x]] (truncated) from its constant part.

    The rule: A(x) is strongly clean iff A(0) or I - A(0) is in GL2(Z), or
    A(0) is similar to diag(0,1), diag(0,-1), diag(2,1) or diag(2,-1).
    Positive answers come with a certificate for A(x).  For the diag(2,-1)
    form without a coprime factorization the commuting idempotent may fail
    to lift integrally; that case is reported as not strongly clean, since
    the lifting problem has a unique rational solution.
    """
    R = A.ring
    if not (isinstance(R, (TruncatedPowerSeries, QuotientXPow)) and isinstance(R.base, Integers)):
        raise SchemaError(f"expected a matrix over truncated Z[[x]], got {R}")
    if (A.rows, A.cols) != (2, 2):
        raise SchemaError("expected a 2x2 matrix")
    Z = Integers()
    A0 = _constant_part(A)
    if Z.is_unit(determinant(A0)) or Z.is_unit(determinant(Matrix.identity(Z, 2) - A0)):
        return Verdict.clean(_trivial(A), "A(0) or I - A(0) in GL2(Z)")
    forms = special_forms(A0)
    if not forms:
        return Verdict.not_clean(
            "A(0) and I - A(0) are not in GL2(Z) and A(0) is not similar to "
            "diag(0,1), diag(0,-1), diag(2,1) or diag(2,-1)"
        )
    label = ", ".join(name for name, _ in forms)
    fac = find_sr_factorization(charpoly(A))
    if fac is not None:
        return Verdict.clean(build_witness(A, fac), f"A(0) similar to {label}")
    cert = _special_form_certificate(A)
    if cert is not None:
        return Verdict.clean(cert, f"A(0) similar to {label}")
    reasons = []
    A0_eye = Matrix.identity(Z, 2)
    for _, E0 in forms:
        for cand in (E0, A0_eye - E0):
            if A0 @ cand == cand @ A0 and Z.is_unit(determinant(A0 - cand)):
                reasons.append(lift_commuting_idempotent(A, cand)[1])
    if any("not unique" in r for r in reasons):
        return Verdict.unknown(f"A(0) similar to {label}; " + "; ".join(reasons))
    return Verdict.not_clean(
        f"A(0) similar to {label}, but no idempotent commuting with A(x) reduces to one "
        f"valid for A(0): " + "; ".join(reasons)
    )
