"""Independent re-verification of certificates.

Only ring, polynomial and matrix arithmetic is used here, so a certificate
accepted by these checks does not depend on the search or lifting code that
produced it.
"""

from __future__ import annotations

from .matrices import Matrix
from .poly import Polynomial


def certificate_failures(A: Matrix, E: Matrix, U: Matrix, U_inverse: Matrix) -> list[str]:
    """Names of the failed checks among A = E + U, E^2 = E, EU = UE, U U^-1 = U^-1 U = I."""
    mats = (A, E, U, U_inverse)
    if any(M.ring != A.ring for M in mats):
        return ["ring mismatch"]
    if any((M.rows, M.cols) != (A.rows, A.rows) for M in mats):
        return ["shape mismatch"]
    eye = Matrix.identity(A.ring, A.rows)
    failed = []
    if E + U != A:
        failed.append("A = E + U")
    if E @ E != E:
        failed.append("E^2 = E")
    if E @ U != U @ E:
        failed.append("EU = UE")
    if U @ U_inverse != eye or U_inverse @ U != eye:
        failed.append("U U^-1 = I")
    return failed


def factorization_failures(h: Polynomial, h0: Polynomial, h1: Polynomial, u: Polynomial, v: Polynomial) -> list[str]:
    """Checks h = h0 h1 with monic factors, h0(0) and h1(1) units, and u h0 + v h1 = 1."""
    R = h.ring
    failed = []
    if not (h0.is_monic() and h1.is_monic()):
        failed.append("monic factors")
    if h0 * h1 != h:
        failed.append("h = h0 h1")
    if not R.is_unit(h0(R.zero)):
        failed.append("h0(0) unit")
    if not R.is_unit(h1(R.one)):
        failed.append("h1(1) unit")
    if u * h0 + v * h1 != Polynomial.one(R):
        failed.append("u h0 + v h1 = 1")
    return failed
