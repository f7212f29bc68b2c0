"""Exact strongly clean decisions for matrices over commutative rings."""

from __future__ import annotations

from .clean import (
    CleanCertificate,
    SrFactorization,
    Verdict,
    VerdictKind,
    brute_force,
    build_witness,
    classify_2x2_Z_powerseries,
    decide,
    enumerate_monic_factor_pairs,
    find_sr_factorization,
    sr_member,
)
from .lift import LiftedFactorization, lift_groupring, lift_quotient, lift_series, lift_tower, lifted_certificate
from .matrices import Matrix, charpoly, companion, determinant, is_cyclic
from .poly import Polynomial
from .resultant import bezout_certificate, coprime, coprime_all_residues, resultant, sylvester_matrix
from .rings import (
    DualExtension,
    GaloisField4,
    GroupRingC2,
    Integers,
    IntegersMod,
    QuotientXPow,
    TruncatedPowerSeries,
)

__all__ = [
    "CleanCertificate", "SrFactorization", "Verdict", "VerdictKind", "brute_force", "build_witness",
    "classify_2x2_Z_powerseries", "decide", "enumerate_monic_factor_pairs", "find_sr_factorization",
    "sr_member", "LiftedFactorization", "lift_groupring", "lift_quotient", "lift_series", "lift_tower",
    "lifted_certificate", "Matrix", "charpoly", "companion", "determinant", "is_cyclic", "Polynomial",
    "bezout_certificate", "coprime", "coprime_all_residues", "resultant", "sylvester_matrix",
    "DualExtension", "GaloisField4", "GroupRingC2", "Integers", "IntegersMod", "QuotientXPow",
    "TruncatedPowerSeries",
]
