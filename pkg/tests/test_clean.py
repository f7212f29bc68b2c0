from __future__ import annotations

import itertools
import random
from collections import Counter

import pytest
import sympy

from conftest import random_matrix, random_poly
from strongclean.clean import (
    Source,
    VerdictKind,
    brute_force,
    build_witness,
    classify_2x2_Z_powerseries,
    coprime_factor_pairs,
    decide,
    enumerate_monic_factor_pairs,
    find_sr_factorization,
    idempotents,
    lift_commuting_idempotent,
    special_forms,
    sr_member,
)
from strongclean.errors import GuardError, SchemaError, UnsupportedRingError
from strongclean.matrices import Matrix, charpoly, companion, determinant, try_invert_matrix
from strongclean.poly import Polynomial
from strongclean.rings import (
    DualExtension,
    GaloisField4,
    GroupRingC2,
    Integers,
    IntegersMod,
    TruncatedPowerSeries,
)
from strongclean.verify import certificate_failures

Z = Integers()
GF4 = GaloisField4()
T = sympy.Symbol("t")


def P(R, *coeffs):
    return Polynomial.from_ints(R, coeffs)


def assert_certified(A, verdict):
    assert verdict.kind is VerdictKind.STRONGLY_CLEAN
    c = verdict.certificate
    assert certificate_failures(A, c.E, c.U, c.U_inverse) == []


# --- S_r membership and factor enumeration


def test_sr_member():
    assert sr_member(P(Z, -1, 1), 0)
    assert not sr_member(P(Z, 0, 1), 0)
    assert sr_member(Polynomial.one(Z), 5)
    assert not sr_member(P(Z, 1, 2), 0)  # not monic


def pairs_as_str(h, **kw):
    return [(str(a), str(b)) for a, b in enumerate_monic_factor_pairs(h, **kw)]


def test_enumeration_examples():
    assert pairs_as_str(P(Z, -3, -2, 1)) == [
        ("1", "t^2-2t-3"),
        ("t+1", "t-3"),
        ("t-3", "t+1"),
        ("t^2-2t-3", "1"),
    ]
    assert pairs_as_str(P(IntegersMod(2), 0, 0, 1)) == [("1", "t^2"), ("t", "t"), ("t^2", "1")]
    assert pairs_as_str(P(Z, -7, 1)) == [("1", "t-7"), ("t-7", "1")]


def _sympy_monic_divisors(h):
    """Every monic integer divisor of h, from sympy's irreducible factorization."""
    expr = sum(int(c) * T**i for i, c in enumerate(h.coeffs))
    _, factors = sympy.factor_list(expr)
    choices = [range(m + 1) for _, m in factors]
    out = set()
    for exps in itertools.product(*choices):
        d = sympy.Integer(1)
        for (f, _), e in zip(factors, exps):
            d *= f**e
        poly = sympy.Poly(d, T)
        coeffs = [int(c) for c in reversed(poly.all_coeffs())]
        if coeffs[-1] < 0:
            coeffs = [-c for c in coeffs]
        out.add(tuple(coeffs))
    return out


def test_kronecker_matches_sympy_factorization():
    rng = random.Random(8)
    for _ in range(120):
        # products of small monic pieces, often with integer roots at the sample points
        h = Polynomial.one(Z)
        for _ in range(rng.randint(1, 3)):
            h = h * random_poly(Z, rng, rng.randint(1, 2), bound=3)
        if h.degree > 5:
            continue
        pairs = list(enumerate_monic_factor_pairs(h))
        assert all(a * b == h for a, b in pairs)
        assert len(set(pairs)) == len(pairs)
        assert {a.coeffs for a, _ in pairs} == _sympy_monic_divisors(h)
        degrees = [a.degree for a, _ in pairs]
        assert degrees == sorted(degrees)


@pytest.mark.parametrize("R", [IntegersMod(4), IntegersMod(9), DualExtension(IntegersMod(2)), GF4], ids=str)
def test_exhaustive_enumeration_is_complete(R):
    rng = random.Random(9)
    elems = list(R.elements())
    for _ in range(20):
        h = random_poly(R, rng, 3)
        pairs = list(enumerate_monic_factor_pairs(h))
        assert len(set(pairs)) == len(pairs)
        assert all(a * b == h for a, b in pairs)
        expected = 2  # trivial pairs
        for d in (1, 2):
            for lower in itertools.product(elems, repeat=d):
                g = Polynomial.monic(R, lower)
                q = next((Polynomial.monic(R, c) for c in itertools.product(elems, repeat=3 - d)
                          if g * Polynomial.monic(R, c) == h), None)
                expected += q is not None
        assert len(pairs) == expected


def test_enumeration_guards():
    with pytest.raises(UnsupportedRingError):
        list(enumerate_monic_factor_pairs(P(TruncatedPowerSeries(Z, 3), 0, -1, 1)))
    with pytest.raises(GuardError):
        list(enumerate_monic_factor_pairs(P(IntegersMod(101), 1, 0, 0, 1), budget=100))
    with pytest.raises(SchemaError):
        list(enumerate_monic_factor_pairs(P(Z, 1, 2)))


def test_hensel_coprime_pairs_match_exhaustive():
    R = TruncatedPowerSeries(IntegersMod(2), 3)  # budget 2 forces lifting over R but not over Z/2
    rng = random.Random(10)
    for _ in range(30):
        h = random_poly(R, rng, 2)
        lifted = {(a, b) for a, b, _ in coprime_factor_pairs(h, budget=2)}
        exhaustive = {(a, b) for a, b, _ in coprime_factor_pairs(h)}
        assert lifted == exhaustive


# --- S0/S1 factorizations and witnesses


def test_find_sr_factorization_examples():
    trace = []
    assert find_sr_factorization(P(Z, -3, -2, 1), trace=trace) is None
    assert len(trace) == 4
    fac = find_sr_factorization(P(Z, 0, -1, 1))
    assert (fac.h0, fac.h1) == (P(Z, -1, 1), P(Z, 0, 1))
    D = DualExtension(GF4)
    h = Polynomial(D, [(0, 2), D.one]) * Polynomial(D, [(1, 3), D.one])
    fac = find_sr_factorization(h)
    assert fac.h0 == Polynomial(D, [(1, 3), D.one])  # t - (1 + bz)
    assert fac.h1 == Polynomial(D, [(0, 2), D.one])  # t - az


def test_build_witness_examples():
    fac = find_sr_factorization(P(Z, 0, -1, 1))
    for A in (Matrix.diag(Z, [0, 1]), companion(P(Z, 0, -1, 1))):
        cert = build_witness(A, fac)
        assert cert.source is Source.FACTORIZATION
        assert determinant(A - cert.E) in (1, -1)
        assert certificate_failures(A, cert.E, cert.U, cert.U_inverse) == []
    with pytest.raises(SchemaError):
        build_witness(Matrix.diag(Z, [2, 1]), fac)


def _random_invertible(R, rng, n):
    while True:
        g = random_matrix(R, rng, n, bound=2)
        if try_invert_matrix(g) is not None:
            return g


def test_build_witness_totality():
    rings = [Z, IntegersMod(4), IntegersMod(8), IntegersMod(9), GF4, DualExtension(GF4), IntegersMod(2)]
    rng = random.Random(12)
    done = 0
    while done < 500:
        R = rng.choice(rings)
        h0 = random_poly(R, rng, rng.randint(0, 2), bound=3)
        h1 = random_poly(R, rng, rng.randint(0, 2), bound=3)
        h = h0 * h1
        if h.degree < 1:
            continue
        fac = find_sr_factorization(h)
        if fac is None:
            continue
        g = _random_invertible(R, rng, h.degree)
        A = try_invert_matrix(g) @ companion(h) @ g
        cert = build_witness(A, fac)
        assert certificate_failures(A, cert.E, cert.U, cert.U_inverse) == []
        done += 1


# --- decide and the brute-force oracle


def test_decide_examples():
    v = decide(Matrix.from_ints(Z, [[0, 3], [1, 2]]))
    assert v.kind is VerdictKind.NOT_STRONGLY_CLEAN
    assert v.reason == "companion, no S0/S1 coprime factorization of t^2-2t-3"
    A = Matrix.diag(Z, [2, -1])
    v = decide(A)
    assert_certified(A, v)
    assert v.certificate.E == Matrix.diag(Z, [1, 0])
    assert v.certificate.U == Matrix.diag(Z, [1, -1])
    v = decide(Matrix.identity(Z, 3))
    assert v.certificate.source is Source.TRIVIAL_UNIT and v.certificate.E == Matrix.zeros(Z, 3)


def test_decide_cyclic_non_companion():
    C = companion(P(Z, -3, -2, 1))
    g = Matrix.from_ints(Z, [[1, 1], [0, 1]])
    A = try_invert_matrix(g) @ C @ g
    assert A != C
    v = decide(A)
    assert v.kind is VerdictKind.NOT_STRONGLY_CLEAN and v.reason.startswith("cyclic")


def test_decide_unknown_over_infinite_ring():
    # non-cyclic, no factorization, not a special form: the criterion cannot decide
    A = Matrix.diag(Z, [3, 3])
    v = decide(A)
    assert v.kind is VerdictKind.UNKNOWN


def test_decide_rejects_non_projective_free():
    with pytest.raises(UnsupportedRingError):
        decide(Matrix.diag(IntegersMod(6), [2, 5]))
    with pytest.raises(UnsupportedRingError):
        decide(Matrix.identity(GroupRingC2(IntegersMod(3)), 2))


def test_brute_force_examples():
    R = IntegersMod(2)
    for e in itertools.product(range(2), repeat=4):
        A = Matrix(R, [e[:2], e[2:]])
        assert_certified(A, brute_force(A))
    v = brute_force(Matrix.zeros(R, 2))
    assert v.certificate.E == Matrix.identity(R, 2)
    assert v.certificate.U == Matrix.identity(R, 2)  # -I = I over Z/2
    with pytest.raises(GuardError):
        brute_force(Matrix.zeros(IntegersMod(64), 3))


def test_idempotent_counts():
    # idempotents in M2(F_q): 0, I and the q^2 + q rank-one projections
    assert len(idempotents(IntegersMod(2), 2)) == 2 + 6
    assert len(idempotents(IntegersMod(3), 2)) == 2 + 12
    assert len(idempotents(GF4, 2)) == 2 + 20


@pytest.mark.parametrize(
    "R, n",
    [
        (IntegersMod(4), 2),
        (IntegersMod(2), 3),
        (IntegersMod(3), 2),
        (GF4, 2),
        (DualExtension(IntegersMod(2)), 2),
        (GroupRingC2(IntegersMod(2)), 2),
    ],
    ids=str,
)
def test_decide_agrees_with_brute_force_exhaustive(R, n):
    elems = list(R.elements())
    kinds = Counter()
    for flat in itertools.product(elems, repeat=n * n):
        A = Matrix(R, (flat[i * n:(i + 1) * n] for i in range(n)))
        d, b = decide(A), brute_force(A)
        assert d.kind is b.kind is not VerdictKind.UNKNOWN
        if d.certificate is not None:
            assert_certified(A, d)
        kinds[d.kind] += 1
    if R.characteristic in (2, 3) and R.cardinality in (2, 3, 4) and not isinstance(R, (DualExtension, GroupRingC2)):
        assert kinds[VerdictKind.NOT_STRONGLY_CLEAN] == 0  # fields


def test_decide_agrees_with_brute_force_sampled():
    rng = random.Random(13)
    for R in (IntegersMod(9), IntegersMod(8), DualExtension(GF4)):
        for _ in range(150):
            A = random_matrix(R, rng, 2)
            assert decide(A).kind is brute_force(A).kind


def test_companion_equivalence_mod4():
    R = IntegersMod(4)
    for lower in itertools.product(range(4), repeat=2):
        h = Polynomial.monic(R, lower)
        C = companion(h)
        has_fac = find_sr_factorization(h) is not None
        assert decide(C).is_clean == brute_force(C).is_clean == has_fac


# --- 2x2 matrices over Z[[x]]


def series_matrix(order, rows):
    R = TruncatedPowerSeries(Z, order)
    pad = lambda c: tuple(c) + (0,) * (order - len(c))  # noqa: E731
    return Matrix(R, ((pad(x if isinstance(x, tuple) else (x,)) for x in r) for r in rows))


@pytest.mark.parametrize(
    "A0, form",
    [
        ([[0, 0], [0, 1]], "diag(0,1)"),
        ([[0, 0], [0, -1]], "diag(0,-1)"),
        ([[2, 0], [0, 1]], "diag(2,1)"),
        ([[2, 0], [0, -1]], "diag(2,-1)"),
        ([[1, 1], [0, 0]], "diag(0,1)"),
        ([[1, 3], [0, 2]], "diag(2,1)"),
    ],
)
def test_special_forms_detected(A0, form):
    forms = [name for name, _ in special_forms(Matrix.from_ints(Z, A0))]
    assert form in forms
    A = series_matrix(4, A0)
    v = classify_2x2_Z_powerseries(A)
    assert_certified(A, v)


def test_classifier_negative_and_trivial():
    A = series_matrix(4, [[0, 3], [1, 2]])
    v = classify_2x2_Z_powerseries(A)
    assert v.kind is VerdictKind.NOT_STRONGLY_CLEAN
    A = series_matrix(4, [[(1, 1), 5], [0, (1, 0, 2)]])  # A(0) unipotent-free unit: det A(0) = 1
    assert_certified(A, classify_2x2_Z_powerseries(A))
    with pytest.raises(SchemaError):
        classify_2x2_Z_powerseries(Matrix.diag(Z, [1, 2]))


def test_classifier_perturbed_diag_0_1():
    A = series_matrix(4, [[(0, 1), 0], [0, (1, 1)]])
    assert_certified(A, classify_2x2_Z_powerseries(A))


def test_special_form_lift_without_factorization():
    # diag(2+x, -1): no coprime factorization, but E = diag(1,0) commutes and works
    A = series_matrix(4, [[(2, 1), 0], [0, -1]])
    assert find_sr_factorization(charpoly(A)) is None
    v = decide(A)
    assert_certified(A, v)
    assert v.certificate.source is Source.SPECIAL_FORM_2X2


def test_diag_2_minus1_perturbation_is_not_strongly_clean():
    A = series_matrix(2, [[2, (0, 1)], [0, -1]])
    v = classify_2x2_Z_powerseries(A)
    assert v.kind is VerdictKind.NOT_STRONGLY_CLEAN
    assert "non-integral" in v.reason
    # independent check: the only idempotents E0 with A0 - E0 invertible and commuting
    # with A0 = diag(2,-1) are diag(1,0); its lift E0 + x E1 must satisfy two linear
    # conditions whose unique rational solution has e12 = 1/3
    A0 = sympy.diag(2, -1)
    A1 = sympy.Matrix([[0, 1], [0, 0]])
    good = []
    for e in itertools.product((0, 1), repeat=4):
        E0 = sympy.Matrix(2, 2, e)
        if E0 * E0 == E0 and E0 * A0 == A0 * E0 and abs((A0 - E0).det()) == 1:
            good.append(E0)
    assert good == [sympy.diag(1, 0)]
    E0 = good[0]
    syms = sympy.symbols("e11 e12 e21 e22")
    E1 = sympy.Matrix(2, 2, syms)
    eqs = list(E0 * E1 + E1 * E0 - E1) + list(A0 * E1 + A1 * E0 - E1 * A0 - E0 * A1)
    sol = sympy.solve(eqs, syms, dict=True)
    assert sol == [{syms[0]: 0, syms[1]: sympy.Rational(1, 3), syms[2]: 0, syms[3]: 0}]
    E, reason = lift_commuting_idempotent(A, Matrix.diag(Z, [1, 0]))
    assert E is None and "non-integral" in reason


def test_classifier_consistent_with_decide_on_constant_matrices():
    rng = random.Random(14)
    for _ in range(100):
        rows = [[rng.randint(-5, 5) for _ in range(2)] for _ in range(2)]
        A = series_matrix(3, rows)
        c = classify_2x2_Z_powerseries(A)
        d = decide(Matrix.from_ints(Z, rows))
        if d.kind is not VerdictKind.UNKNOWN:
            assert c.kind is d.kind
        if c.certificate is not None:
            assert_certified(A, c)
