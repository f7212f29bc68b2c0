"""JSON encoding of rings, elements, polynomials, matrices and certificates.

Ring descriptors are objects with a "type" key:

    {"type": "Z"}
    {"type": "Zmod", "n": 4}
    {"type": "GF4"}
    {"type": "dual", "base": {...}}
    {"type": "powerseries", "base": {...}, "order": 8}
    {"type": "quotient_x_pow", "base": {...}, "m": 2}
    {"type": "groupring_c2", "base": {...}}

Integers are JSON numbers (decimal strings beyond 64 bits), GF4 elements are
"0", "1", "a", "b", and elements of extensions are lists of base elements
(series coefficients lowest first; short lists are zero padded).
A bare integer is accepted for any ring and mapped through from_int.
Polynomials are coefficient lists, lowest degree first.
"""

from __future__ import annotations

from typing import Any

from .errors import SchemaError
from .matrices import Matrix
from .poly import Polynomial
from .rings import (
    GF4_NAMES,
    DualExtension,
    GaloisField4,
    GroupRingC2,
    Integers,
    IntegersMod,
    QuotientXPow,
    Ring,
    TruncatedPowerSeries,
)

INT_LIMIT = 1 << 63

_ALIASES = {
    "z": "Z",
    "integers": "Z",
    "zmod": "Zmod",
    "integersmod": "Zmod",
    "gf4": "GF4",
    "galoisfield4": "GF4",
    "dual": "dual",
    "dualextension": "dual",
    "powerseries": "powerseries",
    "truncatedpowerseries": "powerseries",
    "quotient_x_pow": "quotient_x_pow",
    "quotientxpow": "quotient_x_pow",
    "groupring_c2": "groupring_c2",
    "groupringc2": "groupring_c2",
}


def _int_field(obj: dict, key: str, default: int | None = None) -> int:
    value = obj.get(key, default)
    if isinstance(value, bool) or not isinstance(value, int):
        raise SchemaError(f"ring field {key!r} must be an integer, got {value!r}")
    return value


def parse_ring(obj: Any) -> Ring:
    if not isinstance(obj, dict) or "type" not in obj:
        raise SchemaError(f"ring descriptor must be an object with a 'type', got {obj!r}")
    kind = _ALIASES.get(str(obj["type"]).lower())
    if kind == "Z":
        return Integers()
    if kind == "Zmod":
        return IntegersMod(_int_field(obj, "n"))
    if kind == "GF4":
        return GaloisField4()
    if "base" not in obj:
        raise SchemaError(f"ring type {obj['type']!r} needs a 'base'")
    base = parse_ring(obj["base"])
    if kind == "dual":
        return DualExtension(base)
    if kind == "powerseries":
        return TruncatedPowerSeries(base, _int_field(obj, "order", 8))
    if kind == "quotient_x_pow":
        return QuotientXPow(base, _int_field(obj, "m"))
    if kind == "groupring_c2":
        return GroupRingC2(base)
    raise SchemaError(f"unknown ring type {obj['type']!r}")


def ring_to_json(R: Ring) -> dict:
    if isinstance(R, Integers):
        return {"type": "Z"}
    if isinstance(R, IntegersMod):
        return {"type": "Zmod", "n": R.n}
    if isinstance(R, GaloisField4):
        return {"type": "GF4"}
    if isinstance(R, DualExtension):
        return {"type": "dual", "base": ring_to_json(R.base)}
    if isinstance(R, TruncatedPowerSeries):
        return {"type": "powerseries", "base": ring_to_json(R.base), "order": R.order}
    if isinstance(R, QuotientXPow):
        return {"type": "quotient_x_pow", "base": ring_to_json(R.base), "m": R.m}
    if isinstance(R, GroupRingC2):
        return {"type": "groupring_c2", "base": ring_to_json(R.base)}
    raise SchemaError(f"no JSON form for {R}")


def _parse_int(x: Any) -> int:
    if isinstance(x, bool):
        raise SchemaError(f"expected an integer, got {x!r}")
    if isinstance(x, int):
        return x
    if isinstance(x, str):
        try:
            return int(x)
        except ValueError:
            pass
    raise SchemaError(f"expected an integer, got {x!r}")


def decode_elem(R: Ring, x: Any):
    if isinstance(x, int) and not isinstance(x, bool):
        return R.from_int(x)
    if isinstance(R, (Integers, IntegersMod)):
        return R.from_int(_parse_int(x))
    if isinstance(R, GaloisField4):
        if isinstance(x, str) and x in GF4_NAMES:
            return GF4_NAMES.index(x)
        raise SchemaError(f"GF4 elements are '0', '1', 'a', 'b'; got {x!r}")
    base = R.base
    if isinstance(R, (DualExtension, GroupRingC2)):
        if not isinstance(x, list) or len(x) != 2:
            raise SchemaError(f"element of {R} must be a list of 2 base elements, got {x!r}")
        return tuple(decode_elem(base, c) for c in x)
    if not isinstance(x, list) or not 1 <= len(x) <= R.length:
        raise SchemaError(f"element of {R} must be a list of at most {R.length} coefficients, got {x!r}")
    coeffs = [decode_elem(base, c) for c in x]
    return tuple(coeffs) + (base.zero,) * (R.length - len(coeffs))


def encode_elem(R: Ring, x) -> Any:
    if isinstance(R, Integers):
        return x if abs(x) < INT_LIMIT else str(x)
    if isinstance(R, IntegersMod):
        return x
    if isinstance(R, GaloisField4):
        return GF4_NAMES[x]
    return [encode_elem(R.base, c) for c in x]


def decode_poly(R: Ring, obj: Any) -> Polynomial:
    if not isinstance(obj, list):
        raise SchemaError(f"polynomial must be a coefficient list, got {obj!r}")
    return Polynomial(R, (decode_elem(R, c) for c in obj))


def encode_poly(p: Polynomial) -> list:
    return [encode_elem(p.ring, c) for c in p.coeffs]


def decode_matrix(R: Ring, obj: Any) -> Matrix:
    if not isinstance(obj, list) or not all(isinstance(r, list) for r in obj):
        raise SchemaError(f"matrix must be a list of rows, got {obj!r}")
    return Matrix(R, ((decode_elem(R, x) for x in r) for r in obj))


def encode_matrix(M: Matrix) -> list:
    return [[encode_elem(M.ring, x) for x in r] for r in M.entries]


def certificate_to_json(cert) -> dict:
    out = {
        "verdict": "strongly_clean",
        "E": encode_matrix(cert.E),
        "U": encode_matrix(cert.U),
        "U_inv": encode_matrix(cert.U_inverse),
        "source": cert.source.value,
    }
    fac = cert.factorization
    if fac is not None:
        out.update(
            h0=encode_poly(fac.h0),
            h1=encode_poly(fac.h1),
            u=encode_poly(fac.bezout.u),
            v=encode_poly(fac.bezout.v),
        )
    return out


def verdict_to_json(verdict) -> dict:
    if verdict.certificate is not None:
        out = certificate_to_json(verdict.certificate)
        if verdict.reason:
            out["reason"] = verdict.reason
        return out
    return {"verdict": verdict.kind.value, "reason": verdict.reason}
