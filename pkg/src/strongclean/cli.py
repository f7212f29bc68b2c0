"""Command-line front end: JSON request in, JSON report out.

A request looks like

    {"command": "decide", "ring": {"type": "Z"}, "payload": {"matrix": [[0, 3], [1, 2]]}}

and is read from stdin or --file.  The command may also be given as the first
positional argument.  Exit codes: 0 success (negative verdicts included),
2 malformed input, 3 guard or budget rejection, 4 failed self-verification.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Any, Callable

from . import clean, lift
from .errors import GuardError, SchemaError, StrongCleanError, VerificationError
from .jsonio import (
    certificate_to_json,
    decode_matrix,
    decode_poly,
    encode_elem,
    encode_poly,
    parse_ring,
    verdict_to_json,
)
from .matrices import Matrix, charpoly
from .resultant import bezout_certificate, coprime_all_residues, resultant, _orient
from .rings import Ring, TruncatedPowerSeries, _Truncated
from .verify import certificate_failures, factorization_failures

EXIT_OK, EXIT_SCHEMA, EXIT_GUARD, EXIT_VERIFY = 0, 2, 3, 4


class Context:
    def __init__(self, ring: Ring, payload: dict, budget: int | None):
        self.ring = ring
        self.payload = payload
        self.budget = budget

    def get(self, key: str):
        if key not in self.payload:
            raise SchemaError(f"payload is missing {key!r}")
        return self.payload[key]

    def matrix(self) -> Matrix:
        A = decode_matrix(self.ring, self.get("matrix"))
        if not A.is_square():
            raise SchemaError("matrix must be square")
        return A

    def poly(self, key: str, ring: Ring | None = None):
        return decode_poly(ring or self.ring, self.get(key))


def _checked(A: Matrix, cert: clean.CleanCertificate) -> dict:
    failed = certificate_failures(A, cert.E, cert.U, cert.U_inverse)
    if failed:
        raise VerificationError(f"certificate failed: {', '.join(failed)}")
    return certificate_to_json(cert)


def _verdict(A: Matrix, verdict: clean.Verdict) -> dict:
    if verdict.certificate is not None:
        _checked(A, verdict.certificate)
    return verdict_to_json(verdict)


def cmd_charpoly(ctx: Context) -> dict:
    return {"coeffs": encode_poly(charpoly(ctx.matrix()))}


def cmd_resultant(ctx: Context) -> dict:
    f, g = _orient(ctx.poly("f"), ctx.poly("g"))
    r = resultant(f, g)
    return {"resultant": encode_elem(ctx.ring, r), "unit": ctx.ring.is_unit(r)}


def cmd_coprime(ctx: Context) -> dict:
    f, g = _orient(ctx.poly("f"), ctx.poly("g"))
    R = ctx.ring
    r = resultant(f, g)
    out: dict[str, Any] = {"coprime": R.is_unit(r), "resultant": encode_elem(R, r)}
    cert = bezout_certificate(f, g)
    if cert is not None:
        out["u"] = encode_poly(cert.u)
        out["v"] = encode_poly(cert.v)
    try:
        check = coprime_all_residues(f, g)
    except GuardError:
        return out
    out["coprime_all_residues"] = check.coprime
    if not check.coprime:
        w = check.witness
        out["witness"] = w if isinstance(w, int) else str(w)
        out["common_factor"] = str(check.common_factor)
    return out


def cmd_decide(ctx: Context) -> dict:
    A = ctx.matrix()
    return _verdict(A, clean.decide(A, ctx.budget))


def cmd_oracle(ctx: Context) -> dict:
    A = ctx.matrix()
    return _verdict(A, clean.brute_force(A, ctx.budget or clean.BRUTE_FORCE_BUDGET))


def cmd_classify(ctx: Context) -> dict:
    A = ctx.matrix()
    return _verdict(A, clean.classify_2x2_Z_powerseries(A))


def _base_factorization(ctx: Context, A: Matrix, base: Ring, reduce: Callable) -> clean.SrFactorization:
    h = charpoly(A.map(base, reduce))
    if "h0" in ctx.payload or "h1" in ctx.payload:
        h0, h1 = ctx.poly("h0", base), ctx.poly("h1", base)
        cert = bezout_certificate(h0, h1)
        if cert is None:
            raise SchemaError("given h0, h1 are not coprime")
        try:
            return clean.SrFactorization(h, h0, h1, cert)
        except VerificationError as exc:
            raise SchemaError(f"given factorization is invalid: {exc}") from exc
    fac = clean.find_sr_factorization(h, ctx.budget or clean.FACTOR_SEARCH_BUDGET)
    if fac is None:
        raise SchemaError(f"the reduced characteristic polynomial {h} has no S0/S1 coprime factorization")
    return fac


def _lifted_report(A: Matrix, lifted: lift.LiftedFactorization) -> dict:
    cert = lift.lifted_certificate(A, lifted)
    out = _checked(A, cert)
    out.update(
        H0=encode_poly(lifted.H0),
        H1=encode_poly(lifted.H1),
        order=lifted.order,
        base={"h0": encode_poly(lifted.base.h0), "h1": encode_poly(lifted.base.h1)},
    )
    return out


def _cmd_truncated(ctx: Context) -> dict:
    A = ctx.matrix()
    R = A.ring
    if not isinstance(R, _Truncated):
        raise SchemaError(f"lifting needs a truncated series ring, got {R}")
    levels = lift.tower_levels(R)
    innermost = levels[-1]
    # reduce all layers at once to the innermost base
    def reduce_all(x):
        for level in levels:
            x = level.constant(x)
        return x

    fac = _base_factorization(ctx, A, innermost.base, reduce_all)
    return _lifted_report(A, lift.lift_tower(A, fac))


def cmd_lift_series(ctx: Context) -> dict:
    if not isinstance(ctx.ring, TruncatedPowerSeries):
        raise SchemaError(f"lift_series needs a powerseries ring, got {ctx.ring}")
    return _cmd_truncated(ctx)


def cmd_lift_quotient(ctx: Context) -> dict:
    if isinstance(ctx.ring, TruncatedPowerSeries) or not isinstance(ctx.ring, _Truncated):
        raise SchemaError(f"lift_quotient needs a quotient_x_pow ring, got {ctx.ring}")
    return _cmd_truncated(ctx)


def cmd_lift_groupring(ctx: Context) -> dict:
    A = ctx.matrix()
    R = A.ring
    if not hasattr(R, "augment"):
        raise SchemaError(f"lift_groupring needs a groupring_c2 ring, got {R}")
    fac = _base_factorization(ctx, A, R.base, R.augment)
    return _lifted_report(A, lift.lift_groupring(A, fac))


def cmd_verify(ctx: Context) -> dict:
    """Re-check a certificate with arithmetic only."""
    R = ctx.ring
    A = ctx.matrix()
    cert = ctx.get("certificate")
    if not isinstance(cert, dict):
        raise SchemaError("certificate must be an object")
    try:
        E, U, U_inv = (decode_matrix(R, cert[k]) for k in ("E", "U", "U_inv"))
    except KeyError as exc:
        raise SchemaError(f"certificate is missing {exc}") from exc
    failed = certificate_failures(A, E, U, U_inv)
    if all(k in cert for k in ("h0", "h1", "u", "v")):
        h0, h1, u, v = (decode_poly(R, cert[k]) for k in ("h0", "h1", "u", "v"))
        failed += factorization_failures(charpoly(A), h0, h1, u, v)
    return {"valid": not failed, "failures": failed}


COMMANDS: dict[str, Callable[[Context], dict]] = {
    "charpoly": cmd_charpoly,
    "resultant": cmd_resultant,
    "coprime": cmd_coprime,
    "decide": cmd_decide,
    "oracle": cmd_oracle,
    "lift_series": cmd_lift_series,
    "lift_quotient": cmd_lift_quotient,
    "lift_groupring": cmd_lift_groupring,
    "classify_z_series_2x2": cmd_classify,
    "verify": cmd_verify,
}


def _apply_order(ring_obj: Any, order: int):
    """--order overrides the truncation order of the outermost series layer."""
    if isinstance(ring_obj, dict) and str(ring_obj.get("type", "")).lower() in ("powerseries", "truncatedpowerseries"):
        return {**ring_obj, "order": order}
    return ring_obj


def run(request: Any, command: str | None = None, budget: int | None = None, order: int | None = None) -> dict:
    """Execute one request and return the report (raises library errors)."""
    if not isinstance(request, dict):
        raise SchemaError("request must be a JSON object")
    name = (command or request.get("command") or "").replace("-", "_")
    if name not in COMMANDS:
        raise SchemaError(f"unknown command {name!r}; choose from {', '.join(COMMANDS)}")
    payload = request.get("payload", {})
    if not isinstance(payload, dict):
        raise SchemaError("payload must be an object")
    ring_obj = request.get("ring")
    if order is not None:
        ring_obj = _apply_order(ring_obj, order)
    budget = budget if budget is not None else payload.get("budget")
    if budget is not None and (isinstance(budget, bool) or not isinstance(budget, int) or budget < 1):
        raise SchemaError(f"budget must be a positive integer, got {budget!r}")
    return COMMANDS[name](Context(parse_ring(ring_obj), payload, budget))


def _parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="strongclean", description="Strongly clean matrix decisions and certificates.")
    p.add_argument("command", nargs="?", help=f"one of: {', '.join(c.replace('_', '-') for c in COMMANDS)}")
    p.add_argument("--file", help="read the JSON request from this file instead of stdin")
    p.add_argument("--deterministic", action="store_true", help="canonical key order (output is deterministic regardless)")
    p.add_argument("--budget", type=int, help="search budget for factor enumeration and brute force")
    p.add_argument("--order", type=int, help="truncation order for powerseries rings")
    return p


def main(argv: list[str] | None = None) -> int:
    args = _parser().parse_args(argv)
    try:
        if args.file:
            with open(args.file, encoding="utf-8") as fh:
                text = fh.read()
        else:
            text = sys.stdin.read()
        try:
            request = json.loads(text)
        except json.JSONDecodeError as exc:
            raise SchemaError(f"invalid JSON: {exc}") from exc
        report = run(request, args.command, args.budget, args.order)
    except OSError as exc:
        print(json.dumps({"error": "io", "message": str(exc)}), file=sys.stderr)
        return EXIT_SCHEMA
    except VerificationError as exc:
        print(json.dumps({"error": "verification", "message": str(exc)}), file=sys.stderr)
        return EXIT_VERIFY
    except GuardError as exc:
        print(json.dumps({"error": "guard", "message": str(exc)}), file=sys.stderr)
        return EXIT_GUARD
    except (SchemaError, StrongCleanError) as exc:
        print(json.dumps({"error": "schema", "message": str(exc)}), file=sys.stderr)
        return EXIT_SCHEMA
    print(json.dumps(report, sort_keys=args.deterministic))
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
