"""Command-line front end.

Commands
--------
  linkspec invariants INPUT          mu, n, epsilon, n0, Alexander polynomial,
                                     eigenvalue angles, Keef warning flag (JSON)
  linkspec profile INPUT [--sample]  signature/nullity profile (CSV)
  linkspec spectrum INPUT            mod-2 spectrum (JSON)
  linkspec check SCENARIO            semicontinuity report (JSON)

INPUT is either a path to a Seifert-matrix JSON file
({"n": ..., "matrix": [[...]], "name": ...}) or a catalog name such as
"A3", "A3@n=2", "D4", "brieskorn:2,2,3".

Exit codes: 0 success / verdict holds; 1 verdict fails; 2 malformed input;
3 spectrum precondition violated (singular matrix or off-circle monodromy);
4 vacuous verdict.

All output is deterministic (sorted JSON keys, rationals as "p/q" strings);
files are written atomically (temp file + rename).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import tempfile
from fractions import Fraction

import mpmath

from . import catalog, linalg
from .hvs import extract_spectrum
from .roots import RootAngle
from .seifert import SeifertMatrix, alexander, keef_reduce, n0 as seifert_n0
from .semicontinuity import (CobordismBettiData, DeformationInstance,
                             check_infinity, check_local,
                             check_local_to_global)
from .signatures import circle_roots, signature_profile

EXIT_OK = 0
EXIT_FAILS = 1
EXIT_BAD_INPUT = 2
EXIT_PRECONDITION = 3
EXIT_VACUOUS = 4


class InputError(Exception):
    pass


class PreconditionError(Exception):
    pass


def _frac_str(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def _parse_fraction(s: str) -> Fraction:
    try:
        return Fraction(s)
    except (ValueError, ZeroDivisionError) as e:
        raise InputError(f"invalid rational {s!r}: {e}") from None


def load_seifert(spec: str) -> SeifertMatrix:
    """Resolve INPUT: an existing file path wins, otherwise a catalog name."""
    if os.path.exists(spec):
        try:
            with open(spec, "r", encoding="utf-8") as fh:
                data = json.load(fh)
        except json.JSONDecodeError as e:
            raise InputError(f"{spec}: invalid JSON at line {e.lineno}, column {e.colno}: {e.msg}")
        try:
            return SeifertMatrix.from_dict(data)
        except ValueError as e:
            raise InputError(f"{spec}: {e}")
    try:
        return catalog.by_name(spec)
    except (KeyError, ValueError) as e:
        raise InputError(f"{spec}: not a file and not a catalog name ({e})")


def write_output(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
        return
    directory = os.path.dirname(os.path.abspath(out))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".linkspec-")
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
        os.replace(tmp, out)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _angles_json(roots) -> list[dict]:
    out = []
    for rec in roots:
        if rec.is_exact:
            out.append({"angle": _frac_str(rec.exact),
                        "multiplicity": rec.multiplicity})
        else:
            out.append({"angle": f"{float((rec.lo + rec.hi) / 2):.12g}",
                        "enclosure_width": f"{float(rec.hi - rec.lo):.3g}",
                        "multiplicity": rec.multiplicity})
    return out


def cmd_invariants(args) -> int:
    S = load_seifert(args.input)
    dec = keef_reduce(S)
    delta = alexander(S)
    report = {
        "name": S.name,
        "mu": S.mu,
        "n": S.n,
        "epsilon": S.epsilon,
        "n0": seifert_n0(S),
        "alexander": [int(c) for c in delta.all_coeffs()],
        "eigenvalue_angles": _angles_json(circle_roots(S)),
        "keef_warning": bool(dec.warning),
    }
    write_output(json.dumps(report, sort_keys=True, indent=2) + "\n", args.out)
    return EXIT_OK


def cmd_profile(args) -> int:
    S = load_seifert(args.input)
    samples = [_parse_fraction(s) for s in (args.sample or [])]
    for a in samples:
        if not 0 < a < 1:
            raise InputError(f"sample alpha {a} outside (0,1): xi = 1 is excluded")
    prof = signature_profile(S, evaluate_jumps=True)
    rows = []
    for iv in prof.intervals:
        rows.append((iv.sample, iv.sigma, iv.nullity, False))
    for jv in prof.at_jumps:
        if jv.evaluated:
            rows.append((jv.angle.exact, jv.sigma, jv.nullity, True))
    from .signatures import CirclePoint, lt_nullity, lt_signature
    for a in samples:
        p = CirclePoint(a)
        rows.append((a, lt_signature(S, p), lt_nullity(S, p), False))
    rows.sort(key=lambda r: (r[0], r[3]))
    lines = ["alpha,sigma,nullity,is_jump"]
    for alpha, sigma, nullity, is_jump in rows:
        lines.append(f"{_frac_str(alpha)},{sigma},{nullity},{'true' if is_jump else 'false'}")
    write_output("\n".join(lines) + "\n", args.out)
    return EXIT_OK


def cmd_spectrum(args) -> int:
    S = load_seifert(args.input)
    try:
        sp = extract_spectrum(S)
    except ValueError as e:
        raise PreconditionError(str(e))
    entries = []
    for v, m in sp.entries:
        e = {"value": str(v), "multiplicity": m}
        if not v.is_exact:
            e["enclosure_width"] = f"{float(v.hi - v.lo):.3g}"
        entries.append(e)
    write_output(json.dumps(entries, sort_keys=True, indent=2) + "\n", args.out)
    return EXIT_OK


def _scenario_matrix(obj) -> SeifertMatrix:
    if isinstance(obj, str):
        return load_seifert(obj)
    if isinstance(obj, dict):
        try:
            return SeifertMatrix.from_dict(obj)
        except ValueError as e:
            raise InputError(str(e))
    raise InputError("matrix entries must be catalog names or matrix objects")


def cmd_check(args) -> int:
    try:
        with open(args.scenario, "r", encoding="utf-8") as fh:
            scenario = json.load(fh)
    except OSError as e:
        raise InputError(f"{args.scenario}: {e}")
    except json.JSONDecodeError as e:
        raise InputError(f"{args.scenario}: invalid JSON at line {e.lineno}: {e.msg}")
    if not isinstance(scenario, dict):
        raise InputError("scenario must be a JSON object")
    mode = scenario.get("mode", "local")
    if mode not in ("local", "infinity", "local_to_global"):
        raise InputError(f"unknown mode {mode!r}")
    if "central" not in scenario:
        raise InputError("scenario field 'central' is required")
    central = _scenario_matrix(scenario["central"])
    locals_ = [_scenario_matrix(x) for x in scenario.get("locals", [])]
    try:
        if mode == "local":
            report = check_local(DeformationInstance(central=central,
                                                     locals=tuple(locals_)))
        elif mode == "infinity":
            if len(locals_) != 1:
                raise InputError("mode 'infinity' requires exactly one local matrix")
            report = check_infinity(extract_spectrum(central),
                                    extract_spectrum(locals_[0]),
                                    list(circle_roots(central)))
        else:
            report = check_local_to_global(extract_spectrum(central),
                                           [extract_spectrum(L) for L in locals_],
                                           list(circle_roots(central)))
    except ValueError as e:
        raise PreconditionError(str(e))
    payload = report.to_json()
    if args.strict and central.n == 1:
        payload["strict_mode"] = "n=1 refinement enabled (informational only)"
    write_output(json.dumps(payload, sort_keys=True, indent=2) + "\n", args.out)
    if mode == "local" and not locals_:
        return EXIT_VACUOUS
    return {"holds": EXIT_OK, "fails": EXIT_FAILS, "vacuous": EXIT_VACUOUS}[report.verdict]


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="linkspec",
        description="Link invariants of isolated hypersurface singularities "
                    "from integer Seifert matrices.")
    parser.add_argument("--tol", type=float, default=None,
                        help="relative tolerance for numeric sign decisions")
    parser.add_argument("--precision", type=int, default=None,
                        help="working precision in bits for escalated evaluations")
    parser.add_argument("--strict", action="store_true",
                        help="enable the n=1-only strict checks (informational)")
    parser.add_argument("--out", default=None, help="output path (atomic write)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("invariants", help="basic invariants as JSON")
    p.add_argument("input")
    p.set_defaults(func=cmd_invariants)

    p = sub.add_parser("profile", help="signature/nullity profile as CSV")
    p.add_argument("input")
    p.add_argument("--sample", action="append", metavar="P/Q",
                   help="extra rational sample angle in (0,1); repeatable")
    p.set_defaults(func=cmd_profile)

    p = sub.add_parser("spectrum", help="mod-2 spectrum as JSON")
    p.add_argument("input")
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("check", help="semicontinuity report from a scenario JSON")
    p.add_argument("scenario")
    p.set_defaults(func=cmd_check)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.tol is not None:
        if args.tol <= 0:
            parser.error("--tol must be positive")
        linalg.DEFAULT_TOL_FACTOR = args.tol
    if args.precision is not None:
        if args.precision < 53:
            parser.error("--precision must be at least 53 bits")
        mpmath.mp.prec = args.precision
    try:
        return args.func(args)
    except InputError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_BAD_INPUT
    except PreconditionError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_PRECONDITION


if __name__ == "__main__":
    sys.exit(main())
