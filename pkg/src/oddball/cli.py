"""Command-line interface.

Subcommands: chi, det, potential, magnitude, verify {equality, observation,
derivative, integral}, reproduce.  Output formats are canonical JSON
(deterministic: sorted keys, compact separators, polynomials as decimal
coefficient strings in ascending powers), CSV (one row per n), or a pretty
rendering in descending powers.  Exit codes: 0 success, 1 verification
failure, 2 usage error.

Radii are always exact rationals written as P or P/Q; there is no floating
point radius path.  The ODDBALL_PRECISION environment variable overrides the
mantissa bits used by the numeric checks.
"""

from __future__ import annotations

import argparse
import difflib
import itertools
import json
import os
import re
import sys
from fractions import Fraction

from . import golden
from .bessel import reverse_bessel
from .errors import (
    EvenDimension,
    GoldenMismatch,
    IndexOutOfTriangle,
    NonpositiveRadius,
    OddballError,
    ParseError,
    QuadratureNonconvergence,
    TableTooSmall,
    ZeroDenominator,
)
from .explaurent import DEFAULT_PRECISION
from .hankel import HankelSpec, build_hankel, det_bareiss
from .magnitude import (
    magnitude_report,
    verify_derivative_conjecture,
    verify_formula_equality,
    verify_integral_lemma,
    verify_observation,
    verify_triple_route,
)
from .poly import RatFunc, format_poly, format_ratfunc
from .potential import (
    build_potential,
    verify_annihilation,
    verify_boundary_conditions,
    verify_limit_derivative,
)

_RATIONAL_RE = re.compile(r"^[+-]?\d+(/\d+)?$")

_USAGE_ERRORS = (
    ParseError,
    ZeroDenominator,
    ValueError,
    EvenDimension,
    NonpositiveRadius,
    TableTooSmall,
    IndexOutOfTriangle,
)


def parse_rational(text: str) -> Fraction:
    """Parse 'P' or 'P/Q' into a reduced fraction."""
    if not _RATIONAL_RE.match(text.strip()):
        raise ParseError(f"not a rational number: {text!r}")
    head, _, tail = text.strip().partition("/")
    num = int(head)
    den = int(tail) if tail else 1
    if den == 0:
        raise ZeroDenominator(f"zero denominator in {text!r}")
    return Fraction(num, den)


def _fraction_str(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def _precision_bits(args) -> int:
    env = os.environ.get("ODDBALL_PRECISION")
    if env:
        try:
            return int(env)
        except ValueError as exc:
            raise ParseError(f"bad ODDBALL_PRECISION value {env!r}") from exc
    return DEFAULT_PRECISION


def _add_format_flags(parser, default="pretty"):
    group = parser.add_mutually_exclusive_group()
    group.add_argument("--json", dest="fmt", action="store_const", const="json")
    group.add_argument("--csv", dest="fmt", action="store_const", const="csv")
    group.add_argument("--pretty", dest="fmt", action="store_const", const="pretty")
    parser.set_defaults(fmt=default)


def _emit_records(records, fmt) -> None:
    """records: list of dicts with keys n, route, num, den, agree, millis."""
    if fmt == "json":
        canonical = []
        for r in records:
            rec = {
                "n": r["n"],
                "route": r["route"],
                "num": r["num"],
                "den": r["den"],
                "agree": r["agree"],
                "millis": None,  # dropped for byte-stable output
            }
            if "value" in r:
                rec["value"] = r["value"]
            canonical.append(rec)
        print(_dump(canonical))
    elif fmt == "csv":
        print("n,num,den")
        for r in records:
            print("{},{},{}".format(r["n"], " ".join(r["num"]), " ".join(r["den"])))
    else:
        for r in records:
            f = RatFunc.from_dict(r)
            mark = "ok" if r["agree"] else "DISAGREE"
            print(f"n={r['n']:>3} [{r['route']}] {format_ratfunc(f)}   ({mark}, {r['millis']:.1f} ms)")


def _record(n, route, ratfunc, millis, agree=True, **extra):
    rec = {
        "n": n,
        "route": route,
        "num": ratfunc.num.coeff_strings(),
        "den": ratfunc.den.coeff_strings(),
        "agree": agree,
        "millis": millis,
    }
    rec.update(extra)
    return rec


# ---------------------------------------------------------------------------
# subcommand handlers
# ---------------------------------------------------------------------------

def _cmd_chi(args) -> int:
    table = reverse_bessel(args.max_index)
    if args.fmt == "json":
        print(_dump({"max_index": table.max_index,
                     "polys": [p.coeff_strings() for p in table.polys]}))
    else:
        for i, p in enumerate(table.polys):
            print(f"chi_{i} = {format_poly(p)}")
    return 0


def _cmd_det(args) -> int:
    spec = HankelSpec(args.p + 1, args.offset)
    d = det_bareiss(build_hankel(spec, reverse_bessel(spec.top_index)))
    if args.fmt == "json":
        print(_dump({"p": args.p, "offset": args.offset, "det": d.coeff_strings()}))
    else:
        print(format_poly(d))
    return 0


def _cmd_potential(args) -> int:
    radius = parse_rational(args.radius)
    pot = build_potential(args.n, radius)
    payload = {
        "n": args.n,
        "radius": _fraction_str(radius),
        "coeffs": [f.as_dict() for f in pot.coeff_funcs],
        "coeff_values": [_fraction_str(c) for c in pot.coeffs],
    }
    status = 0
    if args.verify:
        checks = {
            "boundary": verify_boundary_conditions(pot),
            "annihilation": verify_annihilation(pot),
            "limit_derivative": verify_limit_derivative(args.n, radius),
        }
        payload["checks"] = checks
        if not all(checks.values()):
            status = 1
    if args.fmt == "json":
        print(_dump(payload))
    else:
        for i, f in enumerate(pot.coeff_funcs):
            print(f"coeff_{i} = {format_ratfunc(f)} = {_fraction_str(pot.coeffs[i])} at R={payload['radius']}")
        for name, ok in payload.get("checks", {}).items():
            print(f"check {name}: {'pass' if ok else 'FAIL'}")
    return status


def _cmd_magnitude(args) -> int:
    routes = ("det", "hankel", "boundary") if args.route == "all" else (args.route,)
    rep = magnitude_report(args.n, routes=routes)
    records = []
    for route in routes:
        value = {"det": rep.mag_det, "hankel": rep.mag_hankel, "boundary": rep.mag_boundary}[route]
        extra = {}
        if args.radius is not None:
            radius = parse_rational(args.radius)
            extra["value"] = _fraction_str(value(radius))
        records.append(_record(args.n, route, value, rep.timing[route], rep.agree, **extra))
    _emit_records(records, args.fmt)
    if args.radius is not None and args.fmt == "pretty":
        radius = parse_rational(args.radius)
        first = {"det": rep.mag_det, "hankel": rep.mag_hankel, "boundary": rep.mag_boundary}[routes[0]]
        print(f"value at R={args.radius}: {_fraction_str(first(radius))}")
    return 0 if rep.agree else 1


def _cmd_verify_equality(args) -> int:
    max_n = args.max_n if args.max_n is not None else (39 if args.extended else 25)
    report = verify_formula_equality(max_n, jobs=args.jobs)
    records = [_record(e.n, "equality", e.value, e.millis) for e in report.entries]
    _emit_records(records, args.fmt)
    return 0


def _cmd_verify_observation(args) -> int:
    max_n = args.max_n if args.max_n is not None else 25
    report = verify_observation(max_n)
    if args.fmt == "json":
        print(_dump([
            {"n": e.n, "route": "observation", "power": e.power_shift,
             "constant": _fraction_str(e.constant), "agree": True, "millis": None}
            for e in report.entries
        ]))
    else:
        for e in report.entries:
            print(f"n={e.n:>3} numerators match: constant={_fraction_str(e.constant)} "
                  f"power-shift={e.power_shift} ({e.millis:.1f} ms)")
    return 0


def _cmd_verify_derivative(args) -> int:
    max_n = args.max_n if args.max_n is not None else (57 if args.extended else 33)
    report = verify_derivative_conjecture(max_n, jobs=args.jobs)
    records = [_record(e.n, "derivative", e.value, e.millis) for e in report.entries]
    _emit_records(records, args.fmt)
    return 0


def _integral_grid():
    radii = (Fraction(1), Fraction(3, 2), Fraction(3))
    for s in itertools.count():
        for i in range(s + 1):
            for radius in radii:
                yield i, s - i, radius


def _cmd_verify_integral(args) -> int:
    prec = _precision_bits(args)
    count = 0
    for i, b, radius in itertools.islice(_integral_grid(), args.samples):
        ok = verify_integral_lemma(i, b, radius, prec_bits=prec)
        count += 1
        if args.fmt != "json":
            print(f"i={i} b={b} R={_fraction_str(radius)}: {'pass' if ok else 'FAIL'}")
        if not ok:
            return 1
    if args.fmt == "json":
        print(_dump({"samples": count, "agree": True}))
    else:
        print(f"{count} quadrature checks passed")
    return 0


def _cmd_verify_triple(args) -> int:
    max_n = args.max_n if args.max_n is not None else 15
    report = verify_triple_route(max_n)
    records = [_record(e.n, "boundary", e.value, e.millis) for e in report.entries]
    _emit_records(records, args.fmt)
    return 0


def _cmd_reproduce(args) -> int:
    results = golden.check_all()
    bad = []
    for r in results:
        line = f"{r.table:22s} n={r.n}: {'pass' if r.ok else 'FAIL'}"
        print(line)
        if not r.ok:
            bad.append(r)
    if bad:
        for r in bad:
            want = _dump(r.expected)
            got = _dump(r.got)
            diff = "\n".join(difflib.unified_diff(
                want.splitlines(), got.splitlines(),
                fromfile=f"expected/{r.table}/n={r.n}", tofile=f"computed/{r.table}/n={r.n}",
                lineterm="",
            ))
            print(diff, file=sys.stderr)
        raise GoldenMismatch(f"{len(bad)} golden table entries differ")
    print(f"all {len(results)} golden entries reproduced")
    return 0


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------

def _build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="oddball",
        description="Exact magnitude of odd-dimensional balls via Hankel determinants "
                    "of reverse Bessel polynomials, with verification campaigns.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    chi = sub.add_parser("chi", help="print reverse Bessel polynomials 0..N")
    chi.add_argument("--max", dest="max_index", type=int, required=True)
    _add_format_flags(chi, default="json")
    chi.set_defaults(func=_cmd_chi)

    det = sub.add_parser("det", help="Hankel determinant det[B_{i+j+offset}], i,j=0..p")
    det.add_argument("--p", type=int, required=True)
    det.add_argument("--offset", type=int, default=0)
    _add_format_flags(det, default="json")
    det.set_defaults(func=_cmd_det)

    pot = sub.add_parser("potential", help="potential-function coefficients at a rational radius")
    pot.add_argument("--n", type=int, required=True)
    pot.add_argument("--radius", type=str, required=True, metavar="P/Q")
    pot.add_argument("--verify", action="store_true",
                     help="also run boundary, annihilation and limit-derivative checks")
    _add_format_flags(pot, default="json")
    pot.set_defaults(func=_cmd_potential)

    mag = sub.add_parser("magnitude", help="magnitude of the n-ball as a rational function")
    mag.add_argument("--n", type=int, required=True)
    mag.add_argument("--radius", type=str, default=None, metavar="P/Q")
    mag.add_argument("--route", choices=("det", "hankel", "boundary", "all"), default="hankel")
    _add_format_flags(mag)
    mag.set_defaults(func=_cmd_magnitude)

    ver = sub.add_parser("verify", help="verification campaigns")
    versub = ver.add_subparsers(dest="check", required=True)

    def _campaign(name, helptext, handler, with_jobs=True, with_extended=False):
        c = versub.add_parser(name, help=helptext)
        c.add_argument("--max", dest="max_n", type=int, default=None)
        if with_jobs:
            c.add_argument("--jobs", type=int, default=os.cpu_count() or 1)
        if with_extended:
            c.add_argument("--extended", action="store_true")
        _add_format_flags(c)
        c.set_defaults(func=handler)
        return c

    _campaign("equality", "determinant route == Hankel route", _cmd_verify_equality,
              with_extended=True)
    _campaign("observation", "magnitude numerator matches the coefficient two dimensions up",
              _cmd_verify_observation, with_jobs=False)
    _campaign("derivative", "derivative of the magnitude matches the Hankel form",
              _cmd_verify_derivative, with_extended=True)
    _campaign("boundary", "boundary-integral route agrees with both determinant routes",
              _cmd_verify_triple, with_jobs=False)

    integ = versub.add_parser("integral", help="quadrature check of the closed-form integral")
    integ.add_argument("--samples", type=int, default=60)
    _add_format_flags(integ)
    integ.set_defaults(func=_cmd_verify_integral)

    rep = sub.add_parser("reproduce", help="recompute every golden table and diff")
    rep.set_defaults(func=_cmd_reproduce)

    return ap


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except _USAGE_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except QuadratureNonconvergence as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OddballError as exc:
        print(f"verification failed: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
