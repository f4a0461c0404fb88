"""Command-line front end: kernels, Gauss integrals, verification suites.

Exit codes: 0 success, 1 verification failure, 2 usage or parse error,
3 resource limit exceeded.  Output is JSON (default) or CSV; every row
carries the exact fractions next to their float rendering, and a fixed
seed reproduces byte-identical output.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction

from .characters import Amplitude
from .errors import OracleCapError, PadicqmError
from .gauss import coset_cap, gauss_full, minimal_resolution, quad_char_integral_ball
from .places import Place
from .propagators import (
    OscillatorBoundaryData,
    k_constant_field,
    k_desitter,
    k_free,
    k_oscillator_td,
    k_oscillator_td_real,
)
from .verify import CHECKS

EXIT_OK = 0
EXIT_VERIFY_FAIL = 1
EXIT_USAGE = 2
EXIT_RESOURCE = 3

CSV_COLUMNS = [
    "place",
    "system",
    "a",
    "lam",
    "T",
    "q0",
    "q1",
    "alpha",
    "beta",
    "N",
    "modulus_sq",
    "phase",
    "re",
    "im",
]


def _rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"bad rational {text!r}: {exc}") from exc


def _rational_list(text: str) -> list[Fraction]:
    return [_rational(part) for part in text.split(",") if part.strip()]


def _place(text: str) -> Place:
    try:
        return Place.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad place {text!r}: {exc}") from exc


def _place_list(text: str) -> list[Place]:
    return [_place(part) for part in text.split(",") if part.strip()]


def _amp_fields(amp: Amplitude) -> dict:
    re, im = amp.render()
    return {
        "modulus_sq": str(amp.modulus_sq),
        "phase": str(amp.phase.value),
        "re": re,
        "im": im,
    }


def _emit(rows: list[dict], fmt: str, header: dict | None = None) -> None:
    if fmt == "json":
        payload = dict(header or {})
        payload["rows"] = rows
        json.dump(payload, sys.stdout, indent=2, default=str)
        sys.stdout.write("\n")
    else:
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=CSV_COLUMNS, extrasaction="ignore")
        writer.writeheader()
        for row in rows:
            writer.writerow(row)
        sys.stdout.write(buf.getvalue())


def _cmd_gauss(args) -> int:
    amp = gauss_full(args.place, args.a, args.b)
    row = {"place": str(args.place), "system": "gauss", "a": str(args.a), "b": str(args.b)}
    row.update(_amp_fields(amp))
    _emit([row], args.format, {"command": "gauss"})
    return EXIT_OK


def _cmd_ball_integral(args) -> int:
    implied = args.p ** max(
        0, args.N + minimal_resolution(args.p, args.alpha, args.beta, args.N)
    )
    if implied > coset_cap():
        raise OracleCapError(
            f"{implied} cosets at the minimal constant resolution exceed the cap"
        )
    amp = quad_char_integral_ball(args.p, args.alpha, args.beta, args.N)
    row = {
        "place": str(args.p),
        "system": "ball-integral",
        "alpha": str(args.alpha),
        "beta": str(args.beta),
        "N": args.N,
    }
    row.update(_amp_fields(amp))
    _emit([row], args.format, {"command": "ball-integral"})
    return EXIT_OK


def _kernel_rows(args) -> list[dict]:
    rows = []
    for place in args.place:
        for T in args.T:
            for q0 in args.q0:
                for q1 in args.q1:
                    base = {
                        "place": str(place),
                        "system": args.system,
                        "T": str(T),
                        "q0": str(q0),
                        "q1": str(q1),
                    }
                    if args.system == "free":
                        amp = k_free(place, T, q0, q1)
                    elif args.system == "const-field":
                        base["a"] = str(args.a)
                        amp = k_constant_field(place, args.a, T, q0, q1)
                    elif args.system == "desitter":
                        base["lam"] = str(args.lam)
                        amp = k_desitter(place, args.lam, T, q0, q1)
                    else:
                        raise AssertionError(args.system)
                    base.update(_amp_fields(amp))
                    rows.append(base)
    return rows


def _cmd_kernel(args) -> int:
    if args.system == "osc":
        return _cmd_kernel_oscillator(args)
    rows = _kernel_rows(args)
    _emit(rows, args.format, {"command": "kernel", "system": args.system})
    return EXIT_OK


def _cmd_kernel_oscillator(args) -> int:
    required = [args.x0, args.x1, args.gamma0, args.gamma1,
                args.dgamma0, args.dgamma1, args.s0, args.s1, args.ds0, args.ds1]
    if any(v is None for v in required):
        print("oscillator system needs --x0 --x1 --gamma0 --gamma1 "
              "--dgamma0 --dgamma1 --s0 --s1 --ds0 --ds1", file=sys.stderr)
        return EXIT_USAGE
    data = OscillatorBoundaryData(
        x0=args.x0, x1=args.x1, gamma0=args.gamma0, gamma1=args.gamma1,
        dgamma0=args.dgamma0, dgamma1=args.dgamma1,
        s0=args.s0, s1=args.s1, ds0=args.ds0, ds1=args.ds1,
    )
    rows = []
    for place in args.place:
        row = {"place": str(place), "system": "osc", "sqrt_branch": "canonical"}
        if place.is_real:
            value = k_oscillator_td_real(data)
            row.update({"modulus_sq": "", "phase": "", "re": value.real, "im": value.imag})
        else:
            amp = k_oscillator_td(place, data, args.precision)
            row.update(_amp_fields(amp))
        rows.append(row)
    _emit(rows, args.format, {"command": "kernel", "system": "osc"})
    return EXIT_OK


def _cmd_verify(args) -> int:
    kwargs: dict = {"seed": args.seed}
    if args.trials is not None:
        kwargs["trials"] = args.trials
    if args.place:
        if args.check in ("overlap", "gauss"):
            kwargs["primes"] = tuple(pl.p for pl in args.place if not pl.is_real)
        else:
            kwargs["places"] = tuple(args.place)
    failures = CHECKS[args.check](**kwargs)
    report = {
        "command": "verify",
        "check": args.check,
        "seed": args.seed,
        "status": "pass" if not failures else "fail",
        "failures": failures,
    }
    json.dump(report, sys.stdout, indent=2, default=str)
    sys.stdout.write("\n")
    return EXIT_OK if not failures else EXIT_VERIFY_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="padicqm",
        description="Exact propagators and Gauss integrals over the real "
        "and p-adic completions of the rationals.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    kernel = sub.add_parser("kernel", help="evaluate a propagator on a parameter grid")
    kernel.add_argument("--system", required=True,
                        choices=["free", "const-field", "desitter", "osc"])
    kernel.add_argument("--place", type=_place_list, required=True,
                        help="comma-separated places: inf or primes")
    kernel.add_argument("--T", type=_rational_list, default=[Fraction(1)])
    kernel.add_argument("--q0", type=_rational_list, default=[Fraction(0)])
    kernel.add_argument("--q1", type=_rational_list, default=[Fraction(0)])
    kernel.add_argument("--a", type=_rational, default=Fraction(0),
                        help="constant acceleration (const-field)")
    kernel.add_argument("--lam", type=_rational, default=Fraction(0),
                        help="cosmological constant (desitter)")
    for name in ("x0", "x1", "gamma0", "gamma1", "dgamma0", "dgamma1",
                 "s0", "s1", "ds0", "ds1"):
        kernel.add_argument(f"--{name}", type=_rational, default=None,
                            help="oscillator boundary value")
    kernel.add_argument("--precision", type=int, default=20,
                        help="p-adic working precision for the oscillator")
    kernel.add_argument("--format", choices=["json", "csv"], default="json")
    kernel.set_defaults(func=_cmd_kernel)

    gauss_cmd = sub.add_parser("gauss", help="full-line Gauss integral")
    gauss_cmd.add_argument("--place", type=_place, required=True)
    gauss_cmd.add_argument("--a", type=_rational, required=True)
    gauss_cmd.add_argument("--b", type=_rational, default=Fraction(0))
    gauss_cmd.add_argument("--format", choices=["json", "csv"], default="json")
    gauss_cmd.set_defaults(func=_cmd_gauss)

    ball = sub.add_parser("ball-integral", help="character integral over a p-adic ball")
    ball.add_argument("--p", type=int, required=True)
    ball.add_argument("--alpha", type=_rational, required=True)
    ball.add_argument("--beta", type=_rational, required=True)
    ball.add_argument("--N", type=int, required=True)
    ball.add_argument("--format", choices=["json", "csv"], default="json")
    ball.set_defaults(func=_cmd_ball_integral)

    verify = sub.add_parser("verify", help="run a seeded exact-identity suite")
    verify.add_argument("--check", required=True, choices=sorted(CHECKS))
    verify.add_argument("--seed", type=int, default=0)
    verify.add_argument("--trials", type=int, default=None)
    verify.add_argument("--place", type=_place_list, default=None,
                        help="restrict to these places")
    verify.set_defaults(func=_cmd_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except OracleCapError as exc:
        print(f"resource limit: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except PadicqmError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ValueError, ZeroDivisionError) as exc:
        print(f"invalid parameters: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
