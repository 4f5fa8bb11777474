"""Command-line front end.

Subcommands compute expansions, apply the operators, run the constructions,
and execute the verification suites.  Output is aligned-text q-expansions or
canonical JSON; identical invocations with the same --seed produce
byte-identical output (verification reports omit timings unless --timings is
given).

Exit codes: 0 success, 1 at least one requested check failed, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .construct import (
    VVPair,
    lambda2_fwd,
    lambda2_inv,
    lambda_star_fwd,
    lambda_star_inv,
    psi_0m,
    psi_form,
    xi_hat,
    xi_m_star_hat,
    xi_pair_hat,
)
from .jacobi import JacobiSeries, d2_hat, restrict_z0, theta_decompose, theta_j
from .series import PuiseuxSeries
from .sl2 import GroupWord
from .verify import SUITES
from .weil import resolve_scalar, word_product


def _fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational: {text!r}")


def _complex_pair(text: str) -> complex:
    try:
        re, im = text.split(",")
        return complex(float(re), float(im))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected x,y (got {text!r})")


def _gamma(text: str):
    from .sl2 import SL2Mat

    try:
        a, b, c, d = (int(x) for x in text.split(","))
        return SL2Mat(a, b, c, d)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad matrix {text!r}: {exc}")


def _dump(obj) -> str:
    return json.dumps(obj, separators=(",", ":"), sort_keys=False)


def _emit_series(series, fmt: str, out):
    if fmt == "json":
        out.write(_dump(series.to_json()) + "\n")
    else:
        out.write(series.to_text() + "\n")


def _read_json(path: str | None):
    if path is None or path == "-":
        return json.load(sys.stdin)
    with open(path) as fh:
        return json.load(fh)


def _load_pair(obj) -> VVPair:
    return VVPair.from_json(obj)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="jfkernel",
        description="Exact theta-decomposition machinery for Jacobi forms.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    def add_common(sp, order=True):
        if order:
            sp.add_argument("--order", type=_fraction, required=True,
                            help="validity bound for q-expansions, e.g. 25 or 49/8")
        sp.add_argument("--format", choices=("text", "json"), default="text")
        sp.add_argument("--in", dest="input", default=None,
                        help="input JSON file (default: stdin)")

    sp = sub.add_parser("theta", help="index-m theta function")
    sp.add_argument("--m", type=int, required=True)
    sp.add_argument("--r", type=int, required=True)
    sp.add_argument("--at-z0", action="store_true", help="restrict to z = 0")
    add_common(sp)

    sp = sub.add_parser("eta", help="Dedekind eta (or a power)")
    sp.add_argument("--power", type=int, default=1)
    add_common(sp)

    sp = sub.add_parser("xi", help="the weight-3 theta Wronskians (divided by 2 pi i)")
    sp.add_argument("--m", type=int, default=1, help="index for the dilated form")
    sp.add_argument("--pair", action="store_true",
                    help="emit the index-2 pair (xi0, xi2) instead")
    add_common(sp)

    sp = sub.add_parser("decompose", help="theta components of a two-variable series")
    sp.add_argument("--m", type=int, required=True)
    add_common(sp, order=False)

    sp = sub.add_parser("d0", help="restriction z = 0 of a two-variable series")
    add_common(sp, order=False)

    sp = sub.add_parser("d2", help="normalised heat operator at weight k")
    sp.add_argument("--k", type=_fraction, required=True)
    add_common(sp, order=False)

    sp = sub.add_parser("lambda2", help="component pair divided by theta_{2,1}")
    add_common(sp, order=False)

    sp = sub.add_parser("lambda2-inv", help="rebuild a kernel element from a pair")
    add_common(sp)

    sp = sub.add_parser("lambdastar", help="scalar quotient at squarefree index")
    sp.add_argument("--m", type=int, required=True)
    add_common(sp, order=False)

    sp = sub.add_parser("lambdastar-inv", help="rebuild from a scalar series")
    sp.add_argument("--m", type=int, required=True)
    add_common(sp)

    sp = sub.add_parser("psi", help="the quotient phi0/xi2 = -phi2/xi0")
    add_common(sp, order=False)

    sp = sub.add_parser("project-0m", help="projection onto the 0 and m components")
    sp.add_argument("--m", type=int, required=True)
    add_common(sp, order=False)

    sp = sub.add_parser("weil", help="multiplier matrix of a generator word")
    sp.add_argument("--m", type=int, required=True)
    group = sp.add_mutually_exclusive_group(required=True)
    group.add_argument("--word", type=str,
                       help='generator word, e.g. "S T T S" or "ST2S^-1 T^2"')
    group.add_argument("--gamma", type=_gamma,
                       help="integer matrix a,b,c,d (decomposed into S, T)")
    sp.add_argument("--resolve", action="store_true",
                    help="fit and snap the projective scalar")
    sp.add_argument("--tau", type=_complex_pair, default=complex(0.11, 1.21))
    sp.add_argument("--z", type=_complex_pair, default=complex(0.07, 0.13))
    sp.add_argument("--format", choices=("text", "json"), default="json")

    sp = sub.add_parser("verify", help="run a verification suite")
    sp.add_argument("--suite", choices=sorted(SUITES), default="all")
    sp.add_argument("--order", type=_fraction, default=Fraction(30))
    sp.add_argument("--seed", type=int, default=7)
    sp.add_argument("--timings", action="store_true",
                    help="include wall-clock timings (breaks byte-reproducibility)")
    sp.add_argument("--format", choices=("text", "json"), default="json")

    return p


def run(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)

    try:
        return _dispatch(args, out)
    except (ValueError, ArithmeticError, KeyError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def _dispatch(args, out) -> int:
    cmd = args.command

    if cmd == "theta":
        series = theta_j(args.m, args.r, args.order)
        if args.at_z0:
            _emit_series(restrict_z0(series), args.format, out)
        else:
            _emit_series(series, args.format, out)
        return 0

    if cmd == "eta":
        from .series import eta_power

        _emit_series(eta_power(args.power, args.order), args.format, out)
        return 0

    if cmd == "xi":
        if args.pair:
            xi0, xi2 = xi_pair_hat(args.order)
            if args.format == "json":
                out.write(_dump({"xi0": xi0.to_json(), "xi2": xi2.to_json()}) + "\n")
            else:
                out.write("xi0: " + xi0.to_text() + "\n")
                out.write("xi2: " + xi2.to_text() + "\n")
            return 0
        series = xi_hat(args.order) if args.m == 1 else xi_m_star_hat(args.m, args.order)
        _emit_series(series, args.format, out)
        return 0

    if cmd == "decompose":
        phi = JacobiSeries.from_json(_read_json(args.input))
        comps = theta_decompose(phi, args.m)
        if args.format == "json":
            out.write(_dump([c.to_json() for c in comps]) + "\n")
        else:
            for r, c in enumerate(comps):
                out.write(f"h[{r}]: {c.to_text()}\n")
        return 0

    if cmd == "d0":
        phi = JacobiSeries.from_json(_read_json(args.input))
        _emit_series(restrict_z0(phi), args.format, out)
        return 0

    if cmd == "d2":
        phi = JacobiSeries.from_json(_read_json(args.input))
        _emit_series(d2_hat(phi, args.k), args.format, out)
        return 0

    if cmd == "lambda2":
        data = _read_json(args.input)
        if isinstance(data, list):  # decompose output: take the 0 and 2 components
            h0 = PuiseuxSeries.from_json(data[0])
            h2 = PuiseuxSeries.from_json(data[2])
        else:
            h0 = PuiseuxSeries.from_json(data["h0"])
            h2 = PuiseuxSeries.from_json(data["h2"])
        pair = lambda2_fwd(h0, h2)
        out.write(_dump({"phi0": pair.comp0.to_json(), "phi2": pair.comp2.to_json()}) + "\n")
        return 0

    if cmd == "lambda2-inv":
        data = _read_json(args.input)
        phi0 = PuiseuxSeries.from_json(data["phi0"])
        phi2 = PuiseuxSeries.from_json(data["phi2"])
        _emit_series(lambda2_inv(phi0, phi2, args.order), "json", out)
        return 0

    if cmd == "lambdastar":
        data = _read_json(args.input)
        if isinstance(data, list):
            h0 = PuiseuxSeries.from_json(data[0])
            hm = PuiseuxSeries.from_json(data[args.m])
        else:
            h0 = PuiseuxSeries.from_json(data["h0"])
            hm = PuiseuxSeries.from_json(data["hm"])
        _emit_series(lambda_star_fwd(h0, hm, args.m), "json", out)
        return 0

    if cmd == "lambdastar-inv":
        phi = PuiseuxSeries.from_json(_read_json(args.input))
        _emit_series(lambda_star_inv(phi, args.m, args.order), "json", out)
        return 0

    if cmd == "psi":
        data = _read_json(args.input)
        phi0 = PuiseuxSeries.from_json(data["phi0"])
        phi2 = PuiseuxSeries.from_json(data["phi2"])
        _emit_series(psi_form(phi0, phi2), args.format, out)
        return 0

    if cmd == "project-0m":
        phi = JacobiSeries.from_json(_read_json(args.input))
        _emit_series(psi_0m(phi, args.m), "json", out)
        return 0

    if cmd == "weil":
        if args.word is not None:
            word = GroupWord.parse(args.word)
        else:
            from .sl2 import sl2_word

            word = sl2_word(args.gamma)
        if args.resolve:
            U, sigma = resolve_scalar(args.m, word, None, args.tau, args.z)
            payload = U.to_json()
            payload["snapped_scalar"] = sigma.to_json()
        else:
            payload = word_product(args.m, word).to_json()
        if args.format == "json":
            out.write(_dump(payload) + "\n")
        else:
            U = resolve_scalar(args.m, word, None, args.tau, args.z)[0] if args.resolve \
                else word_product(args.m, word)
            Uc = U.canonical()
            for row in Uc.rows:
                out.write("  ".join(str(x) for x in row) + "\n")
        return 0

    if cmd == "verify":
        reports = SUITES[args.suite](args.order, args.seed)
        ok = all(r.passed for r in reports)
        if args.format == "json":
            out.write(_dump([r.to_json(with_ms=args.timings) for r in reports]) + "\n")
        else:
            for r in reports:
                line = f"{r.status.upper():4s} {r.name}"
                if r.witness:
                    line += f"  [{r.witness}]"
                if args.timings and r.runtime_ms is not None:
                    line += f"  ({r.runtime_ms:.1f} ms)"
                out.write(line + "\n")
        return 0 if ok else 1

    raise AssertionError(f"unhandled command {cmd}")


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
