"""Command-line surface: approximants, spectra, statistics, figure data.

Every command emits machine-readable CSV (or JSON with --format json) and is
deterministic: identical arguments produce byte-identical output.  Floating
values always appear next to a method tag, and series values carry their
truncation bound, so nothing approximate goes unlabeled.

Exit codes:
  0  success
  1  a verification or spot check failed (the failing check is named)
  2  precision exhausted (continued-fraction prefix too short), or bad input
  3  no closed form exists for the requested D
  4  invalid L grid

The L grid syntax is "min:max:steps" (steps >= 2, max > min >= 0), or a
single rational value such as "1", "0.25", or "7/3".
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .classical import TorusPoint, orbit, orbit_to_csv, weyl_sum
from .diophantine import (
    Approximant,
    PrecisionExhaustedError,
    approximants_with_gcd,
    bracket,
    nearest_approximant,
    parse_alpha,
)
from .propagator import (
    DEFAULT_MAX_N,
    build_propagator,
    trace_power_analytic,
    trace_powers,
    unitarity_defect,
)
from .spectrum import eigenphases, power_sums, spectrum_to_csv
from .statistics import (
    UnsupportedClosedFormError,
    curve_to_csv,
    divergence_witness,
    number_variance_closed,
    number_variance_direct,
    number_variance_fourier,
    spacing_distribution_closed,
    spacing_to_csv,
    spacings,
)

FIGURE_DS_CLOSED = (1, 2, 3, 6)
FIGURE_DS_FOURIER = (8, 9)
# Small fixed spectra used for the exact spot checks of the series columns;
# any (a, N) with the right gcd works since the statistics depend only on D.
FIGURE_SPOT_APPS = {8: (24, 16), 9: (90, 63)}
FIGURE_SPOT_LS = (Fraction(1, 2), Fraction(1), Fraction(4))


class GridError(ValueError):
    """The L grid specification is malformed or out of range."""


def _parse_lgrid(text):
    """Parse "min:max:steps" into a rational grid, or a single value."""
    try:
        if ":" in text:
            smin, smax, ssteps = text.split(":")
            lo, hi, steps = Fraction(smin), Fraction(smax), int(ssteps)
        else:
            lo, hi, steps = Fraction(text), None, None
    except (ValueError, ZeroDivisionError, TypeError):
        raise GridError(f"cannot parse L grid {text!r}") from None
    if hi is None:
        if lo < 0:
            raise GridError(f"L must be >= 0, got {text!r}")
        return [lo]
    if steps < 2 or lo < 0 or hi <= lo:
        raise GridError(f"invalid L grid {text!r}: need max > min >= 0, steps >= 2")
    span = hi - lo
    return [lo + span * i / (steps - 1) for i in range(steps)]


def _emit(args, write_fn):
    if getattr(args, "out", None):
        with open(args.out, "w") as handle:
            write_fn(handle)
    else:
        write_fn(sys.stdout)


def _approximant(args):
    """Resolve (--a, --N) directly or round N*alpha for (--alpha, --N)."""
    if args.a is not None:
        if args.N is None:
            raise ValueError("--a requires --N")
        return Approximant(args.a, args.N)
    if args.N is None:
        raise ValueError("select a spectrum with --N (plus --a or --alpha)")
    return nearest_approximant(parse_alpha(args.alpha), args.N)


def cmd_approx(args):
    alpha = parse_alpha(args.alpha)
    if (args.N is None) == (args.D is None):
        raise ValueError("choose exactly one of --N (single) or --D (family)")
    if args.N is not None:
        apps = [nearest_approximant(alpha, args.N)]
    else:
        apps = approximants_with_gcd(alpha, args.D, args.count)

    def write(out):
        if args.format == "json":
            rows = [{"a": x.a, "N": x.N, "D": x.D, "M": x.M} for x in apps]
            out.write(json.dumps(rows, indent=2) + "\n")
        else:
            out.write("a,N,D\n")
            for x in apps:
                out.write(f"{x.a},{x.N},{x.D}\n")

    _emit(args, write)
    return 0


def cmd_spectrum(args):
    spec = eigenphases(_approximant(args))

    def write(out):
        if args.format == "json":
            rows = [
                {
                    "eta": ph.eta,
                    "l": ph.l,
                    "numerator": ph.value.numerator,
                    "denominator": ph.value.denominator,
                    "decimal": float(ph.value),
                }
                for ph in spec.phases
            ]
            out.write(json.dumps(rows, indent=2) + "\n")
        else:
            spectrum_to_csv(spec, out)

    _emit(args, write)
    return 0


def cmd_spacing(args):
    dist = spacings(eigenphases(_approximant(args)))

    def write(out):
        if args.format == "json":
            rows = [{"s": str(s), "weight": str(w)} for s, w in dist.atoms]
            out.write(json.dumps(rows, indent=2) + "\n")
        else:
            spacing_to_csv(dist, out)

    _emit(args, write)
    return 0


def cmd_numvar(args):
    Ls = _parse_lgrid(args.L)
    rows = []
    if args.method == "direct":
        app = _approximant(args)
        spec = eigenphases(app)
        for L in Ls:
            rows.append((L, number_variance_direct(spec, L), "direct-exact", app.D, None))
        D = app.D
    else:
        if args.D is None:
            raise ValueError(f"--method {args.method} requires --D")
        D = args.D
        if args.method == "closed":
            for L in Ls:
                rows.append((L, number_variance_closed(D, L), "closed-form", D, None))
        else:
            for L in Ls:
                v, b = number_variance_fourier(D, L, args.K)
                rows.append((L, v, f"fourier(K={args.K})", D, b))
    if args.poisson:
        for L in Ls:
            rows.append((L, L, "poisson", D, None))

    def write(out):
        if args.format == "json":
            payload = [
                {
                    "L": float(L),
                    "value": float(v),
                    "method": m,
                    "D": d,
                    "truncation_bound": None if b is None else float(b),
                }
                for L, v, m, d, b in rows
            ]
            out.write(json.dumps(payload, indent=2) + "\n")
        else:
            curve_to_csv(rows, out)

    _emit(args, write)
    return 0


def cmd_figure1(args):
    """Six number-variance curves on one L grid, one column per D.

    D = 1, 2, 3, 6 use the exact closed forms; D = 8, 9 use the Gauss-sum
    series with the truncation bound recorded in the header line, plus exact
    direct-sweep spot checks on small spectra with those D.
    """
    Ls = _parse_lgrid(args.L)
    K = args.K
    cols = {}
    for D in FIGURE_DS_CLOSED:
        cols[D] = [float(number_variance_closed(D, L)) for L in Ls]
    bounds = {}
    for D in FIGURE_DS_FOURIER:
        vals = []
        bound = None
        for L in Ls:
            v, bound = number_variance_fourier(D, L, K)
            vals.append(v)
        cols[D] = vals
        bounds[D] = bound

    failures = []
    spot_worst = 0.0
    for D in FIGURE_DS_FOURIER:
        a, N = FIGURE_SPOT_APPS[D]
        spec = eigenphases(Approximant(a, N))
        for L in FIGURE_SPOT_LS:
            v, bound = number_variance_fourier(D, L, K)
            exact = float(number_variance_direct(spec, L))
            gap = abs(exact - v)
            spot_worst = max(spot_worst, gap)
            if gap > bound:
                failures.append(
                    f"spot check D={D} L={L}: |direct - fourier| = {gap!r} "
                    f"exceeds bound {bound!r}"
                )
    if failures:
        for line in failures:
            print(f"FAIL: {line}", file=sys.stderr)
        return 1

    meta = (
        "D1,D2,D3,D6: closed-form (exact); "
        f"D8,D9: fourier(K={K}), truncation bound D8<={bounds[8]!r}, "
        f"D9<={bounds[9]!r}; spot checks max |direct - fourier| = {spot_worst!r}"
    )

    def write(out):
        if args.format == "json":
            payload = {
                "meta": {
                    "methods": {
                        "D1": "closed-form",
                        "D2": "closed-form",
                        "D3": "closed-form",
                        "D6": "closed-form",
                        "D8": f"fourier(K={K})",
                        "D9": f"fourier(K={K})",
                    },
                    "truncation_bounds": {"D8": bounds[8], "D9": bounds[9]},
                    "spot_check_worst": spot_worst,
                },
                "rows": [
                    {
                        "L": float(L),
                        **{f"D{D}": cols[D][i] for D in sorted(cols)},
                    }
                    for i, L in enumerate(Ls)
                ],
            }
            out.write(json.dumps(payload, indent=2) + "\n")
        else:
            out.write(f"# {meta}\n")
            out.write("L,D1,D2,D3,D6,D8,D9\n")
            for i, L in enumerate(Ls):
                vals = ",".join(repr(cols[D][i]) for D in (1, 2, 3, 6, 8, 9))
                out.write(f"{float(L)!r},{vals}\n")

    _emit(args, write)
    return 0


def cmd_orbit(args):
    # --alpha here may be a preset/cf spec or a literal number like 0.5
    try:
        alpha_val = float(Fraction(args.alpha))
    except (ValueError, ZeroDivisionError):
        lo, hi = bracket(parse_alpha(args.alpha))
        alpha_val = float((lo + hi) / 2)
    pts = orbit(TorusPoint(args.p, args.q), alpha_val, args.T)

    def write(out):
        orbit_to_csv(pts, out)

    _emit(args, write)
    return 0


def cmd_witness(args):
    wit = divergence_witness(parse_alpha(args.alpha), args.count)

    def write(out):
        for line in wit.lines():
            out.write(line + "\n")

    _emit(args, write)
    if not (wit.all_rigid_match and wit.all_three_atom_match and wit.laws_distinct):
        print("FAIL: divergence witness inconsistent", file=sys.stderr)
        return 1
    return 0


def cmd_verify(args):
    """Cross-method consistency suite for one approximant."""
    app = _approximant(args)
    N, D, M = app.N, app.D, app.M
    checks = []

    def record(name, residual, tolerance, detail=""):
        ok = residual <= tolerance
        checks.append(
            {
                "name": name,
                "ok": ok,
                "residual": float(residual),
                "tolerance": float(tolerance),
                "detail": detail,
            }
        )
        return ok

    U = build_propagator(app, max_n=args.max_n)
    record("unitarity", unitarity_defect(U), 1e-12)

    numeric = trace_powers(U, 2 * N)
    worst = 0.0
    for n in range(1, 2 * N + 1):
        worst = max(worst, abs(numeric[n - 1] - trace_power_analytic(app, n)))
    record("trace-formula", worst, 1e-9 * N, f"n = 1..{2 * N}")

    spec = eigenphases(app)
    sums = power_sums(spec, N)
    worst = max(abs(sums[n - 1] - numeric[n - 1]) for n in range(1, N + 1))
    record("power-sums", worst, 1e-8 * N, f"n = 1..{N}")

    emp = spacings(spec)
    if D in (1, 2, 3):
        want = spacing_distribution_closed(D)
        record(
            "spacing-law",
            0.0 if emp.atoms == want.atoms else 1.0,
            0.0,
            f"empirical vs closed form, D={D}",
        )
    else:
        record("spacing-law", 0.0, 0.0, f"no closed form for D={D}; skipped")

    sample_ls = [Fraction(1, 2), Fraction(1), Fraction(3, 2), Fraction(7, 3)]
    if D in (1, 2, 3, 6):
        worst = max(
            abs(number_variance_direct(spec, L) - number_variance_closed(D, L))
            for L in sample_ls
        )
        record("numvar-direct-vs-closed", float(worst), 0.0, "exact rational equality")
    else:
        record(
            "numvar-direct-vs-closed", 0.0, 0.0, f"no closed form for D={D}; skipped"
        )

    worst = 0.0
    bound = None
    for L in sample_ls:
        v, bound = number_variance_fourier(D, L, args.K)
        worst = max(worst, abs(float(number_variance_direct(spec, L)) - v))
    record("numvar-direct-vs-fourier", worst, bound, f"K={args.K}")

    ok = all(c["ok"] for c in checks)
    report = {"a": app.a, "N": N, "D": D, "M": M, "ok": ok, "checks": checks}

    def write(out):
        out.write(json.dumps(report, indent=2) + "\n")

    _emit(args, write)
    if not ok:
        for c in checks:
            if not c["ok"]:
                print(f"FAIL: {c['name']}", file=sys.stderr)
        return 1
    return 0


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="skewtorus",
        description=__doc__,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text):
        p = sub.add_parser(name, help=help_text)
        p.set_defaults(func=func)
        p.add_argument("--alpha", default="golden", help="golden, sqrt2, or cf:1,2,2,2")
        p.add_argument("--format", choices=("csv", "json"), default="csv")
        p.add_argument("--out", help="output path (default: stdout)")
        return p

    p = add("approx", cmd_approx, "nearest approximants a/N or a gcd family")
    p.add_argument("--N", type=int, help="single dimension N")
    p.add_argument("--D", type=int, help="family with gcd(a, N) = D")
    p.add_argument("--count", type=int, default=3, help="family size (default 3)")

    for name, func, help_text in (
        ("spectrum", cmd_spectrum, "exact eigenphases (eta, l, value)"),
        ("spacing", cmd_spacing, "exact circular spacing atoms"),
    ):
        p = add(name, func, help_text)
        p.add_argument("--N", type=int, help="dimension N")
        p.add_argument("--a", type=int, help="use (a, N) directly instead of --alpha")

    p = add("numvar", cmd_numvar, "number variance: direct, fourier, or closed")
    p.add_argument("--N", type=int, help="dimension N (method direct)")
    p.add_argument("--a", type=int, help="use (a, N) directly (method direct)")
    p.add_argument("--D", type=int, help="D for closed/fourier methods")
    p.add_argument(
        "--method", choices=("direct", "fourier", "closed"), default="closed"
    )
    p.add_argument("--L", required=True, help='grid "min:max:steps" or one value')
    p.add_argument("--K", type=int, default=10_000, help="series truncation order")
    p.add_argument("--poisson", action="store_true", help="append Sigma^2 = L rows")

    p = add("figure1", cmd_figure1, "six number-variance curves, one column per D")
    p.add_argument("--L", default="0:9:451", help="L grid (default 0:9:451)")
    p.add_argument("--K", type=int, default=10_000, help="series truncation order")

    p = add("witness", cmd_witness, "two approximant families, two spacing laws")
    p.add_argument("--count", type=int, default=3, help="members per family")

    p = add("orbit", cmd_orbit, "classical orbit CSV t,p,q")
    p.add_argument("--p", type=float, default=0.0)
    p.add_argument("--q", type=float, default=0.0)
    p.add_argument("--T", type=int, default=1000)

    p = add("verify", cmd_verify, "cross-method consistency suite, JSON report")
    p.add_argument("--N", type=int, help="dimension N")
    p.add_argument("--a", type=int, help="use (a, N) directly instead of --alpha")
    p.add_argument("--K", type=int, default=2000, help="fourier order for the check")
    p.add_argument(
        "--max-N",
        dest="max_n",
        type=int,
        default=DEFAULT_MAX_N,
        help="dimension guard for matrix work",
    )

    return parser


def main(argv=None):
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except PrecisionExhaustedError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except GridError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 4
    except UnsupportedClosedFormError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entry():
    raise SystemExit(main())
