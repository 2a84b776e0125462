"""Command-line harness.

Subcommands map the package's claims to reproducible experiments:

    eval     one point, one quantity (eta, zeta, gamma, functional-residual)
    diag     diagnostic sweep over (sigma, t, N) grids, preset or explicit
    zeros    critical-line scan with equivalence and symmetry columns
    sweep-u  continuity sweep of the cross term over the exponent u
    verify   seeded property suites with a pass/fail summary

Exit codes: 0 success, 1 usage error (bad arguments), 2 domain error
(pole, singular factor with the fallback disabled, unwritable output),
3 verify-suite failure. Errors print one line to stderr; no traceback
escapes main().
"""

from __future__ import annotations

import argparse
import sys
import time

from .diagnostics import cross_term_sweep, diagnostic_series
from .errors import CostGuardError, DomainError, ZetalabError
from .gammafn import gamma_complex
from .report import (
    DIAG_COLUMNS,
    FORMATS,
    ZERO_COLUMNS,
    ReportRow,
    SweepConfig,
    fmt17,
    write_rows,
)
from .series import (
    eta_accelerated,
    functional_equation_residual,
    zeta_from_eta,
)
from .verify import SUITES, run_suite
from .zeros import check_symmetry, scan_zeros, verify_zero_equivalence

# First zero ordinate, used by the diag presets.
_T_FIRST_ZERO = 14.134725

_PRESETS = {
    "case-critical": {
        "sigma_grid": (0.5,),
        "t_values": (_T_FIRST_ZERO,),
        "n_list": (100, 1000, 10000, 100000, 1000000),
    },
    "case-upper": {
        "sigma_grid": (0.6, 0.7, 0.8),
        "t_values": (_T_FIRST_ZERO,),
        "n_list": (100, 1000, 10000, 100000, 1000000),
    },
    "case-lower": {
        "sigma_grid": (0.3,),
        "t_values": (_T_FIRST_ZERO,),
        "n_list": (100, 1000, 10000, 100000, 1000000),
    },
}

_EVAL_KINDS = ("eta", "zeta", "gamma", "functional-residual")


class _UsageError(Exception):
    """Raised for malformed arguments; mapped to exit code 1."""


class _Parser(argparse.ArgumentParser):
    """argparse that reports usage problems through _UsageError.

    The stock parser calls sys.exit(2); this package reserves 2 for
    domain errors, so usage failures are rerouted.
    """

    def error(self, message):
        raise _UsageError(message)


def parse_complex(text: str) -> complex:
    """Parse 's' literals like 2, 0.5+14.1i, -1.5i, 1-2i, or 3+4j."""
    cleaned = text.strip().replace(" ", "").replace("i", "j").replace("I", "j")
    if not cleaned:
        raise _UsageError("empty complex literal")
    try:
        return complex(cleaned)
    except ValueError:
        raise _UsageError(f"malformed complex literal {text!r}") from None


def _parse_grid_spec(spec: str):
    """'lo:hi:count' -> evenly spaced grid with both endpoints included."""
    parts = spec.split(":")
    if len(parts) != 3:
        raise _UsageError(f"grid spec must be lo:hi:count, got {spec!r}")
    try:
        lo, hi = float(parts[0]), float(parts[1])
        count = int(parts[2])
    except ValueError:
        raise _UsageError(f"grid spec must be lo:hi:count, got {spec!r}") from None
    if count < 2:
        raise _UsageError(f"grid needs at least 2 points, got {count}")
    if not (0.0 < lo < hi < 1.0):
        raise _UsageError(
            f"grid must satisfy 0 < lo < hi < 1 (endpoints excluded), got {spec!r}"
        )
    stepw = (hi - lo) / (count - 1)
    return [lo + i * stepw for i in range(count)]


def _float_list(text: str, flag: str):
    try:
        values = [float(part) for part in text.split(",") if part.strip() != ""]
    except ValueError:
        raise _UsageError(f"{flag} expects comma-separated numbers, got {text!r}") from None
    if not values:
        raise _UsageError(f"{flag} must list at least one value")
    return values


def _int_list(text: str, flag: str):
    try:
        values = [int(part) for part in text.split(",") if part.strip() != ""]
    except ValueError:
        raise _UsageError(f"{flag} expects comma-separated integers, got {text!r}") from None
    if not values:
        raise _UsageError(f"{flag} must list at least one value")
    return values


def _write_report(path: str, columns, rows, fmt: str) -> None:
    try:
        write_rows(path, columns, rows, fmt)
    except OSError as exc:
        raise DomainError(f"cannot write output file {path!r}: {exc}") from exc


def _complex_human(z: complex) -> str:
    sign = "+" if z.imag >= 0 else "-"
    return f"{fmt17(z.real)} {sign} {fmt17(abs(z.imag))}i"


def cmd_eval(args) -> int:
    s = parse_complex(args.s)
    t0 = time.perf_counter()
    extra_bits = []
    n_used = 0
    if args.what == "eta":
        ev = eta_accelerated(s, args.tol)
        value = ev.value
        n_used = ev.n_terms_used
        human = f"eta({_complex_human(s)}) = {_complex_human(value)}"
        extra_bits = [
            f"value_re={fmt17(value.real)}",
            f"value_im={fmt17(value.imag)}",
            f"abs={fmt17(abs(value))}",
            f"method={ev.method.value}",
            f"error_estimate={fmt17(ev.error_estimate)}",
        ]
    elif args.what == "zeta":
        ev = zeta_from_eta(s, args.tol, use_fallback=not args.no_fallback)
        value = ev.value
        n_used = ev.n_terms_used
        human = f"zeta({_complex_human(s)}) = {_complex_human(value)}"
        extra_bits = [
            f"value_re={fmt17(value.real)}",
            f"value_im={fmt17(value.imag)}",
            f"abs={fmt17(abs(value))}",
            f"method={ev.method.value}",
            f"error_estimate={fmt17(ev.error_estimate)}",
        ]
    elif args.what == "gamma":
        value = gamma_complex(s)
        human = f"gamma({_complex_human(s)}) = {_complex_human(value)}"
        extra_bits = [
            f"value_re={fmt17(value.real)}",
            f"value_im={fmt17(value.imag)}",
            f"abs={fmt17(abs(value))}",
        ]
    else:  # functional-residual
        residual = functional_equation_residual(s, args.tol)
        human = f"functional residual at {_complex_human(s)} = {fmt17(residual)}"
        extra_bits = [f"residual={fmt17(residual)}"]
    wall_ms = int(round(1000.0 * (time.perf_counter() - t0)))

    print(human)
    row = ReportRow(
        experiment_id=f"eval-{args.what}",
        values={
            "sigma": s.real,
            "t": s.imag,
            "N": n_used,
            "extra": " ".join(extra_bits),
        },
        wall_time_ms=wall_ms,
    ).flat(DIAG_COLUMNS)
    if args.out:
        _write_report(args.out, DIAG_COLUMNS, [row], args.format)
        print(f"wrote 1 row to {args.out}")
    else:
        print("row:", ",".join("" if row[c] is None else str(row[c]) for c in DIAG_COLUMNS))
    return 0


def cmd_diag(args) -> int:
    if args.preset is None and not (args.sigma_grid or args.t or args.n_list):
        raise _UsageError("diag needs --preset or explicit --sigma-grid/--t/--n-list")
    base = dict(_PRESETS[args.preset]) if args.preset else {}
    sigma_grid = (
        tuple(_float_list(args.sigma_grid, "--sigma-grid"))
        if args.sigma_grid
        else base.get("sigma_grid")
    )
    t_values = tuple(_float_list(args.t, "--t")) if args.t else base.get("t_values")
    n_list = tuple(_int_list(args.n_list, "--n-list")) if args.n_list else base.get("n_list")
    if not (sigma_grid and t_values and n_list):
        raise _UsageError("diag needs a full grid: --sigma-grid, --t, and --n-list")
    config = SweepConfig(
        sigma_grid=tuple(sigma_grid),
        t_values=tuple(t_values),
        n_list=tuple(n_list),
        output_path=args.out,
        format=args.format,
        seed=args.seed,
    )
    rows = []
    for sigma in config.sigma_grid:
        for t in config.t_values:
            for n in config.n_list:
                t0 = time.perf_counter()
                rec = diagnostic_series(complex(sigma, t), [n])[0]
                wall_ms = int(round(1000.0 * (time.perf_counter() - t0)))
                rows.append(
                    ReportRow(
                        experiment_id=args.preset or "diag",
                        values={
                            "sigma": sigma,
                            "t": t,
                            "N": rec.n_terms,
                            "P_N": rec.power_sum,
                            "T_N": rec.cross_term,
                            "S_N": rec.combined_sum,
                            "eta_abs_sq": rec.eta_abs_sq,
                            "identity_residual": rec.identity_residual,
                            # divergence diagnostic: T_N + P_N / 2
                            "extra": fmt17(rec.cross_term + 0.5 * rec.power_sum),
                        },
                        wall_time_ms=wall_ms,
                    ).flat(DIAG_COLUMNS)
                )
    _write_report(config.output_path, DIAG_COLUMNS, rows, config.format)
    print(f"wrote {len(rows)} rows to {config.output_path}")
    return 0


def cmd_zeros(args) -> int:
    t_lo = args.t_lo if args.t_lo is not None else args.pos_t_lo
    t_hi = args.t_hi if args.t_hi is not None else args.pos_t_hi
    step = args.step if args.step is not None else args.pos_step
    if t_lo is None or t_hi is None:
        raise _UsageError("zeros needs t_lo and t_hi (positional or --t-lo/--t-hi)")
    if step is None:
        step = 0.1
    try:
        t0 = time.perf_counter()
        cands = scan_zeros(t_lo, t_hi, step)
        scan_ms = int(round(1000.0 * (time.perf_counter() - t0)))
    except ValueError as exc:
        raise _UsageError(str(exc)) from None
    shared_ms = scan_ms // max(1, len(cands))
    rows = []
    for cand in cands:
        t1 = time.perf_counter()
        equiv = verify_zero_equivalence(complex(0.5, cand.refined_t))
        sym = check_symmetry(cand)
        check_ms = int(round(1000.0 * (time.perf_counter() - t1)))
        rows.append(
            ReportRow(
                experiment_id="zeros",
                values={
                    "t_lo": cand.bracket[0],
                    "t_hi": cand.bracket[1],
                    "refined_t": cand.refined_t,
                    "iterations": cand.iterations,
                    "z_residual": cand.z_residual,
                    "eta_residual": cand.eta_residual,
                    "zeta_residual": cand.zeta_residual,
                    "eta_abs": equiv.eta_abs,
                    "zeta_abs": equiv.zeta_abs,
                    "factor_abs": equiv.factor_abs,
                    "verdict": equiv.verdict,
                    "conjugate_residual": sym.conjugate_residual,
                },
                wall_time_ms=shared_ms + check_ms,
            ).flat(ZERO_COLUMNS)
        )
    if args.out:
        _write_report(args.out, ZERO_COLUMNS, rows, args.format)
        print(f"wrote {len(rows)} rows to {args.out}")
    else:
        for row in rows:
            print(
                f"zero at t={fmt17(row['refined_t'])} "
                f"(z={fmt17(row['z_residual'])}, eta={fmt17(row['eta_residual'])}, "
                f"zeta={fmt17(row['zeta_residual'])}, verdict={row['verdict']})"
            )
        print(f"{len(rows)} candidates on [{fmt17(t_lo)}, {fmt17(t_hi)}] step {fmt17(step)}")
    return 0


def cmd_sweep_u(args) -> int:
    grid = _parse_grid_spec(args.grid)
    if args.n < 1:
        raise _UsageError(f"--n must be >= 1, got {args.n}")
    t0 = time.perf_counter()
    pairs = cross_term_sweep(grid, args.t, args.n)
    total_ms = int(round(1000.0 * (time.perf_counter() - t0)))
    shared_ms = total_ms // max(1, len(pairs))
    rows = []
    for idx, (u, f_value) in enumerate(pairs):
        # forward difference to the next grid point; empty on the last row
        fd = None
        if idx + 1 < len(pairs):
            fd = pairs[idx + 1][1] - f_value
        rows.append(
            ReportRow(
                experiment_id="sweep-u",
                values={
                    "sigma": u,
                    "t": args.t,
                    "N": args.n,
                    "T_N": f_value,
                    "extra": "" if fd is None else fmt17(fd),
                },
                wall_time_ms=shared_ms,
            ).flat(DIAG_COLUMNS)
        )
    _write_report(args.out, DIAG_COLUMNS, rows, args.format)
    print(f"wrote {len(rows)} rows to {args.out}")
    return 0


def cmd_verify(args) -> int:
    results = run_suite(args.suite, args.seed)
    all_passed = True
    for result in results:
        for line in result.lines:
            print(line)
        all_passed = all_passed and result.passed
    print(f"verify {args.suite}: {'PASS' if all_passed else 'FAIL'} (seed={args.seed})")
    return 0 if all_passed else 3


def build_parser() -> _Parser:
    parser = _Parser(prog="zetalab", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p_eval = sub.add_parser("eval", help="evaluate one quantity at one point")
    p_eval.add_argument("--s", required=True, help="complex point, e.g. 0.5+14.134725i")
    p_eval.add_argument("--what", required=True, choices=_EVAL_KINDS)
    p_eval.add_argument("--tol", type=float, default=1e-12)
    p_eval.add_argument(
        "--no-fallback",
        action="store_true",
        help="fail near factor zeros instead of switching to Euler-Maclaurin",
    )
    p_eval.add_argument("--out", default=None)
    p_eval.add_argument("--format", choices=FORMATS, default="csv")
    p_eval.set_defaults(func=cmd_eval)

    p_diag = sub.add_parser("diag", help="diagnostic sweep over (sigma, t, N)")
    p_diag.add_argument("--preset", choices=sorted(_PRESETS), default=None)
    p_diag.add_argument("--sigma-grid", default=None, help="comma-separated sigmas")
    p_diag.add_argument("--t", default=None, help="comma-separated t values")
    p_diag.add_argument("--n-list", default=None, help="comma-separated Ns, increasing")
    p_diag.add_argument("--out", required=True)
    p_diag.add_argument("--format", choices=FORMATS, default="csv")
    p_diag.add_argument("--seed", type=int, default=42)
    p_diag.set_defaults(func=cmd_diag)

    p_zeros = sub.add_parser("zeros", help="scan the critical line for zeros")
    p_zeros.add_argument("pos_t_lo", nargs="?", type=float, default=None, metavar="t_lo")
    p_zeros.add_argument("pos_t_hi", nargs="?", type=float, default=None, metavar="t_hi")
    p_zeros.add_argument("pos_step", nargs="?", type=float, default=None, metavar="step")
    p_zeros.add_argument("--t-lo", type=float, default=None)
    p_zeros.add_argument("--t-hi", type=float, default=None)
    p_zeros.add_argument("--step", type=float, default=None)
    p_zeros.add_argument("--out", default=None)
    p_zeros.add_argument("--format", choices=FORMATS, default="csv")
    p_zeros.set_defaults(func=cmd_zeros)

    p_sweep = sub.add_parser("sweep-u", help="cross-term continuity sweep in u")
    p_sweep.add_argument("--t", type=float, required=True)
    p_sweep.add_argument("--n", type=int, required=True)
    p_sweep.add_argument("--grid", required=True, help="lo:hi:count inside (0,1)")
    p_sweep.add_argument("--out", required=True)
    p_sweep.add_argument("--format", choices=FORMATS, default="csv")
    p_sweep.set_defaults(func=cmd_sweep_u)

    p_verify = sub.add_parser("verify", help="run a property suite")
    p_verify.add_argument("suite", choices=SUITES)
    p_verify.add_argument("--seed", type=int, default=42)
    p_verify.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 1
    except (DomainError, CostGuardError) as exc:
        print(f"domain error: {exc}", file=sys.stderr)
        return 2
    except ZetalabError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 1
    except KeyboardInterrupt:
        print("interrupted", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
