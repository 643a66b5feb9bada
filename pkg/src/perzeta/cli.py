"""Command-line interface for the perzeta library.

Subcommands: point evaluation, covariance tabulation, an accuracy sweep
against the high-precision oracle, randomized positive-semidefiniteness
checks, and a small GP regression demo.  All tabular output is CSV with a
header row and 17-significant-digit values, which round-trips doubles
exactly.

Exit codes: 0 success, 1 bound exceeded, 2 domain error, 3 convergence
error, 4 I/O error, 5 oracle configuration error, 6 conditioning error.
"""

from __future__ import annotations

import argparse
import contextlib
import csv
import math
import sys
from typing import Optional

import numpy as np

from . import gp, kernels, oracle
from .errors import (
    ConditioningError,
    ConvergenceError,
    DomainError,
    OracleConfigError,
)
from .zeta_core import periodic_zeta_real

__all__ = ["main", "build_parser"]

EXIT_OK = 0
EXIT_BOUND = 1
EXIT_DOMAIN = 2
EXIT_CONVERGENCE = 3
EXIT_IO = 4
EXIT_ORACLE = 5
EXIT_CONDITIONING = 6


def _fmt(value: float) -> str:
    return format(float(value), ".17g")


@contextlib.contextmanager
def _open_output(path: Optional[str]):
    if path is None:
        yield sys.stdout
    else:
        with open(path, "w", newline="") as handle:
            yield handle


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="perzeta",
        description="Periodic zeta function and periodic covariance kernels.",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    p_eval = sub.add_parser("eval", help="evaluate Re F(x, s) or the kernel Z_nu(x)")
    mode = p_eval.add_mutually_exclusive_group(required=True)
    mode.add_argument("--raw", action="store_true", help="evaluate Re F(x, s)")
    mode.add_argument("--kernel", action="store_true", help="evaluate Z_nu(x)")
    p_eval.add_argument("--x", type=float, required=True)
    p_eval.add_argument("--s", type=float, help="exponent for --raw")
    p_eval.add_argument("--nu", type=float, help="smoothness for --kernel")
    p_eval.add_argument("--period", type=float, default=1.0)

    p_table = sub.add_parser("table", help="tabulate Z_nu(x) over one period as CSV")
    p_table.add_argument(
        "--nus",
        type=str,
        default="0.25,0.5,1,2,5",
        help="comma-separated smoothness values",
    )
    p_table.add_argument("--grid-points", type=int, default=513)
    p_table.add_argument("--output", type=str, default=None)

    p_acc = sub.add_parser(
        "accuracy", help="sweep the evaluator against the oracle, report ULP errors"
    )
    p_acc.add_argument("--s-min", type=float, default=None)
    p_acc.add_argument("--s-max", type=float, default=None)
    p_acc.add_argument("--bound", type=float, default=128.0)
    p_acc.add_argument("--output", type=str, default=None)

    p_psd = sub.add_parser(
        "psd-check", help="randomized minimum-eigenvalue check of Gram matrices"
    )
    p_psd.add_argument("--geometry", choices=("circle", "sphere"), default="circle")
    p_psd.add_argument("--nu", type=float, default=0.5)
    p_psd.add_argument("--a", type=float, default=1.0, help="sphere spectral head")
    p_psd.add_argument("--period", type=float, default=1.0)
    p_psd.add_argument("--trials", type=int, default=50)
    p_psd.add_argument("--max-size", type=int, default=12)
    p_psd.add_argument("--seed", type=int, default=0)

    p_demo = sub.add_parser("gp-demo", help="fit a periodic GP to synthetic data")
    p_demo.add_argument("--nu", type=float, default=1.5)
    p_demo.add_argument("--noise", type=float, default=0.01)
    p_demo.add_argument("--n-points", type=int, default=16)
    p_demo.add_argument("--seed", type=int, default=0)
    p_demo.add_argument("--output", type=str, default=None)

    return parser


def cmd_eval(args) -> int:
    if args.raw:
        if args.s is None:
            raise DomainError("--raw requires --s")
        x = args.x / args.period
        value = periodic_zeta_real(x, args.s)
    else:
        if args.nu is None:
            raise DomainError("--kernel requires --nu")
        value = kernels.z_nu(args.x, args.nu, args.period)
    print(_fmt(value))
    return EXIT_OK


def cmd_table(args) -> int:
    try:
        nus = [float(tok) for tok in args.nus.split(",") if tok.strip()]
    except ValueError as exc:
        raise DomainError(f"bad --nus list: {exc}") from exc
    if not nus:
        raise DomainError("--nus must name at least one value")
    if args.grid_points < 2:
        raise DomainError("--grid-points must be at least 2")
    with _open_output(args.output) as handle:
        writer = csv.writer(handle)
        writer.writerow(["x"] + [f"z_nu_{format(nu, 'g')}" for nu in nus])
        for k in range(args.grid_points):
            x = k / (args.grid_points - 1)
            writer.writerow([_fmt(x)] + [_fmt(kernels.z_nu(x, nu)) for nu in nus])
    return EXIT_OK


def cmd_accuracy(args) -> int:
    grid = oracle.default_sweep_grid()
    if args.s_min is not None:
        grid = [(x, s) for (x, s) in grid if s >= args.s_min]
    if args.s_max is not None:
        grid = [(x, s) for (x, s) in grid if s <= args.s_max]
    if not grid:
        raise DomainError("empty sweep grid after filtering")
    report = oracle.sweep_accuracy(grid=grid)
    with _open_output(args.output) as handle:
        writer = csv.writer(handle)
        writer.writerow(["x", "s", "ulp_error"])
        for (x, s), err in zip(report.grid, report.errors_ulp):
            writer.writerow([_fmt(x), _fmt(s), _fmt(err)])
    print(f"max_ulp={_fmt(report.max_ulp)}")
    return EXIT_OK if report.max_ulp <= args.bound else EXIT_BOUND


def cmd_psd_check(args) -> int:
    if args.trials < 1:
        raise DomainError("--trials must be at least 1")
    if args.max_size < 2:
        raise DomainError("--max-size must be at least 2")
    if args.geometry == "circle":
        spec = kernels.PeriodicZeta(nu=args.nu, period=args.period)
    else:
        spec = kernels.SphereZeta(nu=args.nu, a=args.a)
    rng = np.random.default_rng(args.seed)
    min_eig = math.inf
    for _ in range(args.trials):
        n = int(rng.integers(2, args.max_size + 1))
        if args.geometry == "circle":
            pts = list(rng.uniform(0.0, args.period, size=n))
        else:
            raw = rng.normal(size=(n, 4))
            raw /= np.linalg.norm(raw, axis=1, keepdims=True)
            pts = list(raw)
        min_eig = min(min_eig, kernels.gram(spec, pts).min_eigenvalue())
    print(f"min_eigenvalue={_fmt(min_eig)}")
    return EXIT_OK if min_eig >= -1e-9 else EXIT_BOUND


def cmd_gp_demo(args) -> int:
    if args.n_points < 2:
        raise DomainError("--n-points must be at least 2")
    if args.noise < 0.0:
        raise DomainError("--noise must be nonnegative")
    rng = np.random.default_rng(args.seed)
    train_x = np.sort(rng.uniform(0.0, 1.0, size=args.n_points))
    latent = gp.sample_prior(train_x, nu=args.nu, seed=args.seed)
    train_y = latent + math.sqrt(args.noise) * rng.standard_normal(args.n_points)
    data = gp.Dataset(x=train_x, y=train_y, noise_variance=args.noise)
    query = np.linspace(0.0, 1.0, 201)
    result = gp.fit_predict(data, query, nu=args.nu)
    sigma = np.sqrt(result.variance)
    with _open_output(args.output) as handle:
        writer = csv.writer(handle)
        writer.writerow(["x", "mean", "lower", "upper"])
        for x, m, sd in zip(query, result.mean, sigma):
            writer.writerow([_fmt(x), _fmt(m), _fmt(m - 2 * sd), _fmt(m + 2 * sd)])
    print(f"log_marginal_likelihood={_fmt(result.log_marginal_likelihood)}")
    return EXIT_OK


_DISPATCH = {
    "eval": cmd_eval,
    "table": cmd_table,
    "accuracy": cmd_accuracy,
    "psd-check": cmd_psd_check,
    "gp-demo": cmd_gp_demo,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _DISPATCH[args.subcommand](args)
    except ConditioningError as exc:
        print(f"error: {exc} (jitter ladder: {exc.jitter_ladder})", file=sys.stderr)
        return EXIT_CONDITIONING
    except OracleConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ORACLE
    except ConvergenceError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONVERGENCE
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
