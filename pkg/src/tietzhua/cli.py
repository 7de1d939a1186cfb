"""Command-line front end: ``th classify|spectrum|wavefunction|curve|table1|validate``.

Every number printed is a library result formatted with ``%.10e``.  Tables
are tab-separated, curves comma-separated; both start with a header row.

Exit codes: 0 success, 2 bad input, 3 numerical failure, 4 self-test mismatch.
"""

import argparse
import csv
import math
import sys
from contextlib import contextmanager

import numpy as np

from . import spectrum
from .catalog import CatalogError, bundled_table1, load_catalog
from .errors import ConvergenceError, DomainError, OracleError
from .model import Case, classify_regime, potential_th, threshold_ch

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_NUMERIC = 3
EXIT_SELFTEST = 4

NUMBER_FORMAT = "%.10e"
TABLE1_TOL = 1e-8
VALIDATE_RTOL = 1e-6
CURVE_SAMPLES = 400

# published minimal c_h for the bundled shape parameters
TABLE1_REFERENCE = {
    "HF": 0.168490115,
    "N2": 0.047071975,
    "I2": 0.003478812,
    "H2": 0.301313237,
    "O2": 0.043832785,
    "O2+": 0.040649248,
}


class _InputError(Exception):
    pass


def fmt(x):
    return NUMBER_FORMAT % x


@contextmanager
def _sink(path):
    if path is None:
        yield sys.stdout
        return
    with open(path, "w", encoding="utf-8", newline="") as fh:
        yield fh


def _emit(args, header, rows, delimiter):
    with _sink(args.out) as fh:
        writer = csv.writer(fh, delimiter=delimiter, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(rows)


def _entries(args, default_bundled=False):
    if args.catalog is not None:
        entries = load_catalog(args.catalog)
    elif default_bundled:
        entries = bundled_table1()
    else:
        raise _InputError("--catalog is required")
    if args.molecule is None:
        return entries
    chosen = [e for e in entries if e.name == args.molecule]
    if not chosen:
        raise _InputError(f"molecule {args.molecule!r} not in catalog")
    return chosen


def _one_entry(args):
    if args.molecule is None:
        raise _InputError("--molecule is required")
    return _entries(args)[0]


def _params(args):
    return _one_entry(args).params(args.ch)


# ---------------------------------------------------------------------------
# commands


def cmd_classify(args):
    rows = []
    for entry in _entries(args, default_bundled=True):
        ch = entry.c_h if args.ch is None else args.ch
        if ch is None:
            raise _InputError(f"{entry.name}: no ch in catalog; pass --ch")
        regime = classify_regime(entry.shape_params(ch))
        r0 = "-" if regime.r0 is None else fmt(regime.r0)
        rows.append([entry.name, regime.case_id.value, fmt(regime.threshold), r0])
    _emit(args, ["name", "case", "threshold", "r0"], rows, "\t")
    return EXIT_OK


def table1_rows(entries):
    """(row, ok) pairs comparing computed thresholds with the reference column."""
    out = []
    for entry in entries:
        threshold = threshold_ch(entry.shape_params(0.0))
        ref = TABLE1_REFERENCE.get(entry.name)
        if ref is None:
            out.append(([entry.name, fmt(entry.b_h), fmt(entry.r_e), fmt(threshold), "-", "-", "n/a"], True))
            continue
        diff = abs(threshold - ref)
        ok = diff <= TABLE1_TOL
        out.append(([entry.name, fmt(entry.b_h), fmt(entry.r_e), fmt(threshold), fmt(ref), fmt(diff),
                     "ok" if ok else "MISMATCH"], ok))
    return out


def cmd_table1(args):
    result = table1_rows(_entries(args, default_bundled=True))
    _emit(args, ["name", "b_h", "r_e", "threshold", "reference", "abs_diff", "status"],
          [row for row, _ in result], "\t")
    return EXIT_OK if all(ok for _, ok in result) else EXIT_SELFTEST


def cmd_spectrum(args, validate=None):
    params = _params(args)
    validate = args.validate if validate is None else validate
    report = spectrum.solve(params)
    for w in report.warnings:
        print(f"warning: {w}", file=sys.stderr)
    header = ["n_r", "E_cm1", "method"]
    rows = [[str(s.n_r), fmt(s.E), s.method] for s in report.states]
    status = EXIT_OK
    if validate:
        header += ["oracle_E_cm1", "rel_diff"]
        levels = spectrum.oracle_levels(params)
        if len(levels) != len(report.states):
            print(f"self-test: {len(report.states)} states against {len(levels)} oracle levels", file=sys.stderr)
            status = EXIT_SELFTEST
        for i, row in enumerate(rows):
            if i < len(levels):
                ref = levels[i][0]
                rel = abs(report.states[i].E - ref) / abs(ref)
                row += [fmt(ref), fmt(rel)]
                if not rel <= VALIDATE_RTOL:
                    status = EXIT_SELFTEST
            else:
                row += ["-", "-"]
    _emit(args, header, rows, "\t")
    return status


def cmd_validate(args):
    return cmd_spectrum(args, validate=True)


def _curve_range(args, params, state):
    regime = classify_regime(params)
    if state is not None:
        grid = spectrum.node_grid(params, state.E, 2, spectrum.NORM_CUT)
        lo, hi = float(grid[0]), float(grid[-1])
    else:
        lo = 0.5 * params.r_e
        if regime.case_id is Case.I:
            lo = max(lo, regime.r0 + 0.05 / params.b_h)
        hi = params.r_e + 60.0 / params.b_h
    lo = lo if args.r_min is None else args.r_min
    hi = hi if args.r_max is None else args.r_max
    if not lo < hi:
        raise _InputError(f"empty radius range [{lo}, {hi}]")
    return np.linspace(lo, hi, args.samples)


def cmd_curve(args, what=None):
    what = args.what if what is None else what
    params = _params(args)
    if args.samples < 2:
        raise _InputError("--samples must be at least 2")
    if what == "potential":
        r = _curve_range(args, params, None)
        values = potential_th(params, r)
    else:
        report = spectrum.solve(params)
        if not 0 <= args.n < len(report.states):
            raise _InputError(f"n_r = {args.n} out of range; {len(report.states)} bound states")
        state = report.states[args.n]
        r = _curve_range(args, params, state)
        values = spectrum.normalized_wavefunction(params, state, r)
    _emit(args, ["r_A", what], ([fmt(x), fmt(y)] for x, y in zip(r, values)), ",")
    return EXIT_OK


def cmd_wavefunction(args):
    return cmd_curve(args, what="wavefunction")


# ---------------------------------------------------------------------------
# parser


def _finite(text):
    value = float(text)
    if not math.isfinite(value):
        raise argparse.ArgumentTypeError(f"not a finite number: {text}")
    return value


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--catalog", metavar="PATH", help="catalog file")
    common.add_argument("--molecule", metavar="NAME", help="catalog entry to use")
    common.add_argument("--ch", type=_finite, metavar="X", help="override the catalog c_h")
    common.add_argument("--out", metavar="PATH", help="write output here instead of stdout")

    curve = argparse.ArgumentParser(add_help=False)
    curve.add_argument("--n", type=int, default=0, help="vibrational quantum number (default 0)")
    curve.add_argument("--r-min", type=_finite, help="left end of the radius range (angstrom)")
    curve.add_argument("--r-max", type=_finite, help="right end of the radius range (angstrom)")
    curve.add_argument("--samples", type=int, default=CURVE_SAMPLES, help="number of radii")

    parser = argparse.ArgumentParser(prog="th", description="Tietz-Hua bound states of diatomic molecules.")
    sub = parser.add_subparsers(dest="command", required=True)
    p = sub.add_parser("classify", parents=[common], help="regime, threshold c_h and singular radius")
    p.set_defaults(func=cmd_classify)
    p = sub.add_parser("table1", parents=[common], help="threshold self-test on the bundled shape data")
    p.set_defaults(func=cmd_table1)
    p = sub.add_parser("spectrum", parents=[common], help="bound-state energies")
    p.add_argument("--validate", action="store_true", help="append Numerov reference energies")
    p.set_defaults(func=cmd_spectrum)
    p = sub.add_parser("validate", parents=[common], help="spectrum with the Numerov comparison")
    p.set_defaults(func=cmd_validate, validate=True)
    p = sub.add_parser("curve", parents=[common, curve], help="potential or wavefunction on a grid")
    p.add_argument("--what", choices=("potential", "wavefunction"), default="potential")
    p.set_defaults(func=cmd_curve)
    p = sub.add_parser("wavefunction", parents=[common, curve], help="normalized wavefunction on a grid")
    p.set_defaults(func=cmd_wavefunction)
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (_InputError, CatalogError, DomainError) as exc:
        print(f"th: error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (ConvergenceError, OracleError, ArithmeticError) as exc:
        print(f"th: numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    except OSError as exc:
        print(f"th: error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
