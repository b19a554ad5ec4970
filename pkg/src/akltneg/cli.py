"""Command-line front end: evaluate, sweep, and verify negativities.

Subcommands:

* eval:   compute rows for one or more geometry points, print to stdout.
* sweep:  same rows, written to a file for external plotting.
* verify: run the dense-oracle equivalence suite over every small
          geometry and exit nonzero on any disagreement.

Output rows are deterministic (lexicographic over swept lengths, then
weights in the order given); identical configurations produce
byte-identical CSV.
"""

import argparse
import json
import sys

import numpy as np

from . import __version__
from . import vbs_oracle
from .edge_rdm import BlockGeometry, BoundaryWeights
from .spectrum import negativity_of

CSV_HEADER = (
    "mode,lc_l1,la,l_l2,lb,le,weights,"
    "negativity_analytic,negativity_oracle,spectrum_min,abs_diff"
)

# Caps for the dense comparison route: total spin-1 sites bounded by
# the state builder, the kept pair bounded by the eigensolver budget.
ORACLE_MAX_TOTAL = vbs_oracle.MAX_SITES
ORACLE_MAX_KEPT = 5


def _parse_range(text):
    """'3' -> [3]; '1:4' -> [1, 2, 3, 4] (inclusive, may be empty)."""
    parts = str(text).split(":")
    try:
        if len(parts) == 1:
            return [int(parts[0])]
        if len(parts) == 2:
            lo, hi = int(parts[0]), int(parts[1])
            return list(range(lo, hi + 1))
    except ValueError:
        pass
    raise argparse.ArgumentTypeError(f"expected N or LO:HI, got {text!r}")


def _range_text(values):
    if not values:
        return "empty"
    return f"{values[0]}:{values[-1]}"


def _fmt(value):
    """Shortest round-trip float formatting; blank for missing."""
    if value is None:
        return ""
    if isinstance(value, float):
        return repr(value)
    return str(value)


def _geometry_points(args):
    """Deterministic (geometry, weights) stream for the parsed config."""
    if args.mode == "half":
        axes = (args.lc, args.la, args.gap, args.lb, args.le)
        make = lambda lc, la, gap, lb, le: BlockGeometry.half_boundary(
            lc, la, gap, lb, le
        )
    elif args.mode == "spin1":
        axes = (args.la, args.gap, args.lb)
        make = lambda la, gap, lb: BlockGeometry.spin1_boundary(la, gap, lb)
    else:
        axes = (args.l1, args.la, args.l2, args.lb)
        make = lambda l1, la, l2, lb: BlockGeometry.periodic(l1, la, l2, lb)

    def points(lengths=(), depth=0):
        if depth == len(axes):
            geometry = make(*lengths)
            for w in args.weight_objects or [None]:
                yield geometry, w
            return
        for v in axes[depth]:
            yield from points(lengths + (v,), depth + 1)

    return points()


def _row(geometry, weights, use_oracle):
    res = negativity_of(geometry, weights)
    g = geometry
    if g.mode == "half":
        first, middle, last = g.l_left, g.l_gap, g.l_right
    elif g.mode == "spin1":
        first, middle, last = None, g.l_gap, None
    else:
        first, middle, last = g.l_gap, g.l_sep2, None
    row = {
        "mode": g.mode,
        "lc_l1": first,
        "la": g.l_a,
        "l_l2": middle,
        "lb": g.l_b,
        "le": last,
        "weights": weights.label if weights is not None else None,
        "negativity_analytic": res.negativity,
        "negativity_oracle": None,
        "spectrum_min": res.spectrum.minimum,
        "abs_diff": None,
    }
    if use_oracle:
        n_oracle, _ = vbs_oracle.oracle_negativity(geometry, weights)
        row["negativity_oracle"] = n_oracle
        row["abs_diff"] = abs(res.negativity - n_oracle)
    return row


def _check_oracle_cap(points):
    for geometry, _ in points:
        if geometry.total_sites > ORACLE_MAX_TOTAL:
            raise ValueError(
                f"oracle comparison needs total spin-1 sites <= {ORACLE_MAX_TOTAL}, "
                f"got {geometry.total_sites}"
            )
        if geometry.l_a + geometry.l_b > ORACLE_MAX_KEPT:
            raise ValueError(
                f"oracle comparison needs L_A + L_B <= {ORACLE_MAX_KEPT}, "
                f"got {geometry.l_a + geometry.l_b}"
            )


def _config_echo(args):
    parts = [f"mode={args.mode}"]
    if args.mode == "half":
        parts += [f"lc={_range_text(args.lc)}", f"la={_range_text(args.la)}",
                  f"l={_range_text(args.gap)}", f"lb={_range_text(args.lb)}",
                  f"le={_range_text(args.le)}"]
    elif args.mode == "spin1":
        parts += [f"la={_range_text(args.la)}", f"l={_range_text(args.gap)}",
                  f"lb={_range_text(args.lb)}"]
    else:
        parts += [f"l1={_range_text(args.l1)}", f"la={_range_text(args.la)}",
                  f"l2={_range_text(args.l2)}", f"lb={_range_text(args.lb)}"]
    labels = [w.label for w in args.weight_objects] if args.weight_objects else []
    parts.append("weights=" + (",".join(labels) if labels else "-"))
    parts.append(f"oracle={'yes' if args.oracle else 'no'}")
    parts.append(f"tolerance={_fmt(args.tolerance)}")
    return " ".join(parts)


def _emit(rows, args, stream):
    if args.format == "csv":
        stream.write(f"# akltneg {__version__}\n")
        stream.write(f"# config: {_config_echo(args)}\n")
        stream.write(CSV_HEADER + "\n")
        for row in rows:
            stream.write(",".join(_fmt(row[k]) for k in CSV_HEADER.split(",")) + "\n")
    else:
        doc = {
            "tool": "akltneg",
            "version": __version__,
            "config": _config_echo(args),
            "rows": rows,
        }
        json.dump(doc, stream, indent=2)
        stream.write("\n")


def _resolve_weights(args):
    if args.mode == "spin1":
        if not args.weights:
            raise ValueError("spin1 mode requires --weights")
        args.weight_objects = [BoundaryWeights.from_label(w) for w in args.weights]
    else:
        if args.weights:
            raise ValueError("--weights only applies to spin1 mode")
        args.weight_objects = []


def _cmd_eval_or_sweep(args):
    _resolve_weights(args)
    points = list(_geometry_points(args))
    if args.oracle:
        _check_oracle_cap(points)
    rows = [_row(g, w, args.oracle) for g, w in points]
    if args.command == "sweep":
        try:
            with open(args.output, "w") as fh:
                _emit(rows, args, fh)
        except OSError as exc:
            print(f"error: cannot write {args.output}: {exc}", file=sys.stderr)
            return 2
    else:
        _emit(rows, args, sys.stdout)
    if args.oracle:
        worst = max((r["abs_diff"] for r in rows), default=0.0)
        if worst > args.tolerance:
            print(
                f"error: oracle mismatch {worst:.3e} exceeds tolerance "
                f"{args.tolerance:.3e}",
                file=sys.stderr,
            )
            return 3
    return 0


def verification_suite(max_total=8):
    """The oracle-equivalence configurations: every mode, environments
    and separations 0..2, blocks of 1..2 sites, all named boundary
    weights plus one fixed random unit vector."""
    configs = []
    for lc in (0, 1):
        for la in (1, 2):
            for gap in (0, 1, 2):
                for lb in (1, 2):
                    for le in (0, 1):
                        g = BlockGeometry.half_boundary(lc, la, gap, lb, le)
                        if g.total_sites <= max_total:
                            configs.append((g, None))
    rng = np.random.default_rng(7)
    v = rng.normal(size=4) + 1j * rng.normal(size=4)
    weight_set = [BoundaryWeights.from_label(lbl) for lbl in
                  ("beta0", "beta1", "beta2", "beta3", "cc", "cd", "dc", "dd")]
    weight_set.append(BoundaryWeights(v, label="random"))
    for la in (1, 2):
        for gap in (0, 1, 2):
            for lb in (1, 2):
                g = BlockGeometry.spin1_boundary(la, gap, lb)
                if g.total_sites <= max_total:
                    configs.extend((g, w) for w in weight_set)
    for l1 in (0, 1, 2):
        for la in (1, 2):
            for l2 in (0, 1, 2):
                for lb in (1, 2):
                    g = BlockGeometry.periodic(l1, la, l2, lb)
                    if g.total_sites <= max_total:
                        configs.append((g, None))
    return configs


def run_verification(max_total=8, tolerance=1e-10, out=None):
    """Compare edge pipeline against the dense oracle on the whole
    suite; returns (ok, worst negativity diff, worst spectrum gap)."""
    out = out or sys.stdout
    configs = verification_suite(max_total)
    by_mode = {}
    worst_n = worst_s = 0.0
    for geometry, weights in configs:
        res = negativity_of(geometry, weights)
        n_oracle, ev_oracle = vbs_oracle.oracle_negativity(geometry, weights)
        d_n = abs(res.negativity - n_oracle)
        d_s = vbs_oracle.padded_spectrum_gap(res.spectrum.eigenvalues, ev_oracle)
        worst_n = max(worst_n, d_n)
        worst_s = max(worst_s, d_s)
        agg = by_mode.setdefault(geometry.mode, [0, 0.0, 0.0])
        agg[0] += 1
        agg[1] = max(agg[1], d_n)
        agg[2] = max(agg[2], d_s)
    for mode in ("half", "spin1", "pbc"):
        count, d_n, d_s = by_mode.get(mode, (0, 0.0, 0.0))
        print(
            f"{mode:>5}: {count:3d} configs  max|dN|={d_n:.3e}  "
            f"max spectrum gap={d_s:.3e}",
            file=out,
        )
    ok = worst_n <= tolerance and worst_s <= tolerance
    verdict = "PASS" if ok else "FAIL"
    print(
        f"verify: {verdict} ({len(configs)} configs, tolerance {tolerance:g})",
        file=out,
    )
    return ok, worst_n, worst_s


def _cmd_verify(args):
    ok, _, _ = run_verification(args.max_sites, args.tolerance)
    return 0 if ok else 3


def _add_geometry_flags(sub):
    sub.add_argument("--mode", required=True, choices=("half", "spin1", "pbc"))
    sub.add_argument("--la", type=_parse_range, default=[1],
                     help="block A length or LO:HI range")
    sub.add_argument("--lb", type=_parse_range, default=[1],
                     help="block B length or LO:HI range")
    sub.add_argument("--gap", type=_parse_range, default=[0],
                     help="separation between the blocks (half, spin1)")
    sub.add_argument("--lc", type=_parse_range, default=[1],
                     help="left environment length (half)")
    sub.add_argument("--le", type=_parse_range, default=[1],
                     help="right environment length (half)")
    sub.add_argument("--l1", type=_parse_range, default=[1],
                     help="first separating arc (pbc)")
    sub.add_argument("--l2", type=_parse_range, default=[1],
                     help="second separating arc (pbc)")
    sub.add_argument("--weights", nargs="+", default=None,
                     help="boundary weights for spin1 mode: beta0..beta3, "
                          "cc, cd, dc, dd, or 'a,b,c,d' complex components")
    sub.add_argument("--oracle", action="store_true",
                     help="also run the dense oracle and report abs_diff")
    sub.add_argument("--format", choices=("csv", "json"), default="csv")
    sub.add_argument("--tolerance", type=float, default=1e-10)


def build_parser():
    parser = argparse.ArgumentParser(
        prog="akltneg",
        description="Entanglement negativity of two blocks in the AKLT chain",
    )
    parser.add_argument("--version", action="version",
                        version=f"akltneg {__version__}")
    subs = parser.add_subparsers(dest="command", required=True)

    p_eval = subs.add_parser("eval", help="evaluate geometry points to stdout")
    _add_geometry_flags(p_eval)

    p_sweep = subs.add_parser("sweep", help="write a parameter sweep to a file")
    _add_geometry_flags(p_sweep)
    p_sweep.add_argument("--output", required=True, help="destination file")

    p_verify = subs.add_parser(
        "verify", help="compare the edge pipeline against the dense oracle"
    )
    p_verify.add_argument("--max-sites", type=int, default=8,
                          help="largest total spin-1 count in the suite")
    p_verify.add_argument("--tolerance", type=float, default=1e-10)
    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        if args.command == "verify":
            return _cmd_verify(args)
        return _cmd_eval_or_sweep(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
