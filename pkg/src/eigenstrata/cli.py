"""Command-line front end.

One concern per subcommand; `suite` composes them into the acceptance run.
All randomness flows from --seed through a fixed splitting rule — no clock,
no OS entropy — so identical invocations produce byte-identical output.
Exit codes: 0 success, 1 failure (verification or suite failures), 2 usage.

Report-shaped commands accept --plot FILE to render the same payload as a
figure next to the text/JSON output.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from pathlib import Path

from .distance import FloatSymmetric
from .errors import EigenstrataError
from .partitions import Partition
from . import reports
from .suite import run_suite


@dataclass(frozen=True)
class RunConfig:
    seed: int = 0
    height: int = 10
    mode: str = "auto"
    prime_count: int = 3
    output_format: str = "text"


def _partition(text: str) -> Partition:
    try:
        return Partition.parse(text)
    except Exception as exc:
        raise argparse.ArgumentTypeError(f"bad partition {text!r}: {exc}")


def _t_range(text: str):
    try:
        lo, _, hi = text.partition("..")
        lo, hi = int(lo), int(hi)
        if hi < lo:
            raise ValueError("empty range")
        return range(lo, hi + 1)
    except argparse.ArgumentTypeError:
        raise
    except Exception as exc:
        raise argparse.ArgumentTypeError(f"bad range {text!r} (want a..b): {exc}")


def _emit(args, payload: dict, text: str):
    out = json.dumps(payload, indent=2) + "\n" if args.format == "json" else text + "\n"
    if args.output:
        Path(args.output).write_text(out)
    else:
        sys.stdout.write(out)


def _maybe_plot(args, renderer, payload):
    if getattr(args, "plot", None):
        renderer(payload, args.plot)


def _add_common(p, partition=True, seed=True, height=False, mode=False, degree=False):
    if partition:
        p.add_argument("-p", "--partition", type=_partition, required=True,
                       help="comma list such as 2,1")
    if degree:
        p.add_argument("-d", "--degree", type=int, required=True)
    if seed:
        p.add_argument("--seed", type=int, default=0)
    if height:
        p.add_argument("--height", type=int, default=10,
                       help="bound on numerators/denominators of random rationals")
    if mode:
        p.add_argument("--mode", choices=["auto", "exact", "modular"], default="auto")
    p.add_argument("--format", choices=["json", "text"], default="text")
    p.add_argument("-o", "--output", help="write the report to this file")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="eigenstrata",
        description="Exact computations on strata of real symmetric matrices "
                    "with prescribed eigenvalue multiplicities.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("dimension", help="stratum dimension: formula vs exact rank")
    _add_common(p)

    p = sub.add_parser("sample", help="exact rational points on a stratum")
    _add_common(p, height=True)
    p.add_argument("--count", type=int, default=5)

    p = sub.add_parser("interpolate", help="vanishing forms of one degree")
    _add_common(p, height=True, mode=True, degree=True)
    p.add_argument("--primes", type=int, default=3, dest="prime_count")
    p.add_argument("--plot")

    p = sub.add_parser("verify", help="shipped-generator regression checks")
    _add_common(p, partition=False)
    p.add_argument("--golden-dir", help="override directory with generator files")

    p = sub.add_parser("hilbert", help="Hilbert function: formulas vs oracle")
    _add_common(p)
    p.add_argument("--t-range", type=_t_range, default=None,
                   help="degrees a..b (default n..n+3)")
    p.add_argument("--plot")

    p = sub.add_parser("degree", help="arrangement degree: closed form vs oracle")
    _add_common(p)

    p = sub.add_parser("edd", help="distance-degree counts and critical points")
    _add_common(p)
    p.add_argument("--plot")

    p = sub.add_parser("nearest", help="nearest matrix with prescribed multiplicities")
    _add_common(p, seed=False)
    p.add_argument("--matrix", required=True,
                   help="JSON file with {\"n\": int, \"upper\": [floats]}")
    p.add_argument("--plot")

    p = sub.add_parser("invariants", help="graded invariant dimension table")
    _add_common(p)
    p.add_argument("--dmax", type=int, default=6)
    p.add_argument("--plot")

    p = sub.add_parser("discriminant", help="symbolic matrix discriminant")
    _add_common(p, partition=False, seed=False)
    p.add_argument("-n", type=int, required=True, choices=[2, 3, 4])
    p.add_argument("--sos-check", action="store_true",
                   help="for n=3: compare against the shipped cubics' squares")

    p = sub.add_parser("suite", help="run the acceptance suite")
    _add_common(p, partition=False)
    p.add_argument("--only", help="comma list of criterion numbers")
    p.add_argument("--golden-dir", help="override directory with generator files")
    p.add_argument("--plot-dir", help="write summary figures into this directory")

    return parser


def _text_table(rows, header) -> str:
    widths = [max(len(str(r[i])) for r in [header] + rows) for i in range(len(header))]
    lines = ["  ".join(str(h).ljust(w) for h, w in zip(header, widths))]
    for r in rows:
        lines.append("  ".join(str(c).ljust(w) for c, w in zip(r, widths)))
    return "\n".join(lines)


def cmd_dimension(args) -> int:
    payload = reports.dimension_payload(args.partition, args.seed)
    text = (f"partition {payload['partition']}: formula {payload['formula']} "
            f"(codimension {payload['codimension']}), differential rank "
            f"{payload['rank']}, match: {'yes' if payload['match'] else 'NO'}")
    _emit(args, payload, text)
    return 0 if payload["match"] else 1


def cmd_sample(args) -> int:
    payload = reports.samples_payload(args.partition, args.count, args.seed,
                                      args.height)
    lines = [f"{len(payload['samples'])} samples on the ({payload['partition']}) stratum:"]
    lines += [json.dumps(s) for s in payload["samples"]]
    _emit(args, payload, "\n".join(lines))
    return 0


def cmd_interpolate(args) -> int:
    payload = reports.interpolation_payload(args.partition, args.degree, args.seed,
                                            args.mode, args.height, args.prime_count)
    lines = [f"partition {payload['partition']}, degree {payload['degree']}: "
             f"{payload['nullspace_dim']} vanishing forms "
             f"({payload['monomial_count']} monomials, {payload['sample_count']} "
             f"samples, mode {payload['mode']})"]
    lines += payload["basis_text"]
    _emit(args, payload, "\n".join(lines))
    from .plots import plot_interpolation
    _maybe_plot(args, plot_interpolation, payload)
    return 0


def cmd_verify(args) -> int:
    payload = reports.verify_payload(args.seed, args.golden_dir)
    rows = []
    for c in payload["cases"]:
        rows.append([c["partition"], c["file"], c["generator_count"],
                     "ok" if not c["vanishing_failures"] else "FAIL",
                     "ok" if c["span_matches_interpolation"] else "FAIL",
                     ",".join(str(x) for x in c["jacobian_codims"]),
                     c["expected_codim"]])
    text = _text_table(rows, ["partition", "file", "generators", "vanishing",
                              "span", "jacobian", "expected"])
    text += f"\noverall: {'ok' if payload['ok'] else 'FAILURES'}"
    _emit(args, payload, text)
    return 0 if payload["ok"] else 1


def cmd_hilbert(args) -> int:
    lam = args.partition
    t_values = args.t_range if args.t_range is not None else range(lam.n, lam.n + 4)
    payload = reports.hilbert_payload(lam, t_values, args.seed)
    rows = [[r["t"], r["paper"] if r["paper"] is not None else "-",
             r["derksen"], r["oracle"] if r["oracle"] is not None else "-",
             "yes" if r["match"] else "NO", r["note"]]
            for r in payload["rows"]]
    text = (f"partition {payload['partition']}\n" +
            _text_table(rows, ["t", "ordered-form", "distinct-form", "oracle",
                               "match", "note"]))
    _emit(args, payload, text)
    from .plots import plot_hilbert
    _maybe_plot(args, plot_hilbert, payload)
    return 0


def cmd_degree(args) -> int:
    payload = reports.degree_payload(args.partition, args.seed)
    text = (f"partition {payload['partition']}: closed-form degree "
            f"{payload['paper_degree']}, geometric degree "
            f"{payload['geometric_degree']} (validated: {payload['validated']})")
    _emit(args, payload, text)
    return 0


def cmd_edd(args) -> int:
    payload = reports.edd_payload(args.partition, args.seed)
    lines = [f"partition {payload['partition']}: closed form {payload['paper_edd']}, "
             f"distinct subspaces {payload['subspace_count']}, real critical points "
             f"{payload['real_critical_count']}"
             + (" (tie at the data vector)" if payload["tie"] else "")]
    for cp in payload["critical_points"]:
        lines.append(f"  {'|'.join(''.join(str(i) for i in b) for b in cp['subspace']):>14}"
                     f"  squared distance {cp['squared_distance']}")
    _emit(args, payload, "\n".join(lines))
    from .plots import plot_edd
    _maybe_plot(args, plot_edd, payload)
    return 0


def cmd_nearest(args) -> int:
    obj = json.loads(Path(args.matrix).read_text())
    matrix = FloatSymmetric.from_json(obj)
    payload = reports.nearest_payload(matrix, args.partition)
    grouping = " | ".join(",".join(str(i) for i in b) for b in payload["grouping"])
    text = (f"partition {payload['partition']}: distance {payload['distance']:.12g} "
            f"(squared {payload['squared_distance']:.12g})\n"
            f"eigenvalue grouping (sorted indices): {grouping}\n"
            f"block means: {payload['block_means']}\n"
            f"degenerate: {payload['degenerate']}  tie: {payload['tie']}\n"
            f"matrix: {json.dumps(payload['matrix'])}")
    _emit(args, payload, text)
    from .plots import plot_nearest
    _maybe_plot(args, plot_nearest, payload)
    return 0


def cmd_invariants(args) -> int:
    payload = reports.invariants_payload(args.partition, args.dmax, args.seed)
    rows = [[r["degree"], r["dim_symmetric"], r["dim_traces"],
             "yes" if r["match"] else "NO"] for r in payload["rows"]]
    text = (f"partition {payload['partition']}\n" +
            _text_table(rows, ["degree", "sym-side", "trace-side", "match"]))
    _emit(args, payload, text)
    from .plots import plot_invariants
    _maybe_plot(args, plot_invariants, payload)
    return 0


def cmd_discriminant(args) -> int:
    payload = reports.discriminant_payload(args.n, args.sos_check)
    lines = [f"discriminant of the generic symmetric {args.n}x{args.n} matrix "
             f"({payload['term_count']} terms):", payload["text"]]
    if "sum_of_squares" in payload:
        s = payload["sum_of_squares"]
        lines.append(f"sum of squared shipped cubics == c * discriminant: "
                     f"{'holds' if s['identity_holds'] else 'FAILS'} "
                     f"(c from leading terms: {s['scalar_at_leading_term']}, "
                     f"difference terms: {s['difference_term_count']})")
    _emit(args, payload, "\n".join(lines))
    return 0


def cmd_suite(args) -> int:
    only = None
    if args.only:
        only = {int(x) for x in args.only.split(",")}
    report = run_suite(args.seed, only=only, golden_dir=args.golden_dir)
    payload = report.to_json()
    _emit(args, payload, report.to_text())
    if args.plot_dir:
        from .plots import plot_suite
        out = Path(args.plot_dir)
        out.mkdir(parents=True, exist_ok=True)
        plot_suite(payload, str(out / "suite_summary.png"))
    return 0 if report.ok else 1


_HANDLERS = {
    "dimension": cmd_dimension,
    "sample": cmd_sample,
    "interpolate": cmd_interpolate,
    "verify": cmd_verify,
    "hilbert": cmd_hilbert,
    "degree": cmd_degree,
    "edd": cmd_edd,
    "nearest": cmd_nearest,
    "invariants": cmd_invariants,
    "discriminant": cmd_discriminant,
    "suite": cmd_suite,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _HANDLERS[args.command](args)
    except EigenstrataError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
