"""Command-line front end.

Subcommands:

* ``check``  — decide realizability of one or more degree sequences;
* ``build``  — construct, label, self-verify, and export a realization;
* ``verify`` — re-check an exported graph document independently;
* ``oracle`` — exhaustively cross-check the decision procedure against
  the brute-force oracle at tiny scale;
* ``bench``  — wall-time scaling measurements on a realizable family.

Exit codes: 0 realizable / all checks pass, 1 not realizable / a check
fails, 2 malformed input, 3 internal invariant failure.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from typing import Dict, List, Optional, Sequence, TextIO

from .degseq import DegreeSequence, parse_sequence
from .graphstore import GraphError, LabeledMultigraph
from .realize import Reason, check_tc_realizable, realize_tc
from .verify import (
    earliest_arrival,
    enumerate_sequences,
    is_proper,
    is_simple,
    is_tc,
    oracle_tc_realizable_sequence,
    validate_certificate,
)

__all__ = ["main"]

EXIT_OK = 0
EXIT_NO = 1
EXIT_INPUT = 2
EXIT_INTERNAL = 3

_CERT_KIND = {
    Reason.OK_C4_PIVOTABLE: "c4-pivotable",
    Reason.OK_ONE_SHARED_EDGE: "one-shared-edge",
    Reason.OK_TWO_EDGE_DISJOINT: "two-edge-disjoint",
    Reason.OK_SMALL_N: "small-n",
}


def _read_sequences(args: argparse.Namespace) -> List[DegreeSequence]:
    """Positional tokens form one sequence; otherwise one per stdin line."""
    if args.sequence:
        return [parse_sequence(" ".join(args.sequence))]
    out = []
    for line in sys.stdin:
        line = line.strip()
        if line:
            out.append(parse_sequence(line))
    return out


def _print_report(report: Dict, fmt: str, out: TextIO) -> None:
    if fmt == "json":
        out.write(json.dumps(report) + "\n")
        return
    parts = [
        f"sequence={' '.join(str(v) for v in report['sequence'])}",
        f"mode={report['mode']}",
        f"realizable={'yes' if report['realizable'] else 'no'}",
        f"reason={report['reason']}",
    ]
    for key in ("n", "m", "max_label", "shared_edges", "certificate", "ms"):
        if key in report:
            parts.append(f"{key}={report[key]}")
    out.write("  ".join(str(p) for p in parts) + "\n")


def _base_report(d: DegreeSequence, mode: str) -> Dict:
    decision = check_tc_realizable(d, mode)
    return {
        "sequence": d.entries,
        "mode": mode,
        "realizable": decision.realizable,
        "reason": decision.reason.value,
        "n": d.n,
        "m": d.total // 2,
    }


def cmd_check(args: argparse.Namespace) -> int:
    seqs = _read_sequences(args)
    worst = EXIT_OK
    for d in seqs:
        t0 = time.perf_counter()
        report = _base_report(d, args.mode)
        report["ms"] = round(1000 * (time.perf_counter() - t0), 3)
        _print_report(report, args.format, sys.stdout)
        if not report["realizable"]:
            worst = EXIT_NO
    return worst


def cmd_build(args: argparse.Namespace) -> int:
    seqs = _read_sequences(args)
    if len(seqs) != 1:
        print("build expects exactly one sequence", file=sys.stderr)
        return EXIT_INPUT
    d = seqs[0]
    t0 = time.perf_counter()
    result = realize_tc(d, args.mode)
    elapsed = round(1000 * (time.perf_counter() - t0), 3)
    report = {
        "sequence": d.entries,
        "mode": args.mode,
        "realizable": result.realizable,
        "reason": result.decision.reason.value,
        "n": d.n,
        "m": d.total // 2,
        "ms": elapsed,
    }
    if not result.realizable:
        _print_report(report, "text" if args.format == "dot" else args.format,
                      sys.stdout)
        return EXIT_NO
    g, cert, labeling = result.graph, result.certificate, result.labeling
    assert g is not None and cert is not None and labeling is not None
    if not args.no_verify:
        ok = (
            is_proper(g)
            and is_simple(g)
            and is_tc(g)
            and validate_certificate(g, cert)
        )
        if not ok:
            print("internal error: self-verification failed", file=sys.stderr)
            return EXIT_INTERNAL
    report.update(
        max_label=labeling.max_label,
        shared_edges=len(cert.shared),
        certificate=_CERT_KIND[result.decision.reason],
    )
    document = g.to_dot() if args.format == "dot" else g.to_json(indent=2)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(document + "\n")
        _print_report(report, "text" if args.format == "dot" else args.format,
                      sys.stdout)
    else:
        sys.stdout.write(document + "\n")
    return EXIT_OK


def _first_properness_violation(g: LabeledMultigraph) -> Optional[str]:
    for v in range(g.n):
        seen: Dict[int, int] = {}
        for e in g.incident(v):
            lab = g.elabel[e]
            if lab in seen:
                return (
                    f"edges {seen[lab]} and {e} at vertex {v} "
                    f"share label {lab}"
                )
            seen[lab] = e
    return None


def _first_unreached_pair(g: LabeledMultigraph) -> Optional[str]:
    for src in range(g.n):
        arrival = earliest_arrival(g, src)
        for v, t in enumerate(arrival):
            if t == float("inf"):
                return f"no journey from {src} to {v}"
    return None


def cmd_verify(args: argparse.Namespace) -> int:
    try:
        with open(args.graph_file, "r", encoding="utf-8") as fh:
            g = LabeledMultigraph.from_json(fh.read())
    except (OSError, GraphError) as exc:
        print(f"cannot load graph: {exc}", file=sys.stderr)
        return EXIT_INPUT
    if not is_simple(g):
        print("FAIL: some edge is missing a positive integer label")
        return EXIT_NO
    violation = _first_properness_violation(g)
    if violation is not None:
        print(f"FAIL properness: {violation}")
        return EXIT_NO
    violation = _first_unreached_pair(g)
    if violation is not None:
        print(f"FAIL temporal connectivity: {violation}")
        return EXIT_NO
    print("OK: labeling is simple, proper, and temporally connected")
    return EXIT_OK


def cmd_oracle(args: argparse.Namespace) -> int:
    cap = 6 if args.mode == "simple" else 5
    if args.n > cap:
        print(
            f"--n {args.n} exceeds the exhaustive-oracle cap of {cap} "
            f"for {args.mode} mode",
            file=sys.stderr,
        )
        return EXIT_INPUT
    cap_m = 15 if args.mode == "simple" else 8
    disagreements = []
    checked = 0
    for n in range(args.n + 1):
        for d in enumerate_sequences(n, args.mode):
            if d.total // 2 > cap_m:
                continue
            claimed = check_tc_realizable(d, args.mode).realizable
            truth = oracle_tc_realizable_sequence(
                d, args.mode, cap_n=cap, cap_m=cap_m
            )
            checked += 1
            if claimed != truth:
                disagreements.append((d.entries, claimed, truth))
    report = {
        "mode": args.mode,
        "n_cap": args.n,
        "sequences_checked": checked,
        "disagreements": [
            {"sequence": s, "claimed": c, "oracle": t}
            for s, c, t in sorted(disagreements)
        ],
    }
    if args.format == "json":
        print(json.dumps(report))
    else:
        for s, c, t in sorted(disagreements):
            print(f"DISAGREE {s}: claimed={c} oracle={t}")
        print(
            f"{checked} sequences checked, "
            f"{len(disagreements)} disagreements"
            + ("" if disagreements else " — all sequences agree")
        )
    return EXIT_OK if not disagreements else EXIT_NO


def cmd_bench(args: argparse.Namespace) -> int:
    try:
        sizes = [int(tok) for tok in args.sizes.split(",") if tok.strip()]
    except ValueError:
        print(f"malformed --sizes {args.sizes!r}", file=sys.stderr)
        return EXIT_INPUT
    if any(n < 4 for n in sizes):
        print("bench sizes must be at least 4", file=sys.stderr)
        return EXIT_INPUT
    rows = []
    prev = None
    for n in sizes:
        d = DegreeSequence([4] * (n - 2) + [2, 2])
        t0 = time.perf_counter()
        result = realize_tc(d, args.mode)
        elapsed = time.perf_counter() - t0
        if not result.realizable:
            print("internal error: bench family not realizable",
                  file=sys.stderr)
            return EXIT_INTERNAL
        ratio = round(elapsed / prev, 3) if prev else None
        rows.append({"n": n, "seconds": round(elapsed, 4), "ratio": ratio})
        prev = elapsed
    if args.format == "json":
        print(json.dumps({"mode": args.mode, "runs": rows}))
    else:
        for row in rows:
            ratio = f"  x{row['ratio']}" if row["ratio"] else ""
            print(f"n={row['n']:>8}  {row['seconds']:.4f} s{ratio}")
    return EXIT_OK


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tcreal",
        description=(
            "Temporally connected realizations of degree sequences: "
            "decide, construct, label, and verify."
        ),
    )
    parser.add_argument(
        "--seed",
        type=int,
        default=None,
        help="reserved; constructions are deterministic and ignore it",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p: argparse.ArgumentParser, formats: Sequence[str]) -> None:
        p.add_argument("--mode", choices=("simple", "multi"),
                       default="simple")
        p.add_argument("--format", choices=tuple(formats), default=formats[0])

    p = sub.add_parser("check", help="decide realizability")
    p.add_argument("sequence", nargs="*",
                   help="degrees (space/comma separated); stdin if omitted")
    add_common(p, ("text", "json"))
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("build", help="construct and label a realization")
    p.add_argument("sequence", nargs="*",
                   help="degrees (space/comma separated); stdin if omitted")
    add_common(p, ("json", "text", "dot"))
    p.add_argument("--out", metavar="PATH",
                   help="write the graph document here instead of stdout")
    p.add_argument("--no-verify", action="store_true",
                   help="skip the self-verification pass")
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("verify", help="re-check an exported graph document")
    p.add_argument("graph_file", help="graph JSON file produced by build")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("oracle",
                       help="cross-check decisions against the brute oracle")
    p.add_argument("--n", type=int, required=True,
                   help="sweep all sequences of length up to this cap")
    add_common(p, ("text", "json"))
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("bench", help="wall-time scaling measurements")
    p.add_argument("--sizes", default="100000,200000,400000",
                   help="comma-separated vertex counts")
    add_common(p, ("text", "json"))
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:  # malformed sequences and similar input issues
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (GraphError, AssertionError) as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
