"""Command-line interface: group tables, counting tables, witnesses, classes, axioms.

Exit codes: 0 success, 1 negative mathematical answer (not isomorphic, cross
check mismatch, axiom failure), 2 usage or parse error, 3 budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys

from .classify import brute_force_classes, brute_force_counts, build_witness, isomorphic
from .counting import count_with_support, total_count
from .errors import BudgetExceededError
from .field import ActionSpec, FiniteField, check_axioms, verify_witness
from .groups import quotient_group
from .sequences import format_sequence
from .subgroups import all_subgroups

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3


def _emit_json(payload) -> None:
    print(json.dumps(payload, indent=2, sort_keys=True))


def _parse_m_range(text: str) -> tuple[int, int]:
    if ".." in text:
        lo, _, hi = text.partition("..")
        start, stop = int(lo), int(hi)
    else:
        start = stop = int(text)
    if start < 1 or stop < start:
        raise ValueError(f"bad m-range {text!r}: need 1 <= start <= stop")
    return start, stop


def _parse_cli_sequence(G, text: str, flag: str) -> tuple[int, ...]:
    """Lenient sequence input: canonicalize and sort, warn when that changes
    the input; entries that are not units are rejected."""
    try:
        raw = tuple(int(part) for part in text.split(","))
    except ValueError:
        raise ValueError(f"{flag} must be comma-separated integers, got {text!r}") from None
    normalized = tuple(sorted(G.canonical_rep(x) for x in raw))
    if normalized[0] != 1:
        raise ValueError(f"{flag} must contain the identity class 1, got {text!r}")
    if normalized != raw:
        print(
            f"warning: normalized {flag} from {format_sequence(raw)} to {format_sequence(normalized)}",
            file=sys.stderr,
        )
    return normalized


def _group_payload(G) -> dict:
    table = [[G.mul(a, b) for b in G.elements] for a in G.elements]
    return {
        "p": G.params.p,
        "n": G.params.n,
        "modulus": G.params.modulus,
        "p_coset": list(G.p_coset),
        "G": list(G.elements),
        "table": table,
    }


def _print_group_table(G) -> None:
    width = max(len(str(e)) for e in G.elements) + 2
    header = "*".rjust(width) + " |" + "".join(str(e).rjust(width) for e in G.elements)
    print(header)
    print("-" * (width + 2) + "+" + "-" * (width * G.order))
    for a in G.elements:
        row = "".join(str(G.mul(a, b)).rjust(width) for b in G.elements)
        print(str(a).rjust(width) + " |" + row)


def cmd_group(args) -> int:
    G = quotient_group(args.p, args.n)
    if args.format == "json":
        _emit_json(_group_payload(G))
        return EXIT_OK
    params = G.params
    print(
        f"G = U({params.modulus})/<{params.p}> with {G.order} element(s): "
        + " ".join(str(e) for e in G.elements)
    )
    if params.degenerate:
        print("G is trivial: GF(2) has modulus 1, so there is one class for every length")
    print(f"<{params.p}> = {{{', '.join(str(h) for h in G.p_coset)}}}")
    _print_group_table(G)
    return EXIT_OK


def cmd_table(args) -> int:
    G = quotient_group(args.p, args.n)
    lat = all_subgroups(G) if args.method in ("formula", "both") else None
    start, stop = args.m_range
    results = []
    mismatches = []
    for m in range(start, stop + 1):
        entry: dict = {"m": m}
        if args.method in ("formula", "both"):
            report = total_count(G, m, lat)
            entry["per_N"] = {N: s.classes for N, s in report.per_N.items()}
            entry["total"] = report.total
        if args.method in ("brute", "both"):
            counts = brute_force_counts(G, m)
            entry["brute_per_N"] = counts
            entry["brute_total"] = sum(counts.values())
        if args.method == "both":
            entry["match"] = (
                entry["per_N"] == entry["brute_per_N"] and entry["total"] == entry["brute_total"]
            )
            if not entry["match"]:
                mismatches.append(m)
        if args.method == "brute":
            entry["per_N"] = entry.pop("brute_per_N")
            entry["total"] = entry.pop("brute_total")
        results.append(entry)

    if args.format == "json":
        payload = {
            "p": args.p,
            "n": args.n,
            "G": list(G.elements),
            "method": args.method,
            "results": [
                {
                    key: ({str(N): c for N, c in value.items()} if key.endswith("per_N") else value)
                    for key, value in entry.items()
                }
                for entry in results
            ],
        }
        _emit_json(payload)
    elif args.format == "csv":
        print("p,n,m,N,t_N,T_N,method")
        methods = ["formula", "brute"] if args.method == "both" else [args.method]
        for entry in results:
            m = entry["m"]
            for method in methods:
                per = entry["brute_per_N"] if (method == "brute" and args.method == "both") else entry["per_N"]
                for N in sorted(per):
                    t_n = count_with_support(G, m, N)
                    print(f"{args.p},{args.n},{m},{N},{t_n},{per[N]},{method}")
    else:
        n_max = min(stop, G.order)
        label = {"formula": "formula", "brute": "brute force", "both": "formula, cross-checked"}
        print(f"class counts for G = U({G.params.modulus})/<{G.params.p}>, |G| = {G.order} ({label[args.method]})")
        ms = [entry["m"] for entry in results]
        print("N \\ m".rjust(8) + "".join(str(m).rjust(8) for m in ms))
        for N in range(1, n_max + 1):
            cells = [entry["per_N"].get(N, "-") for entry in results]
            print(str(N).rjust(8) + "".join(str(c).rjust(8) for c in cells))
        print("total".rjust(8) + "".join(str(entry["total"]).rjust(8) for entry in results))
        if args.method == "both":
            cells = sum(len(entry["per_N"]) for entry in results)
            if mismatches:
                for m in mismatches:
                    entry = next(e for e in results if e["m"] == m)
                    print(f"MISMATCH at m={m}: formula {entry['per_N']} vs brute {entry['brute_per_N']}")
            else:
                print(f"all {cells} cells MATCH (formula vs brute force)")
    return EXIT_NEGATIVE if mismatches else EXIT_OK


def cmd_witness(args) -> int:
    G = quotient_group(args.p, args.n)
    s1 = _parse_cli_sequence(G, args.s1, "--s1")
    s2 = _parse_cli_sequence(G, args.s2, "--s2")
    q = isomorphic(G, s1, s2)
    if q is None:
        print("NOT-ISOMORPHIC")
        return EXIT_NEGATIVE
    witness = build_witness(G, s1, s2, q)
    print(f"q = {witness.q}")
    print("sigma = " + " ".join(str(s) for s in witness.sigma))
    print("frobenius powers = " + " ".join(str(l) for l in witness.frobenius_powers))
    exponents = [args.p**l for l in witness.frobenius_powers]
    print("component exponents = " + " ".join(str(e) for e in exponents))
    if args.verify:
        f = FiniteField(args.p, args.n)
        ok = verify_witness(f, s1, s2, witness, mode=args.verify)
        print(f"{'VERIFIED' if ok else 'VERIFICATION FAILED'} ({args.verify} mode)")
        if not ok:
            return EXIT_NEGATIVE
    return EXIT_OK


def cmd_classes(args) -> int:
    G = quotient_group(args.p, args.n)
    result = brute_force_classes(G, args.m)
    if args.format == "json":
        _emit_json(
            {
                "p": args.p,
                "n": args.n,
                "m": args.m,
                "G": list(G.elements),
                "per_N": {str(N): c for N, c in result.per_N.items()},
                "total": result.total,
                "classes": [
                    {
                        "representative": list(c.representative),
                        "size": c.size,
                        "support_size": c.support_size,
                    }
                    for c in result.classes
                ],
            }
        )
    elif args.format == "csv":
        print("p,n,m,N,orbit_size,representative")
        for c in result.classes:
            rep = " ".join(str(x) for x in c.representative)
            print(f"{args.p},{args.n},{args.m},{c.support_size},{c.size},{rep}")
    else:
        total_seqs = sum(c.size for c in result.classes)
        print(f"{result.total} classes of {total_seqs} sequences (p={args.p}, n={args.n}, m={args.m})")
        for c in result.classes:
            print(f"N={c.support_size} size={c.size}: {format_sequence(c.representative)}")
        print("per-N class counts: " + " ".join(f"{N}:{c}" for N, c in result.per_N.items()))
    return EXIT_OK


def cmd_axioms(args) -> int:
    f = FiniteField(args.p, args.n)
    if args.seq:
        try:
            exponents = tuple(int(part) for part in args.seq.split(","))
        except ValueError:
            raise ValueError(f"--seq must be comma-separated integers, got {args.seq!r}") from None
        if args.m is not None and args.m != len(exponents):
            raise ValueError(f"--m {args.m} does not match --seq of length {len(exponents)}")
    else:
        if args.m is None:
            raise ValueError("need --m or --seq")
        exponents = (1,) * args.m
    report = check_axioms(f, ActionSpec(exponents))
    print(f"action exponents {format_sequence(exponents)} on GF({f.order})^{len(exponents)}")
    rows = [
        ("maps additive", report.additive_maps),
        ("0, id, -id present", report.has_zero_identity_negation),
        ("nonzero scalars form a group", report.scalars_form_group),
        ("action fixed-point free", report.fixed_point_free),
        ("quasi-kernel generates", report.quasi_kernel_generates),
    ]
    for name, ok in rows:
        print(f"{name:<30} {'PASS' if ok else 'FAIL'}")
    print("all axioms satisfied" if report.passed else "axioms violated")
    return EXIT_OK if report.passed else EXIT_NEGATIVE


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="nearvec",
        description="Exact classification and counting of near-vector spaces over finite fields",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_field_args(p):
        p.add_argument("--p", type=int, required=True, help="prime p")
        p.add_argument("--n", type=int, required=True, help="exponent n of the field GF(p^n)")

    p_group = sub.add_parser("group", help="print the quotient group and its multiplication table")
    add_field_args(p_group)
    p_group.add_argument("--format", choices=["plain", "json"], default="plain")
    p_group.set_defaults(func=cmd_group)

    p_table = sub.add_parser("table", help="per-support-size class counts over a range of lengths")
    add_field_args(p_table)
    p_table.add_argument("--m-range", type=_parse_m_range, required=True, metavar="A..B")
    p_table.add_argument("--method", choices=["formula", "brute", "both"], default="formula")
    p_table.add_argument("--format", choices=["plain", "json", "csv"], default="plain")
    p_table.set_defaults(func=cmd_table)

    p_wit = sub.add_parser("witness", help="decide isomorphism of two sequences and build a witness")
    add_field_args(p_wit)
    p_wit.add_argument("--s1", required=True, help="first sequence, e.g. 1,1,5,5")
    p_wit.add_argument("--s2", required=True, help="second sequence, e.g. 1,1,7,7")
    p_wit.add_argument("--verify", choices=["exhaustive", "sampled"], default=None)
    p_wit.set_defaults(func=cmd_witness)

    p_cls = sub.add_parser("classes", help="list the isomorphism classes for one length")
    add_field_args(p_cls)
    p_cls.add_argument("--m", type=int, required=True)
    p_cls.add_argument("--format", choices=["plain", "json", "csv"], default="plain")
    p_cls.set_defaults(func=cmd_classes)

    p_ax = sub.add_parser("axioms", help="check the near-vector-space axioms for one action")
    add_field_args(p_ax)
    p_ax.add_argument("--m", type=int, default=None)
    p_ax.add_argument("--seq", default=None, help="action exponents, e.g. 1,3 (default: all ones)")
    p_ax.set_defaults(func=cmd_axioms)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except BudgetExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def run() -> None:
    raise SystemExit(main())
