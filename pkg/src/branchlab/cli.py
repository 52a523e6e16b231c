"""Command-line front end: human-readable tables and deterministic JSON
reports over the whole catalog.

Exit codes: 0 = all checks pass, 1 = at least one mathematical check failed,
2 = usage or configuration error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import catalog, dgx, hilbert, verify

TEXT, JSON = "text", "json"


def _frac(x) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else "%d/%d" % (x.numerator, x.denominator)


def _jsonable(obj):
    if isinstance(obj, Fraction):
        return _frac(obj)
    if isinstance(obj, (list, tuple)):
        return [_jsonable(x) for x in obj]
    if isinstance(obj, dict):
        return {str(k): _jsonable(v) for k, v in sorted(obj.items(), key=lambda kv: str(kv[0]))}
    return obj


def _emit(args, text_lines, payload) -> None:
    if args.format == JSON:
        out = json.dumps(_jsonable(payload), indent=1, sort_keys=True)
    else:
        out = "\n".join(text_lines)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(out + "\n")
    else:
        print(out)


def _load_cases(args):
    records = catalog.load_default(max_n=args.max_n)
    if args.cases == ["all"]:
        return records
    index = {r.id.tag: [] for r in records}
    for r in records:
        index[r.id.tag].append(r)
    chosen = []
    for tag in args.cases:
        tag = tag.replace("'", "_prime").replace("*", "star")
        if tag not in index:
            if tag in catalog.TAG_ORDER:
                raise SystemExit2(
                    "case %r needs a larger --max-n (its base case is not instantiated)" % tag
                )
            raise SystemExit2("unknown case id %r" % tag)
        chosen.extend(index[tag])
    return chosen


class SystemExit2(Exception):
    pass


def _group_line(record) -> str:
    g = record.groups
    return "%s/%s ≃ %s/%s" % (
        g["gtilde"].name,
        g["htilde"].name,
        g["g"].name,
        g["h"].name,
    )


def cmd_list(args) -> int:
    records = _load_cases(args)
    lines = [
        "%-14s %-58s K=%-18s ranks=%s degrees P=%s Q=%s"
        % (
            str(r.id),
            _group_line(r),
            r.groups["k"].name,
            "(%d,%d,%d)" % r.rank3,
            list(r.degrees_p),
            list(r.degrees_q),
        )
        for r in records
    ]
    payload = {
        "schema": 1,
        "cases": [
            {
                "id": str(r.id),
                "tag": r.id.tag,
                "n": r.id.n,
                "groups": {k: g.name for k, g in r.groups.items()},
                "rank_triple": list(r.rank3),
                "degrees_p": list(r.degrees_p),
                "degrees_q": list(r.degrees_q),
                "alias_of": str(r.alias_of) if r.alias_of else None,
            }
            for r in records
        ],
    }
    _emit(args, lines, payload)
    return 0


def _run_case_checks(record, bound: int, degree: int) -> list[dict]:
    checks = []

    def push(name, report_or_ok, first=None):
        if isinstance(report_or_ok, verify.CaseReport):
            entry = {
                "name": name,
                "run": report_or_ok.checks_run,
                "failed": len(report_or_ok.failures),
            }
            if report_or_ok.failures:
                entry["first_failure"] = repr(report_or_ok.failures[0])
        else:
            entry = {"name": name, "run": 1, "failed": 0 if report_or_ok else 1}
            if not report_or_ok and first:
                entry["first_failure"] = first
        checks.append(entry)

    push("relations", verify.check_relations(record, bound))
    push("transfer", verify.check_transfer(record, bound))
    push("rank-identity", verify.check_rank_identity(record), "rank triple fails")
    push("degree-counts", verify.check_degree_counts(record), "m+n != rank")
    push("dimension-conservation", verify.check_dimension_conservation(record, bound))
    push("strong-multiplicity-freeness", verify.check_strong_multiplicity_freeness(record, bound))
    ok, _ = verify.independence_certificate(record, record.indep_gens, bound, degree)
    push("independence", ok, "moment matrix is rank-deficient")
    push("pi-side-consistency", verify.check_pi_side_consistency(record, bound))
    if record.hilbert_model is not None:
        push("generator-degrees", hilbert.check_generator_degrees(record, 12), "v-sequence mismatch")
    if record.parity_gap_gens:
        push(
            "dl-only-subalgebra-index-2",
            verify.check_ix_parity_gap(record, bound),
            "parity unexpectedly expressible",
        )
    if record.id.tag == "star":
        gens = dgx.subalgebra_generators()
        members = [dgx.Z, dgx.X + dgx.Y, dgx.X * dgx.Z + dgx.Y, dgx.X * dgx.Y]
        push(
            "dgx-membership",
            all(dgx.membership(f, gens, 4) is not None for f in members),
            "a Lemma-membership is missing at bound 4",
        )
        push("x-not-in-R", dgx.x_not_in_R_witness().passed, "symmetry witness failed")
        decomposed = True
        try:
            for ex in range(5):
                for ey in range(5 - ex):
                    f = dgx.X ** ex * dgx.Y ** ey
                    dgx.decompose_R_plus_Rx(f, 4)
        except (ValueError, AssertionError):
            decomposed = False
        push("dgx-module-decomposition", decomposed, "R+Rx decomposition failed")
        allgens = dgx.dgx_generators()
        pairs = [
            ("r1", "R_1"),
            ("r2", "R_2"),
            ("r3", "R_3"),
            ("r4", "R_4"),
            ("q", "C_K"),
            ("p1", "C_Gt1"),
            ("p2", "C_Gt2"),
        ]
        agree = all(
            allgens[g].evaluate((t[0] + 3) ** 2, (t[1] + 3) ** 2, (t[2] + 3) ** 2)
            == verify.evaluate_generator(record, s, t)
            for t in record.theta.enumerate(min(bound, 6))
            for g, s in pairs
        )
        push("dgx-cross-evaluation", agree, "polynomial model disagrees with the case table")
    return checks


def cmd_verify(args) -> int:
    records = _load_cases(args)
    results = []
    total_failed = 0
    lines = []
    for r in records:
        checks = _run_case_checks(r, args.bound, args.degree)
        failed = sum(c["failed"] for c in checks)
        total_failed += failed
        results.append({"case": str(r.id), "bound": args.bound, "checks": checks})
        for c in checks:
            lines.append(
                "%-14s %-30s %s (%d run%s)"
                % (
                    str(r.id),
                    c["name"],
                    "pass" if c["failed"] == 0 else "FAIL",
                    c["run"],
                    "" if c["failed"] == 0 else ", %d failed" % c["failed"],
                )
            )
    payload = {"schema": 1, "bound": args.bound, "degree": args.degree, "cases": results}
    _emit(args, lines, payload)
    return 0 if total_failed == 0 else 1


def cmd_transfer(args) -> int:
    records = _load_cases(args)
    if len(records) != 1:
        raise SystemExit2("transfer needs exactly one case (got %d)" % len(records))
    record = records[0]
    tau = tuple(int(x) for x in args.tau.split(",")) if args.tau else ()
    lam = tuple(Fraction(x) for x in args.lam.split(",")) if args.lam else ()
    try:
        smap = verify.transfer_map(record, tau)
    except ValueError as exc:
        raise SystemExit2(str(exc))
    if len(lam) != smap.source_dim:
        raise SystemExit2(
            "lambda needs %d coordinates, got %d" % (smap.source_dim, len(lam))
        )
    image = smap.apply(lam)
    canon = verify._canonical_char(record, image)
    lines = [
        "case %s, tau=%s" % (record.id, list(tau)),
        "matrix: %s" % [[_frac(x) for x in row] for row in smap.matrix],
        "offset: %s" % [_frac(x) for x in smap.offset],
        "S_tau(%s) = %s" % ([_frac(x) for x in lam], [_frac(x) for x in image]),
        "canonical (mod W(g_C)): %s" % [_frac(x) for x in canon],
    ]
    payload = {
        "schema": 1,
        "case": str(record.id),
        "tau": list(tau),
        "matrix": [[_frac(x) for x in row] for row in smap.matrix],
        "offset": [_frac(x) for x in smap.offset],
        "lambda": [_frac(x) for x in lam],
        "image": [_frac(x) for x in image],
        "canonical": [_frac(x) for x in canon],
    }
    _emit(args, lines, payload)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="branchlab",
        description="exact verification of the invariant-operator catalog",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--cases", default="all", help="comma-separated case tags, or 'all'")
        p.add_argument("--bound", type=int, default=8)
        p.add_argument("--max-n", type=int, default=2, dest="max_n")
        p.add_argument("--degree", type=int, default=2)
        p.add_argument("--format", choices=(TEXT, JSON), default=TEXT)
        p.add_argument("--out", default=None)

    p_list = sub.add_parser("list", help="print the case table")
    common(p_list)
    p_list.set_defaults(func=cmd_list)

    p_verify = sub.add_parser("verify", help="run every stored check")
    common(p_verify)
    p_verify.set_defaults(func=cmd_verify)

    p_transfer = sub.add_parser("transfer", help="print one transfer map and an image")
    common(p_transfer)
    p_transfer.add_argument("--tau", default="", help="comma-separated tau parameters")
    p_transfer.add_argument("--lam", default="", help="comma-separated lambda coordinates")
    p_transfer.set_defaults(func=cmd_transfer)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.bound < 0 or args.max_n < 1:
        parser.exit(2, "bound must be >= 0 and max-n >= 1\n")
    args.cases = [c.strip() for c in args.cases.split(",") if c.strip()] or ["all"]
    try:
        return args.func(args)
    except SystemExit2 as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
