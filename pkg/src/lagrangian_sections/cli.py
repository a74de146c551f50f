"""Command line: export matrices, verify the decomposition, print rank tables, test points."""

from __future__ import annotations

import argparse
import json
import logging
import sys
from fractions import Fraction
from math import comb

from . import blocks
from .contraction import PluckerVector, build_B, convention_survey, kernel_violations
from .decompose import DEFAULT_CHARACTERISTICS, top_kind, verify_theorem
from .indexing import SymplecticLabels, q_count
from .linalg import DEFAULT_PRIME_SEED, FieldSpec, rank, rank_certificate
from .published import PUBLISHED, published_rank
from .sms import to_csv, to_json_dict, to_sms, write_atomic

log = logging.getLogger("lagrangian_sections")

SCHEMA_VERSION = 1
MAX_N = 8


class UsageError(Exception):
    pass


def prime_seed(seed: int) -> int:
    return DEFAULT_PRIME_SEED ^ seed


def parse_chars(text: str | None, default=DEFAULT_CHARACTERISTICS) -> list[int]:
    if not text:
        return list(default)
    try:
        chars = [int(x) for x in text.split(",") if x.strip()]
        for p in chars:
            FieldSpec(p)
    except ValueError as exc:
        raise UsageError(f"bad --chars value {text!r}: {exc}") from None
    return chars


def _check_n(n: int | None, force_large: bool, low: int = 4) -> int:
    if n is None:
        raise UsageError("--n is required")
    if n < low:
        raise UsageError(f"--n must be at least {low}")
    if n > MAX_N:
        if not force_large:
            raise UsageError(f"--n above {MAX_N} needs --force-large")
        log.warning("n=%d is above the tested range; this may take a long time", n)
    return n


# build ------------------------------------------------------------------


def build_matrix(kind: str, args) -> "blocks.BinaryMatrix":
    if kind == "B":
        if args.n is None or args.n < 2:
            raise UsageError("build B needs --n >= 2")
        return build_B(SymplecticLabels(args.n))
    if kind == "L":
        if args.k is None or args.k < 2:
            raise UsageError("build L needs --k >= 2")
        return blocks.l_matrix(args.k)
    if kind == "M":
        if args.m is None or args.m < 2 or args.m % 2:
            raise UsageError("build M needs an even --m >= 2")
        return blocks.m_matrix(args.m)
    if kind == "A":
        if args.k is None or args.k < 1 or args.level is None or args.level < 0:
            raise UsageError("build A needs --k >= 1 and --level >= 0")
        return blocks.a(args.k, args.level)
    raise UsageError(f"unknown matrix kind {kind!r}")


def render_matrix(M, fmt: str) -> str:
    if fmt == "sms":
        return to_sms(M)
    if fmt == "csv":
        return to_csv(M)
    if fmt == "json":
        return json.dumps(to_json_dict(M)) + "\n"
    raise UsageError(f"unknown format {fmt!r}")


def cmd_build(args) -> int:
    M = build_matrix(args.kind, args)
    _emit(render_matrix(M, args.format or "sms"), args.out)
    return 0


# verify -----------------------------------------------------------------


def _discrepancies(n: int, report, chars: list[int], seed: int) -> list[dict]:
    pub = PUBLISHED.get(n, {})
    labels = SymplecticLabels(n)
    out = []

    def add(quantity, published, computed, **extra):
        if published != computed:
            out.append({"quantity": quantity, "published": published, "computed": computed, **extra})

    if "census" in pub:
        for k in sorted(set(pub["census"]) | set(report.census), reverse=True):
            add(f"census L{k}", pub["census"].get(k, 0), report.census.get(k, 0))
        implied = sum(c * comb(2 * (k - 1), k - 2) for k, c in pub["census"].items())
        add("rows implied by published census", implied, comb(2 * n, n - 2))
    if "plane_census" in pub:
        for w in sorted(set(pub["plane_census"]) | set(report.plane_census), reverse=True):
            add(f"{w}-term rows", pub["plane_census"].get(w, 0), report.plane_census.get(w, 0))
    for t, v in pub.get("q_counts", {}).items():
        add(f"pair-free {t}-tuples", v, q_count(t, labels))
    for name, table in pub.get("ranks", {}).items():
        claimed = {p: published_rank(table, p) for p in chars}
        claimed = {p: v for p, v in claimed.items() if v is not None}
        extra = {}
        if name != "B":
            computed = {p: rank(blocks.l_matrix(int(name[1:])), p, seed=seed) for p in claimed}
            if claimed != computed:
                for j in range(2, top_kind(n) + 1):
                    if all(rank(blocks.l_matrix(j), p, seed=seed) == v for p, v in claimed.items()):
                        extra = {"published_values_match": f"L{j}"}
        else:
            computed = {p: report.rank_table[p].direct for p in claimed}
        for p, v in claimed.items():
            add(f"rank {name} char {p}", v, computed[p], **extra)
    return out


def build_verify_report(n: int, chars: list[int], seed: int = 0) -> tuple[dict, bool]:
    """JSON-ready verification report and whether every internal check passed."""
    labels = SymplecticLabels(n)
    pseed = prime_seed(seed)
    report = verify_theorem(labels, chars, seed=pseed)
    lemma = [blocks.l_equals_m(k) for k in range(2, top_kind(n) + 1)]
    pub = PUBLISHED.get(n, {})
    census_match = None
    if "census" in pub:
        census_match = pub["census"] == report.census
    ranks = {str(p): {"direct": r.direct, "block_sum": r.block_sum} for p, r in report.rank_table.items()}
    certs = {str(p): r.certificate for p, r in report.rank_table.items()}
    checks = {
        "blocks_verified": report.all_verified,
        "partition": report.partition_ok,
        "census_law": report.census_consistent,
        "direct_sum_ranks": report.ranks_consistent,
        "corollary_identity": report.corollary_identity_holds,
        "lemma_Lk_eq_Mm": all(x["equivalent"] for x in lemma),
    }
    ok = all(checks.values())
    doc = {
        "schema_version": SCHEMA_VERSION,
        "n": n,
        "parity": report.parity,
        "seed": seed,
        "classes": [
            {
                "singletons": list(c.singletons),
                "block_kind": c.block_kind,
                "row_count": c.row_count,
                "col_count": c.col_count,
                "verified": c.verified,
            }
            for c in report.classes
        ],
        "zero_columns": report.zero_column_count,
        "census": {str(k): v for k, v in report.census.items()},
        "plane_census": {str(k): v for k, v in report.plane_census.items()},
        "paper_census_match": census_match,
        "ranks": ranks,
        "rank_certificates": certs,
        "corollary_identity": report.corollary_identity_holds,
        "lemma_Lk_eq_Mm": lemma,
        "checks": checks,
        "ok": ok,
        "discrepancies": _discrepancies(n, report, chars, pseed),
    }
    return doc, ok


def cmd_verify(args) -> int:
    n = _check_n(args.n, args.force_large)
    doc, ok = build_verify_report(n, parse_chars(args.chars), args.seed)
    _emit(json.dumps(doc, indent=2) + "\n", args.out)
    if not ok:
        failed = [k for k, v in doc["checks"].items() if not v]
        print(f"verification failed: {', '.join(failed)}", file=sys.stderr)
    return 0 if ok else 1


# rank table -------------------------------------------------------------


def rank_table_rows(n: int, chars: list[int], seed: int = 0) -> list[tuple[str, list[int]]]:
    pseed = prime_seed(seed)
    B = build_B(SymplecticLabels(n))
    rows = [("B", [rank_certificate(B, p, seed=pseed).rank for p in chars])]
    for k in range(2, top_kind(n) + 1):
        L = blocks.l_matrix(k)
        rows.append((f"L{k}", [rank(L, p, seed=pseed) for p in chars]))
    return rows


def render_rank_table(rows, chars: list[int]) -> str:
    lines = ["matrix," + ",".join(str(p) for p in chars)]
    lines.extend(name + "," + ",".join(str(v) for v in values) for name, values in rows)
    return "\n".join(lines) + "\n"


def cmd_rank_table(args) -> int:
    n = _check_n(args.n, args.force_large)
    chars = parse_chars(args.chars, default=(0, 2, 3, 5))
    _emit(render_rank_table(rank_table_rows(n, chars, args.seed), chars), args.out)
    return 0


# check point ------------------------------------------------------------


def parse_point(text: str, n: int, field: FieldSpec | None = None) -> PluckerVector:
    """Parse ``"b_1 ... b_n value"`` lines; ``# field p`` may declare the field."""
    coords: dict = {}
    declared = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            parts = line[1:].split()
            if len(parts) == 2 and parts[0] == "field":
                declared = int(parts[1])
            continue
        parts = line.split()
        if len(parts) != n + 1:
            raise ValueError(f"line {lineno}: expected {n} indices and a value")
        try:
            beta = tuple(int(x) for x in parts[:n])
            value = Fraction(parts[n])
        except ValueError:
            raise ValueError(f"line {lineno}: malformed entry {line!r}") from None
        if any(a >= b for a, b in zip(beta, beta[1:])) or beta[0] < 1 or beta[-1] > 2 * n:
            raise ValueError(f"line {lineno}: {beta} is not in I({n}, {2 * n})")
        if value.denominator == 1:
            value = value.numerator
        coords[beta] = coords.get(beta, 0) + value
    if field is None:
        field = FieldSpec(declared or 0)
    return PluckerVector(n, coords, field)


def cmd_check_point(args) -> int:
    if args.n is None or args.n < 2:
        raise UsageError("check-point needs --n >= 2")
    with open(args.file) as fh:
        text = fh.read()
    field = FieldSpec(parse_chars(args.chars)[0]) if args.chars else None
    try:
        point = parse_point(text, args.n, field)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    bad = kernel_violations(point, args.convention)
    if not bad:
        print("IN KERNEL")
        return 0
    for alpha, value in bad:
        print(f"VIOLATION row {' '.join(map(str, alpha)) or '()'} value {value}")
    return 1


# convention survey ------------------------------------------------------


def build_survey_report(ns: list[int], chars: list[int], samples: int, seed: int) -> dict:
    survey = convention_survey(ns, chars, samples, seed)
    return {
        "schema_version": SCHEMA_VERSION,
        "seed": seed,
        "samples": samples,
        "results": {
            str(p): {
                str(n): {**res, "annihilating": [c for c, ok in res.items() if ok]} for n, res in per_n.items()
            }
            for p, per_n in survey.items()
        },
    }


def cmd_survey(args) -> int:
    chars = parse_chars(args.chars, default=(2, 3, 5))
    if 0 in chars:
        raise UsageError("survey samples over finite fields only")
    ns = [args.n] if args.n is not None else [2, 3, 4, 5]
    if any(n < 2 for n in ns):
        raise UsageError("survey needs --n >= 2")
    if args.samples < 1:
        raise UsageError("--samples must be positive")
    doc = build_survey_report(ns, chars, args.samples, args.seed)
    _emit(json.dumps(doc, indent=2) + "\n", args.out)
    return 0


# plumbing ---------------------------------------------------------------


def _emit(text: str, out: str | None) -> None:
    if out:
        write_atomic(out, text)
    else:
        sys.stdout.write(text)


def make_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--n", type=int)
    common.add_argument("--chars", help="comma separated characteristics, e.g. 0,2,3,5")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--out", help="output path (default: stdout)")
    common.add_argument("--force-large", action="store_true", help=f"allow n > {MAX_N}")

    parser = argparse.ArgumentParser(prog="lagrangian-sections", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build", parents=[common], help="export B, L_k, M_m or A_k^l")
    p.add_argument("kind", choices=["B", "L", "M", "A"])
    p.add_argument("--k", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--level", type=int)
    p.add_argument("--format", choices=["sms", "csv", "json"], default="sms")
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("verify", parents=[common], help="verify the block decomposition of B")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("rank-table", parents=[common], help="ranks of B and L_k as CSV")
    p.set_defaults(func=cmd_rank_table)

    p = sub.add_parser("check-point", parents=[common], help="test a Plücker vector against B")
    p.add_argument("file")
    p.add_argument("--convention", choices=["unsigned", "signed"], default="unsigned")
    p.set_defaults(func=cmd_check_point)

    p = sub.add_parser("survey", parents=[common], help="which sign convention annihilates sampled Lagrangian points")
    p.add_argument("--samples", type=int, default=100)
    p.set_defaults(func=cmd_survey)
    return parser


def main(argv=None) -> int:
    logging.basicConfig(level=logging.WARNING, format="%(levelname)s: %(message)s")
    args = make_parser().parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
