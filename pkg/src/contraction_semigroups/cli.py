"""Command line front end.

Subcommands: enumerate, relations, starred, rank, order, verify-all.
All computation is deterministic; identical invocations produce
byte-identical output.  Exit codes: 0 success, 1 a requested check
failed, 2 usage error, 3 a size ceiling was exceeded.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass

from .chain_maps import FAMILY_TAGS
from .errors import CapacityError
from .family_enumeration import FILTER_CEILING
from .natural_order import leq_ODCT_theorem, leq_OCT_theorem, order_table
from .rank_analysis import rank_exact
from .semigroup_engine import FiniteSemigroup, family_semigroup, greens_partitions
from .starred_relations import abundance_report
from .verification import run_all_checks

_GREENS_ORDER = ("L", "R", "H", "D", "J")
_STARRED_ORDER = ("L*", "R*", "H*", "D*", "J*")


@dataclass(frozen=True)
class RunConfig:
    """A fully validated invocation."""

    command: str
    family: str | None
    n: int | None
    n_max: int | None
    fmt: str
    out: str | None
    max_filter_n: int
    middle_reading: str
    check: str | None

    def __post_init__(self):
        if self.n is not None and self.n < 1:
            raise ValueError(f"n must be at least 1, got {self.n}")
        if self.n_max is not None and self.n_max < 1:
            raise ValueError(f"n-max must be at least 1, got {self.n_max}")
        if self.max_filter_n < 1:
            raise ValueError(f"max-filter-n must be positive, got {self.max_filter_n}")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="contraction-semigroups",
        description="Semigroups of contraction mappings on a finite chain.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, *, with_n=True):
        p.add_argument("--family", choices=FAMILY_TAGS, required=True)
        if with_n:
            p.add_argument("--n", type=int, required=True, help="chain size")
        p.add_argument("--format", dest="fmt", choices=("json", "csv", "text"))
        p.add_argument("--out", help="write output to this path instead of stdout")
        p.add_argument(
            "--max-filter-n",
            type=int,
            default=FILTER_CEILING,
            help="ceiling for brute-force family enumeration",
        )

    add_common(sub.add_parser("enumerate", help="list the family's elements"))
    add_common(sub.add_parser("relations", help="Green's relation classes"))
    add_common(sub.add_parser("starred", help="starred relation classes and abundance"))
    add_common(sub.add_parser("rank", help="exact rank with a certificate"))

    order = sub.add_parser("order", help="natural partial order table or criterion check")
    add_common(order)
    order.add_argument(
        "--check",
        choices=("theorem-vs-definitional",),
        help="compare the closed-form criterion against the witness search",
    )
    order.add_argument(
        "--middle-blocks-reading",
        dest="middle_reading",
        choices=("forall", "forsome"),
        default="forall",
        help="quantifier for the middle-block clause of the decreasing-family criterion",
    )

    verify = sub.add_parser("verify-all", help="run every named check")
    verify.add_argument("--family", choices=FAMILY_TAGS, required=True)
    verify.add_argument("--n-max", dest="n_max", type=int, default=5)
    verify.add_argument("--format", dest="fmt", choices=("json", "csv", "text"))
    verify.add_argument("--out", help="write output to this path instead of stdout")
    verify.add_argument(
        "--max-filter-n", type=int, default=FILTER_CEILING,
        help="ceiling for brute-force family enumeration",
    )
    verify.add_argument(
        "--middle-blocks-reading",
        dest="middle_reading",
        choices=("forall", "forsome"),
        default="forall",
    )
    return parser


def _config(parser: argparse.ArgumentParser, args: argparse.Namespace) -> RunConfig:
    fmt = getattr(args, "fmt", None)
    if fmt is None:
        fmt = "text" if args.command == "enumerate" else "json"
    if fmt == "csv" and args.command != "relations":
        parser.error("csv format is only available for the relations subcommand")
    if args.command == "verify-all" and args.family != "ODCT":
        parser.error("verify-all covers the decreasing family; use --family ODCT")
    if args.command == "order" and args.check and args.family not in ("OCT", "ODCT"):
        parser.error("order --check needs a closed-form criterion: --family OCT or ODCT")
    try:
        return RunConfig(
            command=args.command,
            family=getattr(args, "family", None),
            n=getattr(args, "n", None),
            n_max=getattr(args, "n_max", None),
            fmt=fmt,
            out=getattr(args, "out", None),
            max_filter_n=getattr(args, "max_filter_n", FILTER_CEILING),
            middle_reading=getattr(args, "middle_reading", "forall"),
            check=getattr(args, "check", None),
        )
    except ValueError as exc:
        parser.error(str(exc))


def _semigroup(cfg: RunConfig) -> FiniteSemigroup:
    return family_semigroup(cfg.family, cfg.n, max_filter_n=cfg.max_filter_n)


def _partition_classes(S: FiniteSemigroup, part) -> list[list[str]]:
    return [[str(S.element(i)) for i in cls] for cls in part.classes]


def _json(payload) -> str:
    return json.dumps(payload, indent=2)


def _run_enumerate(cfg: RunConfig) -> tuple[int, str]:
    S = _semigroup(cfg)
    texts = [str(m) for m in S.elements]
    if cfg.fmt == "text":
        return 0, "\n".join(texts)
    payload = {"family": cfg.family, "n": cfg.n, "size": len(S), "elements": texts}
    return 0, _json(payload)


def _run_relations(cfg: RunConfig) -> tuple[int, str]:
    S = _semigroup(cfg)
    parts = greens_partitions(S)
    if cfg.fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["relation", "class_index", "member"])
        for rel in _GREENS_ORDER:
            for ci, cls in enumerate(_partition_classes(S, parts[rel])):
                for member in cls:
                    writer.writerow([rel, ci, member])
        return 0, buf.getvalue().rstrip("\n")
    payload = {
        "family": cfg.family,
        "n": cfg.n,
        "size": len(S),
        "relations": {
            rel: {
                "num_classes": parts[rel].num_classes,
                "classes": _partition_classes(S, parts[rel]),
            }
            for rel in _GREENS_ORDER
        },
    }
    if cfg.fmt == "json":
        return 0, _json(payload)
    lines = [f"family={cfg.family} n={cfg.n} size={len(S)}"]
    for rel in _GREENS_ORDER:
        lines.append(f"{rel}: {parts[rel].num_classes} classes")
        for cls in _partition_classes(S, parts[rel]):
            lines.append("  {" + ", ".join(cls) + "}")
    return 0, "\n".join(lines)


def _run_starred(cfg: RunConfig) -> tuple[int, str]:
    S = _semigroup(cfg)
    rep = abundance_report(S)
    parts = dict(
        zip(_STARRED_ORDER, (rep.lstar, rep.rstar, rep.hstar, rep.dstar, rep.jstar))
    )
    payload = {
        "family": cfg.family,
        "n": cfg.n,
        "size": len(S),
        "relations": {
            rel: {
                "num_classes": parts[rel].num_classes,
                "classes": _partition_classes(S, parts[rel]),
            }
            for rel in _STARRED_ORDER
        },
        "left_abundant": rep.left_abundant,
        "right_abundant": rep.right_abundant,
        "left_adequate": rep.left_adequate,
        "witness_gaps": [
            {"relation": kind, "class": [str(m) for m in cls]}
            for cls, kind in rep.witness_gaps
        ],
    }
    if cfg.fmt == "json":
        return 0, _json(payload)
    lines = [f"family={cfg.family} n={cfg.n} size={len(S)}"]
    for rel in _STARRED_ORDER:
        lines.append(f"{rel}: {parts[rel].num_classes} classes")
    lines.append(f"left abundant: {rep.left_abundant}")
    lines.append(f"right abundant: {rep.right_abundant}")
    lines.append(f"left adequate: {rep.left_adequate}")
    for cls, kind in rep.witness_gaps:
        lines.append("idempotent-free " + kind + " class: {" + ", ".join(str(m) for m in cls) + "}")
    return 0, "\n".join(lines)


def _run_rank(cfg: RunConfig) -> tuple[int, str]:
    S = _semigroup(cfg)
    cert = rank_exact(S)
    unique = "unknown" if cert.is_unique_minimum is None else cert.is_unique_minimum
    payload = {
        "family": cfg.family,
        "n": cfg.n,
        "size": len(S),
        "rank": cert.rank,
        "generators": [str(m) for m in cert.generators],
        "minimal": cert.is_minimal,
        "unique_minimum": unique,
    }
    if cfg.fmt == "json":
        return 0, _json(payload)
    lines = [
        f"family={cfg.family} n={cfg.n} size={len(S)}",
        f"rank: {cert.rank}",
        f"minimal: {cert.is_minimal}",
        f"unique minimum: {unique}",
        "generators:",
    ]
    lines.extend(f"  {m}" for m in cert.generators)
    return 0, "\n".join(lines)


def _run_order(cfg: RunConfig) -> tuple[int, str]:
    S = _semigroup(cfg)
    pairs = order_table(S)
    ordered = sorted((str(a), str(b)) for a, b in pairs)
    if cfg.check is None:
        payload = {
            "family": cfg.family,
            "n": cfg.n,
            "size": len(S),
            "pairs": [list(p) for p in ordered],
        }
        if cfg.fmt == "json":
            return 0, _json(payload)
        return 0, "\n".join(f"{a} <= {b}" for a, b in ordered)
    criterion = (
        leq_OCT_theorem
        if cfg.family == "OCT"
        else lambda a, b: leq_ODCT_theorem(a, b, cfg.middle_reading)
    )
    disagreements = []
    for a in S.elements:
        for b in S.elements:
            by_criterion = criterion(a, b)
            by_search = (a, b) in pairs
            if by_criterion != by_search:
                disagreements.append(
                    {
                        "a": str(a),
                        "b": str(b),
                        "criterion": by_criterion,
                        "search": by_search,
                    }
                )
    agree = not disagreements
    payload = {
        "family": cfg.family,
        "n": cfg.n,
        "size": len(S),
        "pairs_checked": len(S) ** 2,
        "related_pairs": len(pairs),
        "disagreements": disagreements,
        "verdict": "agree" if agree else "disagree",
    }
    if cfg.family == "ODCT":
        payload["middle_blocks_reading"] = cfg.middle_reading
    if cfg.fmt == "json":
        out = _json(payload)
    else:
        lines = [
            f"family={cfg.family} n={cfg.n} size={len(S)}",
            f"pairs checked: {len(S) ** 2}",
            f"related pairs: {len(pairs)}",
            f"verdict: {payload['verdict']}",
        ]
        lines.extend(
            f"disagree on {d['a']} <= {d['b']}: criterion={d['criterion']} search={d['search']}"
            for d in disagreements
        )
        out = "\n".join(lines)
    return (0 if agree else 1), out


def _run_verify_all(cfg: RunConfig) -> tuple[int, str]:
    results = run_all_checks(cfg.n_max, cfg.middle_reading)
    all_passed = all(r.passed for r in results)
    if cfg.fmt == "json":
        payload = {
            "family": cfg.family,
            "n_max": cfg.n_max,
            "middle_blocks_reading": cfg.middle_reading,
            "checks": [
                {"name": r.name, "passed": r.passed, "details": r.details}
                for r in results
            ],
            "all_passed": all_passed,
        }
        out = _json(payload)
    else:
        lines = [
            f"{'PASS' if r.passed else 'FAIL'} {r.name}: {r.details}" for r in results
        ]
        lines.append(f"{'all checks passed' if all_passed else 'SOME CHECKS FAILED'}")
        out = "\n".join(lines)
    return (0 if all_passed else 1), out


_RUNNERS = {
    "enumerate": _run_enumerate,
    "relations": _run_relations,
    "starred": _run_starred,
    "rank": _run_rank,
    "order": _run_order,
    "verify-all": _run_verify_all,
}


def main(argv=None) -> int:
    parser = _build_parser()
    cfg = _config(parser, parser.parse_args(argv))
    try:
        code, out = _RUNNERS[cfg.command](cfg)
    except CapacityError as exc:
        print(f"capacity: {exc}", file=sys.stderr)
        return 3
    if cfg.out:
        with open(cfg.out, "w") as fh:
            fh.write(out + "\n")
    else:
        print(out)
    return code


if __name__ == "__main__":
    sys.exit(main())
