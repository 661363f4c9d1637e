"""Command-line front door.

Subcommands: kron, coeff, classify, classify-triple, classify-skew,
table, verify.  All output orderings are fixed, so identical
invocations produce byte-identical stdout; timing goes to stderr.

Exit codes: 0 success (and multiplicity-free for classify), 1 for a
negative classification or verification mismatches, 2 for usage errors
(bad grammar, degree mismatch, exceeded ceilings).
"""

from __future__ import annotations

import argparse
import json
import sys
from math import factorial

from .cache import ProductCache
from .characters import TableCeilingError, character_table
from .classification import is_mf_pair, is_mf_skew_times_irr, is_mf_triple
from .expansion import CharacterExpansion
from .kronecker import ENGINES, kron_coefficient, kron_product
from .partitions import format_partition, parse_partition, parse_skew
from .verdict import MfVerdict
from .verify import VERIFY_MODES, mode_ceiling


class CliError(Exception):
    pass


def _common_flags(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--format", choices=("text", "json", "csv"), default="text")
    sub.add_argument("--engine", choices=ENGINES, default="auto")
    sub.add_argument("--jobs", type=int, default=1)
    sub.add_argument("--cache", default=None, metavar="PATH")
    sub.add_argument("--force", action="store_true", help="bypass mode ceilings")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="kronmf",
        description="Exact Kronecker products and the multiplicity-free classification",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("kron", help="expand a Kronecker product")
    p.add_argument("lam")
    p.add_argument("mu")
    _common_flags(p)

    p = sub.add_parser("coeff", help="one Kronecker coefficient g(lam,mu,nu)")
    p.add_argument("lam")
    p.add_argument("mu")
    p.add_argument("nu")
    _common_flags(p)

    p = sub.add_parser("classify", help="multiplicity-free test for a pair")
    p.add_argument("lam")
    p.add_argument("mu")
    _common_flags(p)

    p = sub.add_parser("classify-triple", help="multiplicity-free test for a triple")
    p.add_argument("lam")
    p.add_argument("mu")
    p.add_argument("nu")
    _common_flags(p)

    p = sub.add_parser("classify-skew", help="multiplicity-free test for skew times irreducible")
    p.add_argument("skew")
    p.add_argument("alpha")
    _common_flags(p)

    p = sub.add_parser("table", help="exact character table")
    p.add_argument("n", type=int)
    _common_flags(p)

    p = sub.add_parser("verify", help="exhaustive verification sweep at one degree")
    p.add_argument("n", type=int)
    p.add_argument("--mode", choices=tuple(VERIFY_MODES), default="pairs")
    _common_flags(p)

    return parser


def _parse(text: str):
    try:
        return parse_partition(text)
    except ValueError as exc:
        raise CliError(str(exc)) from None


def _render_expansion(exp: CharacterExpansion, fmt: str, left: str, right: str) -> str:
    if fmt == "text":
        return str(exp)
    if fmt == "json":
        return json.dumps(
            {
                "left": left,
                "right": right,
                "n": exp.degree,
                "terms": [{"p": format_partition(p), "m": m} for p, m in exp.items()],
            },
            separators=(",", ":"),
        )
    lines = ["partition,multiplicity"]
    lines.extend(f"{format_partition(p)},{m}" for p, m in exp.items())
    return "\n".join(lines)


def _render_verdict(v: MfVerdict, fmt: str, operands: dict[str, str]) -> str:
    if fmt == "json":
        payload = dict(operands)
        payload.update(
            {
                "multiplicity_free": v.multiplicity_free,
                "clause": v.clause,
                "normalization": list(v.normalization),
            }
        )
        return json.dumps(payload, separators=(",", ":"))
    if not v.multiplicity_free:
        return "not multiplicity-free"
    norm = ", ".join(v.normalization) if v.normalization else "none"
    return f"multiplicity-free  clause={v.clause}  normalization={norm}"


def _cmd_kron(args) -> int:
    lam, mu = _parse(args.lam), _parse(args.mu)
    if lam.n != mu.n:
        raise CliError(f"degree mismatch: |{args.lam}| = {lam.n}, |{args.mu}| = {mu.n}")
    exp = kron_product(lam, mu, args.engine)
    print(_render_expansion(exp, args.format, format_partition(lam), format_partition(mu)))
    return 0


def _cmd_coeff(args) -> int:
    lam, mu, nu = _parse(args.lam), _parse(args.mu), _parse(args.nu)
    if not (lam.n == mu.n == nu.n):
        raise CliError(f"degree mismatch: {lam.n}, {mu.n}, {nu.n}")
    g = kron_coefficient(lam, mu, nu, args.engine)
    if args.format == "json":
        print(
            json.dumps(
                {
                    "lambda": format_partition(lam),
                    "mu": format_partition(mu),
                    "nu": format_partition(nu),
                    "n": lam.n,
                    "g": g,
                },
                separators=(",", ":"),
            )
        )
    else:
        print(g)
    return 0


def _cmd_classify(args) -> int:
    lam, mu = _parse(args.lam), _parse(args.mu)
    if lam.n != mu.n:
        raise CliError(f"degree mismatch: |{args.lam}| = {lam.n}, |{args.mu}| = {mu.n}")
    try:
        verdict = is_mf_pair(lam, mu)
    except ValueError as exc:
        raise CliError(str(exc)) from None
    print(
        _render_verdict(
            verdict,
            args.format,
            {"left": format_partition(lam), "right": format_partition(mu)},
        )
    )
    return 0 if verdict else 1


def _cmd_classify_triple(args) -> int:
    lam, mu, nu = _parse(args.lam), _parse(args.mu), _parse(args.nu)
    if not (lam.n == mu.n == nu.n):
        raise CliError(f"degree mismatch: {lam.n}, {mu.n}, {nu.n}")
    try:
        verdict = is_mf_triple(lam, mu, nu)
    except ValueError as exc:
        raise CliError(str(exc)) from None
    print(
        _render_verdict(
            verdict,
            args.format,
            {
                "left": format_partition(lam),
                "middle": format_partition(mu),
                "right": format_partition(nu),
            },
        )
    )
    return 0 if verdict else 1


def _cmd_classify_skew(args) -> int:
    try:
        skew = parse_skew(args.skew)
    except ValueError as exc:
        raise CliError(str(exc)) from None
    alpha = _parse(args.alpha)
    if skew.size != alpha.n:
        raise CliError(f"size mismatch: |{args.skew}| = {skew.size}, |{args.alpha}| = {alpha.n}")
    verdict = is_mf_skew_times_irr(skew, alpha)
    print(
        _render_verdict(
            verdict,
            args.format,
            {"skew": str(skew), "alpha": format_partition(alpha)},
        )
    )
    return 0 if verdict else 1


def _spot_check_orthogonality(table) -> None:
    """Cheap sanity: trivial-row pairings before anything is printed."""
    nfact = factorial(table.degree)
    trivial = table.values[0]
    for i, row in enumerate(table.values):
        dot = sum(cs * x * y for cs, x, y in zip(table.class_sizes, trivial, row))
        if dot != (nfact if i == 0 else 0):
            raise AssertionError("character table failed the orthogonality spot check")


def _cmd_table(args) -> int:
    try:
        table = character_table(args.n, ceiling=None if not args.force else args.n)
    except TableCeilingError as exc:
        raise CliError(str(exc)) from None
    _spot_check_orthogonality(table)
    if args.format == "json":
        print(table.to_json())
    elif args.format == "csv":
        print(table.to_csv(), end="")
    else:
        labels = [format_partition(p) for p in table.rows]
        widths = [max(len(format_partition(c)), 1) for c in table.cols]
        widths = [
            max(w, *(len(str(row[j])) for row in table.values))
            for j, w in enumerate(widths)
        ]
        label_w = max(len("class size"), *(len(s) for s in labels))
        head = " ".join(c.rjust(w) for c, w in zip((format_partition(c) for c in table.cols), widths))
        print(f"{'':>{label_w}} {head}")
        print(f"{'class size':>{label_w}} " + " ".join(str(cs).rjust(w) for cs, w in zip(table.class_sizes, widths)))
        for label, row in zip(labels, table.values):
            print(f"{label:>{label_w}} " + " ".join(str(v).rjust(w) for v, w in zip(row, widths)))
    return 0


def _cmd_verify(args) -> int:
    if args.n > mode_ceiling(args.mode) and not args.force:
        raise CliError(
            f"n={args.n} exceeds the {args.mode} ceiling {mode_ceiling(args.mode)}; "
            "pass --force or raise the env override"
        )
    kwargs = {"jobs": max(1, args.jobs)}
    if args.mode == "pairs":
        kwargs["cache"] = ProductCache(args.cache) if args.cache else None
        kwargs["engine"] = args.engine
    elif args.mode in ("triples", "skew"):
        kwargs["engine"] = args.engine
    report = VERIFY_MODES[args.mode](args.n, **kwargs)
    print(report.to_json() if args.format == "json" else report.to_text())
    print(f"wall_time={report.wall_time:.3f}s", file=sys.stderr)
    return 0 if report.ok else 1


_COMMANDS = {
    "kron": _cmd_kron,
    "coeff": _cmd_coeff,
    "classify": _cmd_classify,
    "classify-triple": _cmd_classify_triple,
    "classify-skew": _cmd_classify_skew,
    "table": _cmd_table,
    "verify": _cmd_verify,
}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except TableCeilingError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
