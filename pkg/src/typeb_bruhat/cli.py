"""Command line interface: ``typeb-bruhat <subcommand> ...``.

Exit codes: 0 success, 1 usage error, 2 validation error,
3 verification mismatch, 4 resource guard.
"""
from __future__ import annotations

import argparse
import json
import sys
import time

from . import __version__
from .bruhat_graph import build_graph, export_dot, export_json, rank_sizes
from .covering import CoverType, classify, covered_by, covers_of
from .errors import ResourceGuardError, TypeBError, ValidationError
from .grassmannian import (
    dual,
    enumerate_grassmannian,
    from_signed,
    length_grass,
    partition_pair,
    quotient_size,
)
from .maya import from_maya, parse_maya, to_maya
from .oracle import DEFAULT_MAX_N, build_full_group, quotient_cover_oracle
from .signed_perm import bar_position, parse_oneline

EXIT_OK, EXIT_USAGE, EXIT_INVALID, EXIT_MISMATCH, EXIT_RESOURCE = 0, 1, 2, 3, 4


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _grass(text, k):
    w = parse_oneline(text)
    bar = bar_position(text)
    if bar is not None and bar != k:
        raise ValidationError(f"'|' after position {bar} contradicts --k {k}")
    if not 0 <= k <= w.n:
        raise UsageError(f"--k {k} outside [0, {w.n}]")
    return from_signed(w, k)


def _ints(seq):
    return " ".join(str(x) for x in seq)


def _emit_element(g, fmt, out):
    if fmt == "json":
        out.write(g.to_json() + "\n")
    elif fmt == "maya":
        out.write(to_maya(g).boxes + "\n")
    else:
        out.write(g.oneline + "\n")


def cmd_length(args, out):
    g = _grass(args.perm, args.k)
    pp = partition_pair(g)
    if args.format == "json":
        doc = {
            "length": length_grass(g),
            "alpha": list(pp.alpha),
            "lambda": list(pp.lam),
            "mu": list(pp.mu),
            "d": list(pp.d),
        }
        out.write(json.dumps(doc) + "\n")
    else:
        out.write(f"length\t{pp.size}\n")
        out.write(f"alpha\t{_ints(pp.alpha)}\n")
        out.write(f"lambda\t{_ints(pp.lam)}\n")
        out.write(f"mu\t{_ints(pp.mu)}\n")
        out.write(f"d\t{_ints(pp.d)}\n")


def cmd_enumerate(args, out):
    if args.n < 1 or not 0 <= args.k <= args.n:
        raise UsageError("need n >= 1 and 0 <= k <= n")
    if args.n > args.max_n:
        raise ResourceGuardError(
            f"n={args.n} gives {quotient_size(args.n, args.k)} elements; raise --max-n"
        )
    for g in enumerate_grassmannian(args.n, args.k):
        _emit_element(g, args.format, out)


def _emit_edges(edges, attr, fmt, out):
    for e in edges:
        g = getattr(e, attr)
        if fmt == "json":
            out.write(json.dumps({"type": e.ctype.value, **g.to_dict()}) + "\n")
        elif fmt == "maya":
            out.write(f"{e.ctype}\t{to_maya(g).boxes}\n")
        else:
            out.write(f"{e.ctype}\t{g.oneline}\n")


def cmd_covered_by(args, out):
    _emit_edges(covered_by(_grass(args.perm, args.k)), "lower", args.format, out)


def cmd_covers(args, out):
    _emit_edges(covers_of(_grass(args.perm, args.k)), "upper", args.format, out)


def cmd_classify(args, out):
    t = classify(_grass(args.w, args.k), _grass(args.w2, args.k))
    out.write(f"{t if t is not None else 'none'}\n")


def cmd_dual(args, out):
    _emit_element(dual(_grass(args.perm, args.k)), args.format, out)


def cmd_maya(args, out):
    if args.action == "encode":
        if args.k is None:
            raise UsageError("maya encode needs --k")
        out.write(to_maya(_grass(args.value, args.k)).boxes + "\n")
    else:
        m = parse_maya(args.value)
        g = from_maya(m)
        out.write(f"{g.oneline}\n" if args.format != "json" else g.to_json() + "\n")


def _parse_style(specs):
    styles = {}
    for spec in specs or ():
        try:
            tag, attrs = spec.split("=", 1)
            ctype = CoverType(tag.strip().upper())
        except ValueError:
            raise UsageError(f"bad --edge-style {spec!r}; use TYPE=key:val[,key:val]")
        parsed = {}
        for item in attrs.split(","):
            key, sep, val = item.partition(":")
            if not sep:
                raise UsageError(f"bad attribute {item!r} in --edge-style")
            parsed[key.strip()] = val.strip()
        styles.setdefault(ctype, {}).update(parsed)
    return styles


def cmd_graph(args, out):
    if args.n < 1 or not 0 <= args.k <= args.n:
        raise UsageError("need n >= 1 and 0 <= k <= n")
    gr = build_graph(args.n, args.k, max_n=args.max_n)
    styles = _parse_style(args.edge_style)
    if args.dot:
        with open(args.dot, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(export_dot(gr, styles=styles, duality=args.duality))
    if args.json:
        with open(args.json, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(export_json(gr))
    out.write(
        f"nodes\t{len(gr.nodes)}\nedges\t{len(gr.edges)}\n"
        f"rank_sizes\t{_ints(rank_sizes(gr))}\n"
    )


def cmd_verify(args, out):
    if args.max_n < 1:
        raise UsageError("--max-n must be >= 1")
    if args.max_n > args.bound:
        raise ResourceGuardError(f"--max-n {args.max_n} exceeds --bound {args.bound}")
    mismatches = 0
    start = time.perf_counter()
    out.write("n\tk\tnodes\ttheorem_edges\toracle_edges\tstatus\n")
    for n in range(1, args.max_n + 1):
        table = build_full_group(n, max_n=args.bound, cache_dir=args.cache)
        for k in range(n + 1):
            oracle = quotient_cover_oracle(n, k, table=table)
            theorem = set()
            types = {}
            for g in enumerate_grassmannian(n, k):
                for e in covered_by(g):
                    theorem.add((e.lower, e.upper))
                    types[(e.lower, e.upper)] = e.ctype
            status = "OK" if theorem == oracle else "MISMATCH"
            out.write(
                f"{n}\t{k}\t{quotient_size(n, k)}\t{len(theorem)}\t{len(oracle)}\t{status}\n"
            )
            if theorem != oracle:
                mismatches += 1
                for lo, up in sorted(theorem - oracle, key=lambda p: (p[0].entries, p[1].entries)):
                    out.write(f"  extra\t{types[(lo, up)]}\t{up.oneline} > {lo.oneline}\n")
                for lo, up in sorted(oracle - theorem, key=lambda p: (p[0].entries, p[1].entries)):
                    out.write(f"  missing\t{up.oneline} > {lo.oneline}\n")
    elapsed = time.perf_counter() - start
    out.write(f"{'OK' if not mismatches else 'FAILED'}\t{mismatches} mismatching (n, k)\t{elapsed:.2f}s\n")
    return EXIT_OK if not mismatches else EXIT_MISMATCH


def build_parser():
    p = _Parser(prog="typeb-bruhat", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)
    fmt = dict(choices=("text", "json", "maya"), default="text")

    s = sub.add_parser("length", help="length and partition data of a representative")
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--format", choices=("text", "json"), default="text")
    s.add_argument("perm")
    s.set_defaults(func=cmd_length)

    s = sub.add_parser("enumerate", help="list W_n^(k) in lexicographic order")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--format", **fmt)
    s.add_argument("--max-n", type=int, default=16)
    s.set_defaults(func=cmd_enumerate)

    for name, func, helptext in (
        ("covered-by", cmd_covered_by, "elements covered by PERM, tagged B1..B4"),
        ("covers", cmd_covers, "elements covering PERM, tagged B1..B4"),
        ("dual", cmd_dual, "dual permutation w * w0"),
    ):
        s = sub.add_parser(name, help=helptext)
        s.add_argument("--k", type=int, required=True)
        s.add_argument("--format", **fmt)
        s.add_argument("perm")
        s.set_defaults(func=func)

    s = sub.add_parser("classify", help="covering type of the pair (W, W2)")
    s.add_argument("--k", type=int, required=True)
    s.add_argument("w")
    s.add_argument("w2")
    s.set_defaults(func=cmd_classify)

    s = sub.add_parser("maya", help="Maya diagram codec")
    s.add_argument("action", choices=("encode", "decode"))
    s.add_argument("--k", type=int)
    s.add_argument("--format", choices=("text", "json"), default="text")
    s.add_argument("value")
    s.set_defaults(func=cmd_maya)

    s = sub.add_parser("graph", help="export the Bruhat graph of W_n^(k)")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--dot", metavar="PATH")
    s.add_argument("--json", metavar="PATH")
    s.add_argument("--duality", action="store_true", help="mark dual pairs in DOT")
    s.add_argument(
        "--edge-style",
        action="append",
        metavar="TYPE=key:val[,key:val]",
        help="override DOT edge attributes, e.g. B4=penwidth:3,color:red",
    )
    s.add_argument("--max-n", type=int, default=12)
    s.set_defaults(func=cmd_graph)

    s = sub.add_parser("verify", help="compare covering rules with the brute-force oracle")
    s.add_argument("--max-n", type=int, required=True)
    s.add_argument("--bound", type=int, default=DEFAULT_MAX_N, help="largest rank allowed")
    s.add_argument("--cache", metavar="DIR", help="reuse full-group tables from DIR")
    s.set_defaults(func=cmd_verify)
    return p


def main(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        code = args.func(args, out)
    except UsageError as exc:
        err.write(f"error: {exc}\n")
        return EXIT_USAGE
    except ResourceGuardError as exc:
        err.write(f"error: {exc}\n")
        return EXIT_RESOURCE
    except TypeBError as exc:
        err.write(f"error: {exc}\n")
        return EXIT_INVALID
    return EXIT_OK if code is None else code


if __name__ == "__main__":
    sys.exit(main())
