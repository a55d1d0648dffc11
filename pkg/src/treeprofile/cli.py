"""Command-line interface: ``treeprofile VERB ...``.

Exit codes: 0 on success, 1 on usage or input errors, 2 when a ``verify``
suite reports a failed bound.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from fractions import Fraction
from typing import Sequence

from . import checks
from . import constructions as C
from ._validation import CapExceededError, TreeFormatError
from .enumeration import Embedding, count_subtrees, density, profile
from .search import SEARCH_CAP, center_drift_set, exhaustive_max_density, move_neighborhood
from .tree import canonicalize, format_edge_list, parse_edge_list

log = logging.getLogger("treeprofile")

EXIT_OK, EXIT_USAGE, EXIT_BOUND = 0, 1, 2


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 by default, which is reserved for failed bounds
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _frac(d: Fraction) -> dict[str, str]:
    return {"num": str(d.numerator), "den": str(d.denominator)}


def _read_tree(path: str):
    if path == "-":
        return parse_edge_list(sys.stdin.read())
    with open(path) as fh:
        return parse_edge_list(fh.read())


def _emit(text: str, out: str | None) -> None:
    if out and out != "-":
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _json(obj) -> str:
    return json.dumps(obj, sort_keys=True) + "\n"


def _resolve_cap(args, default: int) -> int:
    if args.cap is None:
        return default
    if args.cap > default and not args.allow_large:
        raise CapExceededError(f"--cap {args.cap} exceeds the default {default}; add --allow-large to confirm")
    return args.cap


# ---------------------------------------------------------------------------
# verbs


def _cmd_gen(args) -> int:
    fam = args.family
    if fam == "path":
        t = C.path(args.n)
    elif fam == "star":
        t = C.star(args.n)
    elif fam == "spider":
        t = C.spider(args.legs, args.leg_length)
    elif fam == "caterpillar":
        t = C.caterpillar([int(x) for x in args.counts.split(",")])
    elif fam == "sparkler":
        t = C.sparkler(args.k)
    elif fam == "sparkler-host":
        t = C.sparkler_host(k=args.k, n=args.n, leaves_per_vertebra=args.leaves)
    elif fam == "dary":
        t = C.complete_dary(args.d)
    elif fam == "universal":
        t = C.universal_tree(args.n, cap=_resolve_cap(args, C.UNIVERSAL_CAP))
    elif fam == "glue":
        t = C.glue(_read_tree(args.a), _read_tree(args.b))
    else:  # pragma: no cover - argparse restricts choices
        raise ValueError(fam)
    _emit(format_edge_list(t), args.output)
    return EXIT_OK


def _cmd_count(args) -> int:
    t = _read_tree(args.input)
    _emit(_json({"k": args.k, "n": t.n, "count": str(count_subtrees(t, args.k))}), args.output)
    return EXIT_OK


def _cmd_density(args) -> int:
    s, t = _read_tree(args.pattern), _read_tree(args.input)
    d = density(s, t)
    _emit(_json({"pattern": canonicalize(s), "n": t.n, "density": _frac(d)}), args.output)
    return EXIT_OK


def _cmd_profile(args) -> int:
    t = _read_tree(args.input)
    _emit(profile(t, args.k, include_zeros=not args.nonzero).to_json() + "\n", args.output)
    return EXIT_OK


def _cmd_search(args) -> int:
    s = _read_tree(args.pattern)
    cap = _resolve_cap(args, SEARCH_CAP)
    res = exhaustive_max_density(s, args.n, cap=cap)
    _emit(_json(res.to_dict()), args.output)
    return EXIT_OK


def _cmd_neighborhood(args) -> int:
    host = _read_tree(args.input)
    base = Embedding(host, tuple(int(x) for x in args.base.split(",")))
    hood = move_neighborhood(base, args.r)
    payload = {
        "base": list(base.vertices),
        "r": args.r,
        "members": [list(m.vertices) for m in hood.members],
    }
    if len(base) >= 17:
        payload["center_drift"] = sorted(center_drift_set(base))
    _emit(_json(payload), args.output)
    return EXIT_OK


def _suite_kwargs(name: str, args) -> dict:
    kw = {}
    if name in ("sparkler-count", "sparkler-total"):
        if args.k is not None:
            kw["ks"] = (args.k,)
        if args.n is not None:
            kw["ns"] = (args.n,)
        if args.leaves is not None:
            kw["leaves"] = args.leaves
    elif name == "sparkler-bound":
        if args.k is not None:
            kw["ks"] = (args.k,)
        if args.n is not None:
            kw["n"] = args.n
    elif name == "optimization" and args.k is not None:
        kw["k"] = args.k
    elif name == "universal" and args.n is not None:
        kw["n"] = args.n
    elif name in ("center-drift", "hub-drift"):
        kw["seed"] = args.seed
        if args.count is not None:
            kw["count"] = args.count
    elif name in ("glue", "hubs", "normalization") and args.max_n is not None:
        kw["max_n"] = args.max_n
    return kw


def _cmd_verify(args) -> int:
    names = list(checks.SUITES) if args.suite == "all" else [args.suite]
    failed = False
    lines = []
    for name in names:
        for rep in checks.SUITES[name](**_suite_kwargs(name, args)):
            d = rep.to_dict()
            d["suite"] = name
            lines.append(_json(d))
            failed |= not rep.holds
    _emit("".join(lines), args.output)
    return EXIT_BOUND if failed else EXIT_OK


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="treeprofile", description="Exact subtree densities and profiles of trees.")
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    def common(sp, cap=False):
        sp.add_argument("-o", "--output", help="output file (default stdout)")
        if cap:
            sp.add_argument("--cap", type=int, help="override the size cap")
            sp.add_argument("--allow-large", action="store_true", help="acknowledge a raised cap")

    g = sub.add_parser("gen", help="generate a tree as an edge list")
    g.add_argument(
        "family",
        choices=["path", "star", "spider", "caterpillar", "sparkler", "sparkler-host", "dary", "universal", "glue"],
    )
    g.add_argument("--n", type=int)
    g.add_argument("--k", type=int)
    g.add_argument("--d", type=int)
    g.add_argument("--legs", type=int)
    g.add_argument("--leg-length", type=int)
    g.add_argument("--leaves", type=int, help="leaves per vertebra (default 3k)")
    g.add_argument("--counts", help="comma-separated leaf counts for caterpillar")
    g.add_argument("--a", help="left operand file for glue")
    g.add_argument("--b", help="right operand file for glue")
    common(g, cap=True)
    g.set_defaults(func=_cmd_gen)

    c = sub.add_parser("count", help="number of k-vertex subtrees")
    c.add_argument("-i", "--input", required=True)
    c.add_argument("--k", type=int, required=True)
    common(c)
    c.set_defaults(func=_cmd_count)

    d = sub.add_parser("density", help="density of a pattern tree in a host")
    d.add_argument("-s", "--pattern", required=True)
    d.add_argument("-i", "--input", required=True)
    common(d)
    d.set_defaults(func=_cmd_density)

    pr = sub.add_parser("profile", help="k-profile of a tree as JSON")
    pr.add_argument("-i", "--input", required=True)
    pr.add_argument("--k", type=int, required=True)
    pr.add_argument("--nonzero", action="store_true", help="omit zero entries")
    common(pr)
    pr.set_defaults(func=_cmd_profile)

    se = sub.add_parser("search", help="maximum density over all n-vertex hosts")
    se.add_argument("-s", "--pattern", required=True)
    se.add_argument("--n", type=int, required=True)
    common(se, cap=True)
    se.set_defaults(func=_cmd_search)

    v = sub.add_parser("verify", help="run a verification suite; JSON lines, exit 2 on failure")
    v.add_argument("suite", choices=["all", *checks.SUITES])
    v.add_argument("--k", type=int)
    v.add_argument("--n", type=int)
    v.add_argument("--leaves", type=int)
    v.add_argument("--count", type=int)
    v.add_argument("--max-n", type=int)
    v.add_argument("--seed", type=int, default=0)
    common(v)
    v.set_defaults(func=_cmd_verify)

    nb = sub.add_parser("neighborhood", help="embeddings within r moved edges of a base")
    nb.add_argument("-i", "--input", required=True)
    nb.add_argument("--base", required=True, help="comma-separated host vertices")
    nb.add_argument("--r", type=int, default=1)
    common(nb)
    nb.set_defaults(func=_cmd_neighborhood)
    return p


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING)
    try:
        return args.func(args)
    except TreeFormatError as exc:
        print(f"treeprofile: malformed tree: {exc}", file=sys.stderr)
    except CapExceededError as exc:
        print(f"treeprofile: {exc}", file=sys.stderr)
    except (ValueError, TypeError, OSError) as exc:
        print(f"treeprofile: {exc}", file=sys.stderr)
    return EXIT_USAGE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
