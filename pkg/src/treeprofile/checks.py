"""Verification suites shared by the ``verify`` command and the test suite.

Every function returns a list of :class:`~treeprofile.bounds.BoundReport`;
a suite passes when every report holds.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product

from . import bounds as B
from . import constructions as C
from .enumeration import (
    Embedding,
    code_counts,
    count_embeddings,
    count_subtrees,
    count_subtrees_by_size,
    density,
    profile,
)
from .search import (
    center_drift_set,
    drift_instances,
    exhaustive_max_density,
    hub_drift_instances,
    hub_drift_set,
)
from .tree import all_free_trees, canonicalize, classify, hubs

__all__ = [
    "sparkler_count_reports",
    "sparkler_total_reports",
    "sparkler_bound_reports",
    "optimization_reports",
    "universal_reports",
    "glue_reports",
    "glue_violations",
    "hub_count_reports",
    "center_drift_reports",
    "hub_drift_reports",
    "elimit_reports",
    "normalization_reports",
    "SUITES",
]


def sparkler_count_reports(ks=(4, 5, 6), ns=(1, 2), leaves=None) -> list[B.BoundReport]:
    out = []
    for k, n in product(ks, ns):
        L = 3 * k if leaves is None else leaves
        host = C.sparkler_host(k=k, n=n, leaves_per_vertebra=L)
        out.append(
            B.BoundReport(
                "sparkler_copy_count",
                claimed=B.sparkler_copy_count(k, n, L),
                observed=count_embeddings(C.sparkler(k), host),
                relation="==",
                context={"k": k, "n": n, "leaves": L},
            )
        )
    return out


def sparkler_total_reports(ks=(4, 5, 6), ns=(1, 2), leaves=None) -> list[B.BoundReport]:
    out = []
    for k, n in product(ks, ns):
        L = 3 * k if leaves is None else leaves
        host = C.sparkler_host(k=k, n=n, leaves_per_vertebra=L)
        out.append(
            B.BoundReport(
                "sparkler_total_count",
                claimed=B.sparkler_total_count(k, n, L),
                observed=count_subtrees(host, k + 1),
                relation="==",
                context={"k": k, "n": n, "leaves": L},
            )
        )
    return out


def sparkler_bound_reports(ks=range(4, 9), n=1) -> list[B.BoundReport]:
    """Enumerated host density against the closed-form bound and 13/165."""
    out = []
    for k in ks:
        d = density(C.sparkler(k), C.sparkler_host(k=k, n=n))
        bound = B.sparkler_density_bound(k)
        ctx = {"k": k, "n": n, "leaves": 3 * k}
        out.append(B.BoundReport("sparkler_density_vs_bound", bound, d, ">=", ctx))
        out.append(B.BoundReport("sparkler_bound_vs_floor", B.SPARKLER_FLOOR, bound, ">=", ctx))
    return out


def optimization_reports(k=40, alpha=Fraction(28507, 10000), threshold=Fraction(19, 100)) -> list[B.BoundReport]:
    L = B.optimized_leaf_count(k, alpha)
    d = B.sparkler_host_density(k, L)
    return [B.BoundReport("optimized_sparkler_density", threshold, d, ">", {"k": k, "leaves": L})]


def universal_reports(n=4, kmax=5) -> list[B.BoundReport]:
    host = C.universal_tree(n)
    out = []
    for k in range(1, kmax + 1):
        counts = code_counts(host, k)
        z = sum(counts.values())
        bound = None
        if k >= 3:
            bound = B.universal_density_bound(k, count_subtrees(C.universal_tree(k), k))
        for s in all_free_trees(k):
            code = canonicalize(s)
            d = Fraction(counts.get(code, 0), z)
            ctx = {"n": n, "pattern": code}
            out.append(B.BoundReport("universal_positive", 0, d, ">", ctx))
            if bound is not None:
                out.append(B.BoundReport("universal_density_bound", bound, d, ">=", ctx))
    return out


def glue_violations(max_n=10, kmax=5) -> list[dict]:
    """Pairs ``(a, b)`` of class representatives and ``k`` where
    ``Z_k(a) + Z_k(b) <= Z_k(a (+) b) <= Z_k(a) + Z_k(b) + slack`` fails,
    gluing with the default leaf-to-leaf spec."""
    trees = [t for m in range(1, max_n + 1) for t in all_free_trees(m)]
    z = [count_subtrees_by_size(t, kmax) for t in trees]
    bad = []
    for i, a in enumerate(trees):
        for j, b in enumerate(trees):
            g = C.glue(a, b)
            zg = count_subtrees_by_size(g, kmax)
            delta = g.max_degree
            for k in range(1, kmax + 1):
                lo = z[i][k] + z[j][k]
                slack = B.glue_upper_slack(k, delta) if k >= 2 else 1
                if not lo <= zg[k] <= lo + slack:
                    bad.append(
                        {"a": canonicalize(a), "b": canonicalize(b), "k": k,
                         "z_glued": zg[k], "z_sum": lo, "slack": slack}
                    )
    return bad


def glue_reports(max_n=10, kmax=5) -> list[B.BoundReport]:
    bad = glue_violations(max_n, kmax)
    ctx = {"max_n": max_n, "kmax": kmax, "violations": bad[:10]}
    return [B.BoundReport("glue_inequality_violations", 0, len(bad), "==", ctx)]


def hub_count_reports(max_n=12) -> list[B.BoundReport]:
    bad = []
    checked = 0
    for m in range(1, max_n + 1):
        for t in all_free_trees(m):
            if classify(t).is_caterpillar:
                continue
            checked += 1
            if len(hubs(t)) not in (1, 2):
                bad.append(canonicalize(t))
    return [B.BoundReport("hub_count_outside_1_2", 0, len(bad), "==",
                          {"max_n": max_n, "checked": checked, "violations": bad[:10]})]


def center_drift_reports(count=200, seed=0) -> list[B.BoundReport]:
    sizes = [len(center_drift_set(e)) for e in drift_instances(count, seed)]
    tight = center_drift_set(Embedding(C.path(24), tuple(range(3, 21))))
    return [
        B.BoundReport("center_drift_max", 8, max(sizes), "<=", {"count": count, "seed": seed}),
        B.BoundReport("center_drift_even_path", 8, len(tight), "==", {"base": "P18", "host": "P24"}),
    ]


def hub_drift_reports(count=50, seed=0) -> list[B.BoundReport]:
    sizes = [len(hub_drift_set(s, e)) for s, e in hub_drift_instances(count, seed)]
    return [B.BoundReport("hub_drift_max", 144, max(sizes), "<=", {"count": count, "seed": seed})]


def elimit_reports(k=5, ns=range(8, 13)) -> list[B.BoundReport]:
    out = []
    bound = B.elimit_bound(k)
    for s in all_free_trees(k):
        cls = classify(s)
        if cls.is_path or cls.is_star:
            continue
        for n in ns:
            r = exhaustive_max_density(s, n)
            out.append(B.BoundReport("elimit_consistency", bound, r.max_density, "<=",
                                     {"pattern": r.s_code, "n": n}))
    return out


def normalization_reports(max_n=10) -> list[B.BoundReport]:
    bad = []
    for m in range(1, max_n + 1):
        for t in all_free_trees(m):
            for k in range(1, m + 1):
                if profile(t, k).total() != 1:
                    bad.append({"tree": canonicalize(t), "k": k})
    return [B.BoundReport("profile_sum_not_one", 0, len(bad), "==", {"max_n": max_n, "violations": bad[:10]})]


SUITES = {
    "sparkler-count": sparkler_count_reports,
    "sparkler-total": sparkler_total_reports,
    "sparkler-bound": sparkler_bound_reports,
    "optimization": optimization_reports,
    "universal": universal_reports,
    "glue": glue_reports,
    "hubs": hub_count_reports,
    "center-drift": center_drift_reports,
    "hub-drift": hub_drift_reports,
    "elimit": elimit_reports,
    "normalization": normalization_reports,
}
