"""Exhaustive inducibility search at fixed host size, density trajectories
along generated families, and the edge-moving neighbourhoods used to bound
how far centers and hubs can drift."""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator

from . import constructions as C
from ._validation import check_cap, check_int
from .enumeration import Embedding, code_counts, density
from .tree import Tree, all_free_trees, canonicalize, centers, classify, hubs

__all__ = [
    "SEARCH_CAP",
    "SearchResult",
    "exhaustive_max_density",
    "FAMILIES",
    "family_member",
    "density_trajectory",
    "MoveNeighborhood",
    "move_neighborhood",
    "center_drift_set",
    "hub_drift_set",
    "random_tree",
    "random_connected_subset",
    "drift_instances",
    "hub_drift_instances",
]

SEARCH_CAP = 14


def _frac(d: Fraction) -> dict[str, str]:
    return {"num": str(d.numerator), "den": str(d.denominator)}


@dataclass(frozen=True)
class SearchResult:
    s_code: str
    n: int
    max_density: Fraction
    argmax_hosts: tuple[str, ...]

    def to_dict(self) -> dict:
        return {
            "s": self.s_code,
            "n": self.n,
            "max": _frac(self.max_density),
            "argmax": list(self.argmax_hosts),
        }


def exhaustive_max_density(s: Tree, n: int, cap: int = SEARCH_CAP) -> SearchResult:
    """Maximum of ``d(s, h)`` over every ``n``-vertex tree ``h``.

    ``argmax_hosts`` lists the canonical codes of all maximisers in ascending
    order, so the result does not depend on evaluation order.
    """
    n = check_int(n, "n", 1)
    check_cap(n, cap, "n")
    if s.n > n:
        raise ValueError(f"pattern has {s.n} vertices, more than host size {n}")
    target = canonicalize(s)
    k = s.n
    best = Fraction(-1)
    arg: list[str] = []
    for h in all_free_trees(n, cap=max(cap, n)):
        counts = code_counts(h, k)
        d = Fraction(counts.get(target, 0), sum(counts.values()))
        if d > best:
            best, arg = d, [canonicalize(h)]
        elif d == best:
            arg.append(canonicalize(h))
    return SearchResult(target, n, best, tuple(sorted(arg)))


# ---------------------------------------------------------------------------
# trajectories


def _sparkler_family(n, k=4, leaves=None):
    return C.sparkler_host(C.SparklerHostParams(k=k, n=n, leaves_per_vertebra=leaves))


FAMILIES = {
    "sparkler_host": _sparkler_family,
    "universal": lambda n: C.universal_tree(n),
    "spider": lambda n, leg_length=2: C.spider(n, leg_length),
    "path": lambda n: C.path(n),
    "star": lambda n: C.star(n),
}


def family_member(family: str, n: int, **params) -> Tree:
    try:
        build = FAMILIES[family]
    except KeyError:
        raise ValueError(f"unknown family {family!r}; choose from {sorted(FAMILIES)}") from None
    return build(n, **params)


def density_trajectory(
    s: Tree, family: str, n_range: Iterable[int], **params
) -> list[tuple[int, Fraction]]:
    """Exact ``d(s, F_n)`` for each ``n`` in ``n_range``; no limit is implied."""
    if family not in FAMILIES:
        raise ValueError(f"unknown family {family!r}; choose from {sorted(FAMILIES)}")
    return [(n, density(s, family_member(family, n, **params))) for n in n_range]


# ---------------------------------------------------------------------------
# moving edges


@dataclass(frozen=True)
class MoveNeighborhood:
    """Embeddings of ``|base|`` vertices whose intersection with ``base`` is a
    subtree with at least ``|base| - radius`` vertices (``base`` included)."""

    base: Embedding
    radius: int
    members: tuple[Embedding, ...]

    def __len__(self) -> int:
        return len(self.members)


def _shrinks(adj, verts: frozenset[int], j: int) -> set[frozenset[int]]:
    """Connected subsets of ``verts`` with ``j`` vertices removed."""
    level = {verts}
    for _ in range(j):
        nxt = set()
        for cur in level:
            for v in cur:
                if sum(1 for w in adj[v] if w in cur) <= 1:
                    nxt.add(cur - {v})
        level = nxt
    return level


def _grows(adj, verts: frozenset[int], j: int, forbidden: frozenset[int]) -> set[frozenset[int]]:
    """Connected supersets of ``verts`` adding ``j`` vertices outside ``forbidden``."""
    level = {verts}
    for _ in range(j):
        nxt = set()
        for cur in level:
            for v in cur:
                for w in adj[v]:
                    if w not in cur and w not in forbidden:
                        nxt.add(cur | {w})
        level = nxt
    return level


def move_neighborhood(base: Embedding, r: int) -> MoveNeighborhood:
    """All embeddings reachable from ``base`` by moving at most ``r`` edges."""
    r = check_int(r, "r", 1)
    if r > 3:
        raise ValueError("r must be at most 3")
    host = base.host
    adj = host.adjacency
    b = frozenset(base.vertices)
    m = len(b)
    found: set[frozenset[int]] = set()
    for j in range(0, min(r, m - 1) + 1):
        for core in _shrinks(adj, b, j):
            found |= _grows(adj, core, j, b)
    members = tuple(Embedding(host, tuple(sorted(s))) for s in sorted(found, key=sorted))
    return MoveNeighborhood(base, r, members)


def _mapped(fn, emb: Embedding) -> set[int]:
    sub, labels = emb.host.induced(emb.vertices)
    return {labels[v] for v in fn(sub)}


def center_drift_set(base: Embedding) -> set[int]:
    """Host vertices that are a center of some embedding within three moved
    edges of ``base``."""
    if len(base) < 17:
        raise ValueError("base must have at least 17 vertices")
    out: set[int] = set()
    for emb in move_neighborhood(base, 3).members:
        out |= _mapped(centers, emb)
    return out


def hub_drift_set(s: Tree, base: Embedding) -> set[int]:
    """Host vertices that are a hub of some embedding of ``s`` within three
    moved edges of ``base``."""
    if s.n != len(base):
        raise ValueError("pattern and base must have the same size")
    if s.n < 17:
        raise ValueError("pattern must have at least 17 vertices")
    if classify(s).is_caterpillar:
        raise ValueError("pattern must not be a caterpillar")
    target = canonicalize(s)
    out: set[int] = set()
    for emb in move_neighborhood(base, 3).members:
        sub, labels = emb.host.induced(emb.vertices)
        if canonicalize(sub) == target:
            out |= {labels[v] for v in hubs(sub)}
    return out


# ---------------------------------------------------------------------------
# seeded random instances


def random_tree(n: int, rng: random.Random) -> Tree:
    """Uniform labelled tree via a random Pruefer sequence."""
    n = check_int(n, "n", 1)
    if n <= 2:
        return C.path(n)
    seq = [rng.randrange(n) for _ in range(n - 2)]
    return prufer_to_tree(seq)


def prufer_to_tree(seq: list[int]) -> Tree:
    import heapq

    n = len(seq) + 2
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for x in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, x))
        degree[x] -= 1
        if degree[x] == 1:
            heapq.heappush(leaves, x)
    edges.append((heapq.heappop(leaves), heapq.heappop(leaves)))
    return Tree.from_edges(n, edges)


def random_connected_subset(t: Tree, size: int, rng: random.Random) -> tuple[int, ...]:
    if not 1 <= size <= t.n:
        raise ValueError("size out of range")
    chosen = {rng.randrange(t.n)}
    while len(chosen) < size:
        frontier = sorted({w for v in chosen for w in t.adjacency[v]} - chosen)
        chosen.add(rng.choice(frontier))
    return tuple(sorted(chosen))


def drift_instances(
    count: int, seed: int, base_sizes=(17, 19), max_host: int = 26
) -> Iterator[Embedding]:
    """Seeded base embeddings with ``|base|`` in ``base_sizes`` (inclusive)
    inside random hosts of at most ``max_host`` vertices."""
    rng = random.Random(seed)
    lo, hi = base_sizes
    for _ in range(count):
        b = rng.randint(lo, hi)
        host = random_tree(rng.randint(b + 1, max(b + 1, max_host)), rng)
        yield Embedding(host, random_connected_subset(host, b, rng))


def hub_drift_instances(
    count: int, seed: int, base_sizes=(17, 19), max_host: int = 26
) -> Iterator[tuple[Tree, Embedding]]:
    """Like :func:`drift_instances`, keeping only bases whose own shape is
    not a caterpillar; yields ``(shape, base)``."""
    rng = random.Random(seed)
    lo, hi = base_sizes
    made = 0
    while made < count:
        b = rng.randint(lo, hi)
        host = random_tree(rng.randint(b + 1, max(b + 1, max_host)), rng)
        base = Embedding(host, random_connected_subset(host, b, rng))
        shape = base.tree()
        if classify(shape).is_caterpillar:
            continue
        made += 1
        yield shape, base
