"""Exact counting of subtrees, embeddings, densities and k-profiles.

Two independent routes are kept on purpose:

* :func:`count_subtrees` uses a rooted generating-polynomial recursion;
* :func:`enumerate_subtrees` and everything built on ``_shape_counts`` walk
  every connected vertex set explicitly.

Embeddings are identified by their image, so ``count_embeddings`` counts
vertex subsets, never maps. All densities are :class:`fractions.Fraction`.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterator

from ._validation import check_int
from .tree import FREE_TREE_CAP, Tree, _bfs_order, all_free_trees, canonicalize

__all__ = [
    "Embedding",
    "ProfileVector",
    "enumerate_subtrees",
    "count_subtrees",
    "count_subtrees_by_size",
    "count_embeddings",
    "density",
    "profile",
    "code_counts",
]


@dataclass(frozen=True)
class Embedding:
    """A connected vertex set of ``host`` (the image of a subtree)."""

    host: Tree = field(repr=False, compare=False)
    vertices: tuple[int, ...]

    def __post_init__(self):
        verts = tuple(sorted(set(self.vertices)))
        if not verts:
            raise ValueError("an embedding needs at least one vertex")
        object.__setattr__(self, "vertices", verts)
        # raises if the set is not connected
        self.host.induced(verts)

    def __len__(self) -> int:
        return len(self.vertices)

    def tree(self) -> Tree:
        return self.host.induced(self.vertices)[0]

    def code(self) -> str:
        return canonicalize(self.tree())


# ---------------------------------------------------------------------------
# enumeration engine


def _walk(adj, k: int, anchor: int, visit) -> None:
    """Enumerate connected ``k``-sets whose minimum vertex is ``anchor``.

    Sets grow from the anchor by adding vertices from an extension list; a
    vertex taken from the list removes itself and its predecessors from the
    branches explored afterwards, so each set is produced once. In a tree the
    neighbours of a newly added vertex (other than its parent) can be neither
    in the set nor in the extension list, so no exclusivity test is needed.

    ``visit(sub, par, ext)`` is called with ``len(sub) == k - 1`` and the
    pending extension list; each ``(w, p)`` in ``ext`` completes one set with
    ``w`` attached to ``sub[p]``. ``par[i]`` is the position in ``sub`` of the
    parent of ``sub[i + 1]``.
    """
    sub = [anchor]
    par: list[int] = []
    ext0 = [(u, 0) for u in adj[anchor] if u > anchor]

    def grow(ext, depth):
        if depth == k - 1:
            visit(sub, par, ext)
            return
        for i, (w, p) in enumerate(ext):
            back = sub[p]
            nxt = ext[i + 1:]
            for u in adj[w]:
                if u > anchor and u != back:
                    nxt.append((u, depth))
            sub.append(w)
            par.append(p)
            grow(nxt, depth + 1)
            sub.pop()
            par.pop()

    grow(ext0, 1)


def enumerate_subtrees(t: Tree, k: int) -> Iterator[Embedding]:
    """Yield every connected ``k``-vertex set of ``t`` exactly once.

    Sets come out in lexicographic order of their sorted vertex tuples. The
    sets sharing a minimum vertex are buffered and sorted before they are
    yielded, so memory peaks at the largest such group.
    """
    k = check_int(k, "k", 1)
    adj = t.adjacency
    if k > t.n:
        return
    for v in range(t.n):
        if k == 1:
            yield Embedding(t, (v,))
            continue
        batch: list[tuple[int, ...]] = []

        def visit(sub, par, ext, batch=batch):
            for w, _ in ext:
                batch.append(tuple(sorted(sub + [w])))

        _walk(adj, k, v, visit)
        batch.sort()
        for verts in batch:
            yield Embedding(t, verts)


def _shape_counts(t: Tree, k: int) -> Counter:
    """Count connected ``k``-sets by discovery shape.

    The key is the parent-position tuple recorded while growing the set; it
    determines the induced tree, so isomorphism classes are resolved once per
    distinct key instead of once per set.
    """
    counts: Counter = Counter()
    if k > t.n:
        return counts
    if k == 1:
        counts[()] = t.n
        return counts
    adj = t.adjacency

    def visit(sub, par, ext):
        prefix = tuple(par)
        for p, c in Counter(p for _, p in ext).items():
            counts[prefix + (p,)] += c

    for v in range(t.n):
        _walk(adj, k, v, visit)
    return counts


@lru_cache(maxsize=1 << 16)
def _shape_code(key: tuple[int, ...]) -> str:
    nbrs: list[list[int]] = [[] for _ in range(len(key) + 1)]
    for i, p in enumerate(key, start=1):
        nbrs[i].append(p)
        nbrs[p].append(i)
    return canonicalize(Tree._trusted(nbrs))


def code_counts(t: Tree, k: int) -> Counter:
    """Map canonical code -> number of ``k``-vertex subtrees of that class."""
    k = check_int(k, "k", 1)
    out: Counter = Counter()
    for key, c in _shape_counts(t, k).items():
        out[_shape_code(key)] += c
    return out


# ---------------------------------------------------------------------------
# counting by recursion (independent of the enumeration engine)


def count_subtrees_by_size(t: Tree, kmax: int) -> list[int]:
    """``[Z_0, Z_1, ..., Z_kmax]`` with ``Z_0 = 0``.

    For a root ``v`` the subtrees whose top vertex is ``v`` have size
    generating polynomial ``x * prod(1 + f_c)`` over the children ``c``.
    """
    kmax = check_int(kmax, "kmax", 0)
    order, parent = _bfs_order(t.adjacency, 0)
    poly: list[list[int] | None] = [None] * t.n
    total = [0] * (kmax + 1)
    for v in reversed(order):
        acc = [1]  # product of (1 + f_c), truncated at degree kmax - 1
        for c in t.adjacency[v]:
            if c == parent[v]:
                continue
            f = poly[c]
            g = [1] + f if f else [1]  # 1 + f_c, f_c has zero constant term
            g = g[: kmax]
            prod = [0] * min(len(acc) + len(g) - 1, kmax)
            for i, a in enumerate(acc):
                if a:
                    for j in range(min(len(g), kmax - i)):
                        prod[i + j] += a * g[j]
            acc = prod
            poly[c] = None
        # f_v = x * acc, stored without its zero constant term
        poly[v] = acc[:kmax]
        for i, a in enumerate(acc[:kmax]):
            total[i + 1] += a
    return total


def count_subtrees(t: Tree, k: int) -> int:
    """Number of ``k``-vertex subtrees of ``t`` (``Z_k``)."""
    k = check_int(k, "k", 1)
    if k > t.n:
        return 0
    return count_subtrees_by_size(t, k)[k]


# ---------------------------------------------------------------------------
# embeddings, densities, profiles


def count_embeddings(s: Tree, t: Tree) -> int:
    """Number of ``|s|``-vertex subtrees of ``t`` isomorphic to ``s``."""
    k = s.n
    if t.n < k:
        return 0
    return code_counts(t, k).get(canonicalize(s), 0)


def density(s: Tree, t: Tree) -> Fraction:
    """Embeddings of ``s`` in ``t`` over ``Z_{|s|}(t)``; zero when ``|t| < |s|``."""
    k = s.n
    if t.n < k:
        return Fraction(0)
    return Fraction(count_embeddings(s, t), count_subtrees(t, k))


@dataclass
class ProfileVector:
    """Densities of every ``k``-vertex tree class in a host, keyed by code."""

    k: int
    entries: dict[str, Fraction]

    def total(self) -> Fraction:
        return sum(self.entries.values(), Fraction(0))

    def __getitem__(self, code: str) -> Fraction:
        return self.entries.get(code, Fraction(0))

    def to_dict(self) -> dict:
        return {
            "k": self.k,
            "entries": [
                {"code": c, "num": str(d.numerator), "den": str(d.denominator)}
                for c, d in sorted(self.entries.items())
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, data: dict) -> "ProfileVector":
        entries = {e["code"]: Fraction(int(e["num"]), int(e["den"])) for e in data["entries"]}
        return cls(k=int(data["k"]), entries=entries)

    @classmethod
    def from_json(cls, text: str) -> "ProfileVector":
        return cls.from_dict(json.loads(text))


def profile(t: Tree, k: int, include_zeros: bool = True) -> ProfileVector:
    """The ``k``-profile of ``t``.

    With ``include_zeros`` every ``k``-vertex class gets an entry (only while
    ``k`` is within the free-tree generation cap); otherwise only classes that
    occur are listed.
    """
    k = check_int(k, "k", 1)
    entries: dict[str, Fraction] = {}
    if include_zeros and k <= FREE_TREE_CAP:
        entries = {canonicalize(s): Fraction(0) for s in all_free_trees(k)}
    counts = code_counts(t, k)
    z = sum(counts.values())
    for code, c in counts.items():
        entries[code] = Fraction(c, z)
    return ProfileVector(k=k, entries=entries)
