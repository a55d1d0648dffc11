"""Deterministic generators for the tree families used in the checks:
elementary shapes, the sparkler host, gluing, complete d-ary trees and the
universal sequence."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence, Union

from ._validation import check_cap, check_int
from .tree import Tree

__all__ = [
    "path",
    "star",
    "spider",
    "caterpillar",
    "double_star",
    "sparkler",
    "SparklerHostParams",
    "sparkler_host",
    "complete_dary",
    "GlueSpec",
    "glue",
    "glue_power",
    "UniversalTree",
    "universal_construction",
    "universal_tree",
    "UNIVERSAL_CAP",
]

UNIVERSAL_CAP = 10**6


def _from_parent(parent: Sequence[int]) -> Tree:
    """Tree on ``0..len(parent)-1`` where ``parent[i] < i`` for ``i >= 1``."""
    nbrs: list[list[int]] = [[] for _ in parent]
    for i, p in enumerate(parent):
        if i:
            nbrs[i].append(p)
            nbrs[p].append(i)
    return Tree._trusted(nbrs)


def path(n: int) -> Tree:
    n = check_int(n, "n", 1)
    return _from_parent([0] + list(range(n - 1)))


def star(n: int) -> Tree:
    """Star on ``n`` vertices with the hub at 0."""
    n = check_int(n, "n", 1)
    return _from_parent([0] * n)


def spider(legs: int, leg_length: int) -> Tree:
    """``legs`` paths of ``leg_length`` edges joined at vertex 0."""
    legs = check_int(legs, "legs", 1)
    leg_length = check_int(leg_length, "leg_length", 1)
    parent = [0]
    for _ in range(legs):
        prev = 0
        for _ in range(leg_length):
            parent.append(prev)
            prev = len(parent) - 1
    return _from_parent(parent)


def caterpillar(leaf_counts: Sequence[int]) -> Tree:
    """Spine of ``len(leaf_counts)`` vertices, ``leaf_counts[i]`` pendant
    leaves on spine vertex ``i``."""
    if not leaf_counts:
        raise ValueError("leaf_counts must be non-empty")
    counts = [check_int(c, "leaf count", 0) for c in leaf_counts]
    m = len(counts)
    parent = [0] + list(range(m - 1))
    for i, c in enumerate(counts):
        parent.extend([i] * c)
    return _from_parent(parent)


def double_star(a: int, b: int) -> Tree:
    """Two adjacent centers carrying ``a`` and ``b`` leaves."""
    return caterpillar([a, b])


def sparkler(k: int) -> Tree:
    """Star with ``k - 1`` leaves and one edge subdivided (``k`` edges).

    Vertex 0 is the center, vertex 1 the subdivision vertex, vertex 2 its
    far end.
    """
    k = check_int(k, "k", 2)
    return _from_parent([0, 0, 1] + [0] * (k - 2))


@dataclass(frozen=True)
class SparklerHostParams:
    """``n`` vertebrae on a spine of ``n(k+1)+k`` vertices, each vertebra
    carrying ``leaves_per_vertebra`` pendant leaves (default ``3k``)."""

    k: int
    n: int
    leaves_per_vertebra: int | None = None

    def __post_init__(self):
        check_int(self.k, "k", 4)
        check_int(self.n, "n", 1)
        if self.leaves_per_vertebra is None:
            object.__setattr__(self, "leaves_per_vertebra", 3 * self.k)
        check_int(self.leaves_per_vertebra, "leaves_per_vertebra", 0)

    @property
    def spine_length(self) -> int:
        return self.n * (self.k + 1) + self.k

    def vertebrae(self) -> list[int]:
        """0-based vertex ids of the vertebrae (spine position ``j(k+1)``,
        counted from 1)."""
        return [j * (self.k + 1) - 1 for j in range(1, self.n + 1)]


def sparkler_host(p: SparklerHostParams | None = None, **kwargs) -> Tree:
    """Host tree for sparkler densities. Spine vertices come first
    (``0..spine_length-1`` in order), then the leaves vertebra by vertebra."""
    if p is None:
        p = SparklerHostParams(**kwargs)
    elif kwargs:
        raise TypeError("pass either params or keyword arguments")
    spine = p.spine_length
    parent = [0] + list(range(spine - 1))
    for v in p.vertebrae():
        parent.extend([v] * p.leaves_per_vertebra)
    return _from_parent(parent)


def complete_dary(d: int) -> Tree:
    """``B_d``: complete ``d``-ary tree of depth ``d``, in BFS order."""
    d = check_int(d, "d", 1)
    parent = [0]
    level = [0]
    for _ in range(d):
        nxt = []
        for v in level:
            for _ in range(d):
                parent.append(v)
                nxt.append(len(parent) - 1)
        level = nxt
    return _from_parent(parent)


Selector = Union[str, int]


@dataclass(frozen=True)
class GlueSpec:
    """Where to attach the gluing edge in each operand.

    Each selector is ``"leaf"`` (lowest-index vertex of degree <= 1),
    ``"root"`` (vertex 0) or an explicit vertex index.
    """

    left: Selector = "leaf"
    right: Selector = "leaf"


def _select(t: Tree, sel: Selector) -> int:
    if sel == "leaf":
        return t.leaves()[0]
    if sel == "root":
        return 0
    if isinstance(sel, bool) or not isinstance(sel, int):
        raise ValueError(f"unknown vertex selector {sel!r}")
    if not 0 <= sel < t.n:
        raise ValueError(f"selector vertex {sel} out of range 0..{t.n - 1}")
    return sel


def _glue_with_edge(a: Tree, b: Tree, spec: GlueSpec) -> tuple[Tree, tuple[int, int]]:
    u = _select(a, spec.left)
    v = _select(b, spec.right) + a.n
    off = a.n
    nbrs = [list(x) for x in a.adjacency] + [[w + off for w in x] for x in b.adjacency]
    nbrs[u].append(v)
    nbrs[v].append(u)
    return Tree._trusted(nbrs), (u, v)


def glue(a: Tree, b: Tree, spec: GlueSpec | None = None) -> Tree:
    """``a (+) b``: disjoint union (``b`` shifted by ``|a|``) plus one edge."""
    return _glue_with_edge(a, b, spec or GlueSpec())[0]


def glue_power(t: Tree, ell: int, spec: GlueSpec | None = None) -> Tree:
    """``t`` glued to itself ``ell`` times, left-associated."""
    ell = check_int(ell, "ell", 1)
    out = t
    for _ in range(ell - 1):
        out = glue(out, t, spec)
    return out


@dataclass(frozen=True)
class UniversalTree:
    """A member of the universal sequence with its construction record.

    ``glue_edges`` are the edges added by gluing; deleting them leaves the
    ``B_d`` blocks, ``blocks[i] = (d, first_vertex)`` in vertex order.
    """

    n: int
    tree: Tree
    glue_edges: tuple[tuple[int, int], ...]
    blocks: tuple[tuple[int, int], ...]

    def block_counts(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for d, _ in self.blocks:
            out[d] = out.get(d, 0) + 1
        return out


def _universal_size(n: int) -> int:
    size = 2
    for m in range(2, n + 1):
        size = (m ** (m + 1) - 1) // (m - 1) + m * m * size
    return size


def universal_construction(
    n: int, spec: GlueSpec | None = None, cap: int = UNIVERSAL_CAP
) -> UniversalTree:
    """``T_1 = B_1`` and ``T_n = B_n (+) T_{n-1}^{(+) n^2}``.

    The default spec glues leaf to leaf, which keeps the maximum degree at
    most ``n + 1``.
    """
    n = check_int(n, "n", 1)
    check_cap(_universal_size(n), cap, "universal tree size")
    spec = spec or GlueSpec()
    cur = UniversalTree(1, complete_dary(1), (), ((1, 0),))
    for m in range(2, n + 1):
        # power of the previous tree, tracking edges and blocks
        acc, edges, blocks = cur.tree, list(cur.glue_edges), list(cur.blocks)
        unit = cur
        for _ in range(m * m - 1):
            off = acc.n
            acc, e = _glue_with_edge(acc, unit.tree, spec)
            edges.append(e)
            edges.extend((u + off, v + off) for u, v in unit.glue_edges)
            blocks.extend((d, s + off) for d, s in unit.blocks)
        bm = complete_dary(m)
        off = bm.n
        tree, e = _glue_with_edge(bm, acc, spec)
        edges = [e] + [(u + off, v + off) for u, v in edges]
        blocks = [(m, 0)] + [(d, s + off) for d, s in blocks]
        cur = UniversalTree(m, tree, tuple(edges), tuple(blocks))
    return cur


def universal_tree(n: int, spec: GlueSpec | None = None, cap: int = UNIVERSAL_CAP) -> Tree:
    return universal_construction(n, spec, cap).tree
