"""Unrooted trees: representation, canonical codes, free-tree generation and
the structural notions (branches, forks, centers, hubs) used throughout."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, NamedTuple, Sequence

from ._validation import TreeFormatError, check_cap, check_int

__all__ = [
    "Tree",
    "Branch",
    "Classification",
    "parse_edge_list",
    "format_edge_list",
    "canonicalize",
    "rooted_code",
    "from_code",
    "is_isomorphic",
    "all_free_trees",
    "classify",
    "branches_at",
    "centers",
    "hubs",
    "radius",
    "FREE_TREE_CAP",
]

FREE_TREE_CAP = 16


@dataclass(frozen=True, eq=False)
class Tree:
    """An unrooted tree on vertices ``0..n-1``.

    ``adjacency[v]`` is the sorted tuple of neighbours of ``v``. Instances are
    immutable; build them with :meth:`from_edges` or :func:`parse_edge_list`.
    Equality is structural on the adjacency (labelled); use
    :func:`is_isomorphic` for unlabelled comparison.
    """

    adjacency: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        _validate_adjacency(self.adjacency)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> "Tree":
        n = check_int(n, "n", 1)
        nbrs: list[list[int]] = [[] for _ in range(n)]
        for e in edges:
            u, v = int(e[0]), int(e[1])
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            nbrs[u].append(v)
            nbrs[v].append(u)
        return cls(tuple(tuple(sorted(a)) for a in nbrs))

    @classmethod
    def _trusted(cls, nbrs: Sequence[Sequence[int]]) -> "Tree":
        # skips validation; callers guarantee a tree
        obj = object.__new__(cls)
        object.__setattr__(obj, "adjacency", tuple(tuple(sorted(a)) for a in nbrs))
        return obj

    @property
    def n(self) -> int:
        return len(self.adjacency)

    def __len__(self) -> int:
        return len(self.adjacency)

    def __eq__(self, other) -> bool:
        return isinstance(other, Tree) and self.adjacency == other.adjacency

    def __hash__(self) -> int:
        return hash(self.adjacency)

    def __repr__(self) -> str:
        return f"Tree(n={self.n}, edges={self.edges()})"

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u, nb in enumerate(self.adjacency) for v in nb if u < v]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def degrees(self) -> list[int]:
        return [len(a) for a in self.adjacency]

    @property
    def max_degree(self) -> int:
        return max(len(a) for a in self.adjacency)

    def leaves(self) -> list[int]:
        """Vertices of degree at most one (the lone vertex of K1 counts)."""
        return [v for v, a in enumerate(self.adjacency) if len(a) <= 1]

    def relabel(self, perm: Sequence[int]) -> "Tree":
        """Return the tree with vertex ``v`` renamed to ``perm[v]``."""
        if sorted(perm) != list(range(self.n)):
            raise ValueError("perm must be a permutation of 0..n-1")
        nbrs: list[list[int]] = [[] for _ in range(self.n)]
        for v, a in enumerate(self.adjacency):
            nbrs[perm[v]] = [perm[u] for u in a]
        return Tree._trusted(nbrs)

    def induced(self, vertices: Iterable[int]) -> tuple["Tree", list[int]]:
        """Subtree induced by a connected vertex set.

        Returns the induced tree (relabelled ``0..m-1`` in sorted order of the
        host labels) and the list mapping new labels back to host labels.
        """
        verts = sorted(set(vertices))
        index = {v: i for i, v in enumerate(verts)}
        nbrs = [[index[u] for u in self.adjacency[v] if u in index] for v in verts]
        if sum(len(a) for a in nbrs) != 2 * (len(verts) - 1):
            raise ValueError("vertex set does not induce a connected subgraph")
        sub = Tree._trusted(nbrs)
        if len(verts) > 1 and not _is_connected(sub.adjacency):
            raise ValueError("vertex set does not induce a connected subgraph")
        return sub, verts


def _is_connected(adj: Sequence[Sequence[int]]) -> bool:
    seen = [False] * len(adj)
    seen[0] = True
    stack = [0]
    count = 1
    while stack:
        u = stack.pop()
        for w in adj[u]:
            if not seen[w]:
                seen[w] = True
                count += 1
                stack.append(w)
    return count == len(adj)


def _validate_adjacency(adj: Sequence[Sequence[int]]) -> None:
    n = len(adj)
    if n < 1:
        raise ValueError("a tree needs at least one vertex")
    half_edges = 0
    for u, nb in enumerate(adj):
        if list(nb) != sorted(set(nb)):
            raise ValueError(f"adjacency of {u} must be sorted without repeats")
        for v in nb:
            if not 0 <= v < n:
                raise ValueError(f"neighbour {v} of {u} out of range")
            if v == u:
                raise ValueError(f"self-loop at {u}")
            if u not in adj[v]:
                raise ValueError(f"adjacency not symmetric for edge ({u}, {v})")
        half_edges += len(nb)
    if half_edges != 2 * (n - 1):
        raise ValueError(f"a tree on {n} vertices has {n - 1} edges, got {half_edges // 2}")
    if not _is_connected(adj):
        raise ValueError("graph is disconnected")


# ---------------------------------------------------------------------------
# edge-list text format


def parse_edge_list(text: str) -> Tree:
    """Parse the edge-list format: a line ``n`` then ``n-1`` lines ``u v``.

    Blank lines and ``#`` comments are ignored. Raises
    :class:`TreeFormatError` naming the offending line.
    """
    rows = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            rows.append((lineno, line.split()))
    if not rows:
        raise TreeFormatError("empty input")
    lineno, head = rows[0]
    if len(head) != 1 or not head[0].isdigit() or int(head[0]) < 1:
        raise TreeFormatError(f"expected a positive vertex count, got {' '.join(head)!r}", lineno)
    n = int(head[0])
    if len(rows) - 1 != n - 1:
        last = rows[-1][0]
        raise TreeFormatError(f"expected {n - 1} edge lines, got {len(rows) - 1}", last)
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    edges = []
    for lineno, parts in rows[1:]:
        if len(parts) != 2 or not all(p.lstrip("-").isdigit() for p in parts):
            raise TreeFormatError(f"expected 'u v', got {' '.join(parts)!r}", lineno)
        u, v = int(parts[0]), int(parts[1])
        if not (0 <= u < n and 0 <= v < n):
            raise TreeFormatError(f"vertex out of range 0..{n - 1}", lineno)
        if u == v:
            raise TreeFormatError("self-loop", lineno)
        ru, rv = find(u), find(v)
        if ru == rv:
            raise TreeFormatError(f"edge ({u}, {v}) closes a cycle", lineno)
        parent[ru] = rv
        edges.append((u, v))
    return Tree.from_edges(n, edges)


def format_edge_list(t: Tree) -> str:
    lines = [str(t.n)] + [f"{u} {v}" for u, v in t.edges()]
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# canonical forms


def _bfs_order(adj, root: int) -> tuple[list[int], list[int]]:
    parent = [-1] * len(adj)
    parent[root] = root
    order = [root]
    i = 0
    while i < len(order):
        u = order[i]
        i += 1
        for w in adj[u]:
            if parent[w] == -1:
                parent[w] = u
                order.append(w)
    parent[root] = -1
    return order, parent


def rooted_code(t: Tree, root: int) -> str:
    """AHU parenthesis code of ``t`` rooted at ``root`` (children sorted)."""
    adj = t.adjacency
    order, parent = _bfs_order(adj, root)
    kids: list[list[str]] = [[] for _ in adj]
    code = ""
    for u in reversed(order):
        ch = kids[u]
        ch.sort()
        code = "(" + "".join(ch) + ")"
        kids[u] = []
        if parent[u] >= 0:
            kids[parent[u]].append(code)
    return code


def _centroids(adj) -> list[int]:
    n = len(adj)
    order, parent = _bfs_order(adj, 0)
    size = [1] * n
    for u in reversed(order):
        if parent[u] >= 0:
            size[parent[u]] += size[u]
    out = []
    for v in range(n):
        largest = n - size[v]
        for w in adj[v]:
            if w != parent[v] and size[w] > largest:
                largest = size[w]
        if 2 * largest <= n:
            out.append(v)
    return out


def canonicalize(t: Tree) -> str:
    """Canonical code: AHU code at the centroid, smaller of two if bicentroidal.

    The code has length ``2 * t.n`` and two trees share a code exactly when
    they are isomorphic.
    """
    return min(rooted_code(t, c) for c in _centroids(t.adjacency))


def from_code(code: str) -> Tree:
    """Build the tree described by a parenthesis code; vertex 0 is the root
    and vertices are numbered in preorder."""
    if not code or code[0] != "(":
        raise ValueError("code must start with '('")
    nbrs: list[list[int]] = []
    stack: list[int] = []
    for pos, ch in enumerate(code):
        if ch == "(":
            v = len(nbrs)
            nbrs.append([])
            if stack:
                nbrs[stack[-1]].append(v)
                nbrs[v].append(stack[-1])
            elif v:
                raise ValueError("code describes more than one tree")
            stack.append(v)
        elif ch == ")":
            if not stack:
                raise ValueError(f"unbalanced ')' at position {pos}")
            stack.pop()
        else:
            raise ValueError(f"invalid character {ch!r} in code")
    if stack:
        raise ValueError("unbalanced code")
    return Tree._trusted(nbrs)


def is_isomorphic(a: Tree, b: Tree) -> bool:
    return a.n == b.n and canonicalize(a) == canonicalize(b)


def _build_free_trees(n: int) -> tuple[Tree, ...]:
    if n == 1:
        return (Tree._trusted([[]]),)
    seen: set[str] = set()
    for t in _free_trees_cached(n - 1):
        for v in range(t.n):
            nbrs = [list(a) for a in t.adjacency]
            nbrs.append([v])
            nbrs[v].append(n - 1)
            seen.add(canonicalize(Tree._trusted(nbrs)))
    return tuple(from_code(c) for c in sorted(seen))


@lru_cache(maxsize=None)
def _free_trees_cached(n: int) -> tuple[Tree, ...]:
    return _build_free_trees(n)


def all_free_trees(n: int, cap: int = FREE_TREE_CAP) -> list[Tree]:
    """One representative per isomorphism class of ``n``-vertex trees.

    Representatives are built from their canonical codes and returned in
    ascending code order, so the output is deterministic.
    """
    n = check_int(n, "n", 1)
    check_cap(n, cap, "n")
    return list(_free_trees_cached(n))


# ---------------------------------------------------------------------------
# structure


class Classification(NamedTuple):
    is_path: bool
    is_star: bool
    is_caterpillar: bool
    is_sparkler: bool


def _internal_vertices_induce_path(t: Tree) -> bool:
    deg = t.degrees()
    internal = [v for v in range(t.n) if deg[v] >= 2]
    if not internal:
        return True
    # internal vertices of a tree always induce a subtree; a subtree is a path
    # iff no vertex has three internal neighbours
    return all(sum(1 for w in t.adjacency[v] if deg[w] >= 2) <= 2 for v in internal)


def nontrivial_branch_count(t: Tree, v: int) -> int:
    """Number of non-trivial branches rooted at ``v``."""
    return sum(1 for w in t.adjacency[v] if len(t.adjacency[w]) >= 2)


def _at_most_two_nontrivial_branches(t: Tree) -> bool:
    return all(nontrivial_branch_count(t, v) <= 2 for v in range(t.n))


def classify(t: Tree) -> Classification:
    n = t.n
    deg = sorted(t.degrees())
    is_path = n == 1 or deg[-1] <= 2
    is_star = n <= 2 or deg[-1] == n - 1
    is_sparkler = n >= 5 and deg == [1] * (n - 2) + [2, n - 2]
    return Classification(is_path, is_star, _internal_vertices_induce_path(t), is_sparkler)


@dataclass(frozen=True)
class Branch:
    """A component of ``T - root`` together with its edge to ``root``."""

    root: int
    vertices: frozenset[int]
    is_trivial: bool
    is_fork: bool
    order: int | None = None

    @property
    def is_major(self) -> bool:
        return not self.is_trivial and not self.is_fork

    @property
    def n_edges(self) -> int:
        return len(self.vertices) - 1


def branches_at(t: Tree, v: int) -> list[Branch]:
    """Branches rooted at ``v``, one per neighbour in ascending order."""
    if not 0 <= v < t.n:
        raise ValueError(f"vertex {v} out of range")
    adj = t.adjacency
    out = []
    for u in adj[v]:
        comp = [u]
        seen = {v, u}
        i = 0
        while i < len(comp):
            x = comp[i]
            i += 1
            for w in adj[x]:
                if w not in seen:
                    seen.add(w)
                    comp.append(w)
        trivial = len(comp) == 1
        fork = not trivial and all(len(adj[x]) == 1 for x in comp[1:])
        out.append(
            Branch(
                root=v,
                vertices=frozenset(comp) | {v},
                is_trivial=trivial,
                is_fork=fork,
                order=len(comp) - 1 if fork else None,
            )
        )
    return out


def centers(t: Tree) -> set[int]:
    """Vertices all of whose branches have at most ``|T|/2`` edges."""
    return set(_centroids(t.adjacency))


def hubs(t: Tree) -> set[int]:
    """Vertices rooting at least three non-trivial branches that are the only
    such vertex on the path to their nearest center. Empty for caterpillars."""
    branching = {v for v in range(t.n) if nontrivial_branch_count(t, v) >= 3}
    if not branching:
        return set()
    trees_from = {}
    for c in centers(t):
        order, parent = _bfs_order(t.adjacency, c)
        dist = [0] * t.n
        for u in order[1:]:
            dist[u] = dist[parent[u]] + 1
        trees_from[c] = (parent, dist)
    out = set()
    for v in branching:
        c = min(trees_from, key=lambda c: trees_from[c][1][v])
        parent = trees_from[c][0]
        x = v
        clean = True
        while x != c:
            x = parent[x]
            if x in branching:
                clean = False
                break
        if clean:
            out.add(v)
    return out


def _farthest(adj, src: int) -> tuple[int, int]:
    dist = [-1] * len(adj)
    dist[src] = 0
    q = deque([src])
    last = src
    while q:
        u = q.popleft()
        last = u
        for w in adj[u]:
            if dist[w] < 0:
                dist[w] = dist[u] + 1
                q.append(w)
    return last, dist[last]


def radius(t: Tree) -> int:
    """Minimum eccentricity; for a tree this is ``ceil(diameter / 2)``."""
    a, _ = _farthest(t.adjacency, 0)
    _, diam = _farthest(t.adjacency, a)
    return (diam + 1) // 2
