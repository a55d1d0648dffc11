import math
from itertools import product

import pytest

from oracles import find_isomorphism
from treeprofile import constructions as C
from treeprofile.bounds import glue_upper_slack
from treeprofile.enumeration import count_embeddings, count_subtrees, count_subtrees_by_size, density
from treeprofile.tree import Tree, all_free_trees, classify, hubs, is_isomorphic, radius


def components_without(t: Tree, removed_edges):
    """Vertex sets of the components left after deleting ``removed_edges``."""
    cut = {frozenset(e) for e in removed_edges}
    seen, comps = set(), []
    for s in range(t.n):
        if s in seen:
            continue
        comp, stack = [s], [s]
        seen.add(s)
        while stack:
            u = stack.pop()
            for w in t.adjacency[u]:
                if w not in seen and frozenset((u, w)) not in cut:
                    seen.add(w)
                    comp.append(w)
                    stack.append(w)
        comps.append(sorted(comp))
    return comps


# --- elementary shapes ---------------------------------------------------------------


def test_elementary_shapes():
    s = C.star(5)
    assert s.n == 5 and radius(s) == 1 and classify(s).is_star
    sp = C.spider(3, 2)
    assert sp.n == 7 and len(hubs(sp)) == 1
    cat = C.caterpillar([2, 0, 2])
    assert cat.n == 7 and classify(cat).is_caterpillar
    assert classify(C.path(9)).is_path
    for bad in (lambda: C.path(0), lambda: C.spider(0, 2), lambda: C.caterpillar([]), lambda: C.caterpillar([1, -1])):
        with pytest.raises(ValueError):
            bad()


def test_sparkler_shape():
    s4 = C.sparkler(4)
    assert s4.n == 5 and sorted(s4.degrees()) == [1, 1, 1, 2, 3]
    assert classify(C.sparkler(3)).is_path
    s6 = C.sparkler(6)
    assert s6.n == 7 and count_embeddings(s6, s6) == 1
    for k in range(4, 12):
        degs = sorted(C.sparkler(k).degrees())
        assert degs[-1] == k - 1 and degs[-2] == 2
    with pytest.raises(ValueError):
        C.sparkler(1)


# --- sparkler host -------------------------------------------------------------------


def test_sparkler_host_sizes():
    assert C.sparkler_host(k=4, n=3, leaves_per_vertebra=12).n == 55
    h = C.sparkler_host(k=4, n=1, leaves_per_vertebra=12)
    assert h.n == 21
    assert sorted(h.degrees())[-1] == 14
    assert count_embeddings(C.sparkler(4), h) == 156


@pytest.mark.parametrize("k, n, leaves", [(4, 1, 12), (4, 3, 12), (5, 2, 7), (6, 1, 18), (7, 2, 3)])
def test_sparkler_host_structure(k, n, leaves):
    p = C.SparklerHostParams(k=k, n=n, leaves_per_vertebra=leaves)
    h = C.sparkler_host(p)
    assert h.n == n * (k + 1) + k + n * leaves
    assert p.spine_length == n * (k + 1) + k
    heavy = [v for v in range(h.n) if h.degree(v) == leaves + 2]
    if leaves + 2 > 2:
        assert heavy == p.vertebrae()
    # vertebra j sits at 1-indexed spine position j(k+1)
    assert [v + 1 for v in p.vertebrae()] == [j * (k + 1) for j in range(1, n + 1)]


def test_sparkler_host_params_validation():
    assert C.SparklerHostParams(k=5, n=2).leaves_per_vertebra == 15
    with pytest.raises(ValueError):
        C.SparklerHostParams(k=3, n=1)
    with pytest.raises(ValueError):
        C.SparklerHostParams(k=4, n=0)


@pytest.mark.parametrize("k, n", list(product((4, 5, 6), (1, 2, 3))))
def test_sparkler_host_counts(k, n):
    h = C.sparkler_host(k=k, n=n)
    assert count_embeddings(C.sparkler(k), h) == 2 * n * math.comb(3 * k + 1, k - 2)
    assert count_subtrees(h, k + 1) == n * sum((j + 1) * math.comb(3 * k, k - j) for j in range(k + 1))


@pytest.mark.parametrize("k, leaves", [(4, 12), (4, 9), (5, 15), (5, 11)])
def test_sparkler_density_independent_of_n(k, leaves):
    ds = {density(C.sparkler(k), C.sparkler_host(k=k, n=n, leaves_per_vertebra=leaves)) for n in (1, 2, 3)}
    assert len(ds) == 1


# --- complete d-ary trees --------------------------------------------------------------


def test_complete_dary():
    assert C.complete_dary(1).n == 2
    assert C.complete_dary(2).n == 7
    b3 = C.complete_dary(3)
    assert b3.n == 40 and b3.max_degree == 4
    for d in range(2, 6):
        b = C.complete_dary(d)
        assert b.n == sum(d**i for i in range(d + 1))
        assert b.max_degree == d + 1
    assert C.complete_dary(1).max_degree == 1


@pytest.mark.parametrize("d", range(1, 6))
def test_dary_contains_every_d_vertex_tree(d):
    b = C.complete_dary(d)
    for s in all_free_trees(d):
        assert count_embeddings(s, b) >= 1


# --- gluing ---------------------------------------------------------------------------


def test_glue_examples():
    e = C.path(2)
    assert is_isomorphic(C.glue(e, e), C.path(4))
    b2 = C.complete_dary(2)
    g = C.glue(b2, b2)
    assert g.n == 14 and g.max_degree == 3
    for a, b in [(C.star(4), C.path(5)), (C.spider(3, 2), C.sparkler(5))]:
        assert count_subtrees(C.glue(a, b), 2) == count_subtrees(a, 2) + count_subtrees(b, 2) + 1


def test_glue_recovers_operands():
    a, b = C.spider(3, 2), C.caterpillar([1, 2, 0])
    g = C.glue(a, b, C.GlueSpec(left=0, right=2))
    assert g.n == a.n + b.n
    (u, v) = (0, a.n + 2)
    assert v in g.adjacency[u]
    comps = components_without(g, [(u, v)])
    shapes = sorted((len(c), c) for c in comps)
    assert find_isomorphism(g.induced(range(a.n))[0], a) is not None
    assert find_isomorphism(g.induced(range(a.n, g.n))[0], b) is not None
    assert [s[0] for s in shapes] == sorted([a.n, b.n])


def test_glue_selector_errors():
    with pytest.raises(ValueError):
        C.glue(C.path(3), C.path(3), C.GlueSpec(left=5))
    with pytest.raises(ValueError):
        C.glue(C.path(3), C.path(3), C.GlueSpec(right="middle"))


def test_leaf_glue_keeps_max_degree():
    reps = [t for m in range(1, 8) for t in all_free_trees(m)]
    for a in reps:
        for b in reps:
            g = C.glue(a, b)
            assert g.max_degree <= max(a.max_degree, b.max_degree, 2)


def test_glue_inequality_small_pairs_all_attachments():
    # every attachment pair, not only the default leaf spec
    reps = [t for m in range(2, 6) for t in all_free_trees(m)]
    for a in reps:
        for b in reps:
            za, zb = count_subtrees_by_size(a, 6), count_subtrees_by_size(b, 6)
            for u in range(a.n):
                for v in range(b.n):
                    g = C.glue(a, b, C.GlueSpec(left=u, right=v))
                    zg = count_subtrees_by_size(g, 6)
                    for k in range(2, 7):
                        lo = za[k] + zb[k]
                        assert lo <= zg[k] <= lo + glue_upper_slack(k, g.max_degree)


def test_glue_power():
    assert C.glue_power(C.path(2), 3).n == 6
    t = C.spider(3, 2)
    assert C.glue_power(t, 1) is t
    assert is_isomorphic(C.glue_power(C.complete_dary(1), 4), C.path(8))
    assert C.glue_power(t, 5).n == 5 * t.n


# --- universal sequence ---------------------------------------------------------------


def test_universal_sizes():
    assert C.universal_tree(1).n == 2
    assert C.universal_tree(2).n == 15
    assert C.universal_tree(3).n == 175
    assert C.universal_tree(4).n == 3141


@pytest.mark.parametrize("n", range(1, 5))
def test_universal_degree_and_blocks(n):
    u = C.universal_construction(n)
    t = u.tree
    assert t.max_degree <= n + 1
    counts = u.block_counts()
    for d in range(1, n + 1):
        assert counts[d] == (math.factorial(n) // math.factorial(d)) ** 2
    # structural check: deleting the glue edges leaves exactly the B_d blocks
    comps = components_without(t, u.glue_edges)
    assert len(comps) == len(u.blocks) == len(u.glue_edges) + 1
    starts = {s: d for d, s in u.blocks}
    for comp in comps:
        d = starts[comp[0]]
        assert comp == list(range(comp[0], comp[0] + C.complete_dary(d).n))
        if d <= 3:
            assert find_isomorphism(t.induced(comp)[0], C.complete_dary(d)) is not None


def test_universal_cap():
    from treeprofile._validation import CapExceededError

    with pytest.raises(CapExceededError):
        C.universal_tree(6)
    with pytest.raises(CapExceededError):
        C.universal_tree(4, cap=1000)
