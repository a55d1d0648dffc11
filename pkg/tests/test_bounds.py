import json
import math
from fractions import Fraction

import mpmath
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from treeprofile import bounds as B
from treeprofile import constructions as C
from treeprofile.enumeration import count_embeddings, count_subtrees, count_subtrees_by_size, density
from treeprofile.tree import Tree


def test_copy_count_examples():
    assert B.sparkler_copy_count(4, 1, 12) == 156
    assert B.sparkler_copy_count(4, 3, 12) == 468
    assert B.sparkler_copy_count(5, 1, 15) == 2 * math.comb(16, 3) == 1120
    assert B.sparkler_copy_count(6, 2) == 4 * math.comb(19, 4)


def test_total_count_examples():
    assert B.sparkler_total_count(4, 1, 12) == 495 + 440 + 198 + 48 + 5 == 1186
    assert B.sparkler_total_count(4, 2, 12) == 2372
    assert B.sparkler_total_count(4, 1, 0) == 5
    # a bare spine is a path: Z_{k+1} = spine - k
    spine = C.sparkler_host(k=4, n=3, leaves_per_vertebra=0)
    assert count_subtrees(spine, 5) == B.sparkler_total_count(4, 3, 0) == 15


@pytest.mark.parametrize("k, n, L", [(4, 1, 12), (4, 2, 5), (5, 1, 15), (5, 2, 8), (6, 1, 4), (7, 1, 21)])
def test_closed_forms_match_enumeration(k, n, L):
    h = C.sparkler_host(k=k, n=n, leaves_per_vertebra=L)
    assert B.sparkler_copy_count(k, n, L) == count_embeddings(C.sparkler(k), h)
    assert B.sparkler_total_count(k, n, L) == count_subtrees(h, k + 1)


def test_density_bound_values():
    assert B.sparkler_density_bound(4) == Fraction(13, 165)
    # (3k+1)k(k-1) / (2(2k+3)(2k+2)(2k+1)) at k = 5: 320 / 3432
    assert B.sparkler_density_bound(5) == Fraction(320, 3432) == Fraction(40, 429)
    for k in range(4, 60):
        assert B.sparkler_density_bound(k) >= B.SPARKLER_FLOOR
    limit = Fraction(3, 16)
    gaps = [(limit - B.sparkler_density_bound(k)) / limit for k in (50, 100, 200, 400, 800)]
    assert all(g > 0 for g in gaps)
    assert gaps == sorted(gaps, reverse=True)
    # the relative gap behaves like 11/(3k): 1.8% at k = 200, below 1% from k = 400
    assert Fraction(1, 100) < gaps[2] < Fraction(2, 100)
    assert gaps[3] < Fraction(1, 100)
    with pytest.raises(ValueError):
        B.sparkler_density_bound(3)


@pytest.mark.parametrize("k", range(4, 9))
def test_realised_density_above_bound(k):
    d = B.sparkler_host_density(k)
    assert d >= B.sparkler_density_bound(k) >= Fraction(13, 165)
    if k <= 6:
        assert d == density(C.sparkler(k), C.sparkler_host(k=k, n=1))


def test_optimised_leaf_count():
    assert B.optimized_leaf_count(40) == 115
    assert B.sparkler_host_density(40, 115) > Fraction(19, 100)
    L, d = B.best_leaf_count(40)
    assert d >= B.sparkler_host_density(40, 115)
    assert d == max(B.sparkler_host_density(40, x) for x in range(38, 241))


def test_elimit_bound():
    assert B.elimit_bound(5) == 1 - Fraction(1, 78125)
    assert B.elimit_bound(6) == 1 - Fraction(1, 6**9)
    with pytest.raises(ValueError):
        B.elimit_bound(4)


def test_universal_density_bound():
    z3 = count_subtrees(C.universal_tree(3), 3)
    b3 = B.universal_density_bound(3, z3)
    assert b3 == 1 / (2 * 36 * 9 * B.E_UPPER**6 + z3)
    assert b3 > 0
    z4 = count_subtrees(C.universal_tree(4), 4)
    assert B.universal_density_bound(4, z4) < b3
    # E_UPPER > e, so E_UPPER^(2k) > e^(2k) and the rational value sits
    # below the real-valued bound
    with mpmath.workdps(60):
        assert mpmath.mpf(B.E_UPPER.numerator) / B.E_UPPER.denominator > mpmath.e
        real = 1 / (2 * 36 * 9 * mpmath.e**6 + z3)
        assert mpmath.mpf(b3.numerator) / b3.denominator < real


def test_glue_slack_examples():
    assert B.glue_upper_slack(2, 2) == 2
    assert B.glue_upper_slack(3, 3) == 36
    with pytest.raises(ValueError):
        B.glue_upper_slack(1, 3)


def test_glue_slack_witness_small_pairs():
    from treeprofile.tree import all_free_trees

    reps = [t for m in range(2, 11) for t in all_free_trees(m)]
    z = [count_subtrees_by_size(t, 5) for t in reps]
    for i, a in enumerate(reps[:60]):
        for j, b in enumerate(reps):
            g = C.glue(a, b)
            zg = count_subtrees_by_size(g, 5)
            for k in range(2, 6):
                assert zg[k] - z[i][k] - z[j][k] <= B.glue_upper_slack(k, g.max_degree)


@st.composite
def trees(draw, min_n=1, max_n=12):
    n = draw(st.integers(min_n, max_n))
    parents = [draw(st.integers(0, i - 1)) for i in range(1, n)]
    return Tree.from_edges(n, [(i + 1, p) for i, p in enumerate(parents)])


@given(trees(min_n=2), trees(min_n=2), st.data())
@settings(max_examples=150, deadline=None)
def test_glue_inequality_random_attachments(a, b, data):
    u = data.draw(st.integers(0, a.n - 1))
    v = data.draw(st.integers(0, b.n - 1))
    g = C.glue(a, b, C.GlueSpec(left=u, right=v))
    za, zb, zg = (count_subtrees_by_size(t, 6) for t in (a, b, g))
    for k in range(2, 7):
        assert za[k] + zb[k] <= zg[k] <= za[k] + zb[k] + B.glue_upper_slack(k, g.max_degree)


def test_glue_slack_degenerate_single_vertices():
    # K1 (+) K1 = K2 gains one 2-vertex subtree but the slack formula gives 0
    g = C.glue(C.path(1), C.path(1))
    assert count_subtrees(g, 2) == 1
    assert B.glue_upper_slack(2, g.max_degree) == 0


def test_main_theorem_constant():
    c = B.main_theorem_constant()
    assert c == 1 - Fraction(1, 10**35)
    assert c < 1
    # 16^29 = 2^116 < 10^35, so the small-tree ceiling at k = 16 is the smaller one
    assert (c > B.elimit_bound(16)) is True


def test_bound_report():
    r = B.BoundReport("x", Fraction(13, 165), Fraction(78, 593), ">=", {"k": 4})
    assert r.holds
    d = json.loads(r.to_json())
    assert d["claimed"] == {"num": "13", "den": "165"}
    assert d["observed"] == {"num": "78", "den": "593"}
    assert d["holds"] is True
    assert not B.BoundReport("y", 1, 2, "<=").holds
    assert B.BoundReport("z", 3, 3, "==").holds
    with pytest.raises(TypeError):
        B.BoundReport("f", 0.5, Fraction(1, 2))
    with pytest.raises(ValueError):
        B.BoundReport("r", 1, 1, "~")
