"""scikit-learn wrappers: turn a collection of trees into feature matrices.

Both transformers take a list of :class:`~treeprofile.tree.Tree` objects as
``X``. With ``exact=True`` the output is an object array of
:class:`fractions.Fraction` (or ``int``); otherwise ``float64``.
"""

from __future__ import annotations

from fractions import Fraction

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from ._validation import check_int, check_trees
from .enumeration import code_counts, count_subtrees_by_size
from .tree import FREE_TREE_CAP, all_free_trees, canonicalize

__all__ = ["SubtreeProfileTransformer", "SubtreeCountTransformer"]


class SubtreeProfileTransformer(TransformerMixin, BaseEstimator):
    """Map each tree to its ``k``-profile.

    Columns are the isomorphism classes of ``k``-vertex trees in ascending
    canonical-code order (``codes_``). Fitting only fixes the columns; the
    training trees are validated but otherwise unused.

    Parameters
    ----------
    k : int
        Subtree size, ``1 <= k <= 16``.
    exact : bool
        Return ``Fraction`` entries instead of floats.
    """

    def __init__(self, k: int = 4, exact: bool = False):
        self.k = k
        self.exact = exact

    def fit(self, X, y=None):
        check_trees(X)
        k = check_int(self.k, "k", 1)
        self.codes_ = [canonicalize(s) for s in all_free_trees(k, cap=FREE_TREE_CAP)]
        self.n_features_out_ = len(self.codes_)
        return self

    def transform(self, X):
        check_is_fitted(self, "codes_")
        trees = check_trees(X)
        shape = (len(trees), len(self.codes_))
        if self.exact:
            out = np.full(shape, Fraction(0), dtype=object)
        else:
            out = np.zeros(shape, dtype=np.float64)
        col = {c: j for j, c in enumerate(self.codes_)}
        for i, t in enumerate(trees):
            counts = code_counts(t, self.k)
            z = sum(counts.values())
            for code, c in counts.items():
                d = Fraction(c, z)
                out[i, col[code]] = d if self.exact else float(d)
        return out

    def get_feature_names_out(self, input_features=None):
        check_is_fitted(self, "codes_")
        return np.asarray(self.codes_, dtype=object)


class SubtreeCountTransformer(TransformerMixin, BaseEstimator):
    """Map each tree to ``[Z_1, ..., Z_kmax]``, its subtree counts by size."""

    def __init__(self, kmax: int = 5, exact: bool = False):
        self.kmax = kmax
        self.exact = exact

    def fit(self, X, y=None):
        check_trees(X)
        self.kmax_ = check_int(self.kmax, "kmax", 1)
        return self

    def transform(self, X):
        check_is_fitted(self, "kmax_")
        trees = check_trees(X)
        rows = [count_subtrees_by_size(t, self.kmax_)[1:] for t in trees]
        if self.exact:
            out = np.empty((len(rows), self.kmax_), dtype=object)
            for i, r in enumerate(rows):
                out[i, :] = r
            return out
        return np.asarray(rows, dtype=np.float64).reshape(len(rows), self.kmax_)

    def get_feature_names_out(self, input_features=None):
        check_is_fitted(self, "kmax_")
        return np.asarray([f"Z_{k}" for k in range(1, self.kmax_ + 1)], dtype=object)
