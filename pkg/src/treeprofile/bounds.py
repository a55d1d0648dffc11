"""Closed-form counts and density bounds, evaluated exactly.

Each evaluator returns an ``int`` or a :class:`~fractions.Fraction`; the
:class:`BoundReport` records a comparison between a claimed value and an
observed one without ever passing through floating point.
"""

from __future__ import annotations

import json
import math
import operator
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

from ._validation import check_int

__all__ = [
    "BoundReport",
    "E_UPPER",
    "sparkler_copy_count",
    "sparkler_total_count",
    "sparkler_host_density",
    "sparkler_density_bound",
    "optimized_leaf_count",
    "best_leaf_count",
    "elimit_bound",
    "universal_density_bound",
    "glue_upper_slack",
    "main_theorem_constant",
    "SPARKLER_FLOOR",
]

# 2.718281828459045236 > e, so powers of it bound powers of e from above
E_UPPER = Fraction(2718281828459045236, 10**18)

SPARKLER_FLOOR = Fraction(13, 165)

_RELATIONS = {">=": operator.ge, "<=": operator.le, "==": operator.eq, ">": operator.gt, "<": operator.lt}


def _decimal(x) -> dict[str, str] | str:
    if isinstance(x, Fraction):
        return {"num": str(x.numerator), "den": str(x.denominator)}
    return str(x)


@dataclass(frozen=True)
class BoundReport:
    """``observed <relation> claimed``, decided exactly."""

    name: str
    claimed: Fraction | int
    observed: Fraction | int
    relation: str = ">="
    context: dict[str, Any] = field(default_factory=dict)

    def __post_init__(self):
        if self.relation not in _RELATIONS:
            raise ValueError(f"unknown relation {self.relation!r}")
        for v in (self.claimed, self.observed):
            if isinstance(v, float):
                raise TypeError("BoundReport values must be exact (int or Fraction)")

    @property
    def holds(self) -> bool:
        return _RELATIONS[self.relation](self.observed, self.claimed)

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "relation": self.relation,
            "claimed": _decimal(self.claimed),
            "observed": _decimal(self.observed),
            "holds": self.holds,
            "context": {k: _decimal(v) if isinstance(v, Fraction) else v for k, v in self.context.items()},
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


def _sparkler_args(k: int, n: int, leaves: int | None) -> tuple[int, int, int]:
    k = check_int(k, "k", 4)
    n = check_int(n, "n", 1)
    leaves = 3 * k if leaves is None else check_int(leaves, "leaves", 0)
    return k, n, leaves


def sparkler_copy_count(k: int, n: int, leaves: int | None = None) -> int:
    """Sparklers with ``k`` edges in the host with ``n`` vertebrae.

    The center must be a vertebra, the subdivided edge runs along the spine
    (two directions) and the other ``k - 2`` leaves come from the pendant
    leaves plus the opposite spine neighbour.
    """
    k, n, leaves = _sparkler_args(k, n, leaves)
    return 2 * n * math.comb(leaves + 1, k - 2)


def sparkler_total_count(k: int, n: int, leaves: int | None = None) -> int:
    """All ``k``-edge subtrees of the host: each contains exactly one
    vertebra, ``j`` spine edges placed in ``j + 1`` ways and ``k - j``
    pendant leaves."""
    k, n, leaves = _sparkler_args(k, n, leaves)
    return n * sum((j + 1) * math.comb(leaves, k - j) for j in range(k + 1))


def sparkler_host_density(k: int, leaves: int | None = None) -> Fraction:
    """Exact density of the ``k``-edge sparkler in its host (any ``n``)."""
    return Fraction(sparkler_copy_count(k, 1, leaves), sparkler_total_count(k, 1, leaves))


def sparkler_density_bound(k: int) -> Fraction:
    """``(3k+1)k(k-1) / (2(2k+3)(2k+2)(2k+1))``; equals 13/165 at ``k = 4``."""
    k = check_int(k, "k", 4)
    return Fraction((3 * k + 1) * k * (k - 1), 2 * (2 * k + 3) * (2 * k + 2) * (2 * k + 1))


def optimized_leaf_count(k: int, alpha: Fraction = Fraction(28507, 10000)) -> int:
    """``ceil(alpha * k)`` leaves per vertebra."""
    k = check_int(k, "k", 4)
    return math.ceil(Fraction(alpha) * k)


def best_leaf_count(k: int, search_max: int | None = None) -> tuple[int, Fraction]:
    """Integer leaf count maximising the host density for ``k``.

    Searches ``k - 2 <= L <= search_max`` (default ``6k``) and returns the
    first maximiser with its density.
    """
    k = check_int(k, "k", 4)
    hi = 6 * k if search_max is None else search_max
    best = None
    for L in range(k - 2, hi + 1):
        d = sparkler_host_density(k, L)
        if best is None or d > best[1]:
            best = (L, d)
    return best


def elimit_bound(k: int) -> Fraction:
    """``1 - k^-(2k-3)``: small-tree inducibility ceiling for non-path,
    non-star ``k``-vertex trees."""
    k = check_int(k, "k", 5)
    return 1 - Fraction(1, k ** (2 * k - 3))


def universal_density_bound(k: int, zk_tk: int) -> Fraction:
    """``1 / (2 (k!)^2 k^(k-1) E + Z_k(T_k))`` with ``E >= e^(2k)``.

    ``E`` is a rational upper bound on ``e^(2k)``, so the value is at most the
    real-valued bound and a density at or above it certifies the real one.
    """
    k = check_int(k, "k", 3)
    zk_tk = check_int(zk_tk, "zk_tk", 0)
    f = math.factorial(k)
    return 1 / (2 * f * f * k ** (k - 1) * E_UPPER ** (2 * k) + zk_tk)


def glue_upper_slack(k: int, max_degree: int) -> int:
    """``(k (max_degree - 1))^(k-1)``, the allowance for subtrees through
    the gluing edge."""
    k = check_int(k, "k", 2)
    max_degree = check_int(max_degree, "max_degree", 1)
    return (k * (max_degree - 1)) ** (k - 1)


def main_theorem_constant() -> Fraction:
    """Reference constant ``1 - 10^-35`` (not verified here)."""
    return 1 - Fraction(1, 10**35)
