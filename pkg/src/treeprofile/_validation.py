"""Input checks shared by the public functions and the estimator wrappers."""

from __future__ import annotations

import numbers


class CapExceededError(ValueError):
    """Raised when a request exceeds a configured size cap."""


class TreeFormatError(ValueError):
    """Raised for malformed edge-list input; carries the offending line."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


def check_int(value, name: str, minimum: int | None = None) -> int:
    if isinstance(value, bool) or not isinstance(value, numbers.Integral):
        raise TypeError(f"{name} must be an integer, got {type(value).__name__}")
    value = int(value)
    if minimum is not None and value < minimum:
        raise ValueError(f"{name} must be >= {minimum}, got {value}")
    return value


def check_cap(value: int, cap: int, name: str) -> None:
    if value > cap:
        raise CapExceededError(f"{name}={value} exceeds the cap {cap}")


def check_tree(t):
    """Return ``t`` if it is a :class:`Tree`, else raise ``TypeError``."""
    from .tree import Tree

    if not isinstance(t, Tree):
        raise TypeError(f"expected a Tree, got {type(t).__name__}")
    return t


def check_trees(X) -> list:
    """Validate an iterable of trees (estimator input)."""
    trees = list(X)
    for t in trees:
        check_tree(t)
    return trees
