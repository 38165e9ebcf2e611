"""Gröbner bases, vanishing ideals and Nullstellensatz certificates over finite fields."""

from ._nullkit import (
    NullkitError,
    Problem,
    __version__,
    certificate,
    classify_empty,
    compare,
    contains,
    counterexample_suite,
    find_nonradical,
    groebner,
    ideal_op,
    points,
    run_cli,
    search,
    set_threads,
    vanishing,
)

__all__ = [
    "NullkitError",
    "Problem",
    "__version__",
    "certificate",
    "classify_empty",
    "compare",
    "contains",
    "counterexample_suite",
    "find_nonradical",
    "groebner",
    "ideal_op",
    "points",
    "run_cli",
    "search",
    "set_threads",
    "vanishing",
]
