"""Dominance drawings of finite partial orders."""

from ._orderdraw import (
    BackendFailure,
    CycleError,
    Drawing,
    Error,
    Order,
    OrderViolation,
    ParseError,
    TooLarge,
    UnknownLabel,
    Unresolvable,
    antichain,
    boolean_lattice,
    chain,
    draw,
    false_comparabilities,
    grid,
    standard_example,
    tig_size,
)

__all__ = [
    "BackendFailure",
    "CycleError",
    "Drawing",
    "Error",
    "Order",
    "OrderViolation",
    "ParseError",
    "TooLarge",
    "UnknownLabel",
    "Unresolvable",
    "antichain",
    "boolean_lattice",
    "chain",
    "draw",
    "false_comparabilities",
    "grid",
    "standard_example",
    "tig_size",
]
