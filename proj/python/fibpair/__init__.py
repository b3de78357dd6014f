"""Exact solver and explorer for the pair ax + by = (a-1)(b-1)/2 and its +1 variant."""

from ._core import (
    ContradictionError,
    DomainError,
    alt_sum_cubes,
    cassini,
    closed_solution,
    detect_period,
    difference_probe,
    emit_table,
    fib,
    fib_pow,
    fib_triple_identity,
    gamma,
    scan,
    solve_pair,
    solve_positive_pair,
    solve_shifted_pair,
    sum_cubes,
    verify,
)

__all__ = [
    "ContradictionError",
    "DomainError",
    "alt_sum_cubes",
    "cassini",
    "closed_solution",
    "detect_period",
    "difference_probe",
    "emit_table",
    "fib",
    "fib_pow",
    "fib_triple_identity",
    "gamma",
    "scan",
    "solve_pair",
    "solve_positive_pair",
    "solve_shifted_pair",
    "sum_cubes",
    "verify",
]
