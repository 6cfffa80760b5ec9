"""Numerical toolkit for disk semigroup generators and starlike classes."""

from ._core import (
    PowerSeries,
    check_a_beta,
    check_bs,
    check_u_lambda,
    decay_rate_bs,
    decay_rate_janowski,
    decay_rate_u,
    hadamard,
    integrate,
    kappa,
    named_function,
    radius,
)

__all__ = [
    "PowerSeries",
    "check_a_beta",
    "check_bs",
    "check_u_lambda",
    "decay_rate_bs",
    "decay_rate_janowski",
    "decay_rate_u",
    "hadamard",
    "integrate",
    "kappa",
    "named_function",
    "radius",
]
