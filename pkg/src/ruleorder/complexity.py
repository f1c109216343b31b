"""Closed-form worst-case step counts for the two order-learning strategies.

All integer-valued predictors are exact (arbitrary precision); the only
floating-point quantity is the log-factorial sum, which is accumulated with
compensated summation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from decimal import Context

DAYS_PER_YEAR = 365.25

# Slack granted to the strict log2(n!) < B(n) bound, which floating
# accumulation (and the exact tie at n = 2) would otherwise break.
BOUND_RELATIVE_TOLERANCE = 1e-9


def _require_positive(n: int) -> None:
    if n < 1:
        raise ValueError(f"n must be a positive integer, got {n}")


def ceil_log2(k: int) -> int:
    """Smallest integer >= log2(k), exact for arbitrarily large integers."""
    if k < 1:
        raise ValueError(f"k must be a positive integer, got {k}")
    return (k - 1).bit_length()


def block_steps_sum(n: int) -> int:
    """Worst-case steps of linear-scan insertion, as the literal sum 2+3+...+n.

    The first rule is placed without any test, so the i = 1 term drops out.
    """
    _require_positive(n)
    return sum(range(2, n + 1))


def block_steps_exact(n: int) -> int:
    """Worst-case steps of linear-scan insertion in closed form.

    Equals ``block_steps_sum(n)`` for every n >= 1; kept separate so the
    identity between the two routes stays testable.
    """
    _require_positive(n)
    return (n * n - n) // 2 + n - 1


def binary_steps(n: int) -> int:
    """Worst-case queries of binary insertion: sum of ceil(log2 k), k = 1..n."""
    _require_positive(n)
    return sum(ceil_log2(k) for k in range(1, n + 1))


def log_factorial(n: int) -> float:
    """log2(n!) as the compensated sum of log2(k) for k = 1..n.

    Never materialises n! itself, so it stays cheap for large n.
    """
    _require_positive(n)
    return math.fsum(map(math.log2, range(1, n + 1)))


def binary_steps_approx(n: int) -> int:
    """Factorial-based shortcut for ``binary_steps``: ceil(log2(n!)).

    An underestimate of the exact sum (per-term ceilings are dropped), but
    never off by more than n.
    """
    return math.ceil(log_factorial(n))


def naive_steps(n: int) -> int:
    """Steps of brute-force enumeration over all orderings: n!, exact."""
    _require_positive(n)
    return math.factorial(n)


def speedup(n: int) -> float:
    """How many times fewer steps binary insertion needs than linear scan."""
    if n < 2:
        raise ValueError(f"speedup needs n >= 2 (binary_steps({n}) is 0)")
    return block_steps_exact(n) / binary_steps(n)


def learning_duration(steps: int, steps_per_day: float) -> float:
    """Years needed to spend ``steps`` at a rate of ``steps_per_day``."""
    if steps < 0:
        raise ValueError(f"steps must be non-negative, got {steps}")
    if steps_per_day <= 0:
        raise ValueError(f"steps_per_day must be positive, got {steps_per_day}")
    return steps / steps_per_day / DAYS_PER_YEAR


def scientific(value: int, digits: int = 6) -> str:
    """Render a (possibly huge) integer in e-notation with significant digits."""
    if digits < 1:
        raise ValueError(f"digits must be positive, got {digits}")
    return format(Context(prec=digits).create_decimal(value), "e")


@dataclass(frozen=True)
class ComplexityReport:
    """All predictor outputs for one universe size.

    ``speedup`` is None at n = 1, where binary insertion needs zero queries.
    """

    n: int
    s_n: int
    b_n: int
    b_f_n: int
    log_factorial: float
    speedup: float | None
    naive: int

    def __post_init__(self) -> None:
        assert self.s_n == (self.n * self.n - self.n) // 2 + self.n - 1
        if self.n >= 2:
            slack = BOUND_RELATIVE_TOLERANCE * max(1.0, self.log_factorial)
            assert self.log_factorial <= self.b_n + slack
            assert self.b_n < self.log_factorial + self.n
            assert self.b_n < self.n * math.log2(self.n)


def report(n: int) -> ComplexityReport:
    """Evaluate every predictor at ``n``."""
    _require_positive(n)
    return ComplexityReport(
        n=n,
        s_n=block_steps_exact(n),
        b_n=binary_steps(n),
        b_f_n=binary_steps_approx(n),
        log_factorial=log_factorial(n),
        speedup=speedup(n) if n >= 2 else None,
        naive=naive_steps(n),
    )
