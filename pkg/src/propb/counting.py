"""Exact edge counts and conservative analytic upper bounds.

Counts are arbitrary-precision integers, never floats.  Bounds involve the
constant e, so they are returned as rational enclosures (BoundValue): the
upper end is safe when a bound is used as a size estimate, the lower end is
the one to compare against when certifying `quantity <= bound`, so a check
can never pass through rounding alone.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .params import ParameterError, Params, validate_params


def _e_enclosure(terms: int = 40) -> tuple[Fraction, Fraction]:
    # Partial sum of sum(1/n!) plus the tail bound 1/(N!*N); width ~3e-49.
    total = Fraction(0)
    factorial = 1
    for n in range(terms + 1):
        if n:
            factorial *= n
        total += Fraction(1, factorial)
    return total, total + Fraction(1, factorial * terms)


E_LOWER, E_UPPER = _e_enclosure()


@dataclass(frozen=True)
class BoundValue:
    """Rational enclosure lower <= true value <= upper of a real bound."""

    lower: Fraction
    upper: Fraction

    def __float__(self) -> float:
        return float(self.upper)

    def certifies_at_most(self, quantity: int | Fraction) -> bool:
        """True only if `quantity <= true bound` is certain."""
        return quantity <= self.lower


def binomial(n: int, r: int) -> int:
    """Exact C(n, r); 0 when r > n."""
    if not isinstance(n, int) or not isinstance(r, int):
        raise ValueError(f"binomial expects integers, got n={n!r}, r={r!r}")
    if n < 0 or r < 0:
        raise ValueError(f"binomial expects nonnegative arguments, got n={n}, r={r}")
    return math.comb(n, r)


def _edge_count(k: int, l: int) -> int:
    block = k // l
    seq_len = (2**l) * block
    return binomial(2 * l - 1, l) * seq_len**l * binomial(seq_len, block)


def edge_count(params: Params) -> int:
    """Exact number of edges, with multiplicity, the full construction emits.

    Equals C(2l-1, l) * seq_len^l * C(seq_len, block_size).
    """
    return _edge_count(params.k, params.l)


def binomial_upper_bound(n: int, r: int) -> BoundValue:
    """The classical bound (e*n/r)^r >= C(n, r), as a rational enclosure."""
    if not isinstance(n, int) or not isinstance(r, int) or n < 0 or r < 1:
        raise ValueError(f"need integers n >= 0 and r >= 1, got n={n!r}, r={r!r}")
    if r > n:
        raise ValueError(f"need r <= n, got n={n}, r={r}")
    ratio = Fraction(n, r)
    return BoundValue(lower=(E_LOWER * ratio) ** r, upper=(E_UPPER * ratio) ** r)


def edge_count_upper_bound(k: int, l: int) -> BoundValue:
    """Closed-form upper bound 2^(2l+l^2) * k^l * 2^k * e^(k/l) on edge_count."""
    validate_params(k, l)
    scale = 2 ** (2 * l + l * l) * k**l * 2**k
    exponent = k // l
    return BoundValue(lower=scale * E_LOWER**exponent, upper=scale * E_UPPER**exponent)


def divisors(k: int) -> list[int]:
    """Positive divisors of k in ascending order."""
    if k < 1:
        raise ParameterError(f"k must be positive, got {k}")
    small = [d for d in range(1, math.isqrt(k) + 1) if k % d == 0]
    large = [k // d for d in reversed(small) if k // d not in small]
    return small + large


def best_l(k: int) -> int:
    """The divisor of k that minimizes the exact edge count; ties go low.

    Exact minimization over the valid l values (asymptotically l near log2 k
    wins, but for small k that is usually l = 1).
    """
    return min(divisors(k), key=lambda l: _edge_count(k, l))
