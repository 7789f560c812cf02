"""Binomial and multinomial mass functions in both parameterizations.

Probabilities are kept strictly inside the open region (no boundary limits):
entries in (0, 1) and, for a multinomial cell vector, total below 1. Masses
are computed as exact integer coefficients times floating-point powers.
"""

from __future__ import annotations

import math

from .lattice import MultiIndex, multinomial_coefficient


def _check_open_unit(name: str, value: float) -> None:
    if not 0.0 < value < 1.0:
        raise ValueError(f"{name}={value!r} lies outside the open interval (0, 1)")


def validate_probabilities(p) -> tuple[float, ...]:
    """Entries strictly inside (0, 1)."""
    out = tuple(float(v) for v in p)
    for i, v in enumerate(out):
        _check_open_unit(f"entry {i}", v)
    return out


def validate_mixing(beta) -> tuple[float, ...]:
    """Multinomial cell probabilities: entries in (0, 1) with |beta| < 1."""
    out = validate_probabilities(beta)
    if sum(out) >= 1.0:
        raise ValueError(f"|beta|={sum(out)} must stay strictly below 1")
    return out


def validate_odds(q) -> tuple[float, ...]:
    """Odds entries must be strictly positive."""
    out = tuple(float(v) for v in q)
    if any(v <= 0.0 for v in out):
        raise ValueError(f"odds vector {out} has a nonpositive entry")
    return out


def binomial_pmf(x: int, y: int, alpha: float) -> float:
    """Mass of x successes among y trials at success probability alpha."""
    if x < 0 or x > y:
        raise ValueError(f"count {x} lies outside 0..{y}")
    _check_open_unit("alpha", alpha)
    return math.comb(y, x) * alpha**x * (1.0 - alpha) ** (y - x)


def multinomial_pmf(x: MultiIndex, N: int, beta) -> float:
    """Mass of the occupancy vector x among N trials with cell probabilities beta.

    The leftover cell carries x_0 = N - |x| at probability 1 - |beta|.
    """
    beta = validate_mixing(beta)
    coefficient = multinomial_coefficient(x, N)
    value = float(coefficient) * (1.0 - sum(beta)) ** (N - sum(x))
    for xi, bi in zip(x, beta, strict=True):
        value *= bi**xi
    return value


def multinomial_alt_pmf(x: MultiIndex, N: int, q) -> float:
    """Odds form of the multinomial mass: binom(N, x) prod q_i^{x_i} (1+|q|)^{-N}."""
    q = validate_odds(q)
    coefficient = multinomial_coefficient(x, N)
    value = float(coefficient) * (1.0 + sum(q)) ** (-N)
    for xi, qi in zip(x, q, strict=True):
        value *= qi**xi
    return value


def prob_to_odds(beta) -> tuple[float, ...]:
    """q_i = beta_i / (1 - |beta|); inverse of odds_to_prob."""
    beta = validate_mixing(beta)
    leftover = 1.0 - sum(beta)
    return tuple(bi / leftover for bi in beta)


def odds_to_prob(q) -> tuple[float, ...]:
    """beta_i = q_i / (1 + |q|); inverse of prob_to_odds."""
    q = validate_odds(q)
    denom = 1.0 + sum(q)
    return tuple(qi / denom for qi in q)
