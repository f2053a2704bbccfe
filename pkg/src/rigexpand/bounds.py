"""Closed-form bound calculators with directed rational constants.

Irrational constants (e and square roots) are replaced by rational bounds
in the direction that keeps every comparison sound: an upper bound when the
constant sits on the large side of a <= check, a lower bound when a strict
inequality against the constant must be certified.  Rounding can therefore
never produce a spurious pass.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt

# 12-digit directed bounds on e = 2.718281828459045...
E_LOWER = Fraction(271_828_182_845, 10**11)
E_UPPER = Fraction(271_828_182_846, 10**11)

_SQRT_SCALE = 10**6


def sqrt_upper(x: Fraction | int) -> Fraction:
    """A sound rational upper bound on sqrt(x), exact for perfect squares."""
    x = Fraction(x)
    if x < 0:
        raise ValueError("sqrt of a negative value")
    p, q = x.numerator, x.denominator
    scaled = p * q * _SQRT_SCALE**2
    root = isqrt(scaled)
    if root * root == scaled:
        return Fraction(root, q * _SQRT_SCALE)
    return Fraction(root + 1, q * _SQRT_SCALE)


@dataclass(frozen=True)
class ScaledEBound:
    """A bound of the form coefficient * e, carried as (coefficient, rational cap)."""

    coefficient: Fraction
    value: Fraction  # coefficient * E_UPPER, safe as the big side of a <= check


def bound_rig(d: int, r: int, t: Fraction | int) -> ScaledEBound:
    """Density ceiling e*t*((2r+2)d + 1) for intersection graphs over a class of density t."""
    t = Fraction(t)
    if t < 1:
        raise ValueError("class density bound t must be at least 1")
    coefficient = t * ((2 * r + 2) * d + 1)
    return ScaledEBound(coefficient, coefficient * E_UPPER)


def bound_surface(d: int, r: int, g: int) -> Fraction:
    """Density ceiling (sqrt(3g/2) + 3) * e * ((2r+2)d + 1) on genus-g surfaces."""
    if g < 0:
        raise ValueError("genus must be non-negative")
    factor = sqrt_upper(Fraction(3 * g, 2)) + 3
    return factor * E_UPPER * ((2 * r + 2) * d + 1)


def genus_density(g: int) -> Fraction:
    """Sound rational upper bound on sqrt(3g/2) + 3 (maximum density at genus g)."""
    if g < 0:
        raise ValueError("genus must be non-negative")
    return sqrt_upper(Fraction(3 * g, 2)) + 3


def bound_lower(d: int, r: int) -> Fraction:
    """The exact lower-bound density dr + d/2 - r - 1 achieved by the explicit family."""
    if d < 2 or r < 1:
        raise ValueError("lower bound family needs d >= 2 and r >= 1")
    return Fraction(d) * r + Fraction(d, 2) - r - 1


def bound_scol(r: int, nabla: Fraction | int) -> Fraction:
    """The ceiling (6r)^r * nabla^(3r) on the strong r-colouring number."""
    if r < 1:
        raise ValueError("r must be at least 1")
    return Fraction(6 * r) ** r * Fraction(nabla) ** (3 * r)
