"""Exact rational scalars and the p/q string format used throughout the JSON interfaces."""

from __future__ import annotations

from fractions import Fraction


def parse_scalar(text: str) -> Fraction:
    """Parse "p" or "p/q" into a reduced Fraction."""
    return Fraction(text.strip())


def format_scalar(x: Fraction) -> str:
    """Render a Fraction as "p" or "p/q", always in lowest terms."""
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return "%d/%d" % (x.numerator, x.denominator)


def sgn(x) -> int:
    if x > 0:
        return 1
    if x < 0:
        return -1
    return 0


def random_rational(rng) -> Fraction:
    """Random nonzero rational with numerator and denominator drawn from [-9, 9] \\ {0}."""
    nonzero = [k for k in range(-9, 10) if k != 0]
    return Fraction(rng.choice(nonzero), rng.choice(nonzero))
