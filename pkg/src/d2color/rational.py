"""Exact rational helpers shared by the density, classification and discharge code."""
from __future__ import annotations

from fractions import Fraction
from numbers import Rational

from .errors import ParameterError


def as_fraction(value) -> Fraction:
    """Coerce an int, Fraction or ``"p/q"`` string to a Fraction.

    Floats are rejected: the theorem's inequalities are strict and a binary
    float silently turns ``0.1`` into a different rational.
    """
    if isinstance(value, bool):
        raise ParameterError(f"not a rational: {value!r}")
    if isinstance(value, Rational):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise ParameterError(f"not a rational literal: {value!r}") from exc
    raise ParameterError(f"expected an exact rational, got {type(value).__name__}")


def eps_upper_bound(c: int) -> Fraction:
    return Fraction(4, c * (c + 1))


def validate_c_eps(c, eps, *, closed: bool = False) -> tuple[int, Fraction]:
    """Check ``c >= 3`` and ``0 < eps < 4/(c(c+1))``; return normalized values.

    ``closed=True`` also admits ``eps == 4/(c(c+1))``, the endpoint the
    planar girth-5 application sits on (``c = 6``, ``eps = 2/21``).
    """
    if isinstance(c, bool) or not isinstance(c, int):
        raise ParameterError(f"c must be an integer, got {c!r}")
    if c < 3:
        raise ParameterError(f"c must be at least 3, got {c}")
    eps = as_fraction(eps)
    if not (0 < eps < eps_upper_bound(c) or (closed and eps == eps_upper_bound(c))):
        raise ParameterError(f"eps must lie in (0, {eps_upper_bound(c)}) for c={c}, got {eps}")
    return c, eps


def mad_threshold(c: int, eps: Fraction) -> Fraction:
    """The bound ``4 - 4/(c+1) - eps`` that the maximum average degree must stay under."""
    return 4 - Fraction(4, c + 1) - eps


def potential_slope(c: int, eps: Fraction) -> Fraction:
    """Per-vertex weight ``2 - 2/(c+1) - eps/2`` of the potential; half of :func:`mad_threshold`."""
    return 2 - Fraction(2, c + 1) - eps / 2


def to_json(q: Fraction) -> dict:
    return {"num": q.numerator, "den": q.denominator}


def from_json(obj) -> Fraction:
    return Fraction(obj["num"], obj["den"])
