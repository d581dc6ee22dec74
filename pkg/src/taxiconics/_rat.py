"""Exact rational scalar backend.

Every quantity in the core pipeline (coordinates, plane/line parameters,
kappa, strip half-widths, ...) is an exact rational.  gmpy2.mpq is used when
available because the classification sweeps do millions of small rational
operations; fractions.Fraction is a drop-in fallback.  Both keep values
reduced with a positive denominator, which is exactly the invariant we need.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Union

try:
    from gmpy2 import mpq as Rat
except ImportError:  # pragma: no cover - exercised only without gmpy2
    Rat = Fraction

RatLike = Union[int, str, Fraction, "Rat"]

_RAT_RE = re.compile(r"^(-?\d+)(?:/(-?\d+))?$")


def rat(value: RatLike, den: int | None = None) -> Rat:
    """Coerce ints, strings and Fraction/mpq values to the backend type."""
    if den is not None:
        return Rat(value, den)
    if isinstance(value, str):
        return parse_rat(value)
    if isinstance(value, float):
        raise TypeError("floats are not exact; pass an int, string or rational")
    return Rat(value)


def parse_rat(text: str) -> Rat:
    """Parse "p/q" (or plain "p"); rejects zero denominators."""
    m = _RAT_RE.match(text.strip())
    if not m:
        raise ValueError(f"not a rational literal: {text!r}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) is not None else 1
    if den == 0:
        raise ValueError(f"zero denominator in rational literal: {text!r}")
    return Rat(num, den)


def rat_str(value) -> str:
    """Serialize as "p/q", or "p" when the denominator is 1."""
    num, den = value.numerator, value.denominator
    if den == 1:
        return str(num)
    return f"{num}/{den}"


def sign(value) -> int:
    if value > 0:
        return 1
    if value < 0:
        return -1
    return 0
