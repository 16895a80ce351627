"""Exact rational arithmetic backend.

Every quantity in this package that is not an integer is an exact rational.
Two interchangeable backends are supported:

* ``gmpy2.mpq`` -- C-backed, much faster on big numerators (preferred), and
* ``fractions.Fraction`` -- always available.

The backend is chosen once at import time: ``gmpy2`` if it imports, else the
stdlib.  Set ``INTERVALSCHED_RATIONAL_BACKEND`` to ``gmpy2`` or ``fraction``
to force one (forcing ``gmpy2`` when it is missing is an error; silently
falling back would make benchmark numbers lie).

Floats are deliberately rejected everywhere: they cannot represent 1/3 or
47/24 and a single rounding error would invalidate the exact feasibility
reasoning downstream.
"""

from __future__ import annotations

import os
from fractions import Fraction
from typing import Any, Union

_ENV_VAR = "INTERVALSCHED_RATIONAL_BACKEND"


def _pick_backend() -> tuple[str, Any]:
    forced = os.environ.get(_ENV_VAR, "").strip().lower()
    if forced in ("fraction", "fractions", "stdlib"):
        return "fraction", Fraction
    if forced in ("gmpy2", "gmp"):
        import gmpy2  # noqa: F401  -- raise ImportError loudly if absent

        return "gmpy2", gmpy2.mpq
    if forced:
        raise ValueError(
            f"unknown {_ENV_VAR} value {forced!r}; use 'gmpy2' or 'fraction'"
        )
    try:
        import gmpy2

        return "gmpy2", gmpy2.mpq
    except ImportError:
        return "fraction", Fraction


BACKEND_NAME, RAT = _pick_backend()

#: Anything accepted where a rational is expected.
Rational = Union[int, Fraction, Any]

ZERO = RAT(0)
ONE = RAT(1)


def rat(value: Rational | str, denom: int | None = None) -> Any:
    """Coerce to the active rational type.

    Accepts ints, rationals of either backend, and ``"a/b"`` / ``"a"``
    strings.  Floats are rejected.
    """
    if denom is not None:
        return RAT(value) / RAT(denom)
    if isinstance(value, float):
        raise TypeError(f"refusing float {value!r}; pass an int or 'a/b' string")
    if isinstance(value, str):
        return parse_rational(value)
    return RAT(value)


def parse_rational(text: str) -> Any:
    """Parse ``"a/b"`` or ``"a"`` (optionally signed) into an exact rational."""
    s = text.strip()
    num, sep, den = s.partition("/")
    try:
        n = int(num)
        if not sep:
            return RAT(n)
        d = int(den)
    except ValueError:
        raise ValueError(f"not a rational literal: {text!r}") from None
    if d == 0:
        raise ValueError(f"zero denominator: {text!r}")
    return RAT(n) / RAT(d)


def format_rational(value: Rational) -> str:
    """Render as ``"a/b"``, or ``"a"`` when the denominator is 1."""
    q = RAT(value)
    n, d = q.numerator, q.denominator
    return f"{n}" if d == 1 else f"{n}/{d}"


def rfloor(value: Rational) -> int:
    """Exact floor of a rational (denominators are always positive)."""
    q = RAT(value)
    return int(q.numerator // q.denominator)


def rceil(value: Rational) -> int:
    """Exact ceiling of a rational."""
    q = RAT(value)
    return int(-((-q.numerator) // q.denominator))


def is_integral(value: Rational) -> bool:
    return RAT(value).denominator == 1
