"""Complex values carried as (log magnitude, phase).

Divided differences of values given on near-coincident points divide by tiny
Blaschke factors; iterating that can leave the double range even though every
*ratio* along the way is representable.  Carrying log|v| and arg(v) keeps
magnitudes exact at any scale: division is a subtraction of logs, and a
difference a - b is computed after factoring out the larger magnitude, so the
inner arithmetic always happens near unit scale.
"""

from __future__ import annotations

import cmath
import math
from typing import NamedTuple

_EXP_MAX = 709.0  # log of the largest finite double, rounded down


class LogComplex(NamedTuple):
    log_mag: float  # -inf encodes exact zero
    phase: float

    @classmethod
    def from_complex(cls, value: complex) -> "LogComplex":
        mag = abs(value)
        if mag == 0.0:
            return _ZERO
        return cls(math.log(mag), cmath.phase(value))

    def to_complex(self) -> complex:
        if self.log_mag == -math.inf:
            return 0j
        if self.log_mag > _EXP_MAX:
            return cmath.rect(math.inf, self.phase)
        return cmath.rect(math.exp(self.log_mag), self.phase)

    @property
    def is_zero(self) -> bool:
        return self.log_mag == -math.inf


_ZERO = LogComplex(-math.inf, 0.0)


def lc_zero() -> LogComplex:
    return _ZERO


def lc_sub(a: LogComplex, b: LogComplex) -> LogComplex:
    """a - b, rescaled so the subtraction itself runs near unit magnitude."""
    scale = max(a.log_mag, b.log_mag)
    if scale == -math.inf:
        return _ZERO
    x = 0j
    if not a.is_zero:
        x += cmath.rect(math.exp(a.log_mag - scale), a.phase)
    if not b.is_zero:
        x -= cmath.rect(math.exp(b.log_mag - scale), b.phase)
    mag = abs(x)
    if mag == 0.0:
        return _ZERO
    return LogComplex(scale + math.log(mag), cmath.phase(x))


def lc_div(a: LogComplex, b: LogComplex) -> LogComplex:
    if b.is_zero:
        raise ZeroDivisionError("division by an exact zero")
    if a.is_zero:
        return _ZERO
    return LogComplex(a.log_mag - b.log_mag, a.phase - b.phase)
