"""Exact membership degrees as integer multiples of d = 10**-p.

Every label in this package is a :class:`ScaledValue`: an integer count of
``d``-steps together with the exponent ``p``.  Nothing here touches floats.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum
from functools import total_ordering


class Kind(str, Enum):
    """Which membership model a labeling lives in."""

    ANTI_FUZZY = "anti-fuzzy"
    BIPOLAR = "bipolar"


class ScaleMismatchError(ValueError):
    """Raised when values at different scales are combined."""


class InadmissibleError(ValueError):
    """Raised when (n, m) admits no equal block partition."""


@total_ordering
@dataclass(frozen=True)
class ScaledValue:
    units: int
    scale_exp: int

    def __post_init__(self) -> None:
        if isinstance(self.units, bool) or not isinstance(self.units, int):
            raise TypeError(f"units must be int, got {type(self.units).__name__}")
        if isinstance(self.scale_exp, bool) or not isinstance(self.scale_exp, int):
            raise TypeError("scale_exp must be int")
        if self.scale_exp < 1:
            raise ValueError(f"scale_exp must be >= 1, got {self.scale_exp}")

    def _same_scale(self, other: ScaledValue) -> None:
        if other.scale_exp != self.scale_exp:
            raise ScaleMismatchError(
                f"cannot combine 10^-{self.scale_exp} with 10^-{other.scale_exp}"
            )

    def __add__(self, other: object) -> ScaledValue:
        if not isinstance(other, ScaledValue):
            return NotImplemented
        self._same_scale(other)
        return ScaledValue(self.units + other.units, self.scale_exp)

    def __sub__(self, other: object) -> ScaledValue:
        if not isinstance(other, ScaledValue):
            return NotImplemented
        self._same_scale(other)
        return ScaledValue(self.units - other.units, self.scale_exp)

    def __neg__(self) -> ScaledValue:
        return ScaledValue(-self.units, self.scale_exp)

    def __lt__(self, other: object) -> bool:
        if not isinstance(other, ScaledValue):
            return NotImplemented
        self._same_scale(other)
        return self.units < other.units

    @property
    def one(self) -> int:
        """Units corresponding to the value 1 at this scale."""
        return 10**self.scale_exp

    def is_positive_degree(self) -> bool:
        return 0 < self.units <= self.one

    def is_negative_degree(self) -> bool:
        return -self.one <= self.units < 0

    def __str__(self) -> str:
        return to_decimal_string(self)


def value_of(units: int, p: int) -> ScaledValue:
    return ScaledValue(units, p)


def add(a: ScaledValue, b: ScaledValue) -> ScaledValue:
    return a + b


def compare(a: ScaledValue, b: ScaledValue) -> int:
    """Three-way comparison: -1, 0 or 1."""
    a._same_scale(b)
    return (a.units > b.units) - (a.units < b.units)


def to_decimal_string(v: ScaledValue) -> str:
    """Render with exactly ``scale_exp`` fraction digits, e.g. ``-0.49``."""
    whole, frac = divmod(abs(v.units), v.one)
    sign = "-" if v.units < 0 else ""
    return f"{sign}{whole}.{frac:0{v.scale_exp}d}"


_DECIMAL_RE = re.compile(r"^(-?)(\d+)\.(\d+)$")


def parse_decimal(text: str, p: int | None = None) -> ScaledValue:
    """Inverse of :func:`to_decimal_string`.

    The scale is the number of fraction digits unless ``p`` is given, in
    which case the text must carry exactly ``p`` digits.
    """
    match = _DECIMAL_RE.match(text.strip())
    if match is None:
        raise ValueError(f"not a fixed-point decimal: {text!r}")
    sign, whole, frac = match.groups()
    if p is not None and len(frac) != p:
        raise ScaleMismatchError(f"{text!r} does not have exactly {p} fraction digits")
    scale = len(frac)
    units = int(whole) * 10**scale + int(frac)
    return ScaledValue(-units if sign else units, scale)


# Scale bands: (upper bound exclusive, p).  Past the last band p grows by one
# per decade starting from the given base.
_ANTI_FUZZY_BANDS = ((31, 2), (331, 3))
_ANTI_FUZZY_BASE = 331
_BIPOLAR_BANDS = ((11, 2), (35, 3), (334, 4))
_BIPOLAR_BASE = 334


def scale_band(n: int, kind: Kind | str) -> int:
    """Look up p for an n-vertex path, ignoring admissibility."""
    kind = Kind(kind)
    if kind is Kind.ANTI_FUZZY:
        bands, base = _ANTI_FUZZY_BANDS, _ANTI_FUZZY_BASE
    else:
        bands, base = _BIPOLAR_BANDS, _BIPOLAR_BASE
    for upper, p in bands:
        if n < upper:
            return p
    j = 0
    while n >= base * 10 ** (j + 1):
        j += 1
    return j + 4


def select_scale(n: int, m: int, kind: Kind | str, override: int | None = None) -> int:
    """Pick the exponent p so that d = 10**-p keeps every generated label in (0, 1].

    ``override`` bypasses the table; range problems then surface in the
    generators instead.
    """
    if n < 2 * m + 1 or m < 1 or (n - 1) % m:
        raise InadmissibleError(f"no scale for inadmissible (n={n}, m={m})")
    if override is not None:
        if override < 1:
            raise ValueError(f"scale exponent must be >= 1, got {override}")
        return override
    return scale_band(n, kind)
