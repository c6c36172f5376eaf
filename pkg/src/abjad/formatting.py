"""Right-to-left number reading: class grouping and units-first verbalization."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import OutOfRange


def multiplier_name(exponent: int) -> str:
    """English name for a power of a thousand, built from thousand and million.

    0 -> "", 1 -> "thousand", 2 -> "million", 3 -> "thousand million", ...
    """
    if exponent < 0:
        raise ValueError("exponent must be non-negative")
    if exponent == 0:
        return ""
    if exponent == 1:
        return "thousand"
    return " ".join(["thousand"] * (exponent - 2) + ["million"])


@dataclass(frozen=True)
class ClassReading:
    """One three-digit class read units first: ``parts`` are (value, place name)."""

    parts: tuple[tuple[int, str], ...]
    class_multiplier: str

    def text(self) -> str:
        body = " and ".join(str(value) for value, _ in self.parts)
        return f"{body} {self.class_multiplier}" if self.class_multiplier else body


_PLACE_NAMES = ("units", "tens", "hundreds")


def group_classes(n: int) -> str:
    """
    >>> group_classes(12457892)
    '12 457 892'
    """
    if n < 0:
        raise OutOfRange(f"{n} is negative")
    return f"{n:,}".replace(",", " ")


def read_classes(n: int) -> list[ClassReading]:
    """Nonzero classes of ``n``, lowest first, each with its nonzero digit parts."""
    if n < 1:
        raise OutOfRange(f"{n} is not a positive integer")
    readings = []
    exponent = 0
    while n:
        n, cls_value = divmod(n, 1000)
        if cls_value:
            parts = []
            for place in range(3):
                cls_value, d = divmod(cls_value, 10)
                if d:
                    parts.append((d * 10**place, _PLACE_NAMES[place]))
            readings.append(ClassReading(tuple(parts), multiplier_name(exponent)))
        exponent += 1
    return readings


def _places(reading: ClassReading) -> list[int]:
    return [_PLACE_NAMES.index(name) for _, name in reading.parts]


def verbalize_rl(n: int) -> str:
    """Read ``n`` from the right, units first.

    >>> verbalize_rl(12457892)
    '2 and 90 and 800 and 7 and 50 and 400 thousand and 2 and 10 million'

    Classes are joined with " and ".  The units class carries no multiplier,
    so when its highest place is below the lowest place of the next class
    the boundary would be lost; "; " separates them instead:

    >>> verbalize_rl(10001), verbalize_rl(11000)
    ('1; 10 thousand', '1 and 10 thousand')
    """
    readings = read_classes(n)
    out = readings[0].text()
    for prev, reading in zip(readings, readings[1:]):
        sep = " and "
        if not prev.class_multiplier and max(_places(prev)) < min(_places(reading)):
            sep = "; "
        out += sep + reading.text()
    return out
