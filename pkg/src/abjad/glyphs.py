"""Digit systems, value-preserving transliteration and glyph lineage.

Three digit systems are supported.  Modern Western and Eastern Arabic
("Mashriki") digits have their own Unicode blocks.  Ghubari digits have no
codepoints, so Ghubari text is carried with Western digit characters and a
system tag; what distinguishes a Ghubari numeral is recorded only in the
lineage metadata returned by :func:`shape_lineage`.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import NamedTuple

from .errors import NotADigit
from .tables import Script


class NumeralSystem(str, enum.Enum):
    MODERN_WESTERN = "western"
    EASTERN_ARABIC = "eastern"
    GHUBARI = "ghubari"

    def __str__(self) -> str:
        return self.value


WESTERN_DIGITS = "0123456789"
EASTERN_DIGITS = "".join(chr(0x0660 + i) for i in range(10))

DIGITS = {
    NumeralSystem.MODERN_WESTERN: WESTERN_DIGITS,
    NumeralSystem.EASTERN_ARABIC: EASTERN_DIGITS,
    NumeralSystem.GHUBARI: WESTERN_DIGITS,
}

_TRANSLATIONS = {
    (a, b): str.maketrans(DIGITS[a], DIGITS[b]) if DIGITS[a] != DIGITS[b] else None
    for a in NumeralSystem
    for b in NumeralSystem
}
_VALUES = {system: {ch: i for i, ch in enumerate(digits)} for system, digits in DIGITS.items()}


def digit_value(ch: str, system: NumeralSystem | str) -> int:
    system = NumeralSystem(system)
    try:
        return _VALUES[system][ch]
    except (KeyError, TypeError):
        raise NotADigit(f"{ch!r} is not a {system} digit") from None


def digit(value: int, system: NumeralSystem | str) -> str:
    """The character that writes ``value`` (0..9) in ``system``."""
    if not 0 <= value <= 9:
        raise ValueError(f"digit value must be 0..9, got {value}")
    return DIGITS[NumeralSystem(system)][value]


def parse_digits(label: str, system: NumeralSystem | str) -> int:
    """Read a whole digit string written in ``system``."""
    system = NumeralSystem(system)
    if not label:
        raise NotADigit("empty digit string")
    n = 0
    for ch in label:
        n = n * 10 + digit_value(ch, system)
    return n


def format_digits(n: int, system: NumeralSystem | str) -> str:
    if n < 0:
        raise ValueError("negative numbers have no digit form here")
    return transliterate(str(n), NumeralSystem.MODERN_WESTERN, system)


def transliterate(text: str, source: NumeralSystem | str, target: NumeralSystem | str) -> str:
    """Replace every digit of ``source`` with the same-valued digit of ``target``.

    Everything else, including digits of other systems, is left alone.

    >>> transliterate("١٢٢٥", "eastern", "western")
    '1225'
    """
    table = _TRANSLATIONS[NumeralSystem(source), NumeralSystem(target)]
    return text.translate(table) if table else text


class GhubariTransformation(str, enum.Enum):
    NONE = "none"
    UP_SIDE_DOWN = "up_side_down"
    DOT_MODIFICATION = "dot_modification"
    TAIL_BOUND = "tail_bound"
    FINAL_SHAPE = "final_shape"
    SAD_INITIAL = "sad_initial"


class MashrikiTransformation(str, enum.Enum):
    NONE = "none"
    LEG_FOR_DOT = "leg_for_dot"
    ROTATION_RIGHT_QUARTER = "rotation_right_quarter"
    ROTATION_LEFT_QUARTER = "rotation_left_quarter"
    UP_SIDE_DOWN = "up_side_down"
    HEBREW_BORROWING = "hebrew_borrowing"


class SourceLetter(NamedTuple):
    char: str
    script: Script
    sound: str
    value: int


@dataclass(frozen=True)
class LineageRecord:
    value: int
    ghubari_source: SourceLetter
    ghubari_transformation: GhubariTransformation
    mashriki_source: SourceLetter
    mashriki_transformation: MashrikiTransformation
    modern_shape_twin: int
    note: str = ""

    @property
    def source_letter(self) -> str:
        return self.ghubari_source.char

    @property
    def source_script(self) -> Script:
        return self.ghubari_source.script

    @property
    def source_value(self) -> int:
        return self.ghubari_source.value

    def to_dict(self) -> dict:
        return {
            "value": self.value,
            "ghubari_source": self.ghubari_source._asdict(),
            "ghubari_transformation": self.ghubari_transformation.value,
            "mashriki_source": self.mashriki_source._asdict(),
            "mashriki_transformation": self.mashriki_transformation.value,
            "modern_shape_twin": self.modern_shape_twin,
            "note": self.note,
        }


def _ar(char: str, sound: str, value: int) -> SourceLetter:
    return SourceLetter(char, Script.ARABIC, sound, value)


def _he(char: str, sound: str, value: int) -> SourceLetter:
    return SourceLetter(char, Script.HEBREW, sound, value)


_G = GhubariTransformation
_M = MashrikiTransformation

_LINEAGE = {
    r.value: r
    for r in (
        LineageRecord(
            0, _ar("ص", "Sad", 90), _G.SAD_INITIAL, _he("י", "Yodh", 10), _M.HEBREW_BORROWING, 0,
            "Ghubari 0 from the initial shape of Sad, first letter of sifr; Mashriki 0 "
            "borrows Yodh since Arabic Yaa would clash with Ghubari 2",
        ),
        LineageRecord(1, _ar("ا", "Alif", 1), _G.NONE, _ar("ا", "Alif", 1), _M.NONE, 1),
        LineageRecord(
            2, _ar("ي", "Yaa", 10), _G.NONE, _ar("ب", "Baa", 2), _M.LEG_FOR_DOT, 2,
            "Ghubari 2 is the Maghribi final Yaa with its two dots, not Baa",
        ),
        LineageRecord(
            3, _ar("ج", "Jim", 3), _G.FINAL_SHAPE, _ar("ج", "Jim", 3), _M.ROTATION_RIGHT_QUARTER, 3,
            "Mashriki 3 also replaces the dot by a leg",
        ),
        LineageRecord(
            4, _ar("د", "Del", 4), _G.NONE, _ar("د", "Del", 4), _M.NONE, 5,
            "Ghubari 4 has the shape of modern 5",
        ),
        LineageRecord(
            5, _ar("ه", "Haa", 5), _G.FINAL_SHAPE, _ar("ه", "Haa", 5), _M.NONE, 4,
            "Ghubari 5 has the shape of modern 4; Mashriki 5 is the isolated Haa",
        ),
        LineageRecord(
            6, _ar("و", "Waw", 6), _G.UP_SIDE_DOWN, _he("ו", "Vav", 6), _M.HEBREW_BORROWING, 6,
            "Mashriki 6 borrows Vav since Arabic Waw would clash with Ghubari 9",
        ),
        LineageRecord(7, _ar("ز", "Zin", 7), _G.DOT_MODIFICATION, _ar("ز", "Zin", 7), _M.LEG_FOR_DOT, 7),
        LineageRecord(
            8, _ar("ح", "H'aa", 8), _G.TAIL_BOUND, _ar("ح", "H'aa", 8), _M.ROTATION_LEFT_QUARTER, 8,
            "Mashriki 8 also resembles Hebrew Cheth (ח, 8)",
        ),
        LineageRecord(
            9, _ar("ط", "T'aa", 9), _G.UP_SIDE_DOWN, _ar("ط", "T'aa", 9), _M.UP_SIDE_DOWN, 9,
            "same symbol in Ghubari and Mashriki",
        ),
    )
}


def shape_lineage(value: int) -> LineageRecord:
    try:
        return _LINEAGE[value]
    except (KeyError, TypeError):
        raise ValueError(f"digit value must be 0..9, got {value!r}") from None


class SystemDigit(NamedTuple):
    system: NumeralSystem
    value: int

    def __str__(self) -> str:
        return f"{self.system.value}:{self.value}"


@dataclass(frozen=True)
class ConfusionPair:
    a: SystemDigit
    b: SystemDigit
    note: str

    def other(self, side: SystemDigit) -> SystemDigit | None:
        if side == self.a:
            return self.b
        if side == self.b:
            return self.a
        return None

    def to_dict(self) -> dict:
        return {
            "a": {"system": self.a.system.value, "value": self.a.value},
            "b": {"system": self.b.system.value, "value": self.b.value},
            "note": self.note,
        }


_CONFUSIONS = (
    ConfusionPair(
        SystemDigit(NumeralSystem.GHUBARI, 5),
        SystemDigit(NumeralSystem.EASTERN_ARABIC, 6),
        "hegira year 1225 transcribed in Eastern Arabic digits with the 5 read as 6",
    ),
    ConfusionPair(
        SystemDigit(NumeralSystem.GHUBARI, 5),
        SystemDigit(NumeralSystem.MODERN_WESTERN, 4),
        "hegira year 1225 transcribed in modern digits with the 5 read as 4",
    ),
)


def confusion_pairs() -> list[ConfusionPair]:
    return list(_CONFUSIONS)
