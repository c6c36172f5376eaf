"""Embedded Abjadi value tables for the Arabic and Hebrew scripts.

Letters are stored in Abjadi order (ascending value).  Each table also knows
which codepoints fold onto each base letter: Hebrew final forms, Arabic
hamza-bearing alifs, alif maqsura, taa marbuta, and precomposed or
presentation forms whose decomposition is a base letter plus combining marks.
"""

from __future__ import annotations

import enum
import unicodedata
from dataclasses import dataclass, field
from functools import lru_cache
from types import MappingProxyType
from typing import Literal, Mapping

from .errors import UnknownLetter

TaaMarbuta = Literal["ha", "ta"]


class Script(str, enum.Enum):
    ARABIC = "arabic"
    HEBREW = "hebrew"

    def __str__(self) -> str:
        return self.value


# (letter, sound, value) in Abjadi order
_ARABIC_ROWS = (
    ("ا", "Alif", 1),
    ("ب", "Baa", 2),
    ("ج", "Jim", 3),
    ("د", "Del", 4),
    ("ه", "Haa", 5),
    ("و", "Waw", 6),
    ("ز", "Zin", 7),
    ("ح", "H'aa", 8),
    ("ط", "T'aa", 9),
    ("ي", "Yaa", 10),
    ("ك", "Kef", 20),
    ("ل", "Lem", 30),
    ("م", "Mim", 40),
    ("ن", "Noun", 50),
    ("س", "Sin", 60),
    ("ع", "A'in", 70),
    ("ف", "Faa", 80),
    ("ص", "Sad", 90),
    ("ق", "K'af", 100),
    ("ر", "Raa", 200),
    ("ش", "Shin", 300),
    ("ت", "Taa", 400),
    ("ث", "Thaa", 500),
    ("خ", "Kh'aa", 600),
    ("ذ", "Dhel", 700),
    ("ض", "Dzad", 800),
    ("ظ", "Dzaa", 900),
    ("غ", "Ghin", 1000),
)

_HEBREW_ROWS = (
    ("א", "Aleph", 1),
    ("ב", "Beth", 2),
    ("ג", "Gimel", 3),
    ("ד", "Daleth", 4),
    ("ה", "He", 5),
    ("ו", "Vav", 6),
    ("ז", "Zayin", 7),
    ("ח", "Cheth", 8),
    ("ט", "Teth", 9),
    ("י", "Yodh", 10),
    ("כ", "Kaph", 20),
    ("ל", "Lamedh", 30),
    ("מ", "Mem", 40),
    ("נ", "Nun", 50),
    ("ס", "Samek", 60),
    ("ע", "Ayin", 70),
    ("פ", "Fe", 80),
    ("צ", "Tsahde", 90),
    ("ק", "Q'oph", 100),
    ("ר", "Regh", 200),
    ("ש", "Sin Shin", 300),
    ("ת", "Tav", 400),
)

ALIF = "ا"
YAA = "ي"
HAA = "ه"
TAA = "ت"
TAA_MARBUTA = "ة"
ALIF_MAQSURA = "ى"
ALIF_WASLA = "ٱ"
TATWEEL = "ـ"

# explicit folds that Unicode decomposition does not provide
_ARABIC_EXTRA = {ALIF_WASLA: ALIF, ALIF_MAQSURA: YAA}
_HEBREW_FINALS = {
    "ך": "כ",  # final kaph
    "ם": "מ",  # final mem
    "ן": "נ",  # final nun
    "ף": "פ",  # final fe
    "ץ": "צ",  # final tsahde
}

# blocks scanned for precomposed / presentation variants of base letters
_SCAN_RANGES = {
    Script.ARABIC: ((0x0600, 0x0700), (0x0750, 0x0780), (0xFB50, 0xFE00), (0xFE70, 0xFF00)),
    Script.HEBREW: ((0x0590, 0x0600), (0xFB1D, 0xFB50)),
}

SINGLE_WORD_MAX = {Script.ARABIC: 1999, Script.HEBREW: 499}
MULTIPLIER_WORD = {Script.ARABIC: "ألف", Script.HEBREW: "אלף"}
CONJUNCTION = {Script.ARABIC: "و", Script.HEBREW: "ו"}


@dataclass(frozen=True)
class AbjadLetter:
    codepoint: str
    sound: str
    value: int
    order: int
    script: Script
    variant_codepoints: frozenset[str] = field(default_factory=frozenset)

    def __str__(self) -> str:
        return self.codepoint


@dataclass(frozen=True, eq=False)
class AbjadTable:
    script: Script
    letters: tuple[AbjadLetter, ...]
    by_value: Mapping[int, AbjadLetter]
    by_codepoint: Mapping[str, AbjadLetter]

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __contains__(self, char: object) -> bool:
        return char in self.by_codepoint

    @property
    def values(self) -> tuple[int, ...]:
        return tuple(letter.value for letter in self.letters)

    def lookup(self, char: str) -> AbjadLetter:
        try:
            return self.by_codepoint[char]
        except KeyError:
            raise UnknownLetter(char, self.script) from None

    def fold_map(self) -> dict[str, str]:
        """Map every variant codepoint to its base letter."""
        return {v: letter.codepoint for letter in self.letters for v in letter.variant_codepoints}


def _decomposes_to(char: str, targets: set[str]) -> str | None:
    decomposed = unicodedata.normalize("NFKD", char)
    if decomposed == char:
        return None
    head, rest = decomposed[0], decomposed[1:]
    if head in targets and all(unicodedata.category(c) == "Mn" for c in rest):
        return head
    return None


@lru_cache(maxsize=None)
def surface_folds(script: Script, taa_marbuta: TaaMarbuta = "ha") -> Mapping[str, str]:
    """Variant codepoint -> the letter it is written as, after dropping marks.

    Hebrew final forms are surface letters in their own right and are not
    folded here; they only fold to their base letter on value lookup.
    """
    script = Script(script)
    rows = _ARABIC_ROWS if script is Script.ARABIC else _HEBREW_ROWS
    targets = {row[0] for row in rows}
    if script is Script.HEBREW:
        targets |= set(_HEBREW_FINALS)
    folds: dict[str, str] = {}
    for lo, hi in _SCAN_RANGES[script]:
        for cp in range(lo, hi):
            char = chr(cp)
            if char in targets:
                continue
            surface = _decomposes_to(char, targets)
            if surface is not None:
                folds[char] = surface
    if script is Script.ARABIC:
        folds.update(_ARABIC_EXTRA)
        folds[TAA_MARBUTA] = HAA if taa_marbuta == "ha" else TAA
        # isolated and final presentation forms of taa marbuta
        for cp in (0xFE93, 0xFE94):
            folds[chr(cp)] = folds[TAA_MARBUTA]
    return MappingProxyType(folds)


def _variants(script: Script, taa_marbuta: TaaMarbuta) -> dict[str, str]:
    folds = {v: _HEBREW_FINALS.get(s, s) for v, s in surface_folds(script, taa_marbuta).items()}
    if script is Script.HEBREW:
        folds.update(_HEBREW_FINALS)
    return folds


@lru_cache(maxsize=None)
def load_table(script: Script | str, taa_marbuta: TaaMarbuta = "ha") -> AbjadTable:
    """Return the embedded table for ``script``.

    ``taa_marbuta`` only matters for Arabic: ``"ha"`` folds ة onto ه (5),
    ``"ta"`` onto ت (400).
    """
    script = Script(script)
    if taa_marbuta not in ("ha", "ta"):
        raise ValueError(f"taa_marbuta must be 'ha' or 'ta', got {taa_marbuta!r}")
    rows = _ARABIC_ROWS if script is Script.ARABIC else _HEBREW_ROWS
    folds = _variants(script, taa_marbuta)
    grouped: dict[str, set[str]] = {}
    for variant, base in folds.items():
        grouped.setdefault(base, set()).add(variant)

    letters = tuple(
        AbjadLetter(char, sound, value, order, script, frozenset(grouped.get(char, ())))
        for order, (char, sound, value) in enumerate(rows, start=1)
    )
    by_value = {letter.value: letter for letter in letters}
    by_codepoint = {letter.codepoint: letter for letter in letters}
    for letter in letters:
        for variant in letter.variant_codepoints:
            by_codepoint[variant] = letter
    return AbjadTable(script, letters, MappingProxyType(by_value), MappingProxyType(by_codepoint))
