"""Letter-numeral encoding, decoding and Guematria over the Abjadi tables.

Class words are written units-first in logical order: 1245 is the letter
sequence ه م ر غ (5, 40, 200, 1000).  Numbers above the single-word range are
split into three-digit classes joined by the conjunction letter, each
non-units class followed by the thousand-multiplier word once per power of
a thousand::

    >>> encode_number(23456789, "arabic")
    'طفذ و ونت ألف و جك ألف ألف'
"""

from __future__ import annotations

import operator
import unicodedata
from dataclasses import dataclass
from functools import lru_cache
from typing import Literal

from .errors import (
    DuplicateClass,
    NonCanonical,
    OutOfRange,
    ParseError,
    UnknownLetter,
    UnrepresentableClass,
)
from .tables import (
    CONJUNCTION,
    MULTIPLIER_WORD,
    SINGLE_WORD_MAX,
    TATWEEL,
    AbjadTable,
    Script,
    TaaMarbuta,
    load_table,
    surface_folds,
)

GuematriaMode = Literal["lenient", "strict"]


class _FoldTable(dict):
    """``str.translate`` table: folds variants, drops marks and tatweel.

    Entries are computed lazily so only codepoints actually seen are cached.
    """

    def __init__(self, folds) -> None:
        super().__init__()
        self._folds = folds

    def __missing__(self, cp: int):
        char = chr(cp)
        if char in self._folds:
            out = self._folds[char]
        elif char == TATWEEL or unicodedata.category(char) == "Mn":
            out = None
        else:
            out = cp
        self[cp] = out
        return out


@lru_cache(maxsize=None)
def _fold_table(script: Script, taa_marbuta: TaaMarbuta) -> _FoldTable:
    return _FoldTable(surface_folds(script, taa_marbuta))


_MULT_NORMALIZED = {
    script: word.translate(_fold_table(script, "ha")) for script, word in MULTIPLIER_WORD.items()
}


def normalize(text: str, script: Script | str, *, taa_marbuta: TaaMarbuta = "ha") -> str:
    """Strip combining marks and tatweel, fold letter variants to base letters.

    Hebrew final forms are kept as written; they carry their base letter's
    value on lookup.  Characters foreign to the script pass through.
    """
    return text.translate(_fold_table(Script(script), taa_marbuta))


def value_of(letter: str, script: Script | str, *, taa_marbuta: TaaMarbuta = "ha") -> int:
    table = load_table(script, taa_marbuta)
    folded = normalize(letter, table.script, taa_marbuta=taa_marbuta)
    if len(folded) != 1:
        raise UnknownLetter(letter, table.script)
    return table.lookup(folded).value


def _check_int(v) -> int:
    if isinstance(v, bool):
        raise TypeError("expected an integer, got bool")
    return operator.index(v)


def decompose_class(v: int, script: Script | str) -> list[int]:
    """Split ``v`` into its nonzero place values, units first.

    >>> decompose_class(1245, "arabic")
    [5, 40, 200, 1000]
    """
    script = Script(script)
    v = _check_int(v)
    top = SINGLE_WORD_MAX[script]
    if not 1 <= v <= top:
        raise OutOfRange(f"{v} is outside the {script} single-word range 1..{top}")
    parts = []
    place = 1
    while v:
        v, digit = divmod(v, 10)
        if digit:
            parts.append(digit * place)
        place *= 10
    return parts


@lru_cache(maxsize=4096)
def _class_word(v: int, script: Script) -> str:
    by_value = load_table(script).by_value
    return "".join(by_value[part].codepoint for part in decompose_class(v, script))


def encode_class_word(v: int, script: Script | str) -> str:
    return _class_word(_check_int(v), Script(script))


def _place(value: int) -> int:
    place = 0
    while value >= 10:
        value //= 10
        place += 1
    return place


@lru_cache(maxsize=8192)
def _decode_word(word: str, script: Script, strict: bool) -> int:
    table = load_table(script)
    if not word:
        raise ParseError("empty class word")
    values = [table.lookup(ch).value for ch in word]
    if strict:
        places = [_place(v) for v in values]
        if any(b <= a for a, b in zip(places, places[1:])):
            raise NonCanonical(
                f"{word!r} is not canonical: letters must ascend one per decimal place "
                f"(values {values})"
            )
    return sum(values)


def decode_class_word(word: str, script: Script | str, strict: bool = False) -> int:
    """Sum the letter values of one class word.

    With ``strict`` the word must be canonical: one letter per decimal place,
    ascending in logical order.
    """
    script = Script(script)
    return _decode_word(normalize(word, script), script, bool(strict))


@dataclass(frozen=True)
class NumberExpression:
    """A number as three-digit classes, units first.

    ``groups`` holds ``(class_value, exponent)`` pairs where the exponent
    counts powers of a thousand.  A lone group may use the full single-word
    range of the script.
    """

    groups: tuple[tuple[int, int], ...]
    script: Script

    def __post_init__(self) -> None:
        object.__setattr__(self, "script", Script(self.script))
        object.__setattr__(self, "groups", tuple((int(v), int(e)) for v, e in self.groups))
        if not self.groups:
            raise ValueError("a number expression needs at least one class")
        exps = [e for _, e in self.groups]
        if any(e < 0 for e in exps) or any(b <= a for a, b in zip(exps, exps[1:])):
            raise ValueError(f"exponents must be non-negative and strictly increasing: {exps}")
        limit = SINGLE_WORD_MAX[self.script] if len(self.groups) == 1 else 999
        for value, _ in self.groups:
            if not 1 <= value <= limit:
                raise OutOfRange(f"class value {value} outside 1..{limit}")

    @property
    def value(self) -> int:
        return sum(v * 1000**e for v, e in self.groups)

    @classmethod
    def from_int(cls, n: int, script: Script | str) -> NumberExpression:
        script = Script(script)
        n = _check_int(n)
        if n < 1:
            raise OutOfRange(f"{n} is not a positive integer")
        if n <= SINGLE_WORD_MAX[script]:
            return cls(((n, 0),), script)
        groups = []
        exp = 0
        rest = n
        while rest:
            rest, cls_value = divmod(rest, 1000)
            if cls_value:
                if cls_value > SINGLE_WORD_MAX[script]:
                    raise UnrepresentableClass(
                        f"class {cls_value} of {n} cannot be written with {script} letters "
                        f"(max {SINGLE_WORD_MAX[script]})"
                    )
                groups.append((cls_value, exp))
            exp += 1
        return cls(tuple(groups), script)

    def to_text(self) -> str:
        mult = MULTIPLIER_WORD[self.script]
        words = []
        for value, exp in self.groups:
            words.append(" ".join([_class_word(value, self.script)] + [mult] * exp))
        return f" {CONJUNCTION[self.script]} ".join(words)


def encode_number(n: int, script: Script | str) -> str:
    script = Script(script)
    n = _check_int(n)
    top = SINGLE_WORD_MAX[script]
    if 1 <= n <= top:
        return _class_word(n, script)
    if n < 1:
        raise OutOfRange(f"{n} is not a positive integer")
    mult = MULTIPLIER_WORD[script]
    words = []
    exp = 0
    while n:
        n, cls_value = divmod(n, 1000)
        if cls_value:
            if cls_value > top:
                raise UnrepresentableClass(
                    f"class {cls_value} cannot be written with {script} letters (max {top})"
                )
            word = _class_word(cls_value, script)
            words.append(f"{word} {' '.join([mult] * exp)}" if exp else word)
        exp += 1
    return f" {CONJUNCTION[script]} ".join(words)


def _parse_groups(text: str, script: Script, strict: bool) -> dict[int, int]:
    tokens = normalize(text, script).replace("(", " ( ").replace(")", " ) ").split()
    if not tokens:
        raise ParseError("empty number expression")
    mult = _MULT_NORMALIZED[script]
    conj = CONJUNCTION[script]

    groups: dict[int, int] = {}
    pos = 0
    n_tokens = len(tokens)
    while True:
        if pos >= n_tokens or tokens[pos] in ("(", ")"):
            raise ParseError(f"expected a class word at token {pos + 1}")
        word = tokens[pos]
        pos += 1
        exp = 0
        while pos < n_tokens:
            tok = tokens[pos]
            if tok == mult:
                exp += 1
                pos += 1
            elif tok == "(":
                pos += 1
                inner = 0
                while pos < n_tokens and tokens[pos] == mult:
                    inner += 1
                    pos += 1
                if not inner or pos >= n_tokens or tokens[pos] != ")":
                    raise ParseError("parentheses may only enclose multiplier words")
                exp += inner
                pos += 1
            else:
                break
        if exp in groups:
            raise DuplicateClass(f"two classes with exponent {exp}")
        groups[exp] = _decode_word(word, script, strict)
        if pos == n_tokens:
            break
        if tokens[pos] != conj:
            raise ParseError(f"expected conjunction {conj!r} at token {pos + 1}, got {tokens[pos]!r}")
        pos += 1

    if len(groups) > 1:
        for exp, value in groups.items():
            if value > 999:
                raise ParseError(f"class value {value} (exponent {exp}) exceeds 999 in a grouped number")
    return groups


def parse_number(text: str, script: Script | str, strict: bool = False) -> NumberExpression:
    """Parse a class expression into a :class:`NumberExpression`.

    Multiplier words may be bare or wrapped in parentheses.  Classes may come
    in any order; a repeated exponent is an error.
    """
    script = Script(script)
    groups = _parse_groups(text, script, bool(strict))
    try:
        return NumberExpression(tuple((groups[e], e) for e in sorted(groups)), script)
    except OutOfRange as exc:
        raise ParseError(str(exc)) from None


def decode_number(text: str, script: Script | str, strict: bool = False) -> int:
    script = Script(script)
    groups = _parse_groups(text, script, bool(strict))
    return sum(v * 1000**e for e, v in groups.items())


def guematria(
    text: str,
    script: Script | str,
    mode: GuematriaMode = "lenient",
    *,
    taa_marbuta: TaaMarbuta = "ha",
) -> int:
    """Sum the Abjadi values of the letters in ``text``.

    Lenient mode skips anything that is not a letter of the script.  Strict
    mode only tolerates whitespace between words.
    """
    if mode not in ("lenient", "strict"):
        raise ValueError(f"mode must be 'lenient' or 'strict', got {mode!r}")
    table: AbjadTable = load_table(script, taa_marbuta)
    by_cp = table.by_codepoint
    total = 0
    for ch in normalize(text, table.script, taa_marbuta=taa_marbuta):
        letter = by_cp.get(ch)
        if letter is not None:
            total += letter.value
        elif mode == "strict" and not ch.isspace():
            raise UnknownLetter(ch, table.script)
    return total
