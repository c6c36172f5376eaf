"""Folio-number and catchword auditing for manuscript catalogs.

A catalog lists sheets in physical order.  Each sheet carries a number label
in some digit system and, optionally, its catchword (the word written at the
foot of the page announcing the next page) and the first word of its first
line.  The audit expects the labels to run consecutively from the first
sheet's value and reports where they do not.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import asdict, dataclass, field
from typing import Iterable, Union

from .core import normalize
from .errors import EmptyInput, NotADigit, ParseError
from .glyphs import ConfusionPair, NumeralSystem, SystemDigit, confusion_pairs, digit_value, parse_digits
from .tables import Script


@dataclass(frozen=True)
class FolioRecord:
    index: int
    label: str
    system: NumeralSystem
    catchword: str | None = None
    first_word: str | None = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "system", NumeralSystem(self.system))
        value = parse_digits(self.label, self.system)
        if value < 1:
            raise NotADigit(f"folio label {self.label!r} is not a positive number")

    @property
    def value(self) -> int:
        return parse_digits(self.label, self.system)


@dataclass(frozen=True)
class Gap:
    index: int
    missing: tuple[int, ...]
    kind: str = field(default="gap", init=False)


@dataclass(frozen=True)
class Duplicate:
    index: int
    number: int
    indices: tuple[int, ...]
    kind: str = field(default="duplicate", init=False)


@dataclass(frozen=True)
class NonMonotone:
    index: int
    expected: int
    found: int
    kind: str = field(default="non_monotone", init=False)


@dataclass(frozen=True)
class SuspectMisread:
    index: int
    found_value: int
    suggested_value: int
    confusion_pair: ConfusionPair
    kind: str = field(default="suspect_misread", init=False)


@dataclass(frozen=True)
class CatchwordMismatch:
    index: int
    catchword: str
    next_first_word: str
    kind: str = field(default="catchword_mismatch", init=False)


Anomaly = Union[Gap, Duplicate, NonMonotone, SuspectMisread, CatchwordMismatch]

_KIND_ORDER = {"gap": 0, "duplicate": 1, "non_monotone": 2, "suspect_misread": 3, "catchword_mismatch": 4}


def _anomaly_dict(anomaly: Anomaly) -> dict:
    out = asdict(anomaly)
    if isinstance(anomaly, SuspectMisread):
        out["confusion_pair"] = anomaly.confusion_pair.to_dict()
    for key, value in out.items():
        if isinstance(value, tuple):
            out[key] = list(value)
    return out


@dataclass(frozen=True)
class AuditReport:
    anomalies: tuple[Anomaly, ...] = ()
    records: int = 0

    def __post_init__(self) -> None:
        ordered = sorted(self.anomalies, key=lambda a: (a.index, _KIND_ORDER[a.kind]))
        object.__setattr__(self, "anomalies", tuple(ordered))

    def __bool__(self) -> bool:
        return bool(self.anomalies)

    def __len__(self) -> int:
        return len(self.anomalies)

    def __iter__(self):
        return iter(self.anomalies)

    @property
    def clean(self) -> bool:
        return not self.anomalies

    @property
    def counts(self) -> dict[str, int]:
        return dict(Counter(a.kind for a in self.anomalies))

    def merge(self, other: Iterable[Anomaly]) -> AuditReport:
        return AuditReport(self.anomalies + tuple(other), self.records)

    def to_dict(self) -> dict:
        return {
            "records": self.records,
            "counts": self.counts,
            "anomalies": [_anomaly_dict(a) for a in self.anomalies],
        }


def parse_folios(lines: Iterable[str], system: NumeralSystem | str) -> list[FolioRecord]:
    """Parse ``label[TAB catchword[TAB first_word]]`` lines.

    Blank lines and lines starting with ``#`` are skipped; error line numbers
    count every input line from 1.
    """
    system = NumeralSystem(system)
    records: list[FolioRecord] = []
    for lineno, line in enumerate(lines, start=1):
        line = line.rstrip("\r\n")
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        fields = line.split("\t")
        if len(fields) > 3:
            raise ParseError(f"expected at most 3 TAB-separated fields, got {len(fields)}", line=lineno)
        label = fields[0].strip()
        catchword = fields[1].strip() or None if len(fields) > 1 else None
        first_word = fields[2].strip() or None if len(fields) > 2 else None
        try:
            records.append(FolioRecord(len(records), label, system, catchword, first_word))
        except NotADigit as exc:
            raise ParseError(f"bad folio label {label!r}: {exc}", line=lineno) from None
    return records


def _misread_candidates(label: str, system: NumeralSystem) -> list[tuple[int, ConfusionPair]]:
    """Values the label would have if one of its digits was a confused glyph."""
    out = []
    for pos, ch in enumerate(label):
        side = SystemDigit(system, digit_value(ch, system))
        for pair in confusion_pairs():
            other = pair.other(side)
            if other is None:
                continue
            digits = [digit_value(c, system) for c in label]
            digits[pos] = other.value
            out.append((int("".join(map(str, digits))), pair))
    return out


def _intervals(values: list[int]) -> list[tuple[int, ...]]:
    runs: list[list[int]] = []
    for v in values:
        if runs and runs[-1][-1] == v - 1:
            runs[-1].append(v)
        else:
            runs.append([v])
    return [tuple(r) for r in runs]


def audit_sequence(records: list[FolioRecord]) -> AuditReport:
    """Check that labels run start, start+1, ... in physical order.

    A forward jump whose skipped numbers never occur is a :class:`Gap` (one
    per maximal missing interval).  A jump over numbers that do occur later,
    or a step backwards, is :class:`NonMonotone`; those are also checked
    against the known glyph confusions for a :class:`SuspectMisread`.
    A number seen before is a :class:`Duplicate`.
    """
    if not records:
        raise EmptyInput("no folio records to audit")
    values = [r.value for r in records]
    present = set(values)
    occurrences: dict[int, list[int]] = {}
    for i, v in enumerate(values):
        occurrences.setdefault(v, []).append(i)

    anomalies: list[Anomaly] = []
    for number, idx in occurrences.items():
        if len(idx) > 1:
            anomalies.append(Duplicate(idx[1], number, tuple(idx)))

    high = values[0]
    for i in range(1, len(values)):
        v = values[i]
        if occurrences[v][0] != i or v == high + 1:
            if v > high:
                high = v
            continue
        expected = high + 1
        if v > expected:
            skipped = range(expected, v)
            missing = [s for s in skipped if s not in present]
            for run in _intervals(missing):
                anomalies.append(Gap(i, run))
            if len(missing) == len(skipped):
                high = v
                continue
        anomalies.append(NonMonotone(i, expected, v))
        rec = records[i]
        for suggested, pair in _misread_candidates(rec.label, rec.system):
            if suggested == expected:
                anomalies.append(SuspectMisread(i, v, suggested, pair))
        if v > high:
            high = v
    return AuditReport(tuple(anomalies), len(records))


def audit_catchwords(records: list[FolioRecord], script: Script | str = Script.ARABIC) -> list[CatchwordMismatch]:
    out = []
    for rec, nxt in zip(records, records[1:]):
        if rec.catchword is None or nxt.first_word is None:
            continue
        if normalize(rec.catchword, script) != normalize(nxt.first_word, script):
            out.append(CatchwordMismatch(rec.index, rec.catchword, nxt.first_word))
    return out


def audit(records: list[FolioRecord], script: Script | str = Script.ARABIC) -> AuditReport:
    """Sequence and catchword audit combined into one report."""
    return audit_sequence(records).merge(audit_catchwords(records, script))
