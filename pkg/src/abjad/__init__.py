"""Abjadi letter numerals for Arabic and Hebrew.

Integer <-> letter-word encoding, Guematria, digit transliteration between
Western, Eastern Arabic and Ghubari systems, right-to-left number reading and
manuscript folio auditing.
"""

from .core import (
    NumberExpression,
    decode_class_word,
    decode_number,
    decompose_class,
    encode_class_word,
    encode_number,
    guematria,
    normalize,
    parse_number,
    value_of,
)
from .errors import (
    AbjadError,
    DuplicateClass,
    EmptyInput,
    NonCanonical,
    NotADigit,
    OutOfRange,
    ParseError,
    UnknownLetter,
    UnrepresentableClass,
)
from .folio import (
    AuditReport,
    CatchwordMismatch,
    Duplicate,
    FolioRecord,
    Gap,
    NonMonotone,
    SuspectMisread,
    audit,
    audit_catchwords,
    audit_sequence,
    parse_folios,
)
from .formatting import ClassReading, group_classes, read_classes, verbalize_rl
from .glyphs import (
    ConfusionPair,
    LineageRecord,
    NumeralSystem,
    confusion_pairs,
    digit_value,
    shape_lineage,
    transliterate,
)
from .tables import AbjadLetter, AbjadTable, Script, load_table

__version__ = "0.1.0"

__all__ = [
    "AbjadError", "AbjadLetter", "AbjadTable", "AuditReport", "CatchwordMismatch", "ClassReading",
    "ConfusionPair", "Duplicate", "DuplicateClass", "EmptyInput", "FolioRecord", "Gap",
    "LineageRecord", "NonCanonical", "NonMonotone", "NotADigit", "NumberExpression",
    "NumeralSystem", "OutOfRange", "ParseError", "Script", "SuspectMisread", "UnknownLetter",
    "UnrepresentableClass", "audit", "audit_catchwords", "audit_sequence", "confusion_pairs",
    "decode_class_word", "decode_number", "decompose_class", "digit_value", "encode_class_word",
    "encode_number", "group_classes", "guematria", "load_table", "normalize", "parse_folios",
    "parse_number", "read_classes", "shape_lineage", "transliterate", "value_of", "verbalize_rl",
]
