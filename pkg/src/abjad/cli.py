"""Command-line interface.

Exit codes: 0 success, 1 audit found anomalies, 2 usage or data error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Sequence

from . import __version__
from .core import encode_number, guematria, parse_number
from .errors import AbjadError
from .folio import audit, parse_folios
from .formatting import group_classes, read_classes, verbalize_rl
from .glyphs import NumeralSystem, shape_lineage, transliterate
from .tables import Script

SCHEMA_VERSION = "1"

EXIT_OK = 0
EXIT_ANOMALIES = 1
EXIT_ERROR = 2


class CLIError(Exception):
    def __init__(self, message: str, exit_code: int = EXIT_ERROR) -> None:
        super().__init__(message)
        self.exit_code = exit_code


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(EXIT_ERROR, f"{self.prog}: error: {message}\n")


def _global_flags(parser: argparse.ArgumentParser, suppress: bool) -> None:
    default = argparse.SUPPRESS
    parser.add_argument(
        "--output",
        choices=("plain", "structured"),
        default=default if suppress else "plain",
        help="plain text or one JSON document (default: plain)",
    )
    parser.add_argument(
        "--strict",
        action="store_true",
        default=default if suppress else False,
        help="reject non-letters (gematria) or non-canonical class words (decode)",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="abjad", description="Abjadi numerals, Guematria and folio audits.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    _global_flags(parser, suppress=False)
    common = argparse.ArgumentParser(add_help=False)
    _global_flags(common, suppress=True)
    scripts = [s.value for s in Script]
    systems = [s.value for s in NumeralSystem]

    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("encode", parents=[common], help="integer to letter numeral")
    p.add_argument("number", nargs="?")
    p.add_argument("--script", choices=scripts, default="arabic")

    p = sub.add_parser("decode", parents=[common], help="letter numeral to integer")
    p.add_argument("text", nargs="?")
    p.add_argument("--script", choices=scripts, default="arabic")

    p = sub.add_parser("gematria", parents=[common], help="sum of letter values of a text")
    p.add_argument("text", nargs="?")
    p.add_argument("--script", choices=scripts, default="arabic")
    p.add_argument("--taa-marbuta", choices=("ha", "ta"), default="ha",
                   help="value taa marbuta as Haa (5) or Taa (400)")

    p = sub.add_parser("translit", parents=[common], help="convert digits between systems")
    p.add_argument("text", nargs="?")
    p.add_argument("--from", dest="source", choices=systems, required=True)
    p.add_argument("--to", dest="target", choices=systems, required=True)

    p = sub.add_parser("verbalize", parents=[common], help="units-first reading of a number")
    p.add_argument("number", nargs="?")

    p = sub.add_parser("group", parents=[common], help="split a number into 3-digit classes")
    p.add_argument("number", nargs="?")

    p = sub.add_parser("lineage", parents=[common], help="glyph lineage of a digit value")
    p.add_argument("value", nargs="?")

    p = sub.add_parser("audit", parents=[common], help="audit a folio catalog")
    p.add_argument("file", nargs="?", help="catalog file; '-' or omitted reads standard input")
    p.add_argument("--system", choices=systems, default="western")
    p.add_argument("--script", choices=scripts, default="arabic",
                   help="script used to normalize catchwords")
    return parser


def _stdin_text() -> str:
    try:
        return sys.stdin.buffer.read().decode("utf-8")
    except UnicodeDecodeError as exc:
        raise CLIError(f"standard input is not UTF-8: {exc}") from None


def _arg_or_stdin(value: str | None) -> str:
    if value is not None:
        return value
    text = _stdin_text()
    return text[:-1] if text.endswith("\n") else text


def _int_arg(value: str | None, name: str) -> int:
    raw = _arg_or_stdin(value).strip()
    try:
        return int(raw)
    except ValueError:
        raise CLIError(f"{name} must be an integer, got {raw!r}") from None


def _run(args: argparse.Namespace) -> tuple[str, dict, int]:
    """Return (plain text, structured result, exit code)."""
    cmd = args.command
    if cmd == "encode":
        n = _int_arg(args.number, "number")
        text = encode_number(n, args.script)
        return text, {"number": n, "script": args.script, "text": text}, EXIT_OK

    if cmd == "decode":
        raw = _arg_or_stdin(args.text).strip()
        expr = parse_number(raw, args.script, strict=args.strict)
        value = expr.value
        groups = [{"class_value": v, "exponent": e} for v, e in expr.groups]
        return str(value), {"text": raw, "script": args.script, "value": value, "groups": groups}, EXIT_OK

    if cmd == "gematria":
        raw = _arg_or_stdin(args.text)
        mode = "strict" if args.strict else "lenient"
        value = guematria(raw, args.script, mode, taa_marbuta=args.taa_marbuta)
        return str(value), {"text": raw, "script": args.script, "mode": mode, "value": value}, EXIT_OK

    if cmd == "translit":
        raw = args.text if args.text is not None else _stdin_text()
        out = transliterate(raw, args.source, args.target)
        result = {"text": raw, "from": args.source, "to": args.target, "result": out}
        return out, result, EXIT_OK

    if cmd == "verbalize":
        n = _int_arg(args.number, "number")
        text = verbalize_rl(n)
        classes = [
            {"parts": [v for v, _ in r.parts], "multiplier": r.class_multiplier} for r in read_classes(n)
        ]
        return text, {"number": n, "reading": text, "classes": classes}, EXIT_OK

    if cmd == "group":
        n = _int_arg(args.number, "number")
        text = group_classes(n)
        return text, {"number": n, "grouped": text}, EXIT_OK

    if cmd == "lineage":
        v = _int_arg(args.value, "value")
        if not 0 <= v <= 9:
            raise CLIError(f"value must be a digit 0..9, got {v}")
        rec = shape_lineage(v)
        plain = (
            f"{rec.value}: ghubari from {rec.ghubari_source.char} ({rec.ghubari_source.sound}, "
            f"{rec.ghubari_source.value}) {rec.ghubari_transformation.value}; "
            f"mashriki from {rec.mashriki_source.char} ({rec.mashriki_source.sound}, "
            f"{rec.mashriki_source.value}, {rec.mashriki_source.script.value}) "
            f"{rec.mashriki_transformation.value}; modern shape twin {rec.modern_shape_twin}"
        )
        return plain, rec.to_dict(), EXIT_OK

    if cmd == "audit":
        if args.file in (None, "-"):
            lines = _stdin_text().splitlines()
        else:
            try:
                lines = Path(args.file).read_text(encoding="utf-8").splitlines()
            except (OSError, UnicodeDecodeError) as exc:
                raise CLIError(f"cannot read {args.file}: {exc}") from None
        report = audit(parse_folios(lines, args.system), args.script)
        plain_lines = [f"{report.records} records, {len(report)} anomalies"]
        for a in report:
            plain_lines.append(_describe(a))
        code = EXIT_ANOMALIES if report else EXIT_OK
        return "\n".join(plain_lines), report.to_dict(), code

    raise CLIError(f"unknown command {cmd!r}")


def _describe(a) -> str:
    if a.kind == "gap":
        return f"[{a.index}] gap: missing {', '.join(map(str, a.missing))}"
    if a.kind == "duplicate":
        return f"[{a.index}] duplicate: {a.number} at indices {', '.join(map(str, a.indices))}"
    if a.kind == "non_monotone":
        return f"[{a.index}] non-monotone: expected {a.expected}, found {a.found}"
    if a.kind == "suspect_misread":
        p = a.confusion_pair
        return (f"[{a.index}] suspect misread: {a.found_value} may be {a.suggested_value} "
                f"({p.a} <-> {p.b})")
    return f"[{a.index}] catchword mismatch: {a.catchword!r} vs next page {a.next_first_word!r}"


def _emit(text: str) -> None:
    sys.stdout.write(text)
    sys.stdout.flush()


def main(argv: Sequence[str] | None = None) -> int:
    for stream in (sys.stdout, sys.stderr):
        if hasattr(stream, "reconfigure"):
            stream.reconfigure(encoding="utf-8")
    parser = build_parser()
    args = parser.parse_args(argv)
    structured = args.output == "structured"
    doc: dict = {"schema": SCHEMA_VERSION, "command": args.command}
    try:
        plain, result, code = _run(args)
    except (AbjadError, CLIError) as exc:
        code = exc.exit_code if isinstance(exc, CLIError) else EXIT_ERROR
        print(f"abjad {args.command}: error: {exc}", file=sys.stderr)
        if structured:
            doc["error"] = {"type": type(exc).__name__, "message": str(exc)}
            doc["exit_code"] = code
            _emit(json.dumps(doc, ensure_ascii=False) + "\n")
        return code

    if structured:
        doc["result"] = result
        doc["exit_code"] = code
        _emit(json.dumps(doc, ensure_ascii=False) + "\n")
    elif args.command == "translit" and args.text is None:
        _emit(plain)
    else:
        _emit(plain + "\n")
    return code


if __name__ == "__main__":
    sys.exit(main())
