"""Command line front end.

    latin2ajami --table wolof.glyph --profile wolof.profile file.txt

Exit status: 0 ok, 1 bad arguments, 2 file or format error, 3 internal error.
"""
from __future__ import annotations

import argparse
import os
import sys
import tempfile
import unicodedata
from dataclasses import dataclass, field
from pathlib import Path

from .engine import TranslitStats, Transliterator, format_trace
from .glyph_table import GlyphTableError, load_glyph_table, validate_against_profile
from .preprocess import DigitStyle, FinalDot, TranslitOptions
from .profile import ProfileError, load_profile

STDIN = "-"
STDOUT = "-"
DATA_ENV = "LATIN2AJAMI_DATA"
PACKAGE_DATA = Path(__file__).with_name("data")

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DATA = 2
EXIT_BUG = 3


class DataError(Exception):
    """Unreadable or malformed table, profile or input file."""


@dataclass
class CliConfig:
    table_path: str
    profile_path: str
    inputs: list[str] = field(default_factory=lambda: [STDIN])
    output: str = STDOUT
    options: TranslitOptions = field(default_factory=TranslitOptions)
    emit_trace: bool = False
    emit_stats: bool = False
    nfc: bool = False


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="latin2ajami", description="Transliterate Latin-script Wolof/Serer text into Ajami.")
    p.add_argument("inputs", nargs="*", default=[STDIN], metavar="INPUT", help="input files, '-' for stdin (default)")
    p.add_argument("--table", required=True, help="glyph table file")
    p.add_argument("--profile", required=True, help="language profile file")
    p.add_argument("--final-dot", choices=[m.value for m in FinalDot], default=FinalDot.SIMPLE.value)
    p.add_argument("--digits", choices=[m.value for m in DigitStyle], default=DigitStyle.WESTERN.value)
    p.add_argument("--tatweel", action="store_true", help="insert tatweel between consonants")
    p.add_argument("--trace", action="store_true", help="print the rule trace instead of the text (single input)")
    p.add_argument("--stats", action="store_true", help="report statistics on stderr")
    p.add_argument("--nfc", action="store_true", help="NFC-normalize input first")
    p.add_argument("--output", "-o", default=STDOUT, help="output file or directory (default stdout)")
    return p


def parse_args(argv=None) -> CliConfig:
    args = build_parser().parse_args(argv)
    config = CliConfig(
        table_path=args.table,
        profile_path=args.profile,
        inputs=list(args.inputs) or [STDIN],
        output=args.output,
        options=TranslitOptions(FinalDot(args.final_dot), DigitStyle(args.digits), args.tatweel),
        emit_trace=args.trace,
        emit_stats=args.stats,
        nfc=args.nfc,
    )
    if config.emit_trace and len(config.inputs) != 1:
        build_parser().error("--trace takes exactly one input")
    return config


def resolve_data_path(name: str) -> Path:
    """Find a table/profile: as given, then in $LATIN2AJAMI_DATA, then bundled data."""
    path = Path(name)
    if path.exists() or path.is_absolute():
        return path
    for base in (os.environ.get(DATA_ENV), PACKAGE_DATA):
        if base and (Path(base) / name).exists():
            return Path(base) / name
    return path


def _read_text(name: str, stdin) -> str:
    try:
        if name == STDIN:
            raw = stdin.buffer.read() if hasattr(stdin, "buffer") else stdin.read().encode("utf-8")
        else:
            raw = Path(name).read_bytes()
    except OSError as exc:
        raise DataError(f"cannot read {name}: {exc.strerror}") from None
    try:
        return raw.decode("utf-8-sig")
    except UnicodeDecodeError as exc:
        raise DataError(f"{name}: invalid UTF-8 at byte {exc.start}") from None


def _write_atomic(path: Path, text: str) -> None:
    fd, tmp = tempfile.mkstemp(dir=path.parent or ".", prefix=f".{path.name}.", suffix=".tmp")
    try:
        with os.fdopen(fd, "wb") as fh:
            fh.write(text.encode("utf-8"))
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _write_stdout(text: str, stdout) -> None:
    if hasattr(stdout, "buffer"):
        stdout.buffer.write(text.encode("utf-8"))
        stdout.flush()
    else:
        stdout.write(text)


def _output_name(name: str) -> str:
    stem = "stdin" if name == STDIN else Path(name).stem
    return stem + ".ajami.txt"


def format_stats(stats: TranslitStats) -> str:
    lines = [f"scalars: {stats.scalars}", f"unmapped: {stats.unmapped}"]
    for label, count in sorted(stats.branches.items()):
        lines.append(f"branch {label}: {count}")
    for ch, count in sorted(stats.unmapped_chars.items()):
        lines.append(f"unmapped U+{ord(ch):04X} {ch!r}: {count}")
    return "\n".join(lines) + "\n"


def run(config: CliConfig, stdin=None, stdout=None, stderr=None) -> int:
    stdin = stdin or sys.stdin
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        return _run(config, stdin, stdout, stderr)
    except DataError as exc:
        print(f"latin2ajami: {exc}", file=stderr)
        return EXIT_DATA
    except AssertionError as exc:
        print(f"latin2ajami: internal error: {exc}", file=stderr)
        return EXIT_BUG


def _load(config: CliConfig) -> Transliterator:
    table_path = resolve_data_path(config.table_path)
    profile_path = resolve_data_path(config.profile_path)
    try:
        table = load_glyph_table(table_path)
    except OSError as exc:
        raise DataError(f"cannot read table {table_path}: {exc.strerror}") from None
    except (GlyphTableError, UnicodeDecodeError) as exc:
        raise DataError(f"bad table {table_path}: {exc}") from None
    try:
        profile = load_profile(profile_path)
    except OSError as exc:
        raise DataError(f"cannot read profile {profile_path}: {exc.strerror}") from None
    except (ProfileError, UnicodeDecodeError) as exc:
        raise DataError(f"bad profile {profile_path}: {exc}") from None
    return Transliterator(profile, table, config.options)


def _run(config: CliConfig, stdin, stdout, stderr) -> int:
    engine = _load(config)
    if config.emit_stats:
        for warning in validate_against_profile(engine.table, engine.profile):
            print(f"latin2ajami: warning: {warning}", file=stderr)

    out_dir = None
    if config.output != STDOUT and Path(config.output).is_dir():
        out_dir = Path(config.output)

    total = TranslitStats()
    chunks = []
    for name in config.inputs:
        text = _read_text(name, stdin)
        if config.nfc:
            text = unicodedata.normalize("NFC", text)
        result = engine.transliterate(text, trace=config.emit_trace)
        if config.emit_trace:
            assert "".join(r.emitted for r in result.trace) == result.text, "trace does not match output"
            rendered = format_trace(result.trace)
        else:
            rendered = result.text
        total.merge(result.stats)
        if out_dir is not None:
            try:
                _write_atomic(out_dir / _output_name(name), rendered)
            except OSError as exc:
                raise DataError(f"cannot write {out_dir / _output_name(name)}: {exc.strerror}") from None
        else:
            chunks.append(rendered)

    if out_dir is None:
        joined = "".join(chunks)
        if config.output == STDOUT:
            _write_stdout(joined, stdout)
        else:
            try:
                _write_atomic(Path(config.output), joined)
            except OSError as exc:
                raise DataError(f"cannot write {config.output}: {exc.strerror}") from None
    if config.emit_stats:
        stderr.write(format_stats(total))
    return EXIT_OK


def main(argv=None) -> int:
    config = parse_args(argv)
    return run(config)


if __name__ == "__main__":
    sys.exit(main())
