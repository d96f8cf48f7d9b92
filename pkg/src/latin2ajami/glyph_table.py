"""The Glyph correspondence table: Latin codepoint -> Ajami scalar sequence.

File format, one mapping per line::

    # comment
    2C,60C          # Latin comma -> Arabic comma
    61,64E          # a -> fatha
    E0,E004         # a grave -> private-use vowel sign
    62,628;652      # several output scalars are separated by ';'

Hex digits are case-insensitive and carry no ``0x``/``U+`` prefix.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Iterable, Mapping

TABLE_SIZE = 0x300
MAX_LATIN = TABLE_SIZE - 1
MAX_OUTPUT_LEN = 4


class GlyphTableError(ValueError):
    """Raised for any problem in a glyph table file."""

    def __init__(self, message: str, line: int | None = None, source: str = "<string>"):
        self.line = line
        self.source = source
        where = f"{source}:{line}: " if line is not None else f"{source}: "
        super().__init__(where + message)


class GlyphParseError(GlyphTableError):
    pass


class GlyphRangeError(GlyphTableError):
    pass


class DuplicateMappingError(GlyphTableError):
    pass


class EmptyOutputError(GlyphTableError):
    pass


class Miss(enum.Enum):
    """Why a lookup produced no sequence."""

    UNMAPPED = "unmapped"
    OUT_OF_RANGE = "out-of-range"


UNMAPPED = Miss.UNMAPPED
OUT_OF_RANGE = Miss.OUT_OF_RANGE


@dataclass(frozen=True)
class GlyphRow:
    latin: int
    ajami: tuple[int, ...]
    line: int | None = None

    def to_line(self) -> str:
        return f"{self.latin:X}," + ";".join(f"{cp:X}" for cp in self.ajami)


def _is_scalar(cp: int) -> bool:
    return 0 <= cp <= 0x10FFFF and not 0xD800 <= cp <= 0xDFFF


@dataclass(frozen=True)
class GlyphTable:
    """Dense, immutable lookup over codepoints ``0..0x2FF``."""

    entries: tuple[str | None, ...]
    source_name: str = "<string>"
    _populated: int = field(default=0, repr=False, compare=False)

    def __post_init__(self):
        if len(self.entries) != TABLE_SIZE:
            raise ValueError(f"glyph table needs {TABLE_SIZE} slots, got {len(self.entries)}")
        object.__setattr__(self, "_populated", sum(e is not None for e in self.entries))

    @classmethod
    def from_mapping(cls, mapping: Mapping[str | int, str], source_name: str = "<mapping>") -> GlyphTable:
        """Build a table from ``{latin: ajami}``; keys may be characters or ints."""
        slots: list[str | None] = [None] * TABLE_SIZE
        for key, value in mapping.items():
            cp = key if isinstance(key, int) else ord(key)
            if cp > MAX_LATIN:
                raise GlyphRangeError(f"codepoint {cp:X} above {MAX_LATIN:X}", source=source_name)
            if not value:
                raise EmptyOutputError(f"empty output for {cp:X}", source=source_name)
            slots[cp] = value
        return cls(tuple(slots), source_name)

    def __len__(self) -> int:
        return self._populated

    def __contains__(self, ch: object) -> bool:
        if not isinstance(ch, str) or len(ch) != 1:
            return False
        cp = ord(ch)
        return cp <= MAX_LATIN and self.entries[cp] is not None

    def lookup(self, cp: int) -> str | Miss:
        return lookup(self, cp)

    def rows(self) -> Iterable[GlyphRow]:
        for cp, out in enumerate(self.entries):
            if out is not None:
                yield GlyphRow(cp, tuple(ord(c) for c in out))


def lookup(table: GlyphTable, cp: int) -> str | Miss:
    """Return the output sequence for ``cp``, or a :class:`Miss` reason."""
    if cp > MAX_LATIN:
        return OUT_OF_RANGE
    out = table.entries[cp]
    return UNMAPPED if out is None else out


def _parse_hex(token: str, lineno: int, source: str) -> int:
    token = token.strip()
    if not token or token[:2].lower() == "0x" or token[:2].lower() == "u+":
        raise GlyphParseError(f"malformed hex value {token!r}", lineno, source)
    try:
        value = int(token, 16)
    except ValueError:
        raise GlyphParseError(f"malformed hex value {token!r}", lineno, source) from None
    return value


def parse_rows(text: str, source_name: str = "<string>") -> list[GlyphRow]:
    rows = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.count(",") != 1:
            raise GlyphParseError(f"expected LATIN,AJAMI[;AJAMI...], got {raw.strip()!r}", lineno, source_name)
        left, right = line.split(",")
        latin = _parse_hex(left, lineno, source_name)
        if latin > MAX_LATIN:
            raise GlyphRangeError(f"Latin codepoint {latin:X} above {MAX_LATIN:X}", lineno, source_name)
        if not right.strip():
            raise EmptyOutputError(f"empty Ajami side for {latin:X}", lineno, source_name)
        parts = right.split(";")
        if len(parts) > MAX_OUTPUT_LEN:
            raise GlyphParseError(
                f"at most {MAX_OUTPUT_LEN} output scalars allowed, got {len(parts)}", lineno, source_name
            )
        ajami = tuple(_parse_hex(p, lineno, source_name) for p in parts)
        for cp in ajami:
            if not _is_scalar(cp):
                raise GlyphRangeError(f"{cp:X} is not a Unicode scalar value", lineno, source_name)
        rows.append(GlyphRow(latin, ajami, lineno))
    return rows


def parse_glyph_table(text: str, source_name: str = "<string>") -> GlyphTable:
    """Parse table file contents into a :class:`GlyphTable`.

    Duplicate Latin codepoints are rejected, naming the line of the later row.
    """
    slots: list[str | None] = [None] * TABLE_SIZE
    first_seen: dict[int, int] = {}
    for row in parse_rows(text, source_name):
        if row.latin in first_seen:
            raise DuplicateMappingError(
                f"duplicate mapping for {row.latin:X} (first defined on line {first_seen[row.latin]})",
                row.line,
                source_name,
            )
        first_seen[row.latin] = row.line
        slots[row.latin] = "".join(map(chr, row.ajami))
    return GlyphTable(tuple(slots), source_name)


def load_glyph_table(path) -> GlyphTable:
    with open(path, encoding="utf-8", newline="") as fh:
        text = fh.read()
    return parse_glyph_table(text, source_name=str(path))


def serialize_glyph_table(table: GlyphTable) -> str:
    return "".join(row.to_line() + "\n" for row in table.rows())


def validate_against_profile(table: GlyphTable, profile) -> list[str]:
    """List profile characters the table cannot transliterate.

    Vowels, consonants and in-range punctuation are checked. Digits are left
    out on purpose: they are rewritten by the preprocessor and tables must
    keep ``30..39`` empty, which is reported here as well.
    """
    warnings = []
    groups = (
        ("vowel", profile.vowels),
        ("consonant", profile.consonants),
        ("punctuation", profile.punctuation),
    )
    for kind, chars in groups:
        for ch in sorted(chars):
            cp = ord(ch)
            if cp > MAX_LATIN:
                continue
            if table.entries[cp] is None:
                warnings.append(f"{kind} {ch!r} (U+{cp:04X}) has no glyph table entry")
    for cp in range(0x30, 0x3A):
        if table.entries[cp] is not None:
            warnings.append(f"digit {chr(cp)!r} (U+{cp:04X}) is mapped; digits are handled by the digit style option")
    return warnings
