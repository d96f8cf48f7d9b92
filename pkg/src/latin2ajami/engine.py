"""Windowed consonant/vowel rule scanner.

The input is preprocessed and padded as ``"  " + text + " "``. Every position
from the second pad space to the final pad space is visited once, with a
window of (previous, current, next) characters. Consonants run the consonant
branches ``c..g`` and vowels the vowel branches ``b..e``; a space or
punctuation mark followed by a vowel takes vowel branch ``a``. Whatever is left
falls through to the glyph table (``h``/``f``) or is returned as is (``i``/``g``).

Some branches rewrite the *next* position (a geminate's second consonant
becomes a shadda, a long vowel's second vowel becomes its carrier letter,
madda and lam-alif swallow the second ``a``). Those positions are still
visited; they emit their replacement instead of running the rules.
Context predicates always read the preprocessed text, never replacements.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import NamedTuple

from .glyph_table import MAX_LATIN, GlyphTable
from .preprocess import TranslitOptions, preprocess
from .profile import DIGITS, SPACES, TATWEEL, LanguageProfile

SHADDA = "ّ"
SUKUN = "ْ"
ALIF = "ا"
MADDA_ALIF = "آ"
FATHA = "َ"
WAW = "و"
YA = "ي"

PAD = " "

# slot states for rewritten positions
_SHADDA_SLOT = object()
_CARRIER_SLOT = object()


class TraceRow(NamedTuple):
    index: int  # 1-based position in the padded text
    prev: str
    curr: str
    next: str
    branches: tuple[str, ...]
    emitted: str
    pad: bool = False

    @property
    def label(self) -> str:
        return ",".join(self.branches)


@dataclass
class TranslitStats:
    scalars: int = 0
    unmapped: int = 0
    branches: Counter = field(default_factory=Counter)
    unmapped_chars: Counter = field(default_factory=Counter)

    def merge(self, other: TranslitStats) -> None:
        self.scalars += other.scalars
        self.unmapped += other.unmapped
        self.branches.update(other.branches)
        self.unmapped_chars.update(other.unmapped_chars)


@dataclass
class TranslitResult:
    text: str
    stats: TranslitStats
    trace: list[TraceRow] | None = None


def pad(text: str) -> str:
    return PAD + PAD + text + PAD


class Transliterator:
    """Bind a profile, table and options once; transliterate many texts.

    Instances hold no per-call state and can be shared between threads.
    """

    def __init__(self, profile: LanguageProfile, table: GlyphTable, options: TranslitOptions | None = None):
        self.profile = profile
        self.table = table
        self.options = options or TranslitOptions()
        self._vowels = profile.vowels
        self._consonants = profile.consonants
        self._nasals = profile.nasals
        self._pairs = profile.prenasal_pairs
        self._boundary = SPACES | profile.punctuation
        self._carriers = {v: c.value for v, c in profile.long_vowel_carriers.items()}

    def __call__(self, text: str, trace: bool = False) -> TranslitResult:
        return self.transliterate(text, trace=trace)

    def glyph(self, ch: str) -> str | None:
        cp = ord(ch)
        if cp > MAX_LATIN:
            return None
        return self.table.entries[cp]

    def transliterate(self, text: str, trace: bool = False) -> TranslitResult:
        stats = TranslitStats(scalars=len(text))
        if not text:
            return TranslitResult("", stats, [] if trace else None)

        s = pad(preprocess(text, self.profile, self.options))
        size = len(s)
        if TATWEEL in s:
            nxt, prv = _skip_tatweel(s)
        else:
            nxt = range(1, size + 1)
            prv = range(-1, size - 1)

        vowels = self._vowels
        consonants = self._consonants
        boundary = self._boundary
        entries = self.table.entries
        madda = self.profile.madda_vowel
        lam = self.profile.lam_char
        nasals = self._nasals
        pairs = self._pairs
        carriers = self._carriers
        slots: dict[int, object] = {}
        out: list[str] = []
        rows: list[TraceRow] | None = [] if trace else None
        branch_counts: dict[tuple[str, ...], int] = {}

        for p in range(1, size):
            ch = s[p]
            ni = nxt[p]
            nch = s[ni] if ni < size else ""
            bi = prv[p]
            bch = s[bi]

            slot = slots.get(p)
            if slot is not None:
                if slot is _SHADDA_SLOT:
                    branches, emitted = ("i",), SHADDA
                elif slot is _CARRIER_SLOT:
                    branches, emitted = ("h",), carriers[ch]
                else:
                    branches, emitted = slot, ""
            elif ch in consonants:
                g = entries[ord(ch)] if ord(ch) <= MAX_LATIN else None
                if g is None:
                    g, look = ch, "i"
                    stats.unmapped += 1
                    stats.unmapped_chars[ch] += 1
                else:
                    look = "h"
                next_vowel = nch in vowels
                if nch == ch:
                    slots[ni] = _SHADDA_SLOT
                    branches, emitted = ("c", look), g
                else:
                    pair_here = (ch, nch) in pairs and bch not in vowels
                    if ch in nasals and not pair_here:
                        branches, emitted = ("d", look), g
                    elif (bch, ch) in pairs and s[prv[bi]] not in vowels and not next_vowel:
                        branches, emitted = ("e", look), g + SHADDA
                    elif pair_here:
                        branches, emitted = ("f", look), g + SHADDA
                    elif not next_vowel:
                        branches, emitted = ("g", look), g + SUKUN
                    else:
                        branches, emitted = (look,), g
            elif ch in vowels:
                g = entries[ord(ch)] if ord(ch) <= MAX_LATIN else None
                if g is None:
                    g, look = ch, "g"
                    stats.unmapped += 1
                    stats.unmapped_chars[ch] += 1
                else:
                    look = "f"
                if ch == madda and nch == madda and bch in boundary:
                    slots[ni] = ("b",)
                    branches, emitted = ("b",), MADDA_ALIF
                elif ch == madda and nch == madda and bch == lam:
                    label = "d" if s[prv[bi]] == lam else "c"
                    slots[ni] = (label,)
                    branches, emitted = (label, look), ALIF + g
                elif nch == ch:
                    slots[ni] = _CARRIER_SLOT
                    branches, emitted = ("e", look), g
                else:
                    branches, emitted = (look,), g
            elif (
                ch in boundary
                and nch in vowels
                and not (nch == madda and nxt[ni] < size and s[nxt[ni]] == madda)
            ):
                lead = ch if ch in SPACES else (self.glyph(ch) or ch)
                branches, emitted = ("a",), lead + ALIF
            elif ch in SPACES:
                branches, emitted = ("h",), ch
            else:
                g = entries[ord(ch)] if ord(ch) <= MAX_LATIN else None
                if g is None:
                    if ord(ch) <= MAX_LATIN and ch not in DIGITS:
                        stats.unmapped += 1
                        stats.unmapped_chars[ch] += 1
                    branches, emitted = ("i",), ch
                else:
                    branches, emitted = ("h",), g

            is_pad = p == 1 or p == size - 1
            if is_pad and emitted[:1] == PAD:
                emitted = emitted[1:]
            out.append(emitted)
            branch_counts[branches] = branch_counts.get(branches, 0) + 1
            if rows is not None:
                rows.append(TraceRow(p + 1, bch, ch, nch, branches, emitted, is_pad))

        stats.branches = Counter({",".join(k): v for k, v in branch_counts.items()})
        return TranslitResult("".join(out), stats, rows)


def _skip_tatweel(s: str) -> tuple[list[int], list[int]]:
    """Neighbour indices that look through tatweel, so rules still see letters."""
    size = len(s)
    nxt = [size] * size
    following = size
    for i in range(size - 1, -1, -1):
        nxt[i] = following
        if s[i] != TATWEEL:
            following = i
    prv = [-1] * size
    preceding = -1
    for i in range(size):
        prv[i] = preceding
        if s[i] != TATWEEL:
            preceding = i
    return nxt, prv


def transliterate(
    text: str,
    profile: LanguageProfile,
    table: GlyphTable,
    options: TranslitOptions | None = None,
    trace: bool = False,
) -> TranslitResult:
    return Transliterator(profile, table, options).transliterate(text, trace=trace)


def format_trace(rows: list[TraceRow]) -> str:
    """Render a trace as aligned ``I B C D Sortie`` columns."""

    def show(ch: str) -> str:
        if ch == "":
            return "-"
        if ch in SPACES:
            return f"chr({ord(ch)})"
        return ch

    def show_out(text: str) -> str:
        if not text:
            return "''"
        return " ".join(f"U+{ord(c):04X}" for c in text)

    table = [("I", "B", "C", "D", "Sortie")]
    for row in rows:
        table.append((str(row.index), show(row.prev), show(row.curr), show(row.next), f"{row.label}=>{show_out(row.emitted)}"))
    widths = [max(len(r[i]) for r in table) for i in range(4)]
    lines = []
    for r in table:
        lines.append("  ".join(col.ljust(w) for col, w in zip(r, widths)) + "  " + r[4])
    return "\n".join(lines) + "\n"
