"""Text passes applied before rule scanning, in this fixed order:
lowercase, final dot, digits, tatweel."""
from __future__ import annotations

import enum
from dataclasses import dataclass

from .profile import LanguageProfile, TATWEEL

ARABIC_TRIPLE_DOT = "؞"
DIGIT_OFFSET = 0x0660 - 0x0030

_TRIPLE_DOT = str.maketrans({".": ARABIC_TRIPLE_DOT})
_ARABIC_INDIC = str.maketrans({chr(cp): chr(cp + DIGIT_OFFSET) for cp in range(0x30, 0x3A)})


class FinalDot(enum.Enum):
    SIMPLE = "simple"
    TRIPLE = "triple"


class DigitStyle(enum.Enum):
    WESTERN = "western"
    ARABIC_INDIC = "arabic-indic"


@dataclass(frozen=True)
class TranslitOptions:
    final_dot: FinalDot = FinalDot.SIMPLE
    digit_style: DigitStyle = DigitStyle.WESTERN
    tatweel: bool = False


def lowercase_fold(text: str) -> str:
    # str.lower() applies full case mapping; keep the scalar count fixed by
    # falling back per character where the full mapping would expand.
    lowered = text.lower()
    if len(lowered) == len(text):
        return lowered
    return "".join(c.lower() if len(c.lower()) == 1 else c for c in text)


def apply_final_dot(text: str, mode: FinalDot) -> str:
    if mode is FinalDot.TRIPLE:
        return text.translate(_TRIPLE_DOT)
    return text


def map_digits(text: str, style: DigitStyle) -> str:
    if style is DigitStyle.ARABIC_INDIC:
        return text.translate(_ARABIC_INDIC)
    return text


def insert_tatweel(text: str, profile: LanguageProfile) -> str:
    """Put one U+0640 between every two adjacent consonants."""
    if len(text) < 2:
        return text
    consonants = profile.consonants
    out = [text[0]]
    for prev, ch in zip(text, text[1:]):
        if prev in consonants and ch in consonants:
            out.append(TATWEEL)
        out.append(ch)
    return "".join(out)


def preprocess(text: str, profile: LanguageProfile, options: TranslitOptions = TranslitOptions()) -> str:
    text = lowercase_fold(text)
    text = apply_final_dot(text, options.final_dot)
    text = map_digits(text, options.digit_style)
    if options.tatweel:
        text = insert_tatweel(text, profile)
    return text
