"""Per-language character classes consulted by the rule engine.

Profiles are INI files::

    [profile]
    name = wolof

    [letters]
    vowels = a, à, e
    consonants = b, d, l, m, n
    nasals = m, n
    lam = l
    punctuation = ., U+002C, ?

    [prenasal]
    pairs = mb, nd

    [carriers]
    a = ALIF
    e = YA

List items are single characters or ``U+XXXX`` escapes (needed for the
comma itself).
"""
from __future__ import annotations

import configparser
import enum
from dataclasses import dataclass
from typing import Mapping


class ProfileError(ValueError):
    pass


class Carrier(enum.Enum):
    ALIF = "ا"
    YA = "ي"
    WAW = "و"


class CharClass(enum.Enum):
    VOWEL = "vowel"
    CONSONANT = "consonant"
    NASAL = "nasal"  # a consonant that is also nasal
    PUNCTUATION = "punctuation"
    SPACE = "space"
    DIGIT = "digit"
    OTHER = "other"

    @property
    def is_consonant(self) -> bool:
        return self is CharClass.CONSONANT or self is CharClass.NASAL


# LF and CR count as spaces so that no rule window sees a line break as a letter.
SPACES = frozenset(" \t\n\r")
DIGITS = frozenset("0123456789")
TATWEEL = "ـ"


@dataclass(frozen=True)
class LanguageProfile:
    name: str
    vowels: frozenset[str]
    consonants: frozenset[str]
    nasals: frozenset[str]
    prenasal_pairs: frozenset[tuple[str, str]]
    long_vowel_carriers: Mapping[str, Carrier]
    lam_char: str = "l"
    punctuation: frozenset[str] = frozenset()
    madda_vowel: str = "a"

    def __post_init__(self):
        overlap = self.vowels & self.consonants
        if overlap:
            raise ProfileError(f"characters listed as both vowel and consonant: {_fmt(overlap)}")
        if not self.nasals <= self.consonants:
            raise ProfileError(f"nasals not listed as consonants: {_fmt(self.nasals - self.consonants)}")
        for first, second in self.prenasal_pairs:
            if first not in self.nasals:
                raise ProfileError(f"prenasal pair {first + second!r} does not start with a nasal")
            if second not in self.consonants:
                raise ProfileError(f"prenasal pair {first + second!r} does not end with a consonant")
        missing = self.vowels - set(self.long_vowel_carriers)
        if missing:
            raise ProfileError(f"no long-vowel carrier for: {_fmt(missing)}")
        stray = set(self.long_vowel_carriers) - self.vowels
        if stray:
            raise ProfileError(f"carriers given for non-vowels: {_fmt(stray)}")
        if TATWEEL in self.vowels | self.consonants | self.punctuation:
            raise ProfileError("tatweel (U+0640) cannot be a letter or punctuation")
        clash = self.punctuation & (self.vowels | self.consonants | SPACES | DIGITS)
        if clash:
            raise ProfileError(f"punctuation overlaps other classes: {_fmt(clash)}")
        if self.madda_vowel not in self.vowels:
            raise ProfileError(f"madda vowel {self.madda_vowel!r} is not a vowel")
        object.__setattr__(self, "long_vowel_carriers", dict(self.long_vowel_carriers))

    def classify(self, ch: str) -> CharClass:
        return classify(ch, self)

    def is_prenasal_pair(self, first: str, second: str) -> bool:
        return (first, second) in self.prenasal_pairs


def _fmt(chars) -> str:
    return ", ".join(repr(c) for c in sorted(chars))


def classify(ch: str, profile: LanguageProfile) -> CharClass:
    if ch in profile.vowels:
        return CharClass.VOWEL
    if ch in profile.consonants:
        return CharClass.NASAL if ch in profile.nasals else CharClass.CONSONANT
    if ch in SPACES:
        return CharClass.SPACE
    if ch in DIGITS:
        return CharClass.DIGIT
    if ch in profile.punctuation:
        return CharClass.PUNCTUATION
    return CharClass.OTHER


def is_prenasal_pair(first: str, second: str, profile: LanguageProfile) -> bool:
    return (first, second) in profile.prenasal_pairs


_KNOWN = {
    "profile": {"name"},
    "letters": {"vowels", "consonants", "nasals", "lam", "punctuation", "madda_vowel"},
    "prenasal": {"pairs"},
    "carriers": None,  # keys are vowels
}


def _item(token: str) -> str:
    if token[:2].upper() == "U+":
        try:
            return chr(int(token[2:], 16))
        except ValueError:
            raise ProfileError(f"bad codepoint escape {token!r}") from None
    if len(token) != 1:
        raise ProfileError(f"expected a single character, got {token!r}")
    return token


def _chars(value: str) -> frozenset[str]:
    return frozenset(_item(tok.strip()) for tok in value.split(",") if tok.strip())


def _pair(token: str) -> tuple[str, str]:
    parts = [_item(p) for p in token.split("+")] if "+" in token else list(token)
    if len(parts) != 2:
        raise ProfileError(f"prenasal pair must be two characters, got {token!r}")
    return parts[0], parts[1]


def parse_profile(text: str, source_name: str = "<string>") -> LanguageProfile:
    parser = configparser.ConfigParser(interpolation=None, delimiters=("=",))
    parser.optionxform = str  # keep case of carrier keys as written
    try:
        parser.read_string(text, source=source_name)
    except configparser.Error as exc:
        raise ProfileError(f"{source_name}: {exc}") from None

    for section in parser.sections():
        if section not in _KNOWN:
            raise ProfileError(f"{source_name}: unknown section [{section}]")
        allowed = _KNOWN[section]
        if allowed is not None:
            for key in parser[section]:
                if key not in allowed:
                    raise ProfileError(f"{source_name}: unknown key {key!r} in [{section}]")

    def get(section: str, key: str, default: str | None = None) -> str:
        if parser.has_option(section, key):
            return parser.get(section, key).strip()
        if default is None:
            raise ProfileError(f"{source_name}: missing {key!r} in [{section}]")
        return default

    carriers: dict[str, Carrier] = {}
    if parser.has_section("carriers"):
        for key, value in parser["carriers"].items():
            try:
                carriers[_item(key.strip())] = Carrier[value.strip().upper()]
            except KeyError:
                raise ProfileError(f"{source_name}: unknown carrier {value!r} for {key!r}") from None

    pairs_text = get("prenasal", "pairs", "")
    try:
        return LanguageProfile(
            name=get("profile", "name"),
            vowels=_chars(get("letters", "vowels")),
            consonants=_chars(get("letters", "consonants")),
            nasals=_chars(get("letters", "nasals", "")),
            prenasal_pairs=frozenset(_pair(t.strip()) for t in pairs_text.split(",") if t.strip()),
            long_vowel_carriers=carriers,
            lam_char=_item(get("letters", "lam", "l")),
            punctuation=_chars(get("letters", "punctuation", "")),
            madda_vowel=_item(get("letters", "madda_vowel", "a")),
        )
    except ProfileError as exc:
        raise ProfileError(f"{source_name}: {exc}") from None


def load_profile(path) -> LanguageProfile:
    with open(path, encoding="utf-8") as fh:
        return parse_profile(fh.read(), source_name=str(path))
