import pytest
from hypothesis import given, strategies as st

from latin2ajami.profile import (
    Carrier,
    CharClass,
    ProfileError,
    classify,
    is_prenasal_pair,
    parse_profile,
)

MINIMAL = """
[profile]
name = tiny
[letters]
vowels = a
consonants = b
lam = l
[carriers]
a = ALIF
"""


def test_minimal_profile_loads():
    profile = parse_profile(MINIMAL)
    assert profile.vowels == {"a"}
    assert profile.consonants == {"b"}
    assert profile.nasals == frozenset()
    assert profile.long_vowel_carriers == {"a": Carrier.ALIF}
    assert profile.lam_char == "l"


@pytest.mark.parametrize(
    "text, message",
    [
        (MINIMAL.replace("consonants = b", "consonants = b, a"), "both vowel and consonant"),
        (MINIMAL.replace("lam = l", "lam = l\nnasals = m"), "nasals not listed"),
        (MINIMAL.replace("a = ALIF", ""), "no long-vowel carrier"),
        (MINIMAL.replace("lam = l", "lam = l\ncolour = red"), "unknown key"),
        (MINIMAL + "[extra]\nx = 1\n", "unknown section"),
        (MINIMAL.replace("ALIF", "HAMZA"), "unknown carrier"),
        (MINIMAL.replace("vowels = a", "vowels = a, ab"), "single character"),
        (MINIMAL + "[prenasal]\npairs = bb\n", "does not start with a nasal"),
        (MINIMAL.replace("name = tiny", ""), "missing 'name'"),
    ],
)
def test_profile_errors(text, message):
    with pytest.raises(ProfileError, match=message):
        parse_profile(text)


def test_overlap_m_in_both():
    text = MINIMAL.replace("vowels = a", "vowels = a, m").replace("consonants = b", "consonants = b, m")
    text = text.replace("a = ALIF", "a = ALIF\nm = ALIF")
    with pytest.raises(ProfileError, match="both vowel and consonant"):
        parse_profile(text)


def test_codepoint_escapes():
    profile = parse_profile(MINIMAL.replace("lam = l", "lam = l\npunctuation = U+002C, ."))
    assert profile.punctuation == {",", "."}


def test_wolof_vowels(wolof_profile):
    # the nine vowel letters of the official Wolof orthography
    assert wolof_profile.vowels == set("aàeéëioóu")
    assert {"ñ", "ŋ"} <= wolof_profile.consonants
    assert wolof_profile.nasals == set("mnñŋ")


def test_wolof_prenasals(wolof_profile):
    assert is_prenasal_pair("m", "b", wolof_profile)
    assert is_prenasal_pair("n", "d", wolof_profile)
    assert is_prenasal_pair("n", "g", wolof_profile)
    assert not is_prenasal_pair("b", "m", wolof_profile)
    assert not is_prenasal_pair("a", "b", wolof_profile)


@pytest.mark.parametrize(
    "ch, expected",
    [
        ("a", CharClass.VOWEL),
        ("b", CharClass.CONSONANT),
        ("m", CharClass.NASAL),
        (" ", CharClass.SPACE),
        ("\t", CharClass.SPACE),
        ("\n", CharClass.SPACE),
        ("7", CharClass.DIGIT),
        ("%", CharClass.PUNCTUATION),
        ("ـ", CharClass.OTHER),
        ("z", CharClass.OTHER),
    ],
)
def test_classify_wolof(wolof_profile, ch, expected):
    assert classify(ch, wolof_profile) is expected


def test_percent_unlisted_is_other():
    assert classify("%", parse_profile(MINIMAL)) is CharClass.OTHER


@given(st.characters())
def test_classify_partition(wolof_profile, ch):
    got = classify(ch, wolof_profile)
    assert got is classify(ch, wolof_profile)
    if ch in wolof_profile.vowels:
        assert got is CharClass.VOWEL
    elif ch in wolof_profile.consonants:
        assert got.is_consonant
        assert (got is CharClass.NASAL) == (ch in wolof_profile.nasals)
    else:
        assert got not in (CharClass.VOWEL, CharClass.CONSONANT, CharClass.NASAL)
