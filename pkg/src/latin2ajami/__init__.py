"""Latin to Ajami transliteration for West African languages."""
from .engine import (
    ALIF, FATHA, MADDA_ALIF, SHADDA, SUKUN, WAW, YA,
    TraceRow, TranslitResult, TranslitStats, Transliterator, format_trace, pad, transliterate,
)
from .glyph_table import (
    OUT_OF_RANGE, UNMAPPED, DuplicateMappingError, EmptyOutputError, GlyphParseError,
    GlyphRangeError, GlyphTable, GlyphTableError, load_glyph_table, lookup, parse_glyph_table,
    serialize_glyph_table, validate_against_profile,
)
from .preprocess import (
    DigitStyle, FinalDot, TranslitOptions, apply_final_dot, insert_tatweel, lowercase_fold,
    map_digits, preprocess,
)
from .profile import (
    Carrier, CharClass, LanguageProfile, ProfileError, classify, is_prenasal_pair, load_profile,
    parse_profile,
)
from .data import data_path, load_wolof

__version__ = "0.1.0"
