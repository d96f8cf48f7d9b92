"""Bundled tables, profiles and the test lexicon."""
from pathlib import Path

DATA_DIR = Path(__file__).parent


def data_path(name: str) -> Path:
    return DATA_DIR / name


def load_wolof():
    """Return the bundled ``(profile, table)`` pair for Wolof."""
    from ..glyph_table import load_glyph_table
    from ..profile import load_profile

    return load_profile(data_path("wolof.profile")), load_glyph_table(data_path("wolof.glyph"))
