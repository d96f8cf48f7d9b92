import sys
from pathlib import Path

import pytest

from latin2ajami import Transliterator, load_glyph_table, load_profile
from latin2ajami.data import data_path

sys.path.insert(0, str(Path(__file__).parent))


@pytest.fixture(scope="session")
def wolof_profile():
    return load_profile(data_path("wolof.profile"))


@pytest.fixture(scope="session")
def wolof_table():
    return load_glyph_table(data_path("wolof.glyph"))


@pytest.fixture(scope="session")
def wolof(wolof_profile, wolof_table):
    return Transliterator(wolof_profile, wolof_table)


@pytest.fixture(scope="session")
def minimal_profile():
    return load_profile(data_path("minimal.profile"))


@pytest.fixture(scope="session")
def minimal_table():
    return load_glyph_table(data_path("minimal.glyph"))


@pytest.fixture(scope="session")
def lexicon():
    lines = data_path("wolof_lexicon.txt").read_text(encoding="utf-8").splitlines()
    return [w.strip() for w in lines if w.strip() and not w.startswith("#")]


ACCEPTANCE: dict[str, str] = {}


def pytest_runtest_logreport(report):
    if report.when != "call":
        return
    for key, value in report.user_properties:
        if key == "criterion":
            ACCEPTANCE[value] = "PASS" if report.passed else "FAIL"


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(ACCEPTANCE):
        terminalreporter.write_line(f"[{ACCEPTANCE[name]}] {name}")
