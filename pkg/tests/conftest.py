import random
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from wicks import validate
from wicks.census import enumerate_constructive
from wicks.words import Word, WicksForm, from_codes
from wicks import errors

GENUS_ONE = "a b c a' b' c'"


@pytest.fixture(scope="session")
def genus1():
    return validate(GENUS_ONE)


@pytest.fixture(scope="session")
def census1():
    return enumerate_constructive(1)


@pytest.fixture(scope="session")
def census2():
    return enumerate_constructive(2)


@pytest.fixture(scope="session")
def census3():
    return enumerate_constructive(3)


@pytest.fixture(scope="session")
def forms2(census2):
    return [validate(w) for w in census2.classes]


@pytest.fixture(scope="session")
def forms3(census3):
    return [validate(w) for w in census3.classes]


def random_valid_form(rng, e):
    """Rejection-sample a Wicks form with e edges (any genus)."""
    while True:
        pos = list(range(2 * e))
        rng.shuffle(pos)
        codes = [0] * (2 * e)
        for k in range(e):
            s = rng.choice((1, -1))
            codes[pos[2 * k]] = s * (k + 1)
            codes[pos[2 * k + 1]] = -s * (k + 1)
        try:
            return WicksForm(from_codes(codes))
        except errors.InvalidForm:
            continue


def random_relabel(rng, w):
    """Rename bases arbitrarily and flip some orientations."""
    bases = w.bases()
    names = [f"q{i}" for i in range(len(bases))]
    rng.shuffle(names)
    flip = {b: rng.choice((1, -1)) for b in bases}
    ren = dict(zip(bases, names))
    return Word((ren[x.base], x.sign * flip[x.base]) for x in w)


def pytest_terminal_summary(terminalreporter):
    import test_acceptance
    if test_acceptance.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in test_acceptance.RESULTS:
            terminalreporter.write_line(line)
