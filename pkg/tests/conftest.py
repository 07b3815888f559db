from __future__ import annotations

from pathlib import Path

import pytest

from ultraquot import AdmissiblePair, read_ug

FIXTURES = Path(__file__).parent / "fixtures"
GOLDEN = Path(__file__).parent / "golden"


@pytest.fixture(scope="session")
def ex1():
    return read_ug(FIXTURES / "ex1.ug")


@pytest.fixture(scope="session")
def cyc1():
    return read_ug(FIXTURES / "cyc1.ug")


@pytest.fixture(scope="session")
def two():
    return read_ug(FIXTURES / "two.ug")


@pytest.fixture(scope="session")
def h_ex(ex1):
    return ex1.mask(["v", "a"])


@pytest.fixture(scope="session")
def w_mask(ex1):
    return ex1.mask(["w"])


@pytest.fixture
def pair():
    return AdmissiblePair
