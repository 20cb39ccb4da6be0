from __future__ import annotations

import sys
from pathlib import Path

import pytest
from hypothesis import settings

sys.path.insert(0, str(Path(__file__).parent))

from holechord.generators import paper_fig1, paper_fig5

settings.register_profile("repro", derandomize=True)
settings.load_profile("repro")


@pytest.fixture(scope="session")
def fig1():
    return paper_fig1()


@pytest.fixture(scope="session")
def fig5():
    return paper_fig5()
