"""
Shared pytest fixtures
Worked programs, ground programs and the hypothesis profile
"""

from pathlib import Path

import pytest
from hypothesis import settings

from grounding import build_pstar
from models.bilattice import BilatticeKind
from parser import parse_program

settings.register_profile("bilat", derandomize=True, deadline=None, max_examples=500)
settings.load_profile("bilat")

FIXTURES = Path(__file__).parent / "fixtures"


def ground(text: str, kind: BilatticeKind = BilatticeKind.FOUR):
    return build_pstar(parse_program(text, kind))


@pytest.fixture(scope="session")
def fixtures_dir():
    return FIXTURES


@pytest.fixture(scope="session")
def running():
    """p <- p. q <- ~r. r <- ~q & ~p."""
    return ground((FIXTURES / "running.blp").read_text())


@pytest.fixture(scope="session")
def exmy():
    return ground((FIXTURES / "exmy.blp").read_text(), BilatticeKind.UNIT_INTERVAL)


@pytest.fixture(scope="session")
def runex6():
    return ground((FIXTURES / "runex6.blp").read_text(), BilatticeKind.UNIT_INTERVAL)


@pytest.fixture(scope="session")
def liar():
    """p <- ~p."""
    return ground("p <- ~p.")
