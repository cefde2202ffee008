from __future__ import annotations

from typing import List

import pytest

from service.config import init_config_manager
from service.enumeration import EnumerationRequest, iter_surface_sequences
from service.key_sequence import KeySequence, validate


def ks(*omegas: int) -> KeySequence:
    return validate(omegas)


@pytest.fixture(scope="session")
def corpus() -> List[KeySequence]:
    """Surface key sequences small enough to sweep on every run."""
    short = iter_surface_sequences(EnumerationRequest(max_omega0=8, max_len=3))
    long = iter_surface_sequences(EnumerationRequest(max_omega0=6, max_len=4, max_entry=12))
    sequences = list(short) + [s for s in long if len(s) == 4]
    assert sequences
    return sequences


@pytest.fixture(scope="session")
def g2a_corpus(corpus) -> List[KeySequence]:
    from service.actions import g2a_exists

    return [s for s in corpus if g2a_exists(s)]


@pytest.fixture(autouse=True)
def _in_memory_config():
    init_config_manager(None)
    yield
