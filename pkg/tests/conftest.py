"""Shared fixtures: small crystal graphs reused across test modules."""

from __future__ import annotations

import pytest

from crystals import queer_graph, shifted_graph, young_graph


@pytest.fixture(scope="session")
def shifted31():
    return shifted_graph((3, 1), 3)


@pytest.fixture(scope="session")
def queer31():
    return queer_graph((3, 1), 3)


@pytest.fixture(scope="session")
def young31():
    return young_graph((3, 1), 3)
