"""Shared fixtures: gallery surfaces and a deterministic RNG."""

import numpy as np
import pytest

from minface import gallery


@pytest.fixture(scope="session")
def enneper():
    return gallery.get("enneper")


@pytest.fixture(scope="session")
def enneper_conj():
    return gallery.get("enneper-conj")


@pytest.fixture(scope="session")
def ce_quasi():
    return gallery.get("ce-quasiumbilic")


@pytest.fixture(scope="session")
def kchange():
    return gallery.get("kchange")


@pytest.fixture()
def rng():
    return np.random.default_rng(20260816)
