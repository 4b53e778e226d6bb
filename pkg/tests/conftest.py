"""
Ortak test fixture'ları.
"""

import logging

import pytest

from graphs.fixtures import cycle_graph, fixture_medium, hypercube_medium, k2_medium
from utils.config import MediaKitSettings


@pytest.fixture
def settings() -> MediaKitSettings:
    # Q4 ve 15 tepeli ağaç için izomorfizma sınırı yükseltilir
    return MediaKitSettings(max_iso_vertices=16, show_progress=False)


@pytest.fixture
def q3():
    return hypercube_medium(3)


@pytest.fixture
def k2():
    return k2_medium()


@pytest.fixture
def c4_medium():
    return fixture_medium("c4")


@pytest.fixture
def c6_medium():
    return fixture_medium("c6")


@pytest.fixture
def c6():
    return cycle_graph(6)


@pytest.fixture(autouse=True)
def reset_root_logger():
    yield
    root = logging.getLogger()
    for handler in root.handlers[:]:
        root.removeHandler(handler)
        handler.close()
