import os

os.environ.setdefault("TREEINV_ENV", "testing")

from pathlib import Path  # noqa: E402

import pytest  # noqa: E402

from app.domain.tree import build_instance  # noqa: E402
from app.infrastructure.repositories.instance_repository import parse_instance  # noqa: E402

DATA_DIR = Path(__file__).resolve().parent.parent / "data"
EXAMPLE1_PATH = DATA_DIR / "example1.instance.json"


@pytest.fixture
def example1_path():
    return EXAMPLE1_PATH


@pytest.fixture
def example1_text():
    return EXAMPLE1_PATH.read_text(encoding="utf-8")


@pytest.fixture
def example1(example1_text):
    """Worked example: 17 nodes, t0 = v11, D = 39"""
    return parse_instance(example1_text)


@pytest.fixture
def single_edge():
    """Factory for the one-edge tree v1 -> v2 with w=5, l=3, u=9, c=2"""
    def make(target=None, w=5, lower=3, upper=9, cost=2):
        return build_instance([("v1", "v2", w, lower, upper, cost)], "v1", t0="v2", target=target)
    return make


@pytest.fixture
def chain():
    """Factory for the path v1 -> v2 -> v3 with weights (2, 3)"""
    def make(target=None):
        return build_instance(
            [("v1", "v2", 2, 1, 4, 3), ("v2", "v3", 3, 3, 5, 6)],
            "v1",
            t0="v3",
            target=target,
        )
    return make
