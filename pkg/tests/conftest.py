import json
from functools import lru_cache
from pathlib import Path

import pytest

from noncrossing import enumeration

_ROOT = Path(__file__).resolve().parent.parent


@lru_cache(maxsize=None)
def partitions_of(n):
    """All set partitions of [n], cached across tests."""
    return tuple(enumeration.gen_set_partitions(n))


@lru_cache(maxsize=None)
def braids_over(n):
    """All braids over [n] (no crossing restriction), cached."""
    return tuple(enumeration.gen_braids(n, n + 2))


@pytest.fixture(scope="session")
def golden():
    with open(_ROOT / "testdata" / "golden.json") as fh:
        return json.load(fh)
