from __future__ import annotations

import pytest

from hitlab.graph import gen_cluster, gen_cycle, gen_path


@pytest.fixture
def c5():
    return gen_cycle(5)


@pytest.fixture
def p10():
    return gen_path(10)


@pytest.fixture
def cluster333():
    return gen_cluster([3, 3, 3])
