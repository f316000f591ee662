import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

import voaplus  # noqa: E402


@pytest.fixture(scope="session", autouse=True)
def warm_kernel():
    # compile the enumeration kernel once so timed tests measure the
    # algorithm, not the JIT
    voaplus.count_norm(voaplus.make_lattice([[2]]), None, 2)
