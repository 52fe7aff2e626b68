import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from kmetric.catalog import connected_graphs


@pytest.fixture(scope="session")
def catalog():
    return connected_graphs()
