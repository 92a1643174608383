import os

# Eager Lie-element checks everywhere in the test run; must be set before import.
os.environ.setdefault("COACTIONLAB_VALIDATE", "1")

import pytest  # noqa: E402

from coactionlab.parse import parse_poly  # noqa: E402

from tests.helpers import F3_TEXT  # noqa: E402


@pytest.fixture(scope="session")
def f3():
    return parse_poly(F3_TEXT)
