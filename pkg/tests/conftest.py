import pytest

from perfectnt.verify import GOLDEN_TARGETS


@pytest.fixture(scope="session")
def golden():
    """name -> built TransformSpec for every golden target."""
    return {t.name: t.build() for t in GOLDEN_TARGETS}
