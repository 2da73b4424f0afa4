import pytest

from laver.table import TableStack


@pytest.fixture(scope="session")
def stack():
    """Shared lazily-built stack; tests pull whatever ranks they need."""
    return TableStack()


@pytest.fixture(scope="session")
def golden_lines():
    import pathlib

    path = pathlib.Path(__file__).parent / "data" / "ordinals_below_gamma12.txt"
    return path.read_text(encoding="utf-8").splitlines()
