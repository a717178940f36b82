from pathlib import Path

import pytest

FIXTURES = Path(__file__).parent / "fixtures"


@pytest.fixture
def fixture_csv() -> Path:
    """The bundled 3-album / 12-row / 5-collaborator record file."""
    return FIXTURES / "albums_small.csv"


@pytest.fixture
def fixture_dataset(fixture_csv):
    from albumnet.records import parse_records

    with open(fixture_csv, "rb") as handle:
        return parse_records(handle, "csv")
