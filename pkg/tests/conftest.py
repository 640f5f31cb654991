from __future__ import annotations

from pathlib import Path

import pytest

from gatherplot import Dataset, ingest_csv, ingest_table

REPO_ROOT = Path(__file__).resolve().parent.parent
CARS_CSV = REPO_ROOT / "data" / "cars.csv"


@pytest.fixture(scope="session")
def cars_csv_path() -> Path:
    return CARS_CSV


@pytest.fixture(scope="session")
def cars(cars_csv_path: Path) -> Dataset:
    return ingest_csv(cars_csv_path.read_text(encoding="utf-8"))


def make_dataset(columns: dict[str, list[str]]) -> Dataset:
    """Build a dataset from raw text columns of equal length."""
    names = list(columns)
    length = len(columns[names[0]])
    rows = [{name: columns[name][i] for name in names} for i in range(length)]
    return ingest_table(rows)


@pytest.fixture
def tiny() -> Dataset:
    return make_dataset(
        {
            "origin": ["USA", "Europe", "Japan", "USA", "Japan", "USA"],
            "mpg": ["18", "26", "31", "15", "33", "21"],
            "doors": ["2", "4", "4", "2", "2", "4"],
        }
    )
