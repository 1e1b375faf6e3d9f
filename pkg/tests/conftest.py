from pathlib import Path

import pytest

from main import main
from src.repository.documents import load, to_algebra

FIXTURES = Path(__file__).parent.parent / "fixtures"


def fixture_algebra(name: str):
    return to_algebra(load(FIXTURES / f"{name}.txt"))


@pytest.fixture(scope="module")
def fixtures_dir():
    return FIXTURES


@pytest.fixture(scope="module")
def diamond_m():
    return fixture_algebra("diamond_m")


@pytest.fixture(scope="module")
def bool4():
    return fixture_algebra("bool4")


@pytest.fixture()
def cli(capsys):
    # Runs one command and hands back its exit status with the captured streams

    def run(*argv: str):
        status = main([str(arg) for arg in argv])
        captured = capsys.readouterr()
        return status, captured.out, captured.err

    return run
