import random
from collections.abc import Callable
from pathlib import Path

import pytest

from primtransfer.core.matrix import ZeroOneMatrix
from primtransfer.core.textio import read_matrix
from primtransfer.search.config import SearchConfig
from primtransfer.transfer.models import PrimitiveTransfer
from primtransfer.transfer.operations import enumerate_transfers

DATA_DIR = Path(__file__).parent / "data"

EIGHT_TRANSFER = PrimitiveTransfer(0, frozenset({2, 3, 5, 6, 7}), frozenset())


def random_matrix(rng: random.Random, n: int, density: float = 0.35) -> ZeroOneMatrix:
    """Random ``n x n`` matrix with each entry set with probability ``density``."""
    rows = []
    for _ in range(n):
        row = 0
        for j in range(n):
            if rng.random() < density:
                row |= 1 << j
        rows.append(row)
    return ZeroOneMatrix(n, tuple(rows))


def random_transfers(
    seed: int, count: int, sizes: range = range(3, 8), min_size: int = 1
) -> list[tuple[ZeroOneMatrix, PrimitiveTransfer]]:
    """``count`` random (matrix, transfer) pairs drawn from :func:`enumerate_transfers`.

    Matrices are resampled until one has a transfer of size at least ``min_size``.
    """
    rng = random.Random(seed)
    pairs: list[tuple[ZeroOneMatrix, PrimitiveTransfer]] = []
    while len(pairs) < count:
        a = random_matrix(rng, rng.choice(sizes), rng.choice((0.2, 0.3, 0.45)))
        candidates = [t for t in enumerate_transfers(a) if t.size >= min_size]
        if candidates:
            pairs.append((a, rng.choice(candidates)))
    return pairs


@pytest.fixture
def data_dir() -> Path:
    return DATA_DIR


@pytest.fixture
def eight_a() -> ZeroOneMatrix:
    """The 8x8 example matrix, 0-based."""
    return read_matrix(DATA_DIR / "eight_a.mat")


@pytest.fixture
def eight_b() -> ZeroOneMatrix:
    """Primitive transfer of ``eight_a`` at row 0 with M = {2, 3, 5, 6, 7}."""
    return read_matrix(DATA_DIR / "eight_b.mat")


@pytest.fixture
def eight_transfer() -> PrimitiveTransfer:
    return EIGHT_TRANSFER


@pytest.fixture
def rng() -> random.Random:
    return random.Random(20240517)


@pytest.fixture
def matrix_factory(rng: random.Random) -> Callable[..., ZeroOneMatrix]:
    """Factory for seeded random matrices."""

    def _create(n: int, density: float = 0.35) -> ZeroOneMatrix:
        return random_matrix(rng, n, density)

    return _create


@pytest.fixture
def search_config() -> SearchConfig:
    return SearchConfig(max_n=3, max_states=100_000)
