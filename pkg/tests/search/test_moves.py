import pytest

from primtransfer.core.matrix import ZeroOneMatrix
from primtransfer.decompose.models import MoveKind
from primtransfer.search.moves import iter_neighbors, neighbors
from primtransfer.transfer.models import PrimitiveTransfer


def test_neighbors_lists_forward_then_reverse() -> None:
    a = ZeroOneMatrix.from_rows([[0, 1, 1], [0, 0, 1], [0, 0, 0]])
    found = neighbors(a)
    kinds = [move.kind for move, _ in found]
    assert kinds == sorted(kinds, key=lambda k: k is MoveKind.REVERSE_TRANSFER)
    for move, b in found:
        assert b.n == a.n
        assert move.apply_to(a) == b


def test_reverse_neighbor_example() -> None:
    a = ZeroOneMatrix.from_rows([[0, 1, 1], [0, 0, 1], [0, 0, 0]])
    expected = ZeroOneMatrix.from_rows([[0, 1, 0], [0, 0, 1], [0, 0, 0]])
    reverse = {
        (move.transfer, b) for move, b in neighbors(a) if move.kind is MoveKind.REVERSE_TRANSFER
    }
    assert (PrimitiveTransfer.parse(0, "2", "1"), expected) in reverse


def test_identity_has_no_neighbors() -> None:
    assert neighbors(ZeroOneMatrix.identity(3)) == []


def test_zero_matrix_neighbors() -> None:
    """Zero rows sum to zero rows, so the zero matrix is not isolated."""
    found = neighbors(ZeroOneMatrix.zeros(2))
    assert {b for _, b in found} == {
        ZeroOneMatrix.from_rows([[0, 1], [0, 0]]),
        ZeroOneMatrix.from_rows([[0, 0], [1, 0]]),
    }


def test_iter_neighbors_matches_neighbors(eight_a: ZeroOneMatrix) -> None:
    for a in (eight_a, ZeroOneMatrix.zeros(4), ZeroOneMatrix.from_rows([[0, 1, 1], [0, 0, 1], [0, 0, 0]])):
        assert sorted(iter_neighbors(a), key=str) == sorted(neighbors(a), key=str)


def test_iter_neighbors_is_lazy() -> None:
    """Twenty zero rows admit 2**19 transfers at pivot 0 alone."""
    found = iter_neighbors(ZeroOneMatrix.zeros(20))
    first = [next(found) for _ in range(10)]
    assert all(move.kind is MoveKind.FORWARD_TRANSFER for move, _ in first)


@pytest.mark.slow
def test_neighbor_relation_is_symmetric_on_all_3x3() -> None:
    """Each move is undone by its inverse move, listed among the neighbors of its result."""
    table = {
        key: set(neighbors(ZeroOneMatrix.from_key(3, key))) for key in range(1 << 9)
    }
    for key, found in table.items():
        a = ZeroOneMatrix.from_key(3, key)
        for move, b in found:
            assert (move.inverted(), a) in table[b.key]
