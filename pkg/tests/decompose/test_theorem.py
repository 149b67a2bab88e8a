import pytest

from primtransfer.core.matrix import ZeroOneMatrix
from primtransfer.core.permutation import Permutation
from primtransfer.decompose.models import Move, MoveKind, MoveSequence
from primtransfer.decompose.theorem import connected_factors, decompose, refine_sequence
from primtransfer.decompose.verify import verify
from primtransfer.exceptions import DecompositionError
from primtransfer.transfer.graph import transfer_graph
from primtransfer.transfer.models import PrimitiveTransfer
from primtransfer.transfer.operations import apply
from tests.conftest import random_transfers


class TestDecompose:
    def test_eight_transfer(
        self,
        eight_a: ZeroOneMatrix,
        eight_b: ZeroOneMatrix,
        eight_transfer: PrimitiveTransfer,
    ) -> None:
        """Five size-1 moves, one forward move per component."""
        sequence = decompose(eight_a, eight_transfer)
        assert len(sequence) == 5
        assert sequence.count(MoveKind.FORWARD_TRANSFER) == 3
        assert sequence.count(MoveKind.REVERSE_TRANSFER) == 2
        assert sequence.is_size_one
        assert sequence.initial == eight_a
        assert sequence.final == eight_b
        assert verify(sequence)

    def test_eight_move_order(
        self, eight_a: ZeroOneMatrix, eight_transfer: PrimitiveTransfer
    ) -> None:
        kinds = [move.kind for move in decompose(eight_a, eight_transfer).moves]
        assert kinds == [
            MoveKind.FORWARD_TRANSFER,
            MoveKind.FORWARD_TRANSFER,
            MoveKind.REVERSE_TRANSFER,
            MoveKind.REVERSE_TRANSFER,
            MoveKind.FORWARD_TRANSFER,
        ]

    def test_embed_intermediates(
        self, eight_a: ZeroOneMatrix, eight_transfer: PrimitiveTransfer
    ) -> None:
        sequence = decompose(eight_a, eight_transfer, embed_intermediates=True)
        assert sequence.intermediates is not None
        assert len(sequence.intermediates) == 4
        assert list(sequence.intermediates) == sequence.matrices()[1:-1]

    def test_size_zero_is_empty_chain(self) -> None:
        a = ZeroOneMatrix.identity(2)
        sequence = decompose(a, PrimitiveTransfer(0, frozenset(), frozenset({0})))
        assert len(sequence) == 0
        assert verify(sequence)

    def test_rejects_invalid(self, eight_a: ZeroOneMatrix) -> None:
        with pytest.raises(DecompositionError):
            decompose(eight_a, PrimitiveTransfer.parse(0, "2", ""))

    def test_connected_factors(
        self, eight_a: ZeroOneMatrix, eight_transfer: PrimitiveTransfer
    ) -> None:
        factors = connected_factors(eight_a, eight_transfer)
        assert [sorted(t.summands) for _, t in factors] == [[2], [3], [5, 6, 7]]
        assert factors[0][0] == eight_a
        last_matrix, last_transfer = factors[-1]
        assert apply(last_matrix, last_transfer) == apply(eight_a, eight_transfer)

    def test_random_transfers(self) -> None:
        """Length equals size and forward moves equal the component count."""
        for a, t in random_transfers(seed=99, count=1000):
            sequence = decompose(a, t)
            assert len(sequence) == t.size
            assert sequence.is_size_one
            components = len(transfer_graph(a, t).components)
            assert sequence.count(MoveKind.FORWARD_TRANSFER) == components
            assert verify(sequence)


class TestRefineSequence:
    def test_mixed_chain(
        self,
        eight_a: ZeroOneMatrix,
        eight_b: ZeroOneMatrix,
        eight_transfer: PrimitiveTransfer,
    ) -> None:
        """A forward move, a permutation and the reverse move back are all refined."""
        swap = Permutation.transposition(8, 1, 4)
        chain = MoveSequence(
            eight_a,
            (
                Move.forward(eight_transfer),
                Move.permute(swap),
                Move.permute(swap),
                Move.reverse(eight_transfer),
            ),
            eight_a,
        )
        assert verify(chain)
        refined = refine_sequence(chain)
        assert verify(refined)
        assert refined.count(MoveKind.PERMUTE) == 2
        assert all(m.size == 1 for m in refined.moves if m.kind is not MoveKind.PERMUTE)
        assert len(refined) == 12
        assert refined.matrices()[5] == eight_b

    def test_drops_size_zero_moves(self) -> None:
        a = ZeroOneMatrix.identity(2)
        chain = MoveSequence(a, (Move.forward(PrimitiveTransfer(0, frozenset(), frozenset({0}))),), a)
        assert len(refine_sequence(chain)) == 0
