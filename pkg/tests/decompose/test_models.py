import pytest

from primtransfer.core.matrix import ZeroOneMatrix
from primtransfer.core.permutation import Permutation, conjugate
from primtransfer.decompose.models import Move, MoveKind, MoveSequence
from primtransfer.decompose.theorem import decompose
from primtransfer.exceptions import CertificateError, InvalidTransferError
from primtransfer.transfer.models import PrimitiveTransfer


class TestMove:
    def test_kind_must_match_payload(self) -> None:
        t = PrimitiveTransfer(0)
        with pytest.raises(CertificateError):
            Move(MoveKind.PERMUTE, transfer=t)
        with pytest.raises(CertificateError):
            Move(MoveKind.FORWARD_TRANSFER)
        with pytest.raises(CertificateError):
            Move(MoveKind.REVERSE_TRANSFER, transfer=t, perm=Permutation.identity(1))

    def test_apply_to(
        self,
        eight_a: ZeroOneMatrix,
        eight_b: ZeroOneMatrix,
        eight_transfer: PrimitiveTransfer,
    ) -> None:
        assert Move.forward(eight_transfer).apply_to(eight_a) == eight_b
        assert Move.reverse(eight_transfer).apply_to(eight_b) == eight_a
        p = Permutation.of([1, 0, 2, 3, 4, 5, 6, 7])
        assert Move.permute(p).apply_to(eight_a) == conjugate(eight_a, p)

    def test_reverse_move_illegal_at_matrix(
        self, eight_a: ZeroOneMatrix, eight_transfer: PrimitiveTransfer
    ) -> None:
        with pytest.raises(InvalidTransferError):
            Move.reverse(eight_transfer).apply_to(eight_a)

    def test_inverted_swaps_direction(self, eight_transfer: PrimitiveTransfer) -> None:
        forward = Move.forward(eight_transfer)
        assert forward.inverted() == Move.reverse(eight_transfer)
        assert forward.inverted().inverted() == forward
        p = Permutation.of([2, 0, 1])
        assert Move.permute(p).inverted().perm == p.inverse()

    def test_size(self, eight_transfer: PrimitiveTransfer) -> None:
        assert Move.forward(eight_transfer).size == 5
        assert Move.permute(Permutation.identity(2)).size is None

    def test_str(self, eight_transfer: PrimitiveTransfer) -> None:
        assert str(Move.forward(eight_transfer)) == "forward_transfer p=0;M=2,3,5,6,7;K="
        assert str(Move.permute(Permutation.of([1, 0]))) == "permute 1,0"


class TestMoveSequence:
    def test_dimension_checks(self) -> None:
        with pytest.raises(CertificateError):
            MoveSequence(ZeroOneMatrix.zeros(2), (), ZeroOneMatrix.zeros(3))
        with pytest.raises(CertificateError):
            MoveSequence(
                ZeroOneMatrix.zeros(2),
                (Move.permute(Permutation.identity(3)),),
                ZeroOneMatrix.zeros(2),
            )

    def test_reversed_replays_backwards(
        self, eight_a: ZeroOneMatrix, eight_transfer: PrimitiveTransfer
    ) -> None:
        sequence = decompose(eight_a, eight_transfer)
        backwards = sequence.reversed()
        assert backwards.initial == sequence.final
        assert backwards.final == eight_a
        assert backwards.matrices() == list(reversed(sequence.matrices()))

    def test_then(self, eight_a: ZeroOneMatrix, eight_transfer: PrimitiveTransfer) -> None:
        there = decompose(eight_a, eight_transfer)
        round_trip = there.then(there.reversed())
        assert round_trip.initial == round_trip.final == eight_a
        assert len(round_trip) == 10
        with pytest.raises(CertificateError):
            there.then(there)
