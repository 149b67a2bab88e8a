import logging
from dataclasses import dataclass

from primtransfer.exceptions import TransferError

from .models import MoveSequence

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of replaying a chain; truthy iff the chain is valid."""

    valid: bool
    failed_move: int | None = None
    reason: str = ""

    def __bool__(self) -> bool:
        return self.valid


def verify(sequence: MoveSequence) -> VerificationReport:
    """Replay ``sequence`` from ``initial`` and compare bitwise with ``final``.

    Forward moves must validate at the current matrix. Reverse moves
    reconstruct the predecessor with ``invert`` and check that the transfer
    validates there and reproduces the current matrix. Embedded
    intermediates are ignored. Never raises for an invalid chain;
    ``failed_move`` is the 0-based index of the first bad move, or
    ``len(moves)`` when the replay ends at the wrong matrix.
    """
    current = sequence.initial
    for index, move in enumerate(sequence.moves):
        try:
            current = move.apply_to(current)
        except TransferError as e:
            logger.info("Move %d (%s) failed: %s", index, move, e)
            return VerificationReport(False, index, f"move {index} ({move}): {e}")
    if current != sequence.final:
        logger.info("Replay of %d moves does not end at final", len(sequence))
        return VerificationReport(
            False, len(sequence), "replay does not end at the final matrix"
        )
    return VerificationReport(True)
