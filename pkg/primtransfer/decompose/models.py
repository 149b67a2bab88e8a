from dataclasses import dataclass, field
from enum import Enum

from primtransfer.core.matrix import ZeroOneMatrix, iter_bits
from primtransfer.core.permutation import Permutation, conjugate
from primtransfer.exceptions import (
    CertificateError,
    DecompositionError,
    InvalidTransferError,
)
from primtransfer.transfer.models import PrimitiveTransfer
from primtransfer.transfer.operations import apply, invert, validate


class MoveKind(Enum):
    FORWARD_TRANSFER = "forward_transfer"
    REVERSE_TRANSFER = "reverse_transfer"
    PERMUTE = "permute"


@dataclass(frozen=True, slots=True)
class Move:
    """One step of a primitive equivalence chain.

    A forward move replaces the current matrix ``x`` by ``apply(x, t)``. A
    reverse move replaces it by the matrix ``y`` with ``apply(y, t) == x``.
    A permute move replaces it by ``conjugate(x, perm)``.
    """

    kind: MoveKind
    transfer: PrimitiveTransfer | None = None
    perm: Permutation | None = None

    def __post_init__(self) -> None:
        if self.kind is MoveKind.PERMUTE:
            if self.perm is None or self.transfer is not None:
                raise CertificateError("A permute move carries exactly a permutation")
        elif self.transfer is None or self.perm is not None:
            raise CertificateError(f"A {self.kind.value} move carries exactly a transfer")

    @classmethod
    def forward(cls, t: PrimitiveTransfer) -> "Move":
        return cls(MoveKind.FORWARD_TRANSFER, transfer=t)

    @classmethod
    def reverse(cls, t: PrimitiveTransfer) -> "Move":
        return cls(MoveKind.REVERSE_TRANSFER, transfer=t)

    @classmethod
    def permute(cls, perm: Permutation) -> "Move":
        return cls(MoveKind.PERMUTE, perm=perm)

    @property
    def size(self) -> int | None:
        """Transfer size, or None for a permute move."""
        return None if self.transfer is None else self.transfer.size

    def apply_to(self, x: ZeroOneMatrix) -> ZeroOneMatrix:
        """The matrix this move leads to from ``x``.

        Raises:
            InvalidTransferError: If the move is not legal at ``x``.
            MatrixError: If indices or sizes do not fit ``x``.
        """
        if self.kind is MoveKind.PERMUTE:
            assert self.perm is not None
            return conjugate(x, self.perm)
        assert self.transfer is not None
        if self.kind is MoveKind.FORWARD_TRANSFER:
            return apply(x, self.transfer)
        previous = invert(x, self.transfer)
        if not validate(previous, self.transfer) or apply(previous, self.transfer) != x:
            raise InvalidTransferError(f"Reverse move {self.transfer} does not reproduce the matrix")
        return previous

    def inverted(self) -> "Move":
        """The move leading back."""
        if self.kind is MoveKind.PERMUTE:
            assert self.perm is not None
            return Move.permute(self.perm.inverse())
        assert self.transfer is not None
        if self.kind is MoveKind.FORWARD_TRANSFER:
            return Move.reverse(self.transfer)
        return Move.forward(self.transfer)

    def __str__(self) -> str:
        if self.kind is MoveKind.PERMUTE:
            assert self.perm is not None
            return f"permute {','.join(map(str, self.perm.mapping))}"
        return f"{self.kind.value} {self.transfer}"


@dataclass(frozen=True, slots=True)
class MoveSequence:
    """Chain ``initial = C_1, ..., C_n = final`` given by its moves.

    ``intermediates`` optionally records ``C_2 .. C_{n-1}`` for inspection;
    :func:`verify` never reads it.
    """

    initial: ZeroOneMatrix
    moves: tuple[Move, ...]
    final: ZeroOneMatrix
    intermediates: tuple[ZeroOneMatrix, ...] | None = field(default=None)

    def __post_init__(self) -> None:
        object.__setattr__(self, "moves", tuple(self.moves))
        n = self.initial.n
        if self.final.n != n:
            raise CertificateError(
                f"Chain starts at dimension {n} but ends at {self.final.n}"
            )
        for move in self.moves:
            if move.perm is not None and move.perm.n != n:
                raise CertificateError(f"Permutation {move} does not act on dimension {n}")
        if self.intermediates is not None and any(
            c.n != n for c in self.intermediates
        ):
            raise CertificateError(f"Intermediate matrix of wrong dimension in chain of size {n}")

    def __len__(self) -> int:
        return len(self.moves)

    @property
    def n(self) -> int:
        return self.initial.n

    def count(self, kind: MoveKind) -> int:
        return sum(1 for move in self.moves if move.kind is kind)

    @property
    def is_size_one(self) -> bool:
        """Every move is a transfer of size exactly 1."""
        return all(move.size == 1 for move in self.moves)

    def matrices(self) -> list[ZeroOneMatrix]:
        """Replay the chain and return every matrix, ``initial`` first.

        Raises:
            InvalidTransferError: If a move is not legal where it is applied.
        """
        chain = [self.initial]
        for move in self.moves:
            chain.append(move.apply_to(chain[-1]))
        return chain

    def with_intermediates(self) -> "MoveSequence":
        chain = self.matrices()
        return MoveSequence(self.initial, self.moves, self.final, tuple(chain[1:-1]))

    def reversed(self) -> "MoveSequence":
        """The chain from ``final`` back to ``initial``."""
        return MoveSequence(
            self.final,
            tuple(move.inverted() for move in reversed(self.moves)),
            self.initial,
            None if self.intermediates is None else tuple(reversed(self.intermediates)),
        )

    def then(self, other: "MoveSequence") -> "MoveSequence":
        """Concatenate two chains meeting at ``self.final``."""
        if other.initial != self.final:
            raise CertificateError("Chains do not meet: final and initial differ")
        return MoveSequence(self.initial, self.moves + other.moves, other.final)


@dataclass(frozen=True, slots=True)
class PeelStep:
    """Non-loop edge ``(source, target)`` of a transfer graph and the columns ``J``.

    ``columns`` is ``{j : A[source, j] = 1, j != target}``.
    """

    source: int
    target: int
    columns: frozenset[int]

    @classmethod
    def for_edge(cls, a: ZeroOneMatrix, source: int, target: int) -> "PeelStep":
        """Step for edge ``(source, target)`` with ``J`` read off ``a``.

        Raises:
            DecompositionError: If the edge is a loop or not an edge of ``a``.
        """
        if source == target:
            raise DecompositionError(f"Edge ({source},{target}) is a loop")
        if not a.entry(source, target):
            raise DecompositionError(f"({source},{target}) is not an edge of the matrix")
        columns = frozenset(iter_bits(a.rows[source] & ~(1 << target)))
        return cls(source, target, columns)
