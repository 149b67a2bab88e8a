"""JSON certificate documents.

Key order is fixed: ``n``, ``initial``, ``moves``, ``final`` and, when
requested, ``intermediates``. Matrices are lists of row strings in the
matrix text format; move records are ``{kind, p, M, K}`` or
``{kind, perm}``. All indices are 0-based.
"""

from pathlib import Path
from typing import ClassVar

from pydantic import BaseModel, ConfigDict, Field, ValidationError

from primtransfer.core.matrix import ZeroOneMatrix
from primtransfer.core.permutation import Permutation
from primtransfer.core.textio import parse_matrix
from primtransfer.exceptions import CertificateError, MatrixError
from primtransfer.transfer.models import PrimitiveTransfer

from .models import Move, MoveKind, MoveSequence


class MoveRecord(BaseModel):
    """Serialized form of a :class:`Move`."""

    model_config: ClassVar[ConfigDict] = ConfigDict(frozen=True, extra="forbid")

    kind: MoveKind
    p: int | None = Field(default=None, ge=0, description="Pivot row")
    M: list[int] | None = Field(default=None, description="Summed rows, ascending")
    K: list[int] | None = Field(default=None, description="Unit columns, ascending")
    perm: list[int] | None = Field(default=None, description="Image of each vertex")

    @classmethod
    def from_move(cls, move: Move) -> "MoveRecord":
        if move.perm is not None:
            return cls(kind=move.kind, perm=list(move.perm.mapping))
        assert move.transfer is not None
        t = move.transfer
        return cls(kind=move.kind, p=t.pivot, M=sorted(t.summands), K=sorted(t.units))

    def to_move(self) -> Move:
        if self.kind is MoveKind.PERMUTE:
            if self.perm is None:
                raise CertificateError("permute record without perm")
            return Move.permute(Permutation.of(self.perm))
        if self.p is None:
            raise CertificateError(f"{self.kind.value} record without p")
        t = PrimitiveTransfer(self.p, frozenset(self.M or ()), frozenset(self.K or ()))
        return Move(self.kind, transfer=t)


class CertificateDocument(BaseModel):
    """Top-level certificate document."""

    model_config: ClassVar[ConfigDict] = ConfigDict(frozen=True, extra="forbid")

    n: int = Field(ge=1, description="Dimension shared by every matrix in the chain")
    initial: list[str]
    moves: list[MoveRecord] = Field(default_factory=list)
    final: list[str]
    intermediates: list[list[str]] | None = None


def _rows_to_matrix(n: int, rows: list[str], label: str) -> ZeroOneMatrix:
    return parse_matrix("\n".join([str(n), *rows]), source=label)


def to_document(sequence: MoveSequence) -> CertificateDocument:
    return CertificateDocument(
        n=sequence.n,
        initial=sequence.initial.row_strings(),
        moves=[MoveRecord.from_move(move) for move in sequence.moves],
        final=sequence.final.row_strings(),
        intermediates=(
            None
            if sequence.intermediates is None
            else [c.row_strings() for c in sequence.intermediates]
        ),
    )


def from_document(document: CertificateDocument) -> MoveSequence:
    """Rebuild the chain described by ``document``.

    Raises:
        CertificateError: If a matrix or move record is malformed.
    """
    n = document.n
    try:
        initial = _rows_to_matrix(n, document.initial, "initial")
        final = _rows_to_matrix(n, document.final, "final")
        intermediates = (
            None
            if document.intermediates is None
            else tuple(
                _rows_to_matrix(n, rows, f"intermediates[{i}]")
                for i, rows in enumerate(document.intermediates)
            )
        )
        moves = tuple(record.to_move() for record in document.moves)
    except MatrixError as e:
        raise CertificateError(str(e)) from e
    return MoveSequence(initial, moves, final, intermediates)


def dumps_certificate(sequence: MoveSequence) -> str:
    return to_document(sequence).model_dump_json(indent=2, exclude_none=True) + "\n"


def loads_certificate(text: str) -> MoveSequence:
    """Parse a certificate document.

    Raises:
        CertificateError: If the text is not a well-formed certificate.
    """
    try:
        document = CertificateDocument.model_validate_json(text)
    except ValidationError as e:
        raise CertificateError(f"Malformed certificate: {e}") from e
    return from_document(document)


def write_certificate(path: str | Path, sequence: MoveSequence) -> None:
    Path(path).write_text(dumps_certificate(sequence), encoding="utf-8")


def read_certificate(path: str | Path) -> MoveSequence:
    """Read a certificate file.

    Raises:
        CertificateError: If the file is not UTF-8 or not a well-formed certificate.
    """
    try:
        text = Path(path).read_bytes().decode("utf-8")
    except UnicodeDecodeError as e:
        raise CertificateError(f"Certificate is not valid UTF-8: {e.reason} at byte {e.start}") from e
    return loads_certificate(text)
