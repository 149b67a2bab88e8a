class TransferError(Exception):
    """Base exception for primtransfer errors."""

    pass


class MatrixError(TransferError):
    """Raised when a matrix, digraph or permutation is malformed or mismatched."""

    pass


class MatrixFormatError(MatrixError):
    """Raised when matrix text cannot be parsed.

    ``line`` and ``column`` are 1-based positions in the source text.
    """

    def __init__(
        self, message: str, line: int, column: int, source: str = "<string>"
    ) -> None:
        super().__init__(f"{source}:{line}:{column}: {message}")
        self.line = line
        self.column = column
        self.source = source


class InvalidTransferError(TransferError):
    """Raised when a primitive transfer does not satisfy its row equation."""

    pass


class DecompositionError(TransferError):
    """Raised when a lemma or decomposition precondition fails."""

    pass


class CertificateError(TransferError):
    """Raised when a certificate document cannot be read."""

    pass


class SearchLimitError(TransferError):
    """Raised when a matrix is too large for exhaustive canonicalization or search."""

    pass
