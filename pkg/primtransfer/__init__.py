"""Primtransfer - primitive transfers and primitive equivalence of 0-1 matrices."""

from importlib.metadata import PackageNotFoundError, version

from primtransfer.core.canonical import canonical_form, find_conjugator, orbit_size
from primtransfer.core.config import CanonicalConfig
from primtransfer.core.matrix import ZeroOneMatrix
from primtransfer.core.permutation import Permutation, conjugate
from primtransfer.core.textio import format_matrix, parse_matrix, read_matrix, write_matrix
from primtransfer.decompose.certificate import read_certificate, write_certificate
from primtransfer.decompose.models import Move, MoveKind, MoveSequence
from primtransfer.decompose.theorem import decompose, refine_sequence
from primtransfer.decompose.verify import VerificationReport, verify
from primtransfer.exceptions import (
    CertificateError,
    DecompositionError,
    InvalidTransferError,
    MatrixError,
    MatrixFormatError,
    SearchLimitError,
    TransferError,
)
from primtransfer.search.atlas import classify, format_atlas
from primtransfer.search.config import SearchConfig
from primtransfer.search.explorer import (
    EquivalenceExplorer,
    SearchLevelEvent,
    SearchStartEvent,
    SearchStopEvent,
    are_equivalent,
    equivalence_class,
)
from primtransfer.search.irreducible import is_irreducible
from primtransfer.search.models import ClassAtlas, EquivalenceResult, Verdict
from primtransfer.transfer.graph import TransferGraph, transfer_graph
from primtransfer.transfer.models import PrimitiveTransfer
from primtransfer.transfer.operations import (
    apply,
    enumerate_reverse_transfers,
    enumerate_transfers,
    invert,
    validate,
)

try:
    __version__ = version("primtransfer")
except PackageNotFoundError:
    __version__ = "0.0.0"

__all__ = [
    "__version__",
    # Matrices
    "ZeroOneMatrix",
    "Permutation",
    "CanonicalConfig",
    "conjugate",
    "canonical_form",
    "orbit_size",
    "find_conjugator",
    "parse_matrix",
    "format_matrix",
    "read_matrix",
    "write_matrix",
    # Transfers
    "PrimitiveTransfer",
    "TransferGraph",
    "validate",
    "apply",
    "invert",
    "enumerate_transfers",
    "enumerate_reverse_transfers",
    "transfer_graph",
    # Decomposition
    "Move",
    "MoveKind",
    "MoveSequence",
    "decompose",
    "refine_sequence",
    "verify",
    "VerificationReport",
    "read_certificate",
    "write_certificate",
    # Search
    "SearchConfig",
    "EquivalenceExplorer",
    "EquivalenceResult",
    "Verdict",
    "ClassAtlas",
    "equivalence_class",
    "are_equivalent",
    "classify",
    "format_atlas",
    "is_irreducible",
    # Events
    "SearchStartEvent",
    "SearchLevelEvent",
    "SearchStopEvent",
    # Exceptions
    "TransferError",
    "MatrixError",
    "MatrixFormatError",
    "InvalidTransferError",
    "DecompositionError",
    "CertificateError",
    "SearchLimitError",
]
