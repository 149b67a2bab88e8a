"""Size-1 decomposition of primitive transfers and chain certificates."""

from .certificate import (
    CertificateDocument,
    MoveRecord,
    dumps_certificate,
    loads_certificate,
    read_certificate,
    write_certificate,
)
from .lemmas import peel_edge, split_component
from .models import Move, MoveKind, MoveSequence, PeelStep
from .theorem import connected_factors, decompose, refine_sequence
from .verify import VerificationReport, verify

__all__ = [
    "Move",
    "MoveKind",
    "MoveSequence",
    "PeelStep",
    "peel_edge",
    "split_component",
    "connected_factors",
    "decompose",
    "refine_sequence",
    "verify",
    "VerificationReport",
    "CertificateDocument",
    "MoveRecord",
    "dumps_certificate",
    "loads_certificate",
    "read_certificate",
    "write_certificate",
]
