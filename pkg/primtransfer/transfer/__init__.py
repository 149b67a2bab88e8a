"""Primitive transfers: validation, application, inversion, enumeration, graphs."""

from .graph import DisjointSet, TransferGraph, induced_graph, transfer_graph
from .models import PrimitiveTransfer, parse_indices
from .operations import (
    apply,
    enumerate_reverse_transfers,
    enumerate_transfers,
    invert,
    iter_reverse_transfers,
    iter_transfers,
    validate,
)

__all__ = [
    "PrimitiveTransfer",
    "TransferGraph",
    "DisjointSet",
    "parse_indices",
    "validate",
    "apply",
    "invert",
    "enumerate_transfers",
    "enumerate_reverse_transfers",
    "iter_transfers",
    "iter_reverse_transfers",
    "transfer_graph",
    "induced_graph",
]
