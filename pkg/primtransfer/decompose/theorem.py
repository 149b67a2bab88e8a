"""Reduction of any primitive transfer to a chain of size-1 transfers.

The transfer is first factored into transfers with connected graphs by
splitting off, one at a time, the component with the smallest vertex. Each
connected factor of size ``s`` is then peeled ``s - 1`` times along its
lexicographically smallest non-loop edge, and the remaining size-1 transfer
is applied forward. A connected graph with two or more vertices always has a
non-loop edge and peeling keeps it connected, so the loop terminates with
exactly ``size(t)`` moves.
"""

import logging

from primtransfer.core.matrix import ZeroOneMatrix
from primtransfer.exceptions import DecompositionError
from primtransfer.transfer.graph import transfer_graph
from primtransfer.transfer.models import PrimitiveTransfer
from primtransfer.transfer.operations import apply, validate

from .lemmas import peel_edge, split_component
from .models import Move, MoveKind, MoveSequence, PeelStep

logger = logging.getLogger(__name__)


def connected_factors(
    a: ZeroOneMatrix, t: PrimitiveTransfer
) -> list[tuple[ZeroOneMatrix, PrimitiveTransfer]]:
    """Factor ``t`` into transfers whose graphs are connected.

    Returns ``[(D_1, t_1), ..., (D_k, t_k)]`` with ``D_1 = a``,
    ``D_{i+1} = apply(D_i, t_i)`` and ``apply(D_k, t_k) = apply(a, t)``.
    A size-0 transfer has no factors.
    """
    if not validate(a, t):
        raise DecompositionError(f"{t} is not a primitive transfer of the matrix")
    factors = []
    current, remaining = a, t
    while remaining.summands:
        graph = transfer_graph(current, remaining)
        if graph.is_connected:
            factors.append((current, remaining))
            break
        first = graph.components[0]
        d, t_first, t_second = split_component(current, remaining, first)
        factors.append((current, t_first))
        current, remaining = d, t_second
    return factors


def _decompose_connected(x: ZeroOneMatrix, t: PrimitiveTransfer) -> list[Move]:
    moves = []
    while t.size > 1:
        graph = transfer_graph(x, t)
        edges = graph.non_loop_edges()
        if not edges:
            raise DecompositionError(f"Transfer graph of {t} has no non-loop edge")
        source, target = min(edges)
        c, t_back, t_rest = peel_edge(x, t, PeelStep.for_edge(x, source, target))
        # x is a size-1 transfer of c, so the chain steps backwards to c
        moves.append(Move.reverse(t_back))
        x, t = c, t_rest
    moves.append(Move.forward(t))
    return moves


def decompose(
    a: ZeroOneMatrix, t: PrimitiveTransfer, embed_intermediates: bool = False
) -> MoveSequence:
    """Chain of size-1 moves from ``a`` to ``apply(a, t)``.

    Every move is a forward or reverse transfer of size 1; there is one
    forward move per weak component of the transfer graph. A size-0
    transfer yields the empty chain.

    Raises:
        DecompositionError: If ``t`` is not a primitive transfer of ``a``.
    """
    factors = connected_factors(a, t)
    moves: list[Move] = []
    for x, factor in factors:
        moves.extend(_decompose_connected(x, factor))
    sequence = MoveSequence(a, tuple(moves), apply(a, t))
    logger.debug(
        "Decomposed %s into %d size-1 moves over %d components",
        t,
        len(moves),
        len(factors),
    )
    assert len(moves) == t.size
    return sequence.with_intermediates() if embed_intermediates else sequence


def refine_sequence(sequence: MoveSequence) -> MoveSequence:
    """Rewrite every transfer move of size above 1 as a size-1 chain.

    Forward moves are replaced by their decomposition, reverse moves by the
    reversed decomposition of the transfer they undo. Size-0 moves are
    dropped; permute moves are kept.
    """
    moves: list[Move] = []
    current = sequence.initial
    for move in sequence.moves:
        following = move.apply_to(current)
        if move.kind is MoveKind.PERMUTE or move.size == 1:
            moves.append(move)
        elif move.size:
            assert move.transfer is not None
            if move.kind is MoveKind.FORWARD_TRANSFER:
                moves.extend(decompose(current, move.transfer).moves)
            else:
                moves.extend(decompose(following, move.transfer).reversed().moves)
        current = following
    return MoveSequence(sequence.initial, tuple(moves), sequence.final)

