"""The two reduction steps behind the size-1 decomposition.

``peel_edge`` removes one vertex from a transfer graph along a non-loop edge
and ``split_component`` factors a transfer whose graph is disconnected.
"""

import logging
from collections.abc import Iterable

from primtransfer.core.matrix import ZeroOneMatrix, iter_bits, mask_of
from primtransfer.exceptions import DecompositionError
from primtransfer.transfer.graph import transfer_graph
from primtransfer.transfer.models import PrimitiveTransfer
from primtransfer.transfer.operations import apply, validate

from .models import PeelStep

logger = logging.getLogger(__name__)


def _require_valid(a: ZeroOneMatrix, t: PrimitiveTransfer) -> None:
    if not validate(a, t):
        raise DecompositionError(f"{t} is not a primitive transfer of the matrix")


def peel_edge(
    a: ZeroOneMatrix, t: PrimitiveTransfer, step: PeelStep
) -> tuple[ZeroOneMatrix, PrimitiveTransfer, PrimitiveTransfer]:
    """Factor ``t`` through an intermediate matrix ``c`` along edge ``(l, n)``.

    ``c`` equals ``a`` except ``C_l = A_l + A_n - E_n``. Returns
    ``(c, t_back, t_rest)`` where ``t_back = (l, {n}, J)`` is a size-1
    transfer of ``c`` producing ``a`` and ``t_rest = (p, M - {n}, K + {n})``
    is a transfer of ``c`` producing ``apply(a, t)``.

    Raises:
        DecompositionError: If ``t`` is invalid, has size below 2, or the
            step is a loop, not an edge of the transfer graph, or carries
            the wrong ``J``.
    """
    _require_valid(a, t)
    if t.size < 2:
        raise DecompositionError(f"Peeling needs a transfer of size >= 2, got {t.size}")
    l, n = step.source, step.target
    if l == n:
        raise DecompositionError(f"Edge ({l},{n}) is a loop")
    if (l, n) not in transfer_graph(a, t).edges:
        raise DecompositionError(f"({l},{n}) is not an edge of the transfer graph")
    expected = PeelStep.for_edge(a, l, n)
    if step.columns != expected.columns:
        raise DecompositionError(
            f"Column set {sorted(step.columns)} does not match row {l} of the matrix"
        )

    # rows l and n are disjoint summands and A[l, n] = 1, so this stays 0-1
    peeled = (a.rows[l] | a.rows[n]) & ~(1 << n)
    assert a.rows[l] + a.rows[n] - (1 << n) == peeled
    c = a.with_row(l, peeled)

    t_back = PrimitiveTransfer(l, frozenset({n}), step.columns)
    t_rest = PrimitiveTransfer(t.pivot, t.summands - {n}, t.units | {n})
    assert validate(c, t_back) and apply(c, t_back) == a
    assert validate(c, t_rest)
    logger.debug("Peeled edge (%d,%d) off %s", l, n, t)
    return c, t_back, t_rest


def split_component(
    a: ZeroOneMatrix, t: PrimitiveTransfer, component: Iterable[int]
) -> tuple[ZeroOneMatrix, PrimitiveTransfer, PrimitiveTransfer]:
    """Factor ``t`` into a transfer with graph ``F`` followed by one with ``G - F``.

    With ``H = M - F`` and ``J`` the union of the supports of the rows in
    ``H``, returns ``(d, t_first, t_second)`` where ``t_first = (p, F, K + J)``,
    ``d = apply(a, t_first)`` and ``t_second = (p, H, K + F)`` is a transfer of
    ``d`` producing ``apply(a, t)``.

    Raises:
        DecompositionError: If ``t`` is invalid, ``component`` is not a weak
            component of its graph, or it is the only component.
    """
    _require_valid(a, t)
    f = frozenset(component)
    graph = transfer_graph(a, t)
    if tuple(sorted(f)) not in graph.components:
        raise DecompositionError(f"{sorted(f)} is not a component of the transfer graph")
    if len(graph.components) < 2:
        raise DecompositionError("Cannot split off the only component")

    rest = t.summands - f
    spanned = 0
    for h in rest:
        spanned |= a.rows[h]
    t_first = PrimitiveTransfer(t.pivot, f, t.units | frozenset(iter_bits(spanned)))
    d = apply(a, t_first)
    t_second = PrimitiveTransfer(t.pivot, rest, t.units | f)
    assert mask_of(f) & spanned == 0
    assert validate(d, t_second)
    logger.debug("Split component %s off %s", sorted(f), t)
    return d, t_first, t_second
