from collections.abc import Iterator

from primtransfer.core.matrix import ZeroOneMatrix
from primtransfer.decompose.models import Move
from primtransfer.transfer.operations import (
    apply,
    enumerate_reverse_transfers,
    enumerate_transfers,
    invert,
    iter_reverse_transfers,
    iter_transfers,
)


def neighbors(a: ZeroOneMatrix) -> list[tuple[Move, ZeroOneMatrix]]:
    """Every matrix one nontrivial transfer away from ``a``.

    Forward transfers come first, then reverse transfers, each in
    enumeration order. Permutation moves are not listed; searches track
    states up to conjugation instead.
    """
    found = [(Move.forward(t), apply(a, t)) for t in enumerate_transfers(a)]
    found.extend(
        (Move.reverse(t), invert(a, t)) for t in enumerate_reverse_transfers(a)
    )
    assert all(b.n == a.n for _, b in found)
    return found


def iter_neighbors(a: ZeroOneMatrix) -> Iterator[tuple[Move, ZeroOneMatrix]]:
    """The moves of :func:`neighbors`, generated lazily and unsorted.

    Callers that must stop after a bounded number of candidates use this
    instead; the number of transfers grows exponentially with zero rows.
    """
    for t in iter_transfers(a):
        yield Move.forward(t), apply(a, t)
    for t in iter_reverse_transfers(a):
        yield Move.reverse(t), invert(a, t)
