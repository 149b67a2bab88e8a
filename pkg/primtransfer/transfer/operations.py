"""Validation, application, inversion and enumeration of primitive transfers.

For a transfer ``t = (p, M, K)`` on ``A`` the defining equation is

    A_p = sum(A_m for m in M) + sum(E_k for k in K)

over the integers. On bitmask rows this means the rows ``A_m`` are pairwise
disjoint, disjoint from ``K``, and together with ``K`` cover ``A_p``
exactly. The transfer replaces row ``p`` by the indicator of ``M ∪ K``.
"""

import logging
from collections.abc import Iterator

from primtransfer.core.matrix import ZeroOneMatrix, iter_bits
from primtransfer.exceptions import InvalidTransferError, MatrixError
from primtransfer.transfer.models import PrimitiveTransfer

logger = logging.getLogger(__name__)


def _check_indices(a: ZeroOneMatrix, t: PrimitiveTransfer) -> None:
    if t.max_index >= a.n:
        raise MatrixError(
            f"Transfer {t} refers to index {t.max_index}, matrix has dimension {a.n}"
        )


def _summed_rows(a: ZeroOneMatrix, summand_mask: int) -> int | None:
    """Union of the rows in ``summand_mask``, or None if two of them overlap."""
    total = 0
    for m in iter_bits(summand_mask):
        row = a.rows[m]
        if total & row:
            return None
        total |= row
    return total


def validate(a: ZeroOneMatrix, t: PrimitiveTransfer) -> bool:
    """True iff ``t`` is a primitive transfer of ``a``.

    Raises:
        MatrixError: If ``t`` refers to an index outside ``a``.
    """
    _check_indices(a, t)
    if not t.is_well_formed:
        return False
    total = _summed_rows(a, t.summand_mask)
    if total is None:
        return False
    units = t.unit_mask
    if total & units:
        return False
    return total | units == a.rows[t.pivot]


def apply(a: ZeroOneMatrix, t: PrimitiveTransfer) -> ZeroOneMatrix:
    """The primitive transfer of ``a`` at ``t.pivot``.

    Row ``p`` of the result is the indicator of ``M ∪ K``; other rows are
    unchanged.

    Raises:
        InvalidTransferError: If ``validate(a, t)`` is false.
    """
    if not validate(a, t):
        raise InvalidTransferError(f"{t} is not a primitive transfer of the matrix")
    summands = t.summand_mask
    row = summands | t.unit_mask
    # B_p = A_p - sum A_m + sum E_m; the summed rows are disjoint sub-masks of A_p
    assert a.rows[t.pivot] - (_summed_rows(a, summands) or 0) + summands == row
    logger.debug("Applying transfer %s", t)
    return a.with_row(t.pivot, row)


def invert(b: ZeroOneMatrix, t: PrimitiveTransfer) -> ZeroOneMatrix:
    """The unique ``a`` with ``apply(a, t) == b``.

    Raises:
        InvalidTransferError: If row ``p`` of ``b`` is not the indicator of
            ``M ∪ K``, or the reconstructed row is not 0-1.
    """
    _check_indices(b, t)
    if not t.is_well_formed:
        raise InvalidTransferError(f"{t} is not well formed")
    units = t.unit_mask
    if b.rows[t.pivot] != t.summand_mask | units:
        raise InvalidTransferError(
            f"Row {t.pivot} does not match the indicator of M ∪ K for {t}"
        )
    total = _summed_rows(b, t.summand_mask)
    if total is None or total & units:
        raise InvalidTransferError(f"Reconstructed row {t.pivot} for {t} is not 0-1")
    a = b.with_row(t.pivot, total | units)
    assert validate(a, t)
    return a


def _disjoint_subsets(
    rows: tuple[int, ...], candidates: list[int], start: int, used: int, chosen: int
) -> Iterator[tuple[int, int]]:
    """Yield ``(union, subset)`` masks for every subset with disjoint rows."""
    yield used, chosen
    for position in range(start, len(candidates)):
        m = candidates[position]
        row = rows[m]
        if row & used:
            continue
        yield from _disjoint_subsets(
            rows, candidates, position + 1, used | row, chosen | 1 << m
        )


def _transfer(pivot: int, summands: int, units: int) -> PrimitiveTransfer:
    return PrimitiveTransfer(
        pivot, frozenset(iter_bits(summands)), frozenset(iter_bits(units))
    )


def iter_transfers(
    a: ZeroOneMatrix, include_trivial: bool = False
) -> Iterator[PrimitiveTransfer]:
    """Lazily yield the primitive transfers of ``a``, pivot by pivot.

    Within a pivot the order is that of the subset search, not bitmask
    order; :func:`enumerate_transfers` sorts.
    """
    for p in range(a.n):
        support = a.rows[p]
        candidates = [
            m for m in range(a.n) if m != p and a.rows[m] & ~support == 0
        ]
        for used, chosen in _disjoint_subsets(a.rows, candidates, 0, 0, 0):
            if not chosen and not include_trivial:
                continue
            units = support & ~used
            if chosen & units:
                continue
            yield _transfer(p, chosen, units)


def enumerate_transfers(
    a: ZeroOneMatrix, include_trivial: bool = False
) -> list[PrimitiveTransfer]:
    """Every primitive transfer of ``a``, ordered by pivot then ``M`` as a bitmask.

    ``K`` is forced once ``(p, M)`` is fixed, so only pivots and subsets of
    rows with disjoint supports inside ``A_p`` are searched. Trivial
    transfers (``M`` empty) are left out unless ``include_trivial``.
    """
    return sorted(iter_transfers(a, include_trivial), key=lambda t: t.sort_key)


def iter_reverse_transfers(
    b: ZeroOneMatrix, include_trivial: bool = False
) -> Iterator[PrimitiveTransfer]:
    """Lazily yield the reverse transfers of ``b``, pivot by pivot."""
    for p in range(b.n):
        support = b.rows[p]
        candidates = [m for m in iter_bits(support) if m != p]
        for used, chosen in _disjoint_subsets(b.rows, candidates, 0, 0, 0):
            if not chosen and not include_trivial:
                continue
            units = support & ~chosen
            if used & units:
                continue
            yield _transfer(p, chosen, units)


def enumerate_reverse_transfers(
    b: ZeroOneMatrix, include_trivial: bool = False
) -> list[PrimitiveTransfer]:
    """Every ``t`` for which some ``a`` has ``apply(a, t) == b``.

    Row ``p`` of ``b`` must be the indicator of ``M ∪ K``, so ``M`` ranges
    over subsets of that row (without ``p``) and ``K`` is the rest. A
    candidate survives when :func:`invert` would produce a 0-1 row.
    """
    return sorted(iter_reverse_transfers(b, include_trivial), key=lambda t: t.sort_key)
