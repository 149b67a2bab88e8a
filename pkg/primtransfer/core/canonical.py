"""Canonical forms under simultaneous row/column permutation.

The canonical form of ``a`` is its conjugate with the smallest
:attr:`ZeroOneMatrix.key`, found by trying every permutation. That is
40320 candidates at ``n = 8``, so results are memoized per matrix.
"""

from collections.abc import Iterator
from functools import lru_cache
from itertools import permutations

from primtransfer.core.config import CanonicalConfig
from primtransfer.core.matrix import ZeroOneMatrix, iter_bits
from primtransfer.core.permutation import Permutation, conjugate
from primtransfer.exceptions import SearchLimitError

DEFAULT_CANONICAL_CONFIG = CanonicalConfig()


def _conjugate_keys(a: ZeroOneMatrix) -> Iterator[tuple[int, tuple[int, ...]]]:
    """Yield ``(key, mapping)`` for the conjugate of ``a`` under every permutation."""
    n = a.n
    supports = [tuple(iter_bits(row)) for row in a.rows]
    for mapping in permutations(range(n)):
        column_bits = [1 << (n - 1 - target) for target in mapping]
        key = 0
        for v, support in enumerate(supports):
            row_key = 0
            for w in support:
                row_key |= column_bits[w]
            key |= row_key << (n * (n - 1 - mapping[v]))
        yield key, mapping


@lru_cache(maxsize=1 << 16)
def _canonical(a: ZeroOneMatrix) -> tuple[int, tuple[int, ...]]:
    best_key, best_mapping = min(_conjugate_keys(a), key=lambda item: item[0])
    return best_key, best_mapping


def _check_limit(a: ZeroOneMatrix, config: CanonicalConfig) -> None:
    if a.n > config.max_n:
        raise SearchLimitError(
            f"Canonical form limited to n <= {config.max_n}, got n = {a.n}"
        )


def canonical_form(
    a: ZeroOneMatrix, config: CanonicalConfig | None = None
) -> tuple[ZeroOneMatrix, Permutation]:
    """Lexicographically least conjugate of ``a`` and a permutation reaching it.

    ``conjugate(a, witness)`` equals the returned matrix.

    Raises:
        SearchLimitError: If ``a.n`` exceeds ``config.max_n``.
    """
    _check_limit(a, config or DEFAULT_CANONICAL_CONFIG)
    key, mapping = _canonical(a)
    return ZeroOneMatrix.from_key(a.n, key), Permutation(a.n, mapping)


def canonical_key(a: ZeroOneMatrix, config: CanonicalConfig | None = None) -> int:
    """Key of the canonical form, without materializing the matrix."""
    _check_limit(a, config or DEFAULT_CANONICAL_CONFIG)
    return _canonical(a)[0]


def orbit_keys(a: ZeroOneMatrix, config: CanonicalConfig | None = None) -> frozenset[int]:
    """Keys of every conjugate of ``a``."""
    _check_limit(a, config or DEFAULT_CANONICAL_CONFIG)
    return frozenset(key for key, _ in _conjugate_keys(a))


def orbit_size(a: ZeroOneMatrix, config: CanonicalConfig | None = None) -> int:
    """Number of distinct conjugates of ``a``."""
    return len(orbit_keys(a, config))


def _signature(a: ZeroOneMatrix, v: int, in_degrees: tuple[int, ...]) -> tuple[int, int, int]:
    return (a.rows[v].bit_count(), in_degrees[v], a.rows[v] >> v & 1)


def find_conjugator(a: ZeroOneMatrix, b: ZeroOneMatrix) -> Permutation | None:
    """Permutation ``p`` with ``conjugate(a, p) == b``, or None.

    Backtracks over vertex assignments that preserve out-degree, in-degree
    and loops, checking adjacency against already mapped vertices. Works
    for any ``n``; no canonical form is computed.
    """
    if a.n != b.n:
        return None
    n = a.n
    a_in, b_in = a.in_degrees(), b.in_degrees()
    a_sig = [_signature(a, v, a_in) for v in range(n)]
    b_sig = [_signature(b, w, b_in) for w in range(n)]
    if sorted(a_sig) != sorted(b_sig):
        return None

    mapping: list[int] = [-1] * n
    used = [False] * n

    def consistent(v: int, w: int) -> bool:
        for u in range(v):
            x = mapping[u]
            if (a.rows[v] >> u & 1) != (b.rows[w] >> x & 1):
                return False
            if (a.rows[u] >> v & 1) != (b.rows[x] >> w & 1):
                return False
        return True

    def extend(v: int) -> bool:
        if v == n:
            return True
        for w in range(n):
            if used[w] or b_sig[w] != a_sig[v] or not consistent(v, w):
                continue
            mapping[v] = w
            used[w] = True
            if extend(v + 1):
                return True
            used[w] = False
        mapping[v] = -1
        return False

    if not extend(0):
        return None
    witness = Permutation(n, tuple(mapping))
    assert conjugate(a, witness) == b
    return witness
