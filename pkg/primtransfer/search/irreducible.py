from primtransfer.core.matrix import ZeroOneMatrix, iter_bits


def _reach(rows: tuple[int, ...], start: int) -> int:
    seen = 1 << start
    frontier = seen
    while frontier:
        step = 0
        for v in iter_bits(frontier):
            step |= rows[v]
        frontier = step & ~seen
        seen |= frontier
    return seen


def transpose_rows(a: ZeroOneMatrix) -> tuple[int, ...]:
    columns = [0] * a.n
    for v, row in enumerate(a.rows):
        for w in iter_bits(row):
            columns[w] |= 1 << v
    return tuple(columns)


def is_irreducible(a: ZeroOneMatrix) -> bool:
    """True iff the digraph of ``a`` is strongly connected.

    A single vertex counts as irreducible only with its loop, so ``[[0]]``
    is reducible and ``[[1]]`` irreducible.
    """
    if a.n == 1:
        return a.rows[0] == 1
    everything = (1 << a.n) - 1
    return (
        _reach(a.rows, 0) == everything
        and _reach(transpose_rows(a), 0) == everything
    )
