from collections.abc import Iterable
from dataclasses import dataclass

from primtransfer.core.matrix import ZeroOneMatrix, iter_bits
from primtransfer.exceptions import MatrixError


@dataclass(frozen=True, slots=True)
class Digraph:
    """Finite digraph on vertices ``0..n-1``; loops allowed, no multi-edges."""

    n: int
    edges: frozenset[tuple[int, int]]

    def __post_init__(self) -> None:
        if self.n < 1:
            raise MatrixError(f"Digraph needs at least one vertex, got {self.n}")
        for v, w in self.edges:
            if not (0 <= v < self.n and 0 <= w < self.n):
                raise MatrixError(f"Edge ({v},{w}) leaves vertex set 0..{self.n - 1}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Digraph":
        return cls(n, frozenset((int(v), int(w)) for v, w in edges))

    @property
    def vertices(self) -> range:
        return range(self.n)

    @property
    def loops(self) -> frozenset[int]:
        return frozenset(v for v, w in self.edges if v == w)

    def successors(self, v: int) -> frozenset[int]:
        return frozenset(w for u, w in self.edges if u == v)


def matrix_from_digraph(g: Digraph) -> ZeroOneMatrix:
    """Vertex matrix of ``g``: entry ``(v, w)`` is 1 iff ``(v, w)`` is an edge."""
    rows = [0] * g.n
    for v, w in g.edges:
        rows[v] |= 1 << w
    return ZeroOneMatrix(g.n, tuple(rows))


def digraph_from_matrix(a: ZeroOneMatrix) -> Digraph:
    """Digraph whose vertex matrix is ``a``."""
    return Digraph(
        a.n,
        frozenset((v, w) for v, row in enumerate(a.rows) for w in iter_bits(row)),
    )
