from dataclasses import dataclass

from primtransfer.core.matrix import ZeroOneMatrix, iter_bits
from primtransfer.exceptions import InvalidTransferError
from primtransfer.transfer.models import PrimitiveTransfer
from primtransfer.transfer.operations import validate


class DisjointSet:
    """Union-find over arbitrary integer labels with path compression."""

    def __init__(self, elements: list[int]) -> None:
        self._parent = {e: e for e in elements}
        self._rank = dict.fromkeys(elements, 0)

    def find(self, element: int) -> int:
        root = element
        while self._parent[root] != root:
            root = self._parent[root]
        while self._parent[element] != root:
            self._parent[element], element = root, self._parent[element]
        return root

    def union(self, a: int, b: int) -> None:
        a, b = self.find(a), self.find(b)
        if a == b:
            return
        if self._rank[a] < self._rank[b]:
            a, b = b, a
        self._parent[b] = a
        if self._rank[a] == self._rank[b]:
            self._rank[a] += 1

    def groups(self) -> list[tuple[int, ...]]:
        """Sets as sorted tuples, ordered by their smallest element."""
        buckets: dict[int, list[int]] = {}
        for element in self._parent:
            buckets.setdefault(self.find(element), []).append(element)
        return sorted(tuple(sorted(group)) for group in buckets.values())


@dataclass(frozen=True, slots=True)
class TransferGraph:
    """Subgraph induced by the summed rows ``M`` and its weak components."""

    vertices: tuple[int, ...]
    edges: tuple[tuple[int, int], ...]
    components: tuple[tuple[int, ...], ...]

    @property
    def is_connected(self) -> bool:
        return len(self.components) == 1

    def in_degree(self, v: int) -> int:
        return sum(1 for _, w in self.edges if w == v)

    def non_loop_edges(self) -> tuple[tuple[int, int], ...]:
        return tuple(edge for edge in self.edges if edge[0] != edge[1])

    def component_of(self, v: int) -> tuple[int, ...]:
        for component in self.components:
            if v in component:
                return component
        raise KeyError(v)


def induced_graph(a: ZeroOneMatrix, vertices: frozenset[int]) -> TransferGraph:
    """Subgraph of ``a``'s digraph induced by ``vertices``, with weak components."""
    ordered = sorted(vertices)
    inside = 0
    for v in ordered:
        inside |= 1 << v
    edges = tuple((v, w) for v in ordered for w in iter_bits(a.rows[v] & inside))
    components = DisjointSet(ordered)
    for v, w in edges:
        components.union(v, w)
    return TransferGraph(tuple(ordered), edges, tuple(components.groups()))


def transfer_graph(a: ZeroOneMatrix, t: PrimitiveTransfer) -> TransferGraph:
    """The graph of the primitive transfer ``t`` of ``a``.

    Raises:
        InvalidTransferError: If ``t`` is not a primitive transfer of ``a``.
    """
    if not validate(a, t):
        raise InvalidTransferError(f"{t} is not a primitive transfer of the matrix")
    graph = induced_graph(a, t.summands)
    # summed rows are disjoint, so no column is hit twice
    assert all(graph.in_degree(v) <= 1 for v in graph.vertices)
    return graph
