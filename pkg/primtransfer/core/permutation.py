from collections.abc import Sequence
from dataclasses import dataclass

from primtransfer.core.matrix import ZeroOneMatrix, iter_bits
from primtransfer.exceptions import MatrixError


@dataclass(frozen=True, slots=True)
class Permutation:
    """Bijection on ``0..n-1``; ``mapping[v]`` is the image of ``v``."""

    n: int
    mapping: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.mapping) != self.n or sorted(self.mapping) != list(range(self.n)):
            raise MatrixError(f"{list(self.mapping)} is not a permutation of 0..{self.n - 1}")

    @classmethod
    def of(cls, mapping: Sequence[int]) -> "Permutation":
        return cls(len(mapping), tuple(mapping))

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(n, tuple(range(n)))

    @classmethod
    def transposition(cls, n: int, i: int, j: int) -> "Permutation":
        mapping = list(range(n))
        mapping[i], mapping[j] = mapping[j], mapping[i]
        return cls(n, tuple(mapping))

    @property
    def is_identity(self) -> bool:
        return all(v == w for v, w in enumerate(self.mapping))

    def __call__(self, v: int) -> int:
        return self.mapping[v]

    def inverse(self) -> "Permutation":
        inv = [0] * self.n
        for v, w in enumerate(self.mapping):
            inv[w] = v
        return Permutation(self.n, tuple(inv))

    def compose(self, other: "Permutation") -> "Permutation":
        """``self ∘ other``: apply ``other`` first, then ``self``."""
        if other.n != self.n:
            raise MatrixError(f"Cannot compose permutations of size {self.n} and {other.n}")
        return Permutation(self.n, tuple(self.mapping[w] for w in other.mapping))


def conjugate(a: ZeroOneMatrix, p: Permutation) -> ZeroOneMatrix:
    """Relabel the vertices of ``a`` by ``p``, i.e. ``P A P^-1``.

    Entry ``(p(v), p(w))`` of the result equals entry ``(v, w)`` of ``a``.

    Raises:
        MatrixError: If the sizes differ.
    """
    if a.n != p.n:
        raise MatrixError(f"Permutation of size {p.n} cannot act on a {a.n}x{a.n} matrix")
    rows = [0] * a.n
    mapping = p.mapping
    for v, row in enumerate(a.rows):
        image = 0
        for w in iter_bits(row):
            image |= 1 << mapping[w]
        rows[mapping[v]] = image
    return ZeroOneMatrix(a.n, tuple(rows))
