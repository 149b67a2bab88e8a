"""Square 0-1 matrices stored as one bitmask per row.

Bit ``j`` of ``rows[i]`` is the entry in row ``i``, column ``j``. Indices are
0-based everywhere; the 1-based labels used in hand-written examples shift by
one.
"""

from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass

from primtransfer.exceptions import MatrixError


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the positions of the set bits of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(indices: Iterable[int]) -> int:
    """Bitmask with exactly the given positions set."""
    mask = 0
    for index in indices:
        mask |= 1 << index
    return mask


def unit_row(n: int, j: int) -> int:
    """Row of width ``n`` with a single 1 in column ``j``.

    Raises:
        MatrixError: If ``j`` is outside ``0..n-1``.
    """
    if not 0 <= j < n:
        raise MatrixError(f"Column {j} out of range for width {n}")
    return 1 << j


def row_to_string(row: int, n: int) -> str:
    """Render a row as ``n`` characters, column 0 first."""
    return "".join("1" if row >> j & 1 else "0" for j in range(n))


@dataclass(frozen=True, slots=True)
class ZeroOneMatrix:
    """Immutable square 0-1 matrix, the vertex matrix of a finite digraph."""

    n: int
    rows: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n < 1:
            raise MatrixError(f"Matrix dimension must be at least 1, got {self.n}")
        if len(self.rows) != self.n:
            raise MatrixError(f"Expected {self.n} rows, got {len(self.rows)}")
        limit = 1 << self.n
        for i, row in enumerate(self.rows):
            if not 0 <= row < limit:
                raise MatrixError(f"Row {i} has bits outside columns 0..{self.n - 1}")

    @classmethod
    def zeros(cls, n: int) -> "ZeroOneMatrix":
        return cls(n, (0,) * n)

    @classmethod
    def ones(cls, n: int) -> "ZeroOneMatrix":
        return cls(n, ((1 << n) - 1,) * n)

    @classmethod
    def identity(cls, n: int) -> "ZeroOneMatrix":
        return cls(n, tuple(1 << i for i in range(n)))

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> "ZeroOneMatrix":
        """Build a matrix from nested lists of 0/1 entries.

        Raises:
            MatrixError: If the lists are not square or contain other values.
        """
        n = len(rows)
        masks = []
        for i, row in enumerate(rows):
            if len(row) != n:
                raise MatrixError(f"Row {i} has {len(row)} entries, expected {n}")
            mask = 0
            for j, value in enumerate(row):
                if value not in (0, 1):
                    raise MatrixError(f"Entry ({i},{j}) is {value!r}, expected 0 or 1")
                mask |= value << j
            masks.append(mask)
        return cls(n, tuple(masks))

    @classmethod
    def from_key(cls, n: int, key: int) -> "ZeroOneMatrix":
        """Inverse of :attr:`key`."""
        bits = format(key, f"0{n * n}b")
        if key < 0 or len(bits) != n * n:
            raise MatrixError(f"Key {key} does not fit a {n}x{n} matrix")
        return cls(
            n,
            tuple(int(bits[i * n : (i + 1) * n][::-1], 2) for i in range(n)),
        )

    @property
    def key(self) -> int:
        """Row-major packing, row 0 column 0 most significant.

        Integer order on keys is the lexicographic order of the rows read
        top-to-bottom, left-to-right.
        """
        return int(self.bitstring(), 2)

    def bitstring(self) -> str:
        return "".join(row_to_string(row, self.n) for row in self.rows)

    def entry(self, i: int, j: int) -> int:
        self._check_index(i)
        self._check_index(j)
        return self.rows[i] >> j & 1

    def row_support(self, i: int) -> frozenset[int]:
        self._check_index(i)
        return frozenset(iter_bits(self.rows[i]))

    def with_row(self, i: int, row: int) -> "ZeroOneMatrix":
        """Copy of the matrix with row ``i`` replaced by the bitmask ``row``."""
        self._check_index(i)
        rows = list(self.rows)
        rows[i] = row
        return ZeroOneMatrix(self.n, tuple(rows))

    def out_degrees(self) -> tuple[int, ...]:
        return tuple(row.bit_count() for row in self.rows)

    def in_degrees(self) -> tuple[int, ...]:
        return tuple(
            sum(row >> j & 1 for row in self.rows) for j in range(self.n)
        )

    def to_lists(self) -> list[list[int]]:
        return [[row >> j & 1 for j in range(self.n)] for row in self.rows]

    def row_strings(self) -> list[str]:
        return [row_to_string(row, self.n) for row in self.rows]

    def _check_index(self, index: int) -> None:
        if not 0 <= index < self.n:
            raise MatrixError(f"Index {index} out of range for dimension {self.n}")

    def __str__(self) -> str:
        return "\n".join(self.row_strings())
