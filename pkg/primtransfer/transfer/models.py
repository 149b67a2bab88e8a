from collections.abc import Iterable
from dataclasses import dataclass, field

from primtransfer.core.matrix import mask_of
from primtransfer.exceptions import MatrixError


def _format_indices(indices: Iterable[int]) -> str:
    return ",".join(str(i) for i in sorted(indices))


def parse_indices(text: str) -> frozenset[int]:
    """Parse a comma-separated index list; the empty string is the empty set.

    Raises:
        MatrixError: If an entry is not a non-negative integer.
    """
    text = text.strip()
    if not text:
        return frozenset()
    indices = set()
    for token in text.split(","):
        token = token.strip()
        if not token.isdigit():
            raise MatrixError(f"Invalid index {token!r} in {text!r}")
        indices.add(int(token))
    return frozenset(indices)


@dataclass(frozen=True, slots=True)
class PrimitiveTransfer:
    """Replacement of row ``pivot`` via ``A_p = sum A_m + sum E_k``.

    ``summands`` is the set ``M`` and ``units`` the set ``K``. Structural
    conditions (``p`` not in ``M``, ``M`` and ``K`` disjoint, the row
    equation) are decided by :func:`validate` against a concrete matrix,
    so any index sets can be represented.
    """

    pivot: int
    summands: frozenset[int] = field(default_factory=frozenset)
    units: frozenset[int] = field(default_factory=frozenset)

    def __post_init__(self) -> None:
        object.__setattr__(self, "summands", frozenset(self.summands))
        object.__setattr__(self, "units", frozenset(self.units))
        for index in (self.pivot, *self.summands, *self.units):
            if index < 0:
                raise MatrixError(f"Negative index {index} in transfer")

    @classmethod
    def parse(cls, pivot: int, summands: str, units: str) -> "PrimitiveTransfer":
        """Build a transfer from the comma-separated CLI form."""
        return cls(pivot, parse_indices(summands), parse_indices(units))

    @property
    def size(self) -> int:
        return len(self.summands)

    @property
    def is_trivial(self) -> bool:
        return not self.summands

    @property
    def summand_mask(self) -> int:
        return mask_of(self.summands)

    @property
    def unit_mask(self) -> int:
        return mask_of(self.units)

    @property
    def is_well_formed(self) -> bool:
        """``p`` not in ``M`` and ``M``, ``K`` disjoint."""
        return self.pivot not in self.summands and not self.summands & self.units

    @property
    def sort_key(self) -> tuple[int, int]:
        return (self.pivot, self.summand_mask)

    @property
    def max_index(self) -> int:
        return max((self.pivot, *self.summands, *self.units))

    def __str__(self) -> str:
        return (
            f"p={self.pivot};M={_format_indices(self.summands)};"
            f"K={_format_indices(self.units)}"
        )
