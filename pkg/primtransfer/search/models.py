from dataclasses import dataclass
from enum import Enum
from typing import ClassVar, Literal

from pydantic import BaseModel, ConfigDict, Field

from primtransfer.core.matrix import ZeroOneMatrix
from primtransfer.decompose.models import MoveSequence

AtlasFilter = Literal["all", "irreducible"]


class Verdict(Enum):
    EQUIVALENT = "equivalent"
    NOT_EQUIVALENT = "not equivalent"
    UNKNOWN = "unknown"


class EquivalenceClass(BaseModel):
    """Canonical forms reached by a breadth-first closure.

    States are :attr:`ZeroOneMatrix.key` values of canonical forms.
    ``parents`` maps every state except ``root`` to the state it was first
    reached from; following it always ends at ``root``.
    """

    model_config: ClassVar[ConfigDict] = ConfigDict(frozen=True)

    n: int = Field(ge=1, description="Dimension of every member")
    root: int = Field(description="Canonical key the closure started from")
    members: tuple[int, ...] = Field(description="Canonical keys, ascending")
    parents: dict[int, int] = Field(
        default_factory=dict, description="Spanning tree, child key to parent key"
    )
    complete: bool = Field(
        default=True, description="False if a state cap stopped the closure"
    )

    @property
    def size(self) -> int:
        return len(self.members)

    @property
    def representative(self) -> int:
        """Least canonical key in the class."""
        return self.members[0]

    def __contains__(self, key: object) -> bool:
        return key in self.parents or key == self.root

    def matrices(self) -> list[ZeroOneMatrix]:
        return [ZeroOneMatrix.from_key(self.n, key) for key in self.members]

    def path_to_root(self, key: int) -> list[int]:
        """Keys from ``key`` up the spanning tree to ``root``."""
        path = [key]
        while path[-1] != self.root:
            path.append(self.parents[path[-1]])
        return path


@dataclass(frozen=True)
class EquivalenceResult:
    """Answer to a pairwise primitive equivalence query."""

    verdict: Verdict
    certificate: MoveSequence | None = None
    states_visited: int = 0
    reason: str = ""

    @property
    def is_equivalent(self) -> bool:
        return self.verdict is Verdict.EQUIVALENT


class AtlasClass(BaseModel):
    """One primitive equivalence class of an atlas."""

    model_config: ClassVar[ConfigDict] = ConfigDict(frozen=True)

    representative: int = Field(description="Least canonical key in the class")
    members: tuple[int, ...] = Field(description="Canonical keys recorded, ascending")
    member_count: int = Field(
        ge=0, description="Number of matrices, counting every conjugate"
    )
    irreducible: bool = Field(description="Whether the representative is irreducible")
    parents: dict[int, int] = Field(
        default_factory=dict,
        description="Spanning tree of the closure, child key to parent key",
    )

    @property
    def size(self) -> int:
        return len(self.members)


class ClassAtlas(BaseModel):
    """Partition of the canonical ``n x n`` matrices into equivalence classes."""

    model_config: ClassVar[ConfigDict] = ConfigDict(frozen=True)

    n: int = Field(ge=1)
    filter: AtlasFilter = Field(
        default="all", description="Which canonical forms were classified"
    )
    classes: tuple[AtlasClass, ...] = ()
    complete: bool = Field(
        default=True, description="False if any class closure hit the state cap"
    )

    @property
    def state_count(self) -> int:
        return sum(c.size for c in self.classes)

    def class_of(self, key: int) -> AtlasClass | None:
        for atlas_class in self.classes:
            if key in atlas_class.members:
                return atlas_class
        return None

    def representative_matrix(self, index: int) -> ZeroOneMatrix:
        return ZeroOneMatrix.from_key(self.n, self.classes[index].representative)
