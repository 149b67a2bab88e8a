from typing import ClassVar

from pydantic import BaseModel, ConfigDict, Field, ValidationInfo, field_validator

from primtransfer.core.config import CanonicalConfig

SEARCH_HARD_LIMIT: int = 5
"""Largest dimension any search accepts, with ``allow_n5`` set."""

DEFAULT_SEARCH_LIMIT: int = 4


class SearchConfig(BaseModel):
    """Configuration for equivalence searches and classification."""

    model_config: ClassVar[ConfigDict] = ConfigDict(frozen=True)

    allow_n5: bool = Field(
        default=False, description="Permit searches on 5x5 matrices"
    )
    max_n: int = Field(
        default=DEFAULT_SEARCH_LIMIT,
        ge=1,
        le=SEARCH_HARD_LIMIT,
        description="Largest matrix dimension searched",
    )
    max_states: int = Field(
        default=1 << 25,
        gt=0,
        description="Cap on visited canonical states before a search gives up",
    )
    max_direct_candidates: int = Field(
        default=1 << 14,
        gt=0,
        description="Cap on one-move candidates tried before a pairwise search",
    )
    workers: int = Field(
        default=1,
        ge=1,
        le=64,
        description="Threads used to expand a BFS frontier",
    )
    size_one_certificates: bool = Field(
        default=True,
        description="Rewrite transfer moves of produced certificates into size-1 chains",
    )
    canonical: CanonicalConfig = Field(
        default_factory=CanonicalConfig,
        description="Canonical labeling configuration",
    )

    @field_validator("max_n")
    @classmethod
    def validate_max_n(cls, v: int, info: ValidationInfo) -> int:
        """A limit of 5 must be enabled explicitly."""
        if v > DEFAULT_SEARCH_LIMIT and not info.data.get("allow_n5", False):
            raise ValueError("max_n = 5 requires allow_n5=True")
        return v

    @property
    def canonical_max_n(self) -> int:
        """Shortcut for ``canonical.max_n``."""
        return self.canonical.max_n
