from typing import ClassVar

from pydantic import BaseModel, ConfigDict, Field

CANONICAL_HARD_LIMIT: int = 8
"""Largest dimension for which all ``n!`` conjugates are enumerated."""


class CanonicalConfig(BaseModel):
    """Configuration for exhaustive canonical labeling."""

    model_config: ClassVar[ConfigDict] = ConfigDict(frozen=True)

    max_n: int = Field(
        default=CANONICAL_HARD_LIMIT,
        ge=1,
        le=CANONICAL_HARD_LIMIT,
        description="Largest matrix dimension accepted by canonical_form",
    )
