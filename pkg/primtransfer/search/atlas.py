"""Classification of every ``n x n`` matrix into primitive equivalence classes."""

import logging
from pathlib import Path

from primtransfer.core.canonical import orbit_keys
from primtransfer.core.matrix import ZeroOneMatrix
from primtransfer.core.textio import format_matrix
from primtransfer.exceptions import SearchLimitError
from primtransfer.search.config import SearchConfig
from primtransfer.search.explorer import EquivalenceExplorer
from primtransfer.search.irreducible import is_irreducible
from primtransfer.search.models import AtlasClass, AtlasFilter, ClassAtlas

logger = logging.getLogger(__name__)

ATLAS_FILTERS: tuple[AtlasFilter, ...] = ("all", "irreducible")


def canonical_orbits(
    n: int, config: SearchConfig | None = None
) -> dict[int, int]:
    """Map every canonical key of dimension ``n`` to its orbit size.

    Keys are visited in ascending order and each orbit is marked when its
    first, hence least, key is met.
    """
    config = config or SearchConfig()
    if n > config.max_n:
        raise SearchLimitError(f"Classification limited to n <= {config.max_n}, got n = {n}")
    seen: set[int] = set()
    orbits: dict[int, int] = {}
    for key in range(1 << (n * n)):
        if key in seen:
            continue
        orbit = orbit_keys(ZeroOneMatrix.from_key(n, key), config.canonical)
        seen.update(orbit)
        orbits[key] = len(orbit)
    return orbits


def classify(
    n: int,
    filter: AtlasFilter = "all",
    config: SearchConfig | None = None,
    explorer: EquivalenceExplorer | None = None,
) -> ClassAtlas:
    """Partition the canonical ``n x n`` matrices into equivalence classes.

    Each still unassigned canonical form, taken in ascending key order,
    seeds an :meth:`EquivalenceExplorer.equivalence_class` sweep, so classes
    come out ordered by their least member. With ``filter="irreducible"``
    only irreducible matrices seed sweeps and are recorded as members;
    moves may still pass through reducible ones.

    Raises:
        SearchLimitError: If ``n`` exceeds the configured search limit.
        ValueError: If ``filter`` is unknown.
    """
    if filter not in ATLAS_FILTERS:
        raise ValueError(f"Unknown filter {filter!r}, expected one of {ATLAS_FILTERS}")
    explorer = explorer or EquivalenceExplorer(config)
    config = explorer.config
    orbits = canonical_orbits(n, config)
    logger.info("Classifying %d canonical forms of size %d (filter=%s)", len(orbits), n, filter)

    def admitted(key: int) -> bool:
        return filter == "all" or is_irreducible(ZeroOneMatrix.from_key(n, key))

    assigned: set[int] = set()
    classes: list[AtlasClass] = []
    complete = True
    for key in orbits:
        if key in assigned or not admitted(key):
            continue
        closure = explorer.equivalence_class(ZeroOneMatrix.from_key(n, key))
        assigned.update(closure.members)
        complete = complete and closure.complete
        members = tuple(m for m in closure.members if admitted(m))
        representative = ZeroOneMatrix.from_key(n, members[0])
        classes.append(
            AtlasClass(
                representative=members[0],
                members=members,
                member_count=sum(orbits[m] for m in members),
                irreducible=is_irreducible(representative),
                parents=closure.parents,
            )
        )
        logger.debug("Class %d: %d canonical forms", len(classes) - 1, len(members))

    if not complete:
        logger.warning("Atlas for n = %d is partial: a closure hit the state cap", n)
    logger.info("Atlas for n = %d has %d classes", n, len(classes))
    return ClassAtlas(n=n, filter=filter, classes=tuple(classes), complete=complete)


def format_atlas(atlas: ClassAtlas) -> str:
    """Render an atlas in its text format.

    A header comment, then per class one summary line, the representative
    in the matrix text format and a blank line.
    """
    lines = [f"# atlas n={atlas.n} filter={atlas.filter} classes={len(atlas.classes)}"]
    if not atlas.complete:
        lines.append("# partial: state cap reached")
    text = "\n".join(lines) + "\n"
    for index, atlas_class in enumerate(atlas.classes):
        flag = "yes" if atlas_class.irreducible else "no"
        text += (
            f"class {index} size={atlas_class.size} "
            f"members={atlas_class.member_count} irreducible={flag}\n"
        )
        text += format_matrix(atlas.representative_matrix(index))
        text += "\n"
    return text


def write_atlas(path: str | Path, atlas: ClassAtlas) -> None:
    Path(path).write_text(format_atlas(atlas), encoding="utf-8")
