"""Breadth-first search over primitive equivalence classes.

States are canonical forms, so permutation moves never appear in the search
itself; they are put back when a certificate is reconstructed from the
canonical-form witnesses. Frontiers are expanded in ascending key order and
merged in that order, which makes classes, verdicts and certificates
independent of the number of worker threads.
"""

import logging
from collections.abc import Iterable, Iterator
from concurrent.futures import ThreadPoolExecutor
from contextlib import contextmanager
from dataclasses import dataclass
from itertools import islice

from eventspype.pub.multipublisher import MultiPublisher
from eventspype.pub.publication import EventPublication

from primtransfer.core.canonical import canonical_form, canonical_key, find_conjugator
from primtransfer.core.matrix import ZeroOneMatrix
from primtransfer.core.permutation import Permutation
from primtransfer.decompose.models import Move, MoveKind, MoveSequence
from primtransfer.decompose.theorem import refine_sequence
from primtransfer.decompose.verify import verify
from primtransfer.exceptions import SearchLimitError
from primtransfer.search.config import SearchConfig
from primtransfer.search.models import EquivalenceClass, EquivalenceResult, Verdict
from primtransfer.search.moves import iter_neighbors, neighbors

logger = logging.getLogger(__name__)


@dataclass
class SearchStartEvent:
    """Event emitted when a closure or pairwise search starts."""

    n: int
    roots: tuple[int, ...]


@dataclass
class SearchLevelEvent:
    """Event emitted after each frontier level is merged."""

    depth: int
    frontier_size: int
    visited: int


@dataclass
class SearchStopEvent:
    """Event emitted when a search finishes."""

    visited: int
    complete: bool
    verdict: Verdict | None = None


class EquivalenceExplorer(MultiPublisher):
    """Runs closures and pairwise searches under one :class:`SearchConfig`."""

    start_publication = EventPublication(
        event_class=SearchStartEvent, event_tag="search_start"
    )
    level_publication = EventPublication(
        event_class=SearchLevelEvent, event_tag="search_level"
    )
    stop_publication = EventPublication(
        event_class=SearchStopEvent, event_tag="search_stop"
    )

    def __init__(self, config: SearchConfig | None = None) -> None:
        MultiPublisher.__init__(self)
        self._config = config or SearchConfig()
        self._successor_cache: dict[int, tuple[int, ...]] = {}
        logger.debug(
            "Initializing %s (max_n=%d, max_states=%d, workers=%d)",
            type(self).__name__,
            self._config.max_n,
            self._config.max_states,
            self._config.workers,
        )

    @property
    def config(self) -> SearchConfig:
        return self._config

    def _check_dimension(self, a: ZeroOneMatrix) -> None:
        if a.n > self._config.max_n:
            raise SearchLimitError(
                f"Search limited to n <= {self._config.max_n}, got n = {a.n}"
            )

    def _canonical_key(self, a: ZeroOneMatrix) -> int:
        return canonical_key(a, self._config.canonical)

    def successors(self, state: ZeroOneMatrix) -> tuple[int, ...]:
        """Distinct canonical keys one transfer away, ascending, without ``state``."""
        own = state.key
        cached = self._successor_cache.get(own)
        if cached is not None:
            return cached
        keys = {self._canonical_key(b) for _, b in neighbors(state)}
        keys.discard(self._canonical_key(state))
        result = tuple(sorted(keys))
        self._successor_cache[own] = result
        return result

    @contextmanager
    def _worker_pool(self) -> Iterator[ThreadPoolExecutor | None]:
        """One executor for a whole search, or None when running serially."""
        if self._config.workers == 1:
            yield None
            return
        with ThreadPoolExecutor(
            max_workers=self._config.workers, thread_name_prefix="primtransfer-search"
        ) as pool:
            yield pool

    def _expand(
        self, n: int, frontier: list[int], pool: ThreadPoolExecutor | None
    ) -> Iterable[tuple[int, tuple[int, ...]]]:
        states = [ZeroOneMatrix.from_key(n, key) for key in frontier]
        if pool is not None and len(states) > 1:
            expanded = list(pool.map(self.successors, states))
        else:
            expanded = [self.successors(state) for state in states]
        return zip(frontier, expanded, strict=True)

    def _bfs_level(
        self,
        n: int,
        frontier: list[int],
        parents: dict[int, int | None],
        budget: int,
        pool: ThreadPoolExecutor | None,
    ) -> tuple[list[int], bool]:
        """Expand one level; the first expanded parent claims each new state.

        At most ``budget`` new states are recorded. Returns the sorted new
        frontier and whether a further state was refused.
        """
        following: list[int] = []
        for state, successor_keys in self._expand(n, frontier, pool):
            for key in successor_keys:
                if key in parents:
                    continue
                if len(following) >= budget:
                    following.sort()
                    return following, True
                parents[key] = state
                following.append(key)
        following.sort()
        return following, False

    def equivalence_class(self, a: ZeroOneMatrix) -> EquivalenceClass:
        """Breadth-first closure of ``canonical_form(a)`` under transfers.

        At most ``max_states`` states are recorded; the result is flagged
        incomplete when another one had to be refused.

        Raises:
            SearchLimitError: If ``a.n`` exceeds ``max_n``.
        """
        self._check_dimension(a)
        root = self._canonical_key(a)
        self.publish(self.start_publication, SearchStartEvent(n=a.n, roots=(root,)))
        parents: dict[int, int | None] = {root: None}
        frontier = [root]
        depth = 0
        complete = True
        with self._worker_pool() as pool:
            while frontier:
                budget = self._config.max_states - len(parents)
                frontier, capped = self._bfs_level(a.n, frontier, parents, budget, pool)
                depth += 1
                self.publish(
                    self.level_publication,
                    SearchLevelEvent(depth=depth, frontier_size=len(frontier), visited=len(parents)),
                )
                if capped:
                    complete = False
                    logger.warning(
                        "State cap %d reached at depth %d", self._config.max_states, depth
                    )
                    break
        self.publish(
            self.stop_publication,
            SearchStopEvent(visited=len(parents), complete=complete),
        )
        logger.info(
            "Closure of %d has %d states (complete=%s)", root, len(parents), complete
        )
        tree = {key: parent for key, parent in parents.items() if parent is not None}
        return EquivalenceClass(
            n=a.n,
            root=root,
            members=tuple(sorted(parents)),
            parents=tree,
            complete=complete,
        )

    def are_equivalent(self, a: ZeroOneMatrix, b: ZeroOneMatrix) -> EquivalenceResult:
        """Decide whether ``a`` and ``b`` are primitively equivalent.

        Direct certificates (equal, conjugate, or one transfer and a
        conjugation apart) are tried first at any dimension, over at most
        ``max_direct_candidates`` one-move candidates. Otherwise a
        bidirectional BFS on canonical forms runs; exhausting either side
        without meeting proves inequivalence. A dimension above ``max_n``
        or the state cap gives ``UNKNOWN``.
        """
        if a.n != b.n:
            return EquivalenceResult(
                Verdict.NOT_EQUIVALENT, reason="dimensions differ"
            )
        direct, exhaustive = self._direct_certificate(a, b)
        if direct is not None:
            return self._finish(direct, states_visited=0, reason="direct certificate")
        if a.n > self._config.max_n:
            cause = "no direct certificate" if exhaustive else "direct candidate cap reached"
            return EquivalenceResult(
                Verdict.UNKNOWN,
                reason=f"{cause} and n = {a.n} exceeds search limit {self._config.max_n}",
            )

        root_a, root_b = self._canonical_key(a), self._canonical_key(b)
        self.publish(
            self.start_publication, SearchStartEvent(n=a.n, roots=(root_a, root_b))
        )
        with self._worker_pool() as pool:
            visited, path = self._bidirectional(a.n, root_a, root_b, pool)
        if path is None:
            complete = visited >= 0
            verdict = Verdict.NOT_EQUIVALENT if complete else Verdict.UNKNOWN
            self.publish(
                self.stop_publication,
                SearchStopEvent(visited=abs(visited), complete=complete, verdict=verdict),
            )
            return EquivalenceResult(
                verdict,
                states_visited=abs(visited),
                reason="class exhausted" if complete else "state cap reached",
            )
        self.publish(
            self.stop_publication,
            SearchStopEvent(visited=visited, complete=True, verdict=Verdict.EQUIVALENT),
        )
        certificate = self._certificate_from_path(a, b, path)
        return self._finish(certificate, states_visited=visited, reason="search")

    def _bidirectional(
        self, n: int, root_a: int, root_b: int, pool: ThreadPoolExecutor | None
    ) -> tuple[int, list[int] | None]:
        """Meet-in-the-middle BFS.

        Returns ``(visited, path)`` with ``path`` the canonical keys from
        ``root_a`` to ``root_b``. Without a path, a negative ``visited``
        signals that the state cap stopped the search.
        """
        if root_a == root_b:
            return 1, [root_a]
        sides: list[dict[int, int | None]] = [{root_a: None}, {root_b: None}]
        frontiers = [[root_a], [root_b]]
        depth = 0
        while frontiers[0] and frontiers[1]:
            index = 0 if len(frontiers[0]) <= len(frontiers[1]) else 1
            other = sides[1 - index]
            budget = self._config.max_states - len(sides[0]) - len(sides[1])
            frontiers[index], capped = self._bfs_level(
                n, frontiers[index], sides[index], budget, pool
            )
            meetings = [key for key in frontiers[index] if key in other]
            depth += 1
            visited = len(sides[0]) + len(sides[1])
            self.publish(
                self.level_publication,
                SearchLevelEvent(
                    depth=depth, frontier_size=len(frontiers[index]), visited=visited
                ),
            )
            if meetings:
                return visited, self._join(sides, min(meetings))
            if capped:
                logger.warning("State cap %d reached", self._config.max_states)
                return -visited, None
        return len(sides[0]) + len(sides[1]), None

    @staticmethod
    def _join(sides: list[dict[int, int | None]], meet: int) -> list[int]:
        forward: list[int] = []
        key: int | None = meet
        while key is not None:
            forward.append(key)
            key = sides[0][key]
        forward.reverse()
        key = sides[1][meet]
        while key is not None:
            forward.append(key)
            key = sides[1][key]
        return forward

    def _step_between(
        self, state: ZeroOneMatrix, target_key: int
    ) -> tuple[Move, ZeroOneMatrix]:
        """First transfer move from ``state`` whose result canonicalizes to ``target_key``."""
        for move, result in neighbors(state):
            if self._canonical_key(result) == target_key:
                return move, result
        raise AssertionError(f"No move from {state.key} reaches class state {target_key}")

    def _certificate_from_path(
        self, a: ZeroOneMatrix, b: ZeroOneMatrix, path: list[int]
    ) -> MoveSequence:
        moves: list[Move] = []
        canonical_a, witness_a = canonical_form(a, self._config.canonical)
        _append_permute(moves, witness_a)
        current = canonical_a
        for target_key in path[1:]:
            move, result = self._step_between(current, target_key)
            moves.append(move)
            current, witness = canonical_form(result, self._config.canonical)
            _append_permute(moves, witness)
        _, witness_b = canonical_form(b, self._config.canonical)
        _append_permute(moves, witness_b.inverse())
        return MoveSequence(a, tuple(moves), b)

    def _direct_certificate(
        self, a: ZeroOneMatrix, b: ZeroOneMatrix
    ) -> tuple[MoveSequence | None, bool]:
        """A certificate of at most one transfer and one permutation.

        The flag is False when more than ``max_direct_candidates`` one-move
        candidates exist and only that many were tried.
        """
        if a == b:
            return MoveSequence(a, (), b), True
        witness = find_conjugator(a, b)
        if witness is not None:
            return MoveSequence(a, (Move.permute(witness),), b), True
        cap = self._config.max_direct_candidates
        candidates = list(islice(iter_neighbors(a), cap + 1))
        exhaustive = len(candidates) <= cap
        if not exhaustive:
            logger.info("Direct certificate search stopped after %d candidates", cap)
            candidates = candidates[:cap]
        for move, result in candidates:
            if result == b:
                return MoveSequence(a, (move,), b), True
        for move, result in candidates:
            witness = find_conjugator(result, b)
            if witness is not None:
                return MoveSequence(a, (move, Move.permute(witness)), b), True
        return None, exhaustive

    def _finish(
        self, certificate: MoveSequence, states_visited: int, reason: str
    ) -> EquivalenceResult:
        if self._config.size_one_certificates:
            certificate = refine_sequence(certificate)
        report = verify(certificate)
        assert report, report.reason
        logger.info(
            "Equivalent via %s: %d moves (%d permutations)",
            reason,
            len(certificate),
            certificate.count(MoveKind.PERMUTE),
        )
        return EquivalenceResult(
            Verdict.EQUIVALENT,
            certificate=certificate,
            states_visited=states_visited,
            reason=reason,
        )


def _append_permute(moves: list[Move], perm: Permutation) -> None:
    """Append a permutation, folding it into a preceding one; drop identities."""
    if moves and moves[-1].kind is MoveKind.PERMUTE:
        previous = moves.pop().perm
        assert previous is not None
        perm = perm.compose(previous)
    if not perm.is_identity:
        moves.append(Move.permute(perm))


def equivalence_class(
    a: ZeroOneMatrix, config: SearchConfig | None = None
) -> EquivalenceClass:
    """Module-level shortcut for :meth:`EquivalenceExplorer.equivalence_class`."""
    return EquivalenceExplorer(config).equivalence_class(a)


def are_equivalent(
    a: ZeroOneMatrix, b: ZeroOneMatrix, config: SearchConfig | None = None
) -> EquivalenceResult:
    """Module-level shortcut for :meth:`EquivalenceExplorer.are_equivalent`."""
    return EquivalenceExplorer(config).are_equivalent(a, b)
