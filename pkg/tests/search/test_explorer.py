from concurrent.futures import ThreadPoolExecutor
from typing import Any

import pytest

from primtransfer.core.canonical import canonical_key
from primtransfer.core.matrix import ZeroOneMatrix
from primtransfer.core.permutation import Permutation, conjugate
from primtransfer.decompose.models import MoveKind
from primtransfer.decompose.verify import verify
from primtransfer.exceptions import SearchLimitError
from primtransfer.search import explorer as explorer_module
from primtransfer.search.config import SearchConfig
from primtransfer.search.explorer import (
    EquivalenceExplorer,
    SearchLevelEvent,
    SearchStartEvent,
    SearchStopEvent,
    are_equivalent,
    equivalence_class,
)
from primtransfer.search.models import Verdict


class TestEquivalenceClass:
    def test_identity_is_singleton(self) -> None:
        closure = equivalence_class(ZeroOneMatrix.identity(3))
        assert closure.size == 1
        assert closure.complete
        assert closure.parents == {}

    def test_zero_matrix_class(self) -> None:
        """The 2x2 zero matrix reaches the single-edge matrix and beyond."""
        closure = equivalence_class(ZeroOneMatrix.zeros(2))
        single_edge = ZeroOneMatrix.from_rows([[0, 1], [0, 0]])
        assert closure.root == 0
        assert canonical_key(single_edge) in closure
        assert closure.size > 1
        assert closure.representative == closure.members[0]

    def test_spanning_tree_reaches_root(self, search_config: SearchConfig) -> None:
        closure = equivalence_class(ZeroOneMatrix.zeros(3), search_config)
        assert closure.complete
        for key in closure.members:
            assert closure.path_to_root(key)[-1] == closure.root
        assert set(closure.parents) == set(closure.members) - {closure.root}

    def test_members_are_canonical(self, search_config: SearchConfig) -> None:
        closure = equivalence_class(ZeroOneMatrix.zeros(3), search_config)
        for a in closure.matrices():
            assert canonical_key(a) == a.key

    def test_conjugates_share_a_class(self) -> None:
        a = ZeroOneMatrix.from_rows([[0, 1, 1], [0, 0, 1], [0, 0, 0]])
        b = conjugate(a, Permutation.of([2, 0, 1]))
        assert equivalence_class(a).members == equivalence_class(b).members

    def test_dimension_limit(self) -> None:
        with pytest.raises(SearchLimitError, match="n <= 4"):
            equivalence_class(ZeroOneMatrix.zeros(5))

    def test_state_cap_marks_partial(self) -> None:
        config = SearchConfig(max_states=1)
        closure = equivalence_class(ZeroOneMatrix.zeros(3), config)
        assert not closure.complete
        assert closure.size == 1

    @pytest.mark.parametrize("cap", [1, 2, 3, 5])
    def test_state_cap_bounds_recorded_states(
        self, cap: int, search_config: SearchConfig
    ) -> None:
        full = equivalence_class(ZeroOneMatrix.zeros(3), search_config)
        closure = equivalence_class(ZeroOneMatrix.zeros(3), SearchConfig(max_states=cap))
        assert closure.size <= cap
        assert closure.complete == (full.size <= cap)
        assert set(closure.members) <= set(full.members)
        assert set(closure.parents) == set(closure.members) - {closure.root}

    def test_cap_equal_to_class_size_is_complete(self, search_config: SearchConfig) -> None:
        full = equivalence_class(ZeroOneMatrix.zeros(3), search_config)
        exact = equivalence_class(ZeroOneMatrix.zeros(3), SearchConfig(max_states=full.size))
        assert exact.complete
        assert exact.members == full.members

    def test_one_executor_per_search(self, monkeypatch: pytest.MonkeyPatch) -> None:
        created: list[ThreadPoolExecutor] = []

        class CountingExecutor(ThreadPoolExecutor):
            def __init__(self, *args: Any, **kwargs: Any) -> None:
                super().__init__(*args, **kwargs)
                created.append(self)

        monkeypatch.setattr(explorer_module, "ThreadPoolExecutor", CountingExecutor)
        levels: list[SearchLevelEvent] = []

        def on_level(event: SearchLevelEvent) -> None:
            levels.append(event)

        explorer = EquivalenceExplorer(SearchConfig(workers=3))
        explorer.add_subscriber_with_callback(
            explorer.level_publication, on_level, with_event_info=False
        )
        explorer.equivalence_class(ZeroOneMatrix.zeros(3))
        assert len(levels) > 1
        assert len(created) == 1

    def test_serial_search_starts_no_executor(self, monkeypatch: pytest.MonkeyPatch) -> None:
        def refuse(*args: Any, **kwargs: Any) -> ThreadPoolExecutor:
            raise AssertionError("executor created for a serial search")

        monkeypatch.setattr(explorer_module, "ThreadPoolExecutor", refuse)
        assert equivalence_class(ZeroOneMatrix.zeros(3)).complete

    def test_worker_count_does_not_change_result(self) -> None:
        a = ZeroOneMatrix.from_rows([[0, 1, 0], [0, 0, 1], [0, 0, 0]])
        serial = equivalence_class(a, SearchConfig(workers=1))
        threaded = equivalence_class(a, SearchConfig(workers=3))
        assert serial == threaded


class TestAreEquivalent:
    def test_eight_pair(self, eight_a: ZeroOneMatrix, eight_b: ZeroOneMatrix) -> None:
        """Decided by a direct transfer, refined into five size-1 moves."""
        result = are_equivalent(eight_a, eight_b)
        assert result.verdict is Verdict.EQUIVALENT
        assert result.is_equivalent
        certificate = result.certificate
        assert certificate is not None
        assert certificate.initial == eight_a
        assert certificate.final == eight_b
        assert certificate.is_size_one
        assert len(certificate) == 5
        assert verify(certificate)

    def test_eight_pair_up_to_relabeling(
        self, eight_a: ZeroOneMatrix, eight_b: ZeroOneMatrix
    ) -> None:
        b = conjugate(eight_b, Permutation.of([7, 6, 5, 4, 3, 2, 1, 0]))
        result = are_equivalent(eight_a, b)
        assert result.is_equivalent
        assert result.certificate is not None
        assert result.certificate.count(MoveKind.PERMUTE) == 1
        assert verify(result.certificate)

    def test_conjugate_pair_is_one_permute(self) -> None:
        a = ZeroOneMatrix.from_rows([[1, 1, 0], [0, 0, 1], [0, 0, 0]])
        p = Permutation.of([1, 2, 0])
        result = are_equivalent(a, conjugate(a, p))
        assert result.certificate is not None
        assert [m.kind for m in result.certificate.moves] == [MoveKind.PERMUTE]
        assert verify(result.certificate)

    def test_equal_matrices(self) -> None:
        a = ZeroOneMatrix.ones(3)
        result = are_equivalent(a, a)
        assert result.is_equivalent
        assert result.certificate is not None
        assert len(result.certificate) == 0

    def test_zero_and_identity_not_equivalent(self) -> None:
        """The identity's class is a singleton, so the search exhausts it."""
        result = are_equivalent(ZeroOneMatrix.zeros(3), ZeroOneMatrix.identity(3))
        assert result.verdict is Verdict.NOT_EQUIVALENT
        assert result.certificate is None
        assert result.states_visited > 0

    def test_dimensions_differ(self) -> None:
        result = are_equivalent(ZeroOneMatrix.zeros(2), ZeroOneMatrix.zeros(3))
        assert result.verdict is Verdict.NOT_EQUIVALENT

    def test_beyond_search_limit_is_unknown(self) -> None:
        result = are_equivalent(ZeroOneMatrix.zeros(6), ZeroOneMatrix.identity(6))
        assert result.verdict is Verdict.UNKNOWN

    def test_state_cap_is_unknown(self) -> None:
        config = SearchConfig(max_states=2)
        result = are_equivalent(ZeroOneMatrix.zeros(3), ZeroOneMatrix.identity(3), config)
        assert result.verdict is Verdict.UNKNOWN

    def test_state_cap_bounds_pairwise_search(self) -> None:
        config = SearchConfig(max_states=3)
        result = are_equivalent(ZeroOneMatrix.zeros(3), ZeroOneMatrix.identity(3), config)
        assert result.verdict is Verdict.UNKNOWN
        assert result.states_visited <= 3

    @pytest.mark.timeout(10)
    def test_direct_candidates_are_capped(self) -> None:
        """Sixteen zero rows admit 2**15 transfers at every pivot."""
        config = SearchConfig(max_direct_candidates=256)
        result = are_equivalent(ZeroOneMatrix.zeros(16), ZeroOneMatrix.identity(16), config)
        assert result.verdict is Verdict.UNKNOWN
        assert "direct candidate cap reached" in result.reason

    def test_direct_candidate_cap_falls_back_to_search(self, search_config: SearchConfig) -> None:
        root = ZeroOneMatrix.zeros(3)
        target = equivalence_class(root, search_config).matrices()[-1]
        config = SearchConfig(max_direct_candidates=1)
        result = are_equivalent(root, target, config)
        assert result.is_equivalent
        assert result.certificate is not None
        assert verify(result.certificate)

    def test_search_certificate(self, search_config: SearchConfig) -> None:
        """Every member of a class is equivalent to the root with a verifying chain."""
        root = ZeroOneMatrix.zeros(3)
        closure = equivalence_class(root, search_config)
        for b in closure.matrices()[:: max(1, closure.size // 12)]:
            relabeled = conjugate(b, Permutation.of([1, 2, 0]))
            result = are_equivalent(root, relabeled, search_config)
            assert result.is_equivalent
            certificate = result.certificate
            assert certificate is not None
            assert certificate.initial == root
            assert certificate.final == relabeled
            assert all(
                m.size == 1 for m in certificate.moves if m.kind is not MoveKind.PERMUTE
            )
            assert verify(certificate)

    def test_raw_certificates_keep_large_moves(self, eight_a: ZeroOneMatrix, eight_b: ZeroOneMatrix) -> None:
        config = SearchConfig(size_one_certificates=False)
        result = are_equivalent(eight_a, eight_b, config)
        assert result.certificate is not None
        assert len(result.certificate) == 1
        assert result.certificate.moves[0].size == 5


class TestEvents:
    def test_search_events(self) -> None:
        explorer = EquivalenceExplorer(SearchConfig(max_n=3))
        starts: list[SearchStartEvent] = []
        levels: list[SearchLevelEvent] = []
        stops: list[SearchStopEvent] = []

        def on_start(event: SearchStartEvent) -> None:
            starts.append(event)

        def on_level(event: SearchLevelEvent) -> None:
            levels.append(event)

        def on_stop(event: SearchStopEvent) -> None:
            stops.append(event)

        explorer.add_subscriber_with_callback(
            explorer.start_publication, on_start, with_event_info=False
        )
        explorer.add_subscriber_with_callback(
            explorer.level_publication, on_level, with_event_info=False
        )
        explorer.add_subscriber_with_callback(
            explorer.stop_publication, on_stop, with_event_info=False
        )

        closure = explorer.equivalence_class(ZeroOneMatrix.zeros(3))

        assert len(starts) == 1
        assert starts[0].roots == (closure.root,)
        assert levels
        assert [e.depth for e in levels] == list(range(1, len(levels) + 1))
        assert levels[-1].frontier_size == 0
        assert levels[-1].visited == closure.size
        assert len(stops) == 1
        assert stops[0].complete
        assert stops[0].visited == closure.size

    def test_pairwise_stop_carries_verdict(self) -> None:
        explorer = EquivalenceExplorer()
        stops: list[SearchStopEvent] = []

        def on_stop(event: SearchStopEvent) -> None:
            stops.append(event)

        explorer.add_subscriber_with_callback(
            explorer.stop_publication, on_stop, with_event_info=False
        )
        explorer.are_equivalent(ZeroOneMatrix.zeros(3), ZeroOneMatrix.identity(3))
        assert stops[-1].verdict is Verdict.NOT_EQUIVALENT
