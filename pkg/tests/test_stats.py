import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from reviewstream.ingest import AppCatalog, AppRecord, ReviewEdge
from reviewstream.stats import (
    DegenerateSamplesError,
    EmptySampleError,
    TooSmallError,
    ecdf,
    shared_reviewer_graph,
    summarize,
    welch_t,
)


def edge(review_id, reviewer, app, score=5):
    return ReviewEdge(review_id, reviewer, app, 0, score)


class TestWelch:
    def test_identical_samples(self):
        result = welch_t([1, 2, 3], [1, 2, 3])
        assert result.t == 0.0
        assert result.p_one_sided == 0.5

    def test_hand_computed_case(self):
        # means 2 and 5, unit variances, se = sqrt(2/3)
        result = welch_t([1, 2, 3], [4, 5, 6])
        assert result.t == pytest.approx(-3.674, abs=1e-3)
        assert result.df == pytest.approx(4.000, abs=1e-3)
        assert result.p_one_sided == pytest.approx(0.98934, abs=1e-4)
        assert result.mean_a == 2.0 and result.mean_b == 5.0
        assert result.var_a == 1.0 and result.var_b == 1.0

    def test_directional_p_value(self):
        result = welch_t([10.0, 11.0, 12.0], [1.0, 2.0, 3.0])
        assert result.t > 0
        assert result.p_one_sided < 0.01
        assert result.p_two_sided == pytest.approx(2 * result.p_one_sided)

    def test_too_small(self):
        with pytest.raises(TooSmallError):
            welch_t([1.0], [1.0, 2.0])

    def test_degenerate(self):
        with pytest.raises(DegenerateSamplesError):
            welch_t([5.0, 5.0, 5.0], [7.0, 7.0])

    def test_one_constant_sample_is_fine(self):
        result = welch_t([5.0, 5.0, 5.0], [1.0, 2.0, 3.0])
        assert result.t > 0


samples = st.lists(
    st.floats(-1e4, 1e4, allow_nan=False, allow_infinity=False),
    min_size=2, max_size=30,
).filter(lambda xs: np.var(xs) > 1e-9)


@settings(max_examples=80)
@given(a=samples, b=samples)
def test_welch_antisymmetry(a, b):
    fwd = welch_t(a, b)
    rev = welch_t(b, a)
    assert rev.t == pytest.approx(-fwd.t, rel=1e-9, abs=1e-12)
    assert rev.p_one_sided == pytest.approx(1 - fwd.p_one_sided, abs=1e-9)


@settings(max_examples=80)
@given(a=samples, b=samples, shift=st.floats(-100, 100, allow_nan=False))
def test_welch_location_shift_invariance(a, b, shift):
    base = welch_t(a, b)
    shifted = welch_t([x + shift for x in a], [x + shift for x in b])
    assert shifted.t == pytest.approx(base.t, rel=1e-6, abs=1e-9)
    assert shifted.df == pytest.approx(base.df, rel=1e-6)


class TestEcdf:
    def test_basic_fractions(self):
        points = ecdf([1.0, 2.0, 3.0])
        assert points.fraction_at(2.0) == pytest.approx(2 / 3)
        assert points.fraction_at(0.5) == 0.0

    def test_all_equal_collapses_to_one_point(self):
        points = ecdf([5.0, 5.0, 5.0])
        assert points.values.tolist() == [5.0]
        assert points.fractions.tolist() == [1.0]

    def test_ends_at_exactly_one(self):
        points = ecdf([3.0, 1.0, 2.0, 2.0])
        assert points.fractions[-1] == 1.0
        assert np.all(np.diff(points.values) > 0)
        assert np.all(np.diff(points.fractions) > 0)

    def test_empty_rejected(self):
        with pytest.raises(EmptySampleError):
            ecdf([])

    def test_uniform_sample_within_ks_bound(self):
        # Kolmogorov-Smirnov: D_n <= 1.63/sqrt(n) at the 1% level
        n = 1000
        draws = np.sort(np.random.default_rng(7).uniform(size=n))
        upper = np.arange(1, n + 1) / n - draws
        lower = draws - np.arange(0, n) / n
        d_stat = max(upper.max(), lower.max())
        points = ecdf(draws)
        for i, x in enumerate(draws):
            assert points.fraction_at(x) == pytest.approx((i + 1) / n)
        assert d_stat < 1.63 / np.sqrt(n)


@settings(max_examples=60)
@given(st.lists(st.floats(-100, 100, allow_nan=False), min_size=1, max_size=50))
def test_ecdf_last_fraction_is_one(values):
    assert ecdf(values).fractions[-1] == 1.0


class TestSharedReviewerGraph:
    def test_one_shared_reviewer(self):
        edges = [edge("r1", "u1", "A"), edge("r2", "u1", "B")]
        graph = shared_reviewer_graph(edges)
        assert [(g.app_a, g.app_b, g.weight) for g in graph] == [("A", "B", 1)]

    def test_repeat_reviews_count_once(self):
        edges = [edge("r1", "u1", "A"), edge("r2", "u1", "A"), edge("r3", "u1", "B")]
        graph = shared_reviewer_graph(edges)
        assert graph[0].weight == 1

    def test_no_self_loops_or_zero_weights(self):
        edges = [edge("r1", "u1", "A"), edge("r2", "u2", "B")]
        assert shared_reviewer_graph(edges) == []

    @settings(max_examples=60)
    @given(st.lists(
        st.tuples(st.integers(0, 6), st.integers(0, 4)), max_size=40,
    ))
    def test_matches_set_intersection_oracle(self, pairs):
        edges = [
            edge(f"r{i}", f"u{u}", f"a{a}") for i, (u, a) in enumerate(pairs)
        ]
        got = {(g.app_a, g.app_b): g.weight for g in shared_reviewer_graph(edges)}
        # oracle: direct pairwise intersection of reviewer sets
        reviewers: dict[str, set[str]] = {}
        for e in edges:
            reviewers.setdefault(e.app_id, set()).add(e.reviewer_id)
        apps = sorted(reviewers)
        expected = {}
        for i in range(len(apps)):
            for j in range(i + 1, len(apps)):
                weight = len(reviewers[apps[i]] & reviewers[apps[j]])
                if weight:
                    expected[(apps[i], apps[j])] = weight
        assert got == expected


class TestSummarize:
    CATALOG = AppCatalog([AppRecord("A", 4.0)])

    def test_counts(self):
        edges = [
            edge("r1", "u1", "A", score=5),
            edge("r2", "u1", "A", score=1),
            edge("r3", "u2", "A", score=4),
        ]
        summary = summarize(edges, self.CATALOG)
        assert summary.to_dict() == {
            "reviews": 3, "reviewers": 2, "apps": 1,
            "boost": 2, "sink": 1, "unpartitioned": 0,
        }

    def test_empty_stream(self):
        summary = summarize([], self.CATALOG)
        assert summary.reviews == 0 and summary.reviewers == 0 and summary.apps == 0
