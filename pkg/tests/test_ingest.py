import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from reviewstream.ingest import (
    BeforeOriginError,
    ReviewEdge,
    parse_apps,
    parse_reviews,
    review_to_line,
    to_tick,
)


def jline(**kw) -> str:
    return json.dumps(kw)


VALID = dict(review_id="x1", reviewer_id="u1", app_id="a1", timestamp=0, score=5)


class TestParseReviews:
    def test_minimal_valid_record(self):
        edges, errors = parse_reviews([jline(**VALID)])
        assert errors == []
        assert edges == [ReviewEdge("x1", "u1", "a1", 0, 5, None)]

    def test_score_out_of_range(self):
        edges, errors = parse_reviews([jline(**{**VALID, "score": 6})])
        assert edges == []
        assert len(errors) == 1 and errors[0].reason == "range"

    def test_negative_timestamp(self):
        _, errors = parse_reviews([jline(**{**VALID, "timestamp": -5})])
        assert errors[0].reason == "range"

    def test_missing_field(self):
        record = {k: v for k, v in VALID.items() if k != "reviewer_id"}
        _, errors = parse_reviews([jline(**record)])
        assert errors[0].reason == "missing_field"

    def test_wrong_type_is_syntax(self):
        _, errors = parse_reviews([jline(**{**VALID, "score": "five"})])
        assert errors[0].reason == "syntax"

    def test_duplicate_id_keeps_first(self):
        lines = [
            jline(**VALID),
            jline(**{**VALID, "score": 1}),
        ]
        edges, errors = parse_reviews(lines)
        assert len(edges) == 1 and edges[0].score == 5
        assert errors[0].reason == "duplicate" and errors[0].line == 2

    def test_ten_lines_two_malformed(self):
        # hand-built file: lines 4 and 8 are bad, the rest are valid
        lines = []
        for i in range(1, 11):
            if i == 4:
                lines.append("{not json")
            elif i == 8:
                lines.append(jline(review_id=f"x{i}", reviewer_id="u", app_id="a",
                                   timestamp=i, score=9))
            else:
                lines.append(jline(review_id=f"x{i}", reviewer_id="u", app_id="a",
                                   timestamp=i, score=3))
        edges, errors = parse_reviews(lines)
        assert len(edges) == 8
        assert [e.review_id for e in edges] == [f"x{i}" for i in range(1, 11) if i not in (4, 8)]
        assert [(e.line, e.reason) for e in errors] == [(4, "syntax"), (8, "range")]

    def test_csv_round(self):
        lines = [
            "review_id,reviewer_id,app_id,timestamp,score,text",
            'x1,u1,a1,10,5,"nice, works"',
            "x2,u2,a1,11,6,",
            "x3,u3,a1,abc,2,",
        ]
        edges, errors = parse_reviews(lines, format="csv")
        assert [e.review_id for e in edges] == ["x1"]
        assert edges[0].text == "nice, works"
        assert [e.reason for e in errors] == ["range", "syntax"]

    def test_unknown_format(self):
        with pytest.raises(ValueError):
            parse_reviews([], format="tsv")


class TestParseApps:
    def test_single_record(self):
        catalog, errors = parse_apps([
            "app_id,overall_rating,install_count,name",
            "a1,4.3,1000,Cashmonster",
        ])
        assert errors == [] and len(catalog) == 1
        record = catalog.get("a1")
        assert record.overall_rating == 4.3 and record.install_count == 1000

    def test_duplicate_keeps_first(self):
        catalog, errors = parse_apps([
            "app_id,overall_rating",
            "a1,4.3",
            "a1,2.0",
        ])
        assert len(catalog) == 1
        assert catalog.get("a1").overall_rating == 4.3
        assert errors[0].reason == "duplicate"

    def test_rating_out_of_range(self):
        catalog, errors = parse_apps([
            "app_id,overall_rating",
            "a2,5.7",
        ])
        assert len(catalog) == 0
        assert errors[0].reason == "range"


class TestToTick:
    def test_first_period(self):
        assert to_tick(1, 0, 86_400) == 1

    def test_boundary_is_closed_on_the_right(self):
        # a timestamp exactly at the end of a window belongs to that window
        assert to_tick(86_400, 0, 86_400) == 1
        assert to_tick(86_401, 0, 86_400) == 2

    def test_origin_maps_to_tick_one(self):
        assert to_tick(0, 0, 86_400) == 1

    def test_closed_form(self):
        import math
        ts, origin, period = 10 * 86_400, 0, 86_400
        assert to_tick(ts, origin, period) == 10
        assert to_tick(ts, origin, period) == math.ceil((ts - origin) / period)

    def test_before_origin(self):
        with pytest.raises(BeforeOriginError):
            to_tick(99, 100, 10)

    def test_exhaustive_small_window(self):
        origin, period = 100, 5
        for n in range(1, 8):
            for ts in range(origin + (n - 1) * period + 1, origin + n * period + 1):
                assert to_tick(ts, origin, period) == n

    @given(ts1=st.integers(0, 10**9), ts2=st.integers(0, 10**9),
           period=st.integers(1, 10**6))
    def test_monotone(self, ts1, ts2, period):
        lo, hi = sorted((ts1, ts2))
        assert to_tick(lo, 0, period) <= to_tick(hi, 0, period)


ids = st.text(min_size=1, max_size=20)
texts = st.one_of(st.none(), st.text(max_size=50))


@settings(max_examples=100)
@given(
    review_id=ids, reviewer_id=ids, app_id=ids,
    timestamp=st.integers(0, 2**40), score=st.integers(1, 5), text=texts,
)
def test_round_trip(review_id, reviewer_id, app_id, timestamp, score, text):
    edge = ReviewEdge(review_id, reviewer_id, app_id, timestamp, score, text)
    reparsed, errors = parse_reviews([review_to_line(edge)])
    assert errors == []
    assert reparsed == [edge]


@settings(max_examples=50)
@given(
    n_valid=st.integers(0, 20),
    garbage_at=st.sets(st.integers(0, 25), max_size=5),
)
def test_never_drops_valid_records(n_valid, garbage_at):
    lines = []
    valid = 0
    slot = 0
    while valid < n_valid:
        if slot in garbage_at:
            lines.append("???")
        else:
            lines.append(jline(review_id=f"r{valid}", reviewer_id="u", app_id="a",
                               timestamp=valid, score=1 + valid % 5))
            valid += 1
        slot += 1
    edges, errors = parse_reviews(lines)
    assert len(edges) == n_valid
    assert len(edges) + len(errors) == len(lines)
