import json

import pytest

from reviewstream.cli import EXIT_CONFIG, EXIT_DATA, EXIT_OK, main

SPEC = {
    "n_apps": 10,
    "n_reviewers": 200,
    "ticks": 15,
    "background_rate": 1.5,
    "seed": 21,
    "injections": [
        {"app_id": "a003", "tick": 12, "n_edges": 60,
         "n_reviewers_used": 4, "score_mode": "boost"},
    ],
}


@pytest.fixture
def synth_files(tmp_path):
    spec_path = tmp_path / "spec.json"
    spec_path.write_text(json.dumps(SPEC), encoding="utf-8")
    reviews = tmp_path / "reviews.jsonl"
    truth = tmp_path / "truth.jsonl"
    catalog = tmp_path / "apps.csv"
    code = main([
        "synth", "--spec", str(spec_path), "--out", str(reviews),
        "--truth", str(truth), "--catalog", str(catalog),
    ])
    assert code == EXIT_OK
    return reviews, truth, catalog


def run_pipeline(reviews, catalog, out_dir, *extra):
    return main([
        "pipeline", "--reviews", str(reviews), "--catalog", str(catalog),
        "--out-dir", str(out_dir), "--origin", "0", *extra,
    ])


class TestPipeline:
    def test_writes_expected_files_and_manifest(self, synth_files, tmp_path, capsys):
        reviews, _, catalog = synth_files
        out_dir = tmp_path / "out"
        assert run_pipeline(reviews, catalog, out_dir) == EXIT_OK
        names = sorted(p.name for p in out_dir.iterdir())
        assert names == sorted([
            "parse_errors.jsonl", "scores.csv", "events.jsonl", "clusters.json",
            "cdf_boost.csv", "cdf_sink.csv", "summary.json", "manifest.json",
        ])
        summary = json.loads((out_dir / "summary.json").read_text())
        counts = summary["counts"]
        assert counts["boost"] + counts["sink"] + counts["unpartitioned"] == counts["reviews"]
        assert summary["events"] >= 1
        manifest = json.loads((out_dir / "manifest.json").read_text())
        assert manifest["tool"] == "reviewstream"
        assert manifest["config"]["origin"] == 0
        assert len(manifest["config"]["seeds"]) == manifest["config"]["rows"]
        assert manifest["inputs"]["reviews"]["sha256"]
        header = (out_dir / "scores.csv").read_text().splitlines()[1]
        assert header.startswith("# config ")
        stdout = capsys.readouterr().out.strip().splitlines()[-1]
        assert json.loads(stdout)["counts"] == counts

    def test_injected_app_tops_cluster_report(self, synth_files, tmp_path):
        reviews, _, catalog = synth_files
        out_dir = tmp_path / "out"
        assert run_pipeline(reviews, catalog, out_dir) == EXIT_OK
        report = json.loads((out_dir / "clusters.json").read_text())
        assert report[0]["app_id"] == "a003"
        assert report[0]["tick"] == 12
        assert report[0]["substream"] == "boost"
        assert report[0]["flagged_count"] >= 0.9 * report[0]["size"]
        assert report[0]["tau"] == 0.95 and report[0]["provider"] == "lexical"

    def test_rerun_is_byte_identical(self, synth_files, tmp_path):
        reviews, _, catalog = synth_files
        first, second = tmp_path / "out1", tmp_path / "out2"
        assert run_pipeline(reviews, catalog, first) == EXIT_OK
        assert run_pipeline(reviews, catalog, second) == EXIT_OK
        for name in ("scores.csv", "events.jsonl", "clusters.json",
                     "summary.json", "cdf_boost.csv", "cdf_sink.csv"):
            assert (first / name).read_bytes() == (second / name).read_bytes()

    def test_missing_catalog_exits_3_with_no_outputs(self, synth_files, tmp_path):
        reviews, _, _ = synth_files
        out_dir = tmp_path / "out"
        code = run_pipeline(reviews, tmp_path / "nope.csv", out_dir)
        assert code == EXIT_CONFIG
        assert not out_dir.exists()

    def test_missing_origin_exits_3(self, synth_files, tmp_path):
        reviews, _, catalog = synth_files
        code = main([
            "pipeline", "--reviews", str(reviews), "--catalog", str(catalog),
            "--out-dir", str(tmp_path / "out"),
        ])
        assert code == EXIT_CONFIG

    def test_bad_parameter_exits_3(self, synth_files, tmp_path):
        reviews, _, catalog = synth_files
        code = run_pipeline(reviews, catalog, tmp_path / "out", "--burst-factor", "0.5")
        assert code == EXIT_CONFIG

    def test_dirty_input_above_threshold_exits_2(self, synth_files, tmp_path):
        reviews, _, catalog = synth_files
        dirty = tmp_path / "dirty.jsonl"
        lines = reviews.read_text().splitlines()
        for i in range(0, len(lines), 10):  # corrupt 10% of lines
            lines[i] = "{broken"
        dirty.write_text("\n".join(lines) + "\n", encoding="utf-8")
        out_dir = tmp_path / "out"
        code = run_pipeline(dirty, catalog, out_dir)
        assert code == EXIT_DATA
        assert not out_dir.exists() or not any(out_dir.iterdir())

    def test_config_file_with_flag_override(self, synth_files, tmp_path):
        reviews, _, catalog = synth_files
        config_path = tmp_path / "run.json"
        config_path.write_text(json.dumps({"origin": 0, "burst_factor": 3.0, "top": 5}))
        out_dir = tmp_path / "out"
        code = main([
            "pipeline", "--reviews", str(reviews), "--catalog", str(catalog),
            "--out-dir", str(out_dir), "--config", str(config_path),
            "--burst-factor", "2.5",
        ])
        assert code == EXIT_OK
        manifest = json.loads((out_dir / "manifest.json").read_text())
        assert manifest["config"]["burst_factor"] == 2.5  # flag wins
        assert manifest["config"]["top"] == 5  # file wins over default

    def test_unknown_config_key_exits_3(self, synth_files, tmp_path):
        reviews, _, catalog = synth_files
        config_path = tmp_path / "run.json"
        config_path.write_text(json.dumps({"origin": 0, "burst": 2.0}))
        code = main([
            "pipeline", "--reviews", str(reviews), "--catalog", str(catalog),
            "--out-dir", str(tmp_path / "out"), "--config", str(config_path),
        ])
        assert code == EXIT_CONFIG


class TestStages:
    def test_ingest_then_score_then_clusters(self, synth_files, tmp_path, capsys):
        reviews, _, catalog = synth_files
        canonical = tmp_path / "canonical.jsonl"
        errors = tmp_path / "errors.jsonl"
        assert main([
            "ingest", "--reviews", str(reviews), "--out", str(canonical),
            "--errors", str(errors),
        ]) == EXIT_OK
        assert canonical.read_bytes() == reviews.read_bytes()  # already canonical
        assert errors.read_text() == ""

        scores = tmp_path / "scores.csv"
        events = tmp_path / "events.jsonl"
        assert main([
            "score", "--reviews", str(canonical), "--catalog", str(catalog),
            "--out-scores", str(scores), "--out-events", str(events),
            "--origin", "0",
        ]) == EXIT_OK
        partition_counts = json.loads(capsys.readouterr().out.strip().splitlines()[-1])
        assert set(partition_counts) == {"boost", "sink", "unpartitioned"}

        report_path = tmp_path / "clusters.json"
        assert main([
            "clusters", "--reviews", str(canonical), "--scores", str(scores),
            "--events", str(events), "--out", str(report_path),
            "--top", "10", "--tau", "1.0", "--provider", "lexical",
        ]) == EXIT_OK
        report = json.loads(report_path.read_text())
        assert any(entry["app_id"] == "a003" for entry in report)

    def test_pairs_finds_template_duplicates(self, synth_files, tmp_path, capsys):
        reviews, truth, _ = synth_files
        injected_ids = {
            json.loads(line)["review_id"]
            for line in truth.read_text().splitlines()
            if json.loads(line)["injected"]
        }
        subset = tmp_path / "subset.jsonl"
        with open(subset, "w") as out:
            for line in reviews.read_text().splitlines():
                if json.loads(line)["review_id"] in injected_ids:
                    out.write(line + "\n")
        assert main(["pairs", "--reviews", str(subset), "--tau", "1.0"]) == EXIT_OK
        result = json.loads(capsys.readouterr().out)
        assert result["evaluated"] == 60
        assert len(result["flagged"]) == 60  # every template repeats

    def test_stats_ttest_and_flags(self, tmp_path, capsys):
        a = tmp_path / "a.csv"
        b = tmp_path / "b.csv"
        a.write_text("score\n1\n2\n3\n")
        b.write_text("value\n4\n5\n6\n")
        assert main(["stats", "ttest", "--a", str(a), "--b", f"{b}:value"]) == EXIT_OK
        result = json.loads(capsys.readouterr().out)
        assert result["t"] == pytest.approx(-3.674, abs=1e-3)
        assert result["p"] == result["p_one_sided"]
        assert main([
            "stats", "ttest", "--a", str(a), "--b", f"{b}:value", "--two-sided",
        ]) == EXIT_OK
        result = json.loads(capsys.readouterr().out)
        assert result["p"] == result["p_two_sided"]

    def test_stats_ttest_degenerate_exits_2(self, tmp_path):
        a = tmp_path / "a.csv"
        a.write_text("score\n5\n5\n")
        assert main(["stats", "ttest", "--a", str(a), "--b", str(a)]) == EXIT_DATA

    def test_stats_cdf(self, tmp_path, capsys):
        scores = tmp_path / "s.csv"
        scores.write_text("score\n1.0\n2.0\n2.0\n4.0\n")
        assert main(["stats", "cdf", "--scores", str(scores)]) == EXIT_OK
        lines = capsys.readouterr().out.strip().splitlines()
        assert lines[0] == "value,fraction"
        assert lines[1] == "1.0,0.25"
        assert lines[-1] == "4.0,1.0"

    def test_stats_network(self, synth_files, tmp_path, capsys):
        reviews, _, _ = synth_files
        out = tmp_path / "net.csv"
        assert main([
            "stats", "network", "--reviews", str(reviews), "--out", str(out),
        ]) == EXIT_OK
        lines = out.read_text().splitlines()
        assert lines[0] == "app_a,app_b,weight"
        assert len(lines) > 1  # injection workers bridge apps via background overlap

    def test_synth_rejects_bad_spec(self, tmp_path):
        bad = tmp_path / "bad.json"
        bad.write_text(json.dumps({"n_apps": 0}))
        assert main([
            "synth", "--spec", str(bad), "--out", str(tmp_path / "r.jsonl"),
            "--truth", str(tmp_path / "t.jsonl"),
        ]) == EXIT_CONFIG


class TestTopLevel:
    def test_version(self, capsys):
        with pytest.raises(SystemExit) as err:
            main(["--version"])
        assert err.value.code == 0
        assert capsys.readouterr().out.startswith("reviewstream ")

    def test_unknown_flag_exits_3(self):
        assert main(["pipeline", "--bogus"]) == EXIT_CONFIG

    def test_unknown_command_exits_3(self):
        assert main(["frobnicate"]) == EXIT_CONFIG
