import json

from click.testing import CliRunner

from arcwalk.cli import main

runner = CliRunner()


class TestAnalyzeCommand:
    def test_graph6(self):
        result = runner.invoke(main, ["analyze", "--graph6", "C~"])
        assert result.exit_code == 0
        doc = json.loads(result.output)
        assert doc["input"]["graph6"] == "C~"
        assert doc["dimensions"]["dim_L"] == 5

    def test_edges_file(self, tmp_path):
        path = tmp_path / "c4.txt"
        path.write_text("4 4\n0 1\n1 2\n2 3\n0 3\n")
        result = runner.invoke(main, ["analyze", "--edges", str(path)])
        assert result.exit_code == 0
        assert json.loads(result.output)["input"]["graph6"] == "Cl"

    def test_out_file(self, tmp_path):
        out = tmp_path / "doc.json"
        result = runner.invoke(
            main, ["analyze", "--graph6", "C~", "--out", str(out)]
        )
        assert result.exit_code == 0
        assert result.output == ""
        assert json.loads(out.read_text())["input"]["n"] == 4

    def test_requires_exactly_one_input(self):
        assert runner.invoke(main, ["analyze"]).exit_code == 2
        path_args = ["analyze", "--graph6", "C~", "--edges", "x.txt"]
        assert runner.invoke(main, path_args).exit_code == 2

    def test_missing_edges_file(self):
        result = runner.invoke(main, ["analyze", "--edges", "/nonexistent/e.txt"])
        assert result.exit_code == 2

    def test_malformed_graph6_is_input_error(self):
        result = runner.invoke(main, ["analyze", "--graph6", "C\x01"])
        assert result.exit_code == 2
        assert "error" in result.output

    def test_bipartite_precondition_exit_code(self):
        result = runner.invoke(
            main, ["analyze", "--graph6", "C~", "--basis", "bipartite"]
        )
        assert result.exit_code == 3
        assert "odd cycle" in result.output

    def test_candidates_flag(self):
        result = runner.invoke(
            main,
            [
                "analyze",
                "--graph6",
                "Cl",
                "--semisimple",
                "--candidates",
                "2,0,1",
                "--candidates",
                "2,1,1",
            ],
        )
        assert result.exit_code == 0
        doc = json.loads(result.output)
        assert doc["semisimplicity"]["is_semisimple"] is True

    def test_bad_candidate_is_input_error(self):
        result = runner.invoke(
            main,
            ["analyze", "--graph6", "Cl", "--semisimple", "--candidates", "2,2"],
        )
        assert result.exit_code == 2

    def test_byte_identical_repeats(self):
        args = ["analyze", "--graph6", "Cl", "--basis", "all", "--identities"]
        first = runner.invoke(main, args)
        second = runner.invoke(main, args)
        assert first.exit_code == second.exit_code == 0
        assert first.output == second.output


class TestCensusCommand:
    def test_builtin_small(self):
        result = runner.invoke(
            main, ["census", "--census-n", "5", "--no-degree-one", "--min-degree", "2"]
        )
        assert result.exit_code == 0
        doc = json.loads(result.output)
        assert doc["non_semisimple_count"] == 0
        assert doc["total_examined"] == 11

    def test_source_file(self, tmp_path):
        path = tmp_path / "stream.g6"
        path.write_text("C~\nCl\nnot-a-graph\x02\n")
        result = runner.invoke(
            main, ["census", "--source", str(path), "--all"]
        )
        assert result.exit_code == 0
        doc = json.loads(result.output)
        assert doc["total_examined"] == 2
        assert len(doc["errors"]) == 1

    def test_requires_exactly_one_source(self):
        assert runner.invoke(main, ["census"]).exit_code == 2
        args = ["census", "--census-n", "4", "--source", "x.g6"]
        assert runner.invoke(main, args).exit_code == 2

    def test_oversized_n_is_input_error(self):
        result = runner.invoke(main, ["census", "--census-n", "12"])
        assert result.exit_code == 2

    def test_jobs_do_not_change_bytes(self):
        base = ["census", "--census-n", "6", "--min-degree", "2"]
        one = runner.invoke(main, base + ["--jobs", "1"])
        two = runner.invoke(main, base + ["--jobs", "2"])
        assert one.exit_code == two.exit_code == 0
        assert one.output == two.output

    def test_regular_flag(self):
        result = runner.invoke(
            main, ["census", "--census-n", "6", "--regular", "3"]
        )
        assert result.exit_code == 0
        assert json.loads(result.output)["total_examined"] == 2
