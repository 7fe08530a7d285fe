import os

import numpy as np
import pytest

from walkingtime.cli import main
from walkingtime.embedding import load_embeddings
from walkingtime.graph import parse_input
from walkingtime.pipeline import atomic_write_text
from walkingtime.plotting import emit_scatter, format_label_colors, read_label_colors

SMALL_INPUT = "I a b 0 2\nP b c 1\nS c d\nI a d 1 3\nP d e 2\n"


@pytest.fixture
def small_input(tmp_path):
    path = tmp_path / "edges.txt"
    path.write_text(SMALL_INPUT)
    return str(path)


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestRun:
    def test_end_to_end_and_determinism(self, small_input, tmp_path, capsys):
        out1 = str(tmp_path / "emb1.txt")
        out2 = str(tmp_path / "emb2.txt")
        base = [
            "run", "--input", small_input, "--lambda", "0.5",
            "--walk-length", "12", "--walks-per-node", "4", "--window", "3",
            "--iters", "2", "--dim", "4", "--seed", "11",
        ]
        code, _, err = run_cli(capsys, *base, "--output", out1)
        assert code == 0
        code, _, _ = run_cli(capsys, *base, "--output", out2, "--threads", "3")
        assert code == 0
        with open(out1, "rb") as f1, open(out2, "rb") as f2:
            assert f1.read() == f2.read()
        labels, vecs = load_embeddings(open(out1).read())
        assert labels == ["a", "b", "c", "d", "e"]
        assert vecs.shape == (5, 4)
        # manifest reproduces the full configuration
        for needle in ("lambda = 0.5", "seed = 11", "nodes = 5", "walks = 20"):
            assert needle in err

    def test_missing_lambda_is_config_error(self, small_input, tmp_path, capsys):
        code, _, err = run_cli(
            capsys, "run", "--input", small_input,
            "--output", str(tmp_path / "e.txt"),
        )
        assert code == 3
        assert "--lambda" in err

    def test_malformed_input_is_parse_error(self, tmp_path, capsys):
        bad = tmp_path / "bad.txt"
        bad.write_text("I a b 3 3\n")
        code, _, err = run_cli(
            capsys, "run", "--input", str(bad), "--output",
            str(tmp_path / "e.txt"), "--lambda", "1",
        )
        assert code == 2
        assert "line 1" in err
        assert not (tmp_path / "e.txt").exists()

    def test_missing_input_file_is_config_error(self, tmp_path, capsys):
        code, _, _ = run_cli(
            capsys, "run", "--input", str(tmp_path / "nope.txt"),
            "--output", str(tmp_path / "e.txt"), "--lambda", "1",
        )
        assert code == 3

    def test_bad_domain_value_is_config_error(self, small_input, tmp_path, capsys):
        code, _, err = run_cli(
            capsys, "run", "--input", small_input, "--output",
            str(tmp_path / "e.txt"), "--lambda", "1", "--p", "0",
        )
        assert code == 3
        assert "p and q" in err

    def test_unknown_flag_is_config_error(self, small_input, capsys):
        code, _, _ = run_cli(capsys, "run", "--input", small_input, "--frobnicate", "1")
        assert code == 3


class TestGolGen:
    def test_paper_dataset_counts(self, tmp_path, capsys):
        edges = tmp_path / "gol.txt"
        labels = tmp_path / "labels.csv"
        code, _, err = run_cli(
            capsys, "gol-gen", "--steps", "200",
            "--output", str(edges), "--labels", str(labels),
        )
        assert code == 0
        g = parse_input(edges.read_text())
        assert g.num_nodes == 404
        assert len(g.point_edges) == 2200
        colors = read_label_colors(labels.read_text())
        assert len(colors) == 404
        assert sorted(set(colors.values())) == ["blue", "red", "yellow"]
        assert "nodes = 404" in err and "multi_edges = 2200" in err

    def test_stdout_mode(self, capsys):
        code, out, _ = run_cli(capsys, "gol-gen", "--steps", "2")
        assert code == 0
        g = parse_input(out)
        assert g.num_nodes > 0 and g.point_edges

    def test_bad_steps(self, capsys):
        assert run_cli(capsys, "gol-gen", "--steps", "0")[0] == 3

    def test_deterministic_bytes(self, tmp_path, capsys):
        a, b = tmp_path / "a.txt", tmp_path / "b.txt"
        run_cli(capsys, "gol-gen", "--steps", "40", "--output", str(a))
        run_cli(capsys, "gol-gen", "--steps", "40", "--output", str(b))
        assert a.read_bytes() == b.read_bytes()


class TestLambdaHist:
    def test_csv_output_and_summary(self, tmp_path, capsys):
        edges = tmp_path / "gol.txt"
        run_cli(capsys, "gol-gen", "--steps", "60", "--output", str(edges))
        code, out, err = run_cli(
            capsys, "lambda-hist", "--input", str(edges), "--samples", "500",
        )
        assert code == 0
        lines = out.strip().splitlines()
        assert lines[0] == "bin_start,bin_end,count"
        counts = [int(row.split(",")[2]) for row in lines[1:]]
        assert sum(counts) == 500
        assert "q50=" in err and "n=500" in err
        # unit-spaced point edges around a cell: every gap is small
        q90 = float(err.split("q90=")[1].split()[0])
        assert 0.0 <= q90 <= 2.0

    def test_zero_samples_is_config_error(self, small_input, capsys):
        code, _, _ = run_cli(capsys, "lambda-hist", "--input", small_input, "--samples", "0")
        assert code == 3

    def test_graph_without_eligible_nodes_is_config_error(self, tmp_path, capsys):
        path = tmp_path / "edges.txt"
        path.write_text("S a b\nS b c\n")
        code, _, err = run_cli(capsys, "lambda-hist", "--input", str(path), "--samples", "5")
        assert code == 3
        assert "finite" in err


class TestPlot:
    def _embedding_file(self, tmp_path, rows):
        path = tmp_path / "emb.txt"
        body = [f"{len(rows)} 2"] + [f"{lab} {x} {y}" for lab, x, y in rows]
        path.write_text("\n".join(body) + "\n")
        return str(path)

    def test_markers_and_colors(self, tmp_path, capsys):
        emb = self._embedding_file(
            tmp_path, [("a", 0, 0), ("b", 1, 1), ("c", 2, 0), ("d", 0.5, 3)]
        )
        labels = tmp_path / "labels.csv"
        labels.write_text("label,color\na,red\nb,blue\nc,yellow\n")
        svg_path = tmp_path / "plot.svg"
        code, _, _ = run_cli(
            capsys, "plot", "--embeddings", emb, "--labels", str(labels),
            "--output", str(svg_path),
        )
        assert code == 0
        svg = svg_path.read_text()
        assert svg.count("<circle") == 4
        assert "#d62728" in svg and "#1f77b4" in svg and "#e6b800" in svg
        assert "#999999" in svg  # unlabeled node renders gray
        assert svg.startswith("<svg")

    def test_empty_embedding_valid_svg(self, tmp_path, capsys):
        emb = self._embedding_file(tmp_path, [])
        code, out, _ = run_cli(capsys, "plot", "--embeddings", emb)
        assert code == 0
        assert out.startswith("<svg") and "</svg>" in out
        assert "<circle" not in out

    def test_wrong_dimension_rejected(self, tmp_path, capsys):
        path = tmp_path / "emb.txt"
        path.write_text("1 3\na 1 2 3\n")
        code, _, err = run_cli(capsys, "plot", "--embeddings", str(path))
        assert code == 3
        assert "2-d" in err

    def test_deterministic_bytes(self, tmp_path, capsys):
        emb = self._embedding_file(tmp_path, [("a", 0, 0), ("b", 1, 1)])
        _, out1, _ = run_cli(capsys, "plot", "--embeddings", emb)
        _, out2, _ = run_cli(capsys, "plot", "--embeddings", emb)
        assert out1 == out2


class TestPlottingUnits:
    def test_single_point_padded(self):
        svg = emit_scatter(["x"], np.array([[2.0, 2.0]]), {"x": "red"})
        assert svg.count("<circle") == 1

    def test_label_count_mismatch(self):
        with pytest.raises(ValueError):
            emit_scatter(["a"], np.zeros((2, 2)))

    def test_label_colors_round_trip(self):
        colors = {"a": "red", "b_1": "yellow"}
        assert read_label_colors(format_label_colors(colors)) == colors

    def test_bad_labels_csv(self):
        with pytest.raises(ValueError):
            read_label_colors(",red\n")


class TestAtomicWrite:
    def test_writes_and_replaces(self, tmp_path):
        path = tmp_path / "out.txt"
        atomic_write_text(str(path), "one\n")
        atomic_write_text(str(path), "two\n")
        assert path.read_text() == "two\n"
        assert [p for p in os.listdir(tmp_path) if p.startswith(".tmp-")] == []

    def test_failure_leaves_no_partial_file(self, tmp_path):
        target = tmp_path / "missing-dir" / "out.txt"
        with pytest.raises(OSError):
            atomic_write_text(str(target), "data")
        assert not target.exists()


def test_help_exits_zero(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["--help"])
    assert exc.value.code == 0
