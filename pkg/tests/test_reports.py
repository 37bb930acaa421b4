"""Deterministic rendering and RNG stream plumbing."""

from __future__ import annotations

import csv
import io
import json
import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from bruhatlab.reports import (
    format_value,
    render_csv,
    render_json,
    shard_sizes,
    spawn_stream,
    write_text,
)


class TestSpawnStream:
    def test_deterministic(self):
        assert spawn_stream(7, 0).random() == spawn_stream(7, 0).random()

    def test_indices_decorrelated(self):
        draws = {spawn_stream(7, i).random() for i in range(20)}
        assert len(draws) == 20

    def test_seed_matters(self):
        assert spawn_stream(1, 0).random() != spawn_stream(2, 0).random()


class TestShardSizes:
    @given(st.integers(1, 500), st.integers(1, 40))
    def test_partition_is_balanced(self, total, workers):
        sizes = shard_sizes(total, workers)
        assert sum(sizes) == total
        assert len(sizes) == workers
        assert max(sizes) - min(sizes) <= 1

    def test_validation(self):
        with pytest.raises(ValueError):
            shard_sizes(0, 2)
        with pytest.raises(ValueError):
            shard_sizes(5, 0)


class TestFormatValue:
    def test_scalars(self):
        assert format_value(True) == "true"
        assert format_value(False) == "false"
        assert format_value(42) == "42"
        assert format_value(0.25) == "0.25"
        assert format_value("word") == "word"

    @given(st.floats(allow_nan=False, allow_infinity=False))
    def test_floats_round_trip(self, x):
        assert float(format_value(x)) == x

    def test_rejects_non_finite(self):
        with pytest.raises(ValueError):
            format_value(math.inf)
        with pytest.raises(ValueError):
            format_value(math.nan)

    def test_rejects_compound_values(self):
        with pytest.raises(TypeError):
            format_value([1, 2])


ROWS = [
    {"n": 3, "note": "plain", "x": 0.5},
    {"n": 4, "note": "has, comma", "x": 1.0},
]
COLUMNS = ("n", "note", "x")
CONFIG = {"command": "demo", "seed": 0}


class TestRenderCsv:
    def test_layout(self):
        text = render_csv(ROWS, COLUMNS, CONFIG)
        lines = text.split("\n")
        assert lines[0] == "# bruhatlab 0.1.0"
        assert lines[1].startswith("# config {")
        assert lines[2] == "n,note,x"
        assert lines[3] == "3,plain,0.5"
        assert lines[4] == '4,"has, comma",1.0'
        assert text.endswith("\n")
        parsed = list(csv.reader(io.StringIO("\n".join(lines[2:]))))
        assert parsed[2] == ["4", "has, comma", "1.0"]

    def test_config_echo_is_json(self):
        text = render_csv(ROWS, COLUMNS, CONFIG)
        echoed = json.loads(text.split("\n")[1][len("# config ") :])
        assert echoed == CONFIG


class TestRenderJson:
    def test_loads_back(self):
        doc = json.loads(render_json(ROWS, COLUMNS, CONFIG))
        assert doc["tool"] == "bruhatlab"
        assert doc["version"] == "0.1.0"
        assert doc["config"] == CONFIG
        assert doc["rows"] == [
            {"n": 3, "note": "plain", "x": 0.5},
            {"n": 4, "note": "has, comma", "x": 1.0},
        ]

    def test_stable_bytes(self):
        assert render_json(ROWS, COLUMNS, CONFIG) == render_json(ROWS, COLUMNS, CONFIG)
        assert render_json(ROWS, COLUMNS, CONFIG).endswith("\n")


class TestWriteText:
    def test_to_file(self, tmp_path):
        target = tmp_path / "out.csv"
        write_text("payload\n", str(target))
        assert target.read_text(encoding="utf-8") == "payload\n"

    def test_to_stdout(self, capsys):
        write_text("payload\n", None)
        assert capsys.readouterr().out == "payload\n"
