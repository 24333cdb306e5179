import json

import pytest

from parikhgrid import covering, export, realize, search
from parikhgrid.errors import InvalidInput
from parikhgrid.grid import build_grid

from helpers import check_dot


def _sample_reports():
    yield covering.verify("aabbcca", 2, 3)
    yield covering.verify("abab", 3, 3)
    yield covering.bounds(4, 3)
    yield covering.bounds(2, 5)
    yield search.search_shortest_covering(search.SearchConfig(k=2, sigma=3))
    yield search.search_pdb_existence(4, 3)
    yield realize.is_realizable_set([(2, 1, 0), (1, 2, 0)])
    yield realize.is_realizable_set([(3, 0, 0), (0, 3, 0)])
    yield covering.mincov_explore(3, 2, 7)


class TestJsonRoundTrip:
    def test_every_report_kind(self):
        for report in _sample_reports():
            text = export.to_json(report)
            back = export.from_json(text)
            assert back == report, type(report).__name__

    def test_schema_stamp(self):
        for report in _sample_reports():
            assert json.loads(export.to_json(report))["schema"] == 1

    def test_unknown_kind_rejected(self):
        with pytest.raises(InvalidInput):
            export.dict_to_report({"kind": "nonsense"})

    def test_vectors_as_integer_arrays(self):
        doc = json.loads(export.to_json(covering.verify("abab", 3, 3)))
        assert all(isinstance(v, list) for v in doc["missing"])


class TestGridExport:
    def test_json_counts_4_3(self):
        doc = export.grid_to_dict(build_grid(4, 3))
        assert doc["vertex_count"] == 15
        assert len(doc["vertices"]) == 15
        assert len(doc["undirected_edges"]) == 30
        assert len(doc["bows"]) == 30

    def test_positions_only_for_three_letters(self):
        doc3 = export.grid_to_dict(build_grid(2, 3))
        doc4 = export.grid_to_dict(build_grid(2, 4))
        assert all("pos" in v for v in doc3["vertices"])
        assert all("pos" not in v for v in doc4["vertices"])

    def test_directed_flag(self):
        g = build_grid(2, 3)
        doc = export.grid_to_dict(g, include_directed=True)
        assert len(doc["directed_edges"]) == (2 * g.undirected_edge_count()
                                              + g.bow_count())

    def test_vertices_carry_rank_and_vector(self):
        g = build_grid(3, 3)
        doc = export.grid_to_dict(g)
        for entry in doc["vertices"]:
            assert g.rank(tuple(entry["vector"])) == entry["rank"]


class TestDot:
    def test_valid_for_all_small_grids(self):
        for k in range(1, 6):
            for sigma in range(1, 6):
                check_dot(export.grid_to_dot(build_grid(k, sigma)))

    def test_triangle_with_self_loops(self):
        dot = export.grid_to_dot(build_grid(1, 3))
        assert dot.count("--") == 6  # 3 edges + 3 bows
        assert 'label="a"' in dot and 'label="c"' in dot

    def test_positions_in_dot_for_sigma3(self):
        dot = export.grid_to_dot(build_grid(4, 3))
        assert 'pos="0.0000,0.0000!"' in dot


class TestTable:
    def test_columns(self):
        table = export.cover_table([covering.verify("aabbcca", 2, 3)])
        header, row = table.strip().splitlines()
        assert header.split() == ["sigma", "k", "word", "length", "pdb",
                                  "excess"]
        assert row.split() == ["3", "2", "aabbcca", "7", "yes", "0"]

    def test_non_covering_marker(self):
        table = export.cover_table([covering.verify("ab", 3, 3)])
        assert "not covering" in table
