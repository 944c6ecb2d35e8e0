"""End-to-end checks of the python bindings against the worked example."""

import os

import pytest

import tccs

DATA = os.environ.get("TCCS_DATA", os.path.join(os.path.dirname(__file__), "..", "data"))
EXAMPLE = os.path.join(DATA, "example.txt")

EXPECTED_CORE_TIMES = [
    [(1, 5), (3, None)],
    [(1, 6), (4, None)],
    [(1, 4), (5, None)],
    [(1, 4), (5, None)],
    [(1, 4), (5, None)],
    [(1, 5), (5, None)],
    [(1, 5), (5, None)],
    [(1, 5), (5, None)],
    [(1, 6), (4, None)],
    [(1, 6), (4, 7), (5, None)],
    [(1, 7), (5, None)],
]


@pytest.fixture(scope="module")
def example():
    return tccs.load_edge_list(EXAMPLE)


def test_load_and_shape(example):
    assert example.num_vertices == 8
    assert example.num_edges == 11
    assert example.t_max == 7
    assert example.labels() == [1, 2, 3, 4, 5, 6, 7, 8]
    edges = example.edges()
    assert edges[0] == (3, 8, 2)
    assert edges[-1] == (5, 6, 7)


def test_parse_matches_load(example):
    with open(EXAMPLE) as f:
        parsed = tccs.parse_edge_list(f.read())
    assert parsed.edges() == example.edges()


def test_kmax(example):
    assert tccs.measure_kmax(example) == 2


def test_edge_core_times(example):
    assert tccs.edge_core_times(example, 2) == EXPECTED_CORE_TIMES


def test_direct_component_answers(example):
    assert tccs.core_component(example, 2, 2, 3, 5) == [1, 2, 3]
    assert tccs.core_component(example, 2, 5, 3, 7) == [1, 2, 3, 4, 5, 6, 7, 8]
    assert tccs.core_component(example, 2, 4, 4, 5) == []
    assert tccs.core_component(example, 2, 8, 2, 5) == [1, 2, 3, 6, 7, 8]


def test_index_agrees_everywhere(example):
    idx = tccs.build_index(example, 2)
    assert idx.k == 2
    assert idx.num_vertices == 8
    assert idx.t_max == 7
    assert idx.node_count == 12
    for u in example.labels():
        for ts in range(1, 8):
            for te in range(ts, 8):
                assert idx.query(u, ts, te) == tccs.core_component(example, 2, u, ts, te)


def test_baseline_agrees_everywhere(example):
    idx = tccs.build_baseline(example, 2)
    assert idx.k == 2
    for u in example.labels():
        for ts in range(1, 8):
            for te in range(ts, 8):
                assert idx.query(u, ts, te) == tccs.core_component(example, 2, u, ts, te)


def test_stats_dict(example):
    st = tccs.build_index(example, 2).stats()
    assert st["nodes"] == 12
    assert st["live_nodes"] == 9
    assert st["entries"] == 14
    assert st["entry_point_records"] == 10
    assert st["bytes"] > 0


def test_save_load_roundtrip(example, tmp_path):
    idx = tccs.build_index(example, 2)
    p = tmp_path / "example.pecb"
    idx.save(str(p))
    back = tccs.load_index(str(p))
    assert back.node_count == idx.node_count
    assert back.query(2, 3, 5) == [1, 2, 3]

    base = tccs.build_baseline(example, 2)
    q = tmp_path / "example.ctmsf"
    base.save(str(q))
    assert tccs.load_baseline(str(q)).query(2, 3, 5) == [1, 2, 3]


def test_generated_graph_roundtrip(tmp_path):
    g1 = tccs.generate_graph(25, 120, 15, seed=9)
    g2 = tccs.generate_graph(25, 120, 15, seed=9)
    assert g1.edges() == g2.edges()
    idx = tccs.build_index(g1, 2)
    base = tccs.build_baseline(g1, 2)
    for u in range(0, 25, 5):
        for ts in range(1, 16, 3):
            for te in range(ts, 16, 2):
                expect = tccs.core_component(g1, 2, u, ts, te)
                assert idx.query(u, ts, te) == expect
                assert base.query(u, ts, te) == expect


def test_timestamp_transforms():
    g = tccs.parse_edge_list("1 2 10\n2 3 86410\n1 3 99\n")
    agg = g.aggregate_days()
    assert agg.t_max == 2
    norm = g.normalize_timestamps()
    assert norm.t_max == 3


def test_error_translation(example, tmp_path):
    idx = tccs.build_index(example, 2)
    with pytest.raises(ValueError):
        idx.query(2, 0, 5)  # window start below range
    with pytest.raises(ValueError):
        idx.query(2, 5, 4)
    with pytest.raises(ValueError):
        idx.query(99, 1, 7)  # unknown label
    with pytest.raises(RuntimeError):
        tccs.load_index(str(tmp_path / "missing.pecb"))
    with pytest.raises(RuntimeError):
        tccs.parse_edge_list("1 2\n")
