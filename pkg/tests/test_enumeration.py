import networkx as nx
import pytest

from randic.canon import canonical_form
from randic.codec import graph6_encode
from randic.enumeration import (
    EXPECTED_ALL_COUNTS,
    EXPECTED_CONNECTED_COUNTS,
    enumerate_all,
    enumerate_connected,
    ingest,
    labeled_connected,
    write_corpus,
)
from randic.errors import CorpusError, GraphError
from tests.conftest import from_networkx, random_connected


def atlas_forms(n, connected=True):
    return {
        canonical_form(from_networkx(H))
        for H in nx.graph_atlas_g()
        if H.number_of_nodes() == n and (not connected or nx.is_connected(H))
    }


@pytest.mark.parametrize("n", range(1, 7))
def test_connected_class_counts(n):
    """Test the number of connected classes for n <= 6"""
    graphs = list(enumerate_connected(n))
    assert len(graphs) == EXPECTED_CONNECTED_COUNTS[n]


@pytest.mark.parametrize("n", range(1, 7))
def test_all_class_counts(n):
    """Test the number of classes, connected or not, for n <= 6"""
    assert len(list(enumerate_all(n))) == EXPECTED_ALL_COUNTS[n]


def test_counts_table():
    """Test the documented counts"""
    assert [EXPECTED_CONNECTED_COUNTS[n] for n in range(1, 8)] == [1, 1, 2, 6, 21, 112, 853]
    assert EXPECTED_CONNECTED_COUNTS[8] == 11117
    assert EXPECTED_CONNECTED_COUNTS[9] == 261080


@pytest.mark.parametrize("n", range(2, 7))
def test_matches_graph_atlas(n):
    """Test the enumeration against networkx's atlas of small graphs"""
    assert {canonical_form(G) for G in enumerate_connected(n)} == atlas_forms(n)


@pytest.mark.parametrize("n", range(1, 6))
def test_matches_labeled_brute_force(n):
    """Test the enumeration against deduplicated labeled graphs"""
    labeled = {canonical_form(G) for G in labeled_connected(n)}
    assert labeled == {canonical_form(G) for G in enumerate_connected(n)}


def test_no_duplicates_and_sorted():
    """Test canonical forms are distinct and the stream is ordered by them"""
    forms = [canonical_form(G) for G in enumerate_connected(6)]
    assert len(set(forms)) == len(forms)
    assert forms == sorted(forms)


def test_completeness_on_random_graphs(rng):
    """Test random connected graphs all appear in the enumeration"""
    known = {n: {canonical_form(G) for G in enumerate_connected(n)} for n in range(1, 7)}
    for _ in range(200):
        n = rng.randint(1, 6)
        assert canonical_form(random_connected(rng, n, p=rng.random())) in known[n]


@pytest.mark.slow
def test_seven_vertices():
    """Test n = 7: 853 connected classes matching the atlas, 1044 classes overall"""
    forms = {canonical_form(G) for G in enumerate_connected(7)}
    assert len(forms) == 853
    assert forms == atlas_forms(7)
    assert len(list(enumerate_all(7))) == 1044


@pytest.mark.parametrize("n", [0, 8])
def test_builtin_order_range(n):
    """Test orders outside 1..7 are refused"""
    with pytest.raises(GraphError) as exc:
        list(enumerate_connected(n))
    assert exc.value.code == "order_out_of_range"


# ==========================
# CORPUS FILES
# ==========================

def test_ingest_streams_in_file_order(tmp_path):
    """Test lines "Bw" and "Bg" give K3 then P3"""
    path = tmp_path / "small.g6"
    path.write_text("Bw\n\nBg\n")
    graphs = list(ingest(str(path)))
    assert [G.size for G in graphs] == [3, 2]
    assert graphs[0].is_complete()


def test_ingest_empty_file(tmp_path):
    """Test an empty file is an empty stream"""
    path = tmp_path / "empty.g6"
    path.write_text("")
    assert list(ingest(str(path))) == []


def test_ingest_reports_bad_line(tmp_path):
    """Test a malformed line aborts with its line number"""
    path = tmp_path / "bad.g6"
    path.write_text("Bw\nB!\nBg\n")
    stream = ingest(str(path))
    assert next(stream).is_complete()
    with pytest.raises(CorpusError) as exc:
        next(stream)
    assert exc.value.code == "corpus_line"
    assert exc.value.detail["line"] == 2
    assert exc.value.detail["reason"] == "graph6_char"


def test_ingest_missing_file(tmp_path):
    """Test I/O failure"""
    with pytest.raises(CorpusError) as exc:
        list(ingest(str(tmp_path / "missing.g6")))
    assert exc.value.code == "corpus_io"


def test_ingest_order_mismatch(tmp_path):
    """Test graphs of the wrong order are rejected when an order is required"""
    path = tmp_path / "mixed.g6"
    path.write_text("Bw\nCl\n")
    with pytest.raises(CorpusError) as exc:
        list(ingest(str(path), order=3))
    assert exc.value.code == "order_mismatch"
    assert exc.value.detail["line"] == 2


def test_write_corpus(tmp_path):
    """Test the builtin corpus written to disk reads back in the same order"""
    path = tmp_path / "out" / "n5.g6"
    graphs = list(enumerate_connected(5))
    assert write_corpus(str(path), graphs) == 21
    lines = path.read_text().split()
    assert lines == [graph6_encode(G) for G in graphs]
    assert list(ingest(str(path), order=5)) == graphs
