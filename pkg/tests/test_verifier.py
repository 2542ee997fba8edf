import csv
import io
import json

import pytest

from randic import bounds, verifier
from randic.canon import canonical_form
from randic.enumeration import enumerate_connected
from randic.errors import CorpusError, ParameterError
from randic.families import (
    connectivity_split_spec,
    generate,
    pendant_cycle_spec,
    pineapple_spec,
    predicted_index,
    star_spec,
    turan_spec,
)
from randic.graph import delete_edge, is_connected
from randic.invariants import edge_connectivity, vertex_connectivity
from randic.schemas import CorpusSource, GraphClass, Theorem, TheoremCase, Verdict
from randic.verifier import ProfileTable

TABLES = {}


def table(n):
    if n not in TABLES:
        TABLES[n] = ProfileTable.build(n, enumerate_connected(n))
    return TABLES[n]


def case(theorem, n, c, gamma, exploratory=False):
    return TheoremCase(theorem=theorem, n=n, c=c, gamma=gamma, exploratory=exploratory)


def g6(spec):
    return canonical_form(generate(spec)).graph6


# ==========================
# THEOREM CASES
# ==========================

def test_chromatic_lower_six_three():
    """Test min over chi = 3 on 6 vertices is T6(3) alone"""
    report = verifier.verify(case(Theorem.CHROMATIC_LOWER, 6, 3, -1.0), CorpusSource(kind="builtin", n=6))
    assert report.verdict is Verdict.PASS
    assert report.extremum == pytest.approx(1.5, rel=1e-12)
    assert report.witnesses_found == [g6(turan_spec(6, 3))]
    assert report.graph_class is GraphClass.CHROMATIC_EQ
    assert report.separation is not None and report.separation > 1e-6


def test_connectivity_lower_split_tie():
    """Test both splits of K1 + (K_a u K_b) are extremal at c = 1, gamma = -1"""
    report = verifier.verify(case(Theorem.CONNECTIVITY_LOWER, 5, 1, -1.0), table=table(5))
    assert report.verdict is Verdict.PASS
    assert report.extremum == pytest.approx(2.25, rel=1e-12)
    assert report.witnesses_found == sorted(
        [g6(connectivity_split_spec(5, 1, 1)), g6(connectivity_split_spec(5, 1, 2))]
    )


def test_connectivity_lower_unique_above_minus_one():
    """Test the tie disappears for -1 < gamma < 0"""
    report = verifier.verify(case(Theorem.CONNECTIVITY_LOWER, 5, 1, -0.5), table=table(5))
    assert report.verdict is Verdict.PASS
    assert report.witnesses_found == [g6(connectivity_split_spec(5, 1, 1))]


def test_cutedge_upper_six_two():
    """Test max over two cut edges on 6 vertices is C4 with two pendants"""
    report = verifier.verify(case(Theorem.CUTEDGE_UPPER, 6, 2, -0.5), table=table(6))
    assert report.verdict is Verdict.PASS
    assert report.extremum == pytest.approx(2 + 3 * 2 ** -0.5 + 4 ** -0.5, rel=1e-12)
    assert report.extremum == pytest.approx(4.6213, abs=1e-4)
    assert report.witnesses_found == [g6(pendant_cycle_spec(6, 2))]


def test_chromatic_upper_pineapple():
    """Test max over chi = 3 on 6 vertices is PA6(3)"""
    report = verifier.verify(case(Theorem.CHROMATIC_UPPER, 6, 3, -1.0), table=table(6))
    assert report.verdict is Verdict.PASS
    assert report.witnesses_found == [g6(pineapple_spec(6, 3))]


def test_star_upper():
    """Test the star maximises the index among graphs with kappa <= c"""
    report = verifier.verify(case(Theorem.CONN_STAR_UPPER, 6, 3, -2.0), table=table(6))
    assert report.verdict is Verdict.PASS
    assert report.witnesses_found == [g6(star_spec(6))]


def test_suite_four_to_six():
    """Test every proven case passes on 4, 5 and 6 vertices at gamma in {-2, -1, -0.5}"""
    reports = verifier.verify_suite([4, 5, 6], [-2.0, -1.0, -0.5])
    assert reports
    assert {r.theorem for r in reports} == set(Theorem)
    failed = [(r.theorem.value, r.n, r.c, r.verdict.value) for r in reports if r.verdict is not Verdict.PASS]
    assert failed == []
    assert verifier.exit_status(reports) == 0
    for r in reports:
        assert r.witnesses_found == r.witnesses_expected


@pytest.mark.slow
def test_suite_seven():
    """Test every theorem passes on the builtin 7-vertex corpus"""
    reports = verifier.verify_suite([7], [-2.0, -1.0, -0.5], jobs=2)
    assert verifier.exit_status(reports) == 0
    assert all(r.verdict is Verdict.PASS for r in reports)


# ==========================
# VERDICTS
# ==========================

def test_empty_class():
    """Test Omega(n, n-2) is empty and reported without failing the run"""
    report = verifier.verify(case(Theorem.CUTEDGE_UPPER, 5, 3, -1.0, exploratory=True), table=table(5))
    assert report.verdict is Verdict.EMPTY_CLASS
    assert report.class_size == 0
    assert report.extremum is None
    assert verifier.exit_status([report]) == 0


def test_exploratory_cases_do_not_fail_the_run():
    """Test exploratory reports are flagged and excluded from the exit status"""
    cases = verifier.suite_cases([5], [-0.5], [Theorem.CHROMATIC_UPPER], exploratory=True)
    assert cases and all(c.exploratory for c in cases)
    reports = verifier.verify_suite([5], [-0.5], [Theorem.CHROMATIC_UPPER], exploratory=True)
    assert all(r.exploratory for r in reports)
    assert verifier.exit_status(reports) == 0


def test_suite_cases_skip_unproven_without_flag():
    """Test unproven combinations are left out unless exploratory"""
    assert verifier.suite_cases([5], [-0.5], [Theorem.CHROMATIC_UPPER]) == []
    cases = verifier.suite_cases([6], [-1.0], [Theorem.CUTEDGE_UPPER], exploratory=True)
    assert [(c.c, c.exploratory) for c in cases] == [
        (1, False), (2, False), (3, False), (4, True), (5, True)
    ]


def test_wrong_bound_is_reported(monkeypatch):
    """Test a bound that is not attained gives FAIL_BOUND with a reproducible graph"""
    monkeypatch.setattr(bounds, "bound_value", lambda q: 0.0)
    report = verifier.verify(case(Theorem.CHROMATIC_LOWER, 5, 3, -1.0), table=table(5))
    assert report.verdict is Verdict.FAIL_BOUND
    assert report.counterexample in report.witnesses_found
    assert verifier.exit_status([report]) == 1


def test_wrong_witness_is_reported(monkeypatch):
    """Test a mismatched extremal set gives FAIL_CHARACTERIZATION"""
    monkeypatch.setattr(bounds, "expected_witnesses", lambda q: [star_spec(q.n)])
    report = verifier.verify(case(Theorem.CHROMATIC_LOWER, 5, 3, -1.0), table=table(5))
    assert report.verdict is Verdict.FAIL_CHARACTERIZATION
    assert report.counterexample == g6(turan_spec(5, 3))


def test_pass_reproduces_bound_from_witnesses():
    """Test each passing case's witnesses evaluate to the bound through the families module"""
    for r in verifier.verify_suite([5], [-1.0, -0.5]):
        assert r.verdict is Verdict.PASS
        q = bounds.BoundQuery(theorem=r.theorem, n=r.n, c=r.c, gamma=r.gamma)
        for spec in bounds.expected_witnesses(q):
            assert predicted_index(spec, r.gamma) == pytest.approx(r.bound, rel=1e-9)


# ==========================
# PROPERTIES
# ==========================

def test_extremal_set_ignores_corpus_order(rng):
    """Test ties are resolved the same way for a shuffled corpus"""
    graphs = list(enumerate_connected(5))
    rng.shuffle(graphs)
    shuffled = ProfileTable.build(5, graphs)
    c = case(Theorem.CONNECTIVITY_LOWER, 5, 1, -1.0)
    assert verifier.verify(c, table=shuffled) == verifier.verify(c, table=table(5))


def test_parallel_table_matches_serial():
    """Test the multiprocessing sweep gives the same table"""
    parallel = ProfileTable.build(5, enumerate_connected(5), jobs=2)
    assert parallel.rows == table(5).rows
    assert parallel.forms == table(5).forms


def test_edge_deletion_keeps_connectivity_classes(rng):
    """Test G - e stays in V_{n,c} and E_{n,c} when it stays connected"""
    graphs = list(enumerate_connected(6))
    for G in rng.sample(graphs, 40):
        kappa, lam = vertex_connectivity(G), edge_connectivity(G)
        for u, v in G.edges():
            H = delete_edge(G, u, v)
            if is_connected(H):
                assert vertex_connectivity(H) <= kappa
                assert edge_connectivity(H) <= lam


def test_table_order_mismatch():
    """Test a table of the wrong order is refused"""
    with pytest.raises(CorpusError) as exc:
        verifier.verify(case(Theorem.CHROMATIC_LOWER, 6, 3, -1.0), table=table(5))
    assert exc.value.code == "order_mismatch"


def test_file_corpus(tmp_path):
    """Test a graph6 corpus file as the source"""
    from randic.enumeration import write_corpus

    path = tmp_path / "n5.g6"
    write_corpus(str(path), enumerate_connected(5))
    report = verifier.verify(
        case(Theorem.CONNECTIVITY_LOWER, 5, 1, -1.0), CorpusSource(kind="file", path=str(path))
    )
    assert report.verdict is Verdict.PASS
    assert report.class_size == len(table(5).members(GraphClass.KAPPA_EQ, 1))


def test_truncated_file_corpus(tmp_path):
    """Test a corpus missing connected classes is refused"""
    from randic.enumeration import write_corpus

    path = tmp_path / "n5.g6"
    write_corpus(str(path), list(enumerate_connected(5))[:10])
    with pytest.raises(CorpusError) as exc:
        verifier.verify(
            case(Theorem.CONNECTIVITY_LOWER, 5, 1, -1.0), CorpusSource(kind="file", path=str(path))
        )
    assert exc.value.code == "corpus_count"
    assert exc.value.detail["found"] == 10
    assert exc.value.detail["expected"] == 21
    with pytest.raises(CorpusError) as exc:
        verifier.verify_suite([5], [-1.0], corpora={5: str(path)})
    assert exc.value.code == "corpus_count"


def test_suite_order_range():
    """Test suite orders outside 4..9 and orders without a corpus"""
    with pytest.raises(ParameterError) as exc:
        verifier.verify_suite([3], [-1.0])
    assert exc.value.code == "n_range"
    with pytest.raises(ParameterError) as exc:
        verifier.verify_suite([8], [-1.0])
    assert exc.value.code == "n_range"


# ==========================
# OUTPUT
# ==========================

def test_json_and_csv_reports():
    """Test both report projections carry the same fields"""
    reports = [
        verifier.verify(case(Theorem.CONNECTIVITY_LOWER, 5, 1, -1.0), table=table(5)),
        verifier.verify(case(Theorem.CUTEDGE_UPPER, 5, 3, -1.0, exploratory=True), table=table(5)),
    ]
    data = json.loads(verifier.reports_to_json(reports))
    assert data[0]["verdict"] == "PASS"
    assert data[0]["theorem"] == "connectivity_lower"
    assert len(data[0]["witnesses_found"]) == 2
    assert data[1]["verdict"] == "EMPTY_CLASS"
    assert data[1]["exploratory"] is True

    rows = list(csv.reader(io.StringIO(verifier.reports_to_csv(reports))))
    assert tuple(rows[0]) == verifier.REPORT_FIELDS
    assert len(rows) == 3
    assert rows[1][rows[0].index("witnesses_found")].count(";") == 1

    text = verifier.reports_to_text(reports)
    assert text.splitlines()[0].startswith("PASS")
