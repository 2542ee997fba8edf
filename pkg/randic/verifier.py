"""
Exhaustive theorem checks.

A corpus is swept once per order into a profile table (canonical form ->
InvariantProfile); every theorem case then filters that table by its class
predicate, finds the extremal index value and compares both the value and the
set of extremal classes against the bounds module.
"""
import csv
import io
import json
import multiprocessing as mp
from typing import Callable, Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from loguru import logger

from randic import bounds, families
from randic.canon import CanonicalForm, canonical_form
from randic.codec import graph6_decode, graph6_encode
from randic.enumeration import BUILTIN_MAX_N, EXPECTED_CONNECTED_COUNTS, enumerate_connected, ingest
from randic.errors import CorpusError, ParameterError
from randic.graph import Graph, is_connected
from randic.invariants import index_of_profile, invariant_profile
from randic.schemas import (
    BoundQuery,
    CorpusSource,
    GraphClass,
    InvariantProfile,
    Theorem,
    TheoremCase,
    Verdict,
    VerificationReport,
)
from randic.settings import settings

SUITE_MIN_N = 4
SUITE_MAX_N = 9

CLASS_MEMBERSHIP: Dict[GraphClass, Callable[[InvariantProfile, int], bool]] = {
    GraphClass.CHROMATIC_EQ: lambda p, c: p.chromatic == c,
    GraphClass.CLIQUE_EQ: lambda p, c: p.clique == c,
    GraphClass.CUT_EDGES_EQ: lambda p, c: p.cut_edge_count == c,
    GraphClass.KAPPA_EQ: lambda p, c: p.vertex_connectivity == c,
    GraphClass.KAPPA_AT_MOST: lambda p, c: p.vertex_connectivity <= c,
    GraphClass.EDGE_KAPPA_EQ: lambda p, c: p.edge_connectivity == c,
    GraphClass.EDGE_KAPPA_AT_MOST: lambda p, c: p.edge_connectivity <= c,
    GraphClass.MIN_DEGREE_EQ: lambda p, c: p.min_degree == c,
}

REPORT_FIELDS = (
    "theorem", "n", "c", "gamma", "graph_class", "class_size", "extremum", "bound",
    "gap", "separation", "witnesses_found", "witnesses_expected", "counterexample",
    "verdict", "exploratory",
)


# ==========================
# PROFILE TABLE
# ==========================

def _profile_row(text: str) -> Tuple[CanonicalForm, InvariantProfile]:
    G = graph6_decode(text)
    return canonical_form(G), invariant_profile(G)


class ProfileTable:
    """Invariant profiles of one corpus order, keyed by canonical form."""

    def __init__(self, n: int, rows: Dict[CanonicalForm, InvariantProfile]):
        self.n = n
        self.rows = rows
        self.forms = sorted(rows)

    def __len__(self) -> int:
        return len(self.rows)

    def members(self, graph_class: GraphClass, c: int) -> List[Tuple[CanonicalForm, InvariantProfile]]:
        belongs = CLASS_MEMBERSHIP[graph_class]
        return [(f, self.rows[f]) for f in self.forms if belongs(self.rows[f], c)]

    @classmethod
    def build(cls, n: int, graphs: Iterable[Graph], jobs: int = 1) -> "ProfileTable":
        def texts() -> Iterable[str]:
            for G in graphs:
                if G.n != n:
                    raise CorpusError(
                        f"corpus graph {graph6_encode(G)} has order {G.n}, expected {n}",
                        code="order_mismatch",
                        n=n,
                    )
                if not is_connected(G):
                    logger.debug(f"skipping disconnected {graph6_encode(G)}")
                    continue
                yield graph6_encode(G)

        rows: Dict[CanonicalForm, InvariantProfile] = {}
        if jobs > 1:
            with mp.Pool(jobs) as pool:
                for form, profile in pool.imap(_profile_row, texts(), chunksize=32):
                    rows.setdefault(form, profile)
        else:
            for text in texts():
                form, profile = _profile_row(text)
                rows.setdefault(form, profile)
        logger.info(f"profile table n={n}: {len(rows)} classes (jobs={jobs})")
        return cls(n, rows)


def load_source(source: CorpusSource, order: int) -> Iterable[Graph]:
    if source.kind == "builtin":
        if source.n != order:
            raise CorpusError(
                f"builtin corpus has order {source.n}, case needs {order}",
                code="order_mismatch",
            )
        return enumerate_connected(order)
    return ingest(source.path, order=order)


def load_table(source: CorpusSource, order: int, jobs: int = 1) -> ProfileTable:
    """Build the profile table of a source; a file corpus must hold every connected class."""
    table = ProfileTable.build(order, load_source(source, order), jobs)
    expected = EXPECTED_CONNECTED_COUNTS.get(order)
    if source.kind == "file" and expected is not None and len(table) != expected:
        raise CorpusError(
            f"corpus {source.path} has {len(table)} connected classes on {order} vertices, "
            f"expected {expected}",
            code="corpus_count",
            path=source.path,
            found=len(table),
            expected=expected,
        )
    return table


def default_source(n: int, corpora: Optional[Mapping[int, str]] = None) -> CorpusSource:
    if corpora and n in corpora:
        return CorpusSource(kind="file", path=str(corpora[n]))
    if n <= BUILTIN_MAX_N:
        return CorpusSource(kind="builtin", n=n)
    raise ParameterError(
        f"n={n} exceeds the builtin enumeration; supply a graph6 corpus",
        code="n_range",
        n=n,
    )


# ==========================
# SINGLE CASE
# ==========================

def _relative(tolerance: float, value: float) -> float:
    return tolerance * max(1.0, abs(value))


def _query(case: TheoremCase) -> BoundQuery:
    return BoundQuery(
        theorem=case.theorem, n=case.n, c=case.c, gamma=case.gamma, exploratory=case.exploratory
    )


def verify(
    case: TheoremCase,
    source: Optional[CorpusSource] = None,
    tolerance: Optional[float] = None,
    table: Optional[ProfileTable] = None,
) -> VerificationReport:
    tolerance = settings.tolerance if tolerance is None else tolerance
    if tolerance <= 0:
        raise ParameterError(f"tolerance must be positive, got {tolerance}", code="tolerance")

    q = bounds.check_query(_query(case))
    info = bounds.THEOREMS[case.theorem]
    if table is None:
        source = source or default_source(case.n)
        table = load_table(source, case.n)
    elif table.n != case.n:
        raise CorpusError(
            f"profile table has order {table.n}, case needs {case.n}", code="order_mismatch"
        )

    bound = bounds.bound_value(q)
    witness_specs = bounds.expected_witnesses(q)
    expected = sorted(canonical_form(families.generate(s)).graph6 for s in witness_specs)

    members = table.members(info.graph_class, case.c)
    report = dict(
        theorem=case.theorem,
        n=case.n,
        c=case.c,
        gamma=case.gamma,
        graph_class=info.graph_class,
        class_size=len(members),
        bound=bound,
        witnesses_expected=expected,
        exploratory=case.exploratory,
    )
    if not members:
        logger.info(f"{case.theorem.value} n={case.n} c={case.c}: empty class")
        return VerificationReport(
            **report, extremum=None, gap=None, verdict=Verdict.EMPTY_CLASS
        )

    values = [(index_of_profile(p, case.gamma), f) for f, p in members]
    pick = min if info.direction == "min" else max
    extremum = pick(v for v, _ in values)
    tie = _relative(tolerance, extremum)
    found = sorted(f.graph6 for v, f in values if abs(v - extremum) <= tie)
    others = [abs(v - extremum) for v, _ in values if abs(v - extremum) > tie]
    separation = min(others) if others else None

    verdict = Verdict.PASS
    counterexample = None
    if abs(extremum - bound) > _relative(tolerance, bound):
        verdict = Verdict.FAIL_BOUND
        counterexample = found[0]
    elif found != expected:
        verdict = Verdict.FAIL_CHARACTERIZATION
        extra = [g for g in found if g not in expected]
        missing = [g for g in expected if g not in found]
        counterexample = (extra or missing)[0]
    else:
        # the witnesses must reproduce the bound from their own definition
        for spec in witness_specs:
            value = families.predicted_index(spec, case.gamma)
            if abs(value - bound) > _relative(tolerance, bound):
                verdict = Verdict.FAIL_BOUND
                counterexample = canonical_form(families.generate(spec)).graph6
                break

    if verdict is not Verdict.PASS:
        log = logger.info if case.exploratory else logger.warning
        log(
            f"{case.theorem.value} n={case.n} c={case.c} gamma={case.gamma}: "
            f"{verdict.value} (extremum={extremum!r}, bound={bound!r}, graph={counterexample})"
        )
    return VerificationReport(
        **report,
        extremum=extremum,
        gap=extremum - bound,
        separation=separation,
        witnesses_found=found,
        counterexample=counterexample,
        verdict=verdict,
    )


# ==========================
# SUITE
# ==========================

def suite_cases(
    n_values: Sequence[int],
    gammas: Sequence[float],
    theorems: Optional[Sequence[Theorem]] = None,
    exploratory: bool = False,
) -> List[TheoremCase]:
    """
    Expand theorem x n x c x gamma in a fixed order. Combinations outside a
    theorem's proven range are included only when exploratory, and flagged.
    """
    cases = []
    for theorem in theorems or list(Theorem):
        info = bounds.THEOREMS[theorem]
        for n in n_values:
            lo, hi = info.c_range(n)
            elo, ehi = info.explore_c_range(n)
            for c in range(min(lo, elo), max(hi, ehi) + 1):
                proven_c = lo <= c <= hi
                if not proven_c and not elo <= c <= ehi:
                    continue
                for gamma in gammas:
                    proven = proven_c and info.admits(gamma)
                    if proven or exploratory:
                        cases.append(
                            TheoremCase(
                                theorem=theorem, n=n, c=c, gamma=gamma, exploratory=not proven
                            )
                        )
    return cases


def verify_suite(
    n_values: Sequence[int],
    gammas: Sequence[float],
    theorems: Optional[Sequence[Theorem]] = None,
    corpora: Optional[Mapping[int, str]] = None,
    jobs: Optional[int] = None,
    exploratory: bool = False,
    tolerance: Optional[float] = None,
) -> List[VerificationReport]:
    jobs = jobs or settings.jobs
    for n in n_values:
        if not SUITE_MIN_N <= n <= SUITE_MAX_N:
            raise ParameterError(
                f"suite orders must lie in [{SUITE_MIN_N}, {SUITE_MAX_N}], got {n}",
                code="n_range",
                n=n,
            )
    cases = suite_cases(n_values, gammas, theorems, exploratory)
    tables: Dict[int, ProfileTable] = {}
    reports = []
    for case in cases:
        if case.n not in tables:
            source = default_source(case.n, corpora)
            tables[case.n] = load_table(source, case.n, jobs)
        reports.append(verify(case, tolerance=tolerance, table=tables[case.n]))

    status = exit_status(reports)
    proven = [r for r in reports if not r.exploratory]
    passed = sum(r.verdict is Verdict.PASS for r in proven)
    if status == 0:
        logger.success(f"suite finished: {passed}/{len(proven)} proven cases PASS")
    else:
        logger.error(f"suite finished: {passed}/{len(proven)} proven cases PASS")
    return reports


def exit_status(reports: Iterable[VerificationReport]) -> int:
    """0 iff no proven case failed; exploratory reports and empty classes never fail a run."""
    for r in reports:
        if not r.exploratory and r.verdict not in (Verdict.PASS, Verdict.EMPTY_CLASS):
            return 1
    return 0


# ==========================
# OUTPUT
# ==========================

def reports_to_json(reports: Sequence[VerificationReport]) -> str:
    return json.dumps([r.model_dump(mode="json") for r in reports], indent=2) + "\n"


def reports_to_csv(reports: Sequence[VerificationReport]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(REPORT_FIELDS)
    for r in reports:
        row = r.model_dump(mode="json")
        writer.writerow(
            [";".join(row[k]) if isinstance(row[k], list) else ("" if row[k] is None else row[k])
             for k in REPORT_FIELDS]
        )
    return buffer.getvalue()


def reports_to_text(reports: Sequence[VerificationReport]) -> str:
    lines = []
    for r in reports:
        flag = " (exploratory)" if r.exploratory else ""
        extremum = "-" if r.extremum is None else f"{r.extremum:.10g}"
        lines.append(
            f"{r.verdict.value:<22} {r.theorem.value:<31} n={r.n} c={r.c} gamma={r.gamma:g} "
            f"size={r.class_size} extremum={extremum} bound={r.bound:.10g}{flag}"
        )
    return "\n".join(lines) + ("\n" if lines else "")
