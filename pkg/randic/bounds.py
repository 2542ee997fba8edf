"""
Closed-form bounds for every theorem, the extremal graphs each one names,
and the auxiliary functions the proofs rely on.

Bounds are evaluated from (n, c, gamma) alone; the families module builds the
witness graphs independently so the two paths can be cross-checked.
"""
import math
from dataclasses import dataclass
from typing import Callable, Dict, List, Literal, Tuple

from randic import families
from randic.errors import ParameterError
from randic.invariants import check_gamma, degree_power
from randic.schemas import (
    BoundQuery,
    ExtremalCharacterization,
    FamilySpec,
    GammaExponent,
    GammaRange,
    GraphClass,
    Theorem,
)


def weighted_power(k: float, base: float, gamma: float) -> float:
    """k * base^gamma, zero when k == 0 (base may then be 0)."""
    if k == 0:
        return 0.0
    if gamma == -1:
        return k / base
    return k * degree_power(base, gamma)


# ==========================
# THEOREM TABLE
# ==========================

@dataclass(frozen=True)
class TheoremInfo:
    theorem: Theorem
    gamma_range: GammaRange
    graph_class: GraphClass
    direction: Literal["min", "max"]
    c_range: Callable[[int], Tuple[int, int]]
    explore_c_range: Callable[[int], Tuple[int, int]]
    summary: str

    def admits(self, gamma: float) -> bool:
        return GammaExponent(value=check_gamma(gamma)).admissible(self.gamma_range)


def _strict_inner(n: int) -> Tuple[int, int]:
    return 2, n - 1


def _up_to_n(n: int) -> Tuple[int, int]:
    return 2, n


def _below_n(n: int) -> Tuple[int, int]:
    return 1, n - 1


def _cut_edges(n: int) -> Tuple[int, int]:
    return 1, n - 3


THEOREMS: Dict[Theorem, TheoremInfo] = {
    info.theorem: info
    for info in (
        TheoremInfo(Theorem.CHROMATIC_LOWER, GammaRange.NEGATIVE, GraphClass.CHROMATIC_EQ,
                    "min", _strict_inner, _up_to_n, "chi=c: index >= T_n(c)"),
        TheoremInfo(Theorem.CHROMATIC_UPPER, GammaRange.AT_MOST_MINUS_ONE, GraphClass.CHROMATIC_EQ,
                    "max", _strict_inner, _up_to_n, "chi=c: index <= PA_n(c)"),
        TheoremInfo(Theorem.CLIQUE_LOWER, GammaRange.AT_MOST_MINUS_ONE, GraphClass.CLIQUE_EQ,
                    "min", _strict_inner, _up_to_n, "omega=c: index >= T_n(c)"),
        TheoremInfo(Theorem.CLIQUE_UPPER, GammaRange.AT_MOST_MINUS_ONE, GraphClass.CLIQUE_EQ,
                    "max", _strict_inner, _up_to_n, "omega=c: index <= PA_n(c)"),
        TheoremInfo(Theorem.CUTEDGE_UPPER, GammaRange.NEGATIVE, GraphClass.CUT_EDGES_EQ,
                    "max", _cut_edges, _below_n, "c cut edges: index <= C_{n-c}^c"),
        TheoremInfo(Theorem.CONNECTIVITY_LOWER, GammaRange.MINUS_ONE_TO_ZERO, GraphClass.KAPPA_EQ,
                    "min", _below_n, _below_n, "kappa=c: index >= K_c+(K_1 u K_{n-c-1})"),
        TheoremInfo(Theorem.CONNECTIVITY_ATMOST_LOWER, GammaRange.MINUS_ONE_TO_ZERO,
                    GraphClass.KAPPA_AT_MOST, "min", _below_n, _below_n,
                    "kappa<=c: index >= K_c+(K_1 u K_{n-c-1})"),
        TheoremInfo(Theorem.EDGE_CONNECTIVITY_LOWER, GammaRange.MINUS_ONE_TO_ZERO,
                    GraphClass.EDGE_KAPPA_EQ, "min", _below_n, _below_n,
                    "kappa'=c: index >= K_c+(K_1 u K_{n-c-1})"),
        TheoremInfo(Theorem.EDGE_CONNECTIVITY_ATMOST_LOWER, GammaRange.MINUS_ONE_TO_ZERO,
                    GraphClass.EDGE_KAPPA_AT_MOST, "min", _below_n, _below_n,
                    "kappa'<=c: index >= K_c+(K_1 u K_{n-c-1})"),
        TheoremInfo(Theorem.MIN_DEGREE_LOWER, GammaRange.MINUS_ONE_TO_ZERO,
                    GraphClass.MIN_DEGREE_EQ, "min", _below_n, _below_n,
                    "delta=c: index >= K_c+(K_1 u K_{n-c-1})"),
        TheoremInfo(Theorem.CONN_STAR_UPPER, GammaRange.NEGATIVE, GraphClass.KAPPA_AT_MOST,
                    "max", _below_n, _below_n, "kappa<=c: index <= S_n"),
        TheoremInfo(Theorem.EDGECONN_STAR_UPPER, GammaRange.NEGATIVE,
                    GraphClass.EDGE_KAPPA_AT_MOST, "max", _below_n, _below_n,
                    "kappa'<=c: index <= S_n"),
    )
}

CONNECTIVITY_FAMILY = (
    Theorem.CONNECTIVITY_LOWER,
    Theorem.CONNECTIVITY_ATMOST_LOWER,
    Theorem.EDGE_CONNECTIVITY_LOWER,
    Theorem.EDGE_CONNECTIVITY_ATMOST_LOWER,
    Theorem.MIN_DEGREE_LOWER,
)

# only vertex-connectivity classes contain every split K_1+(K_a u K_b)
SPLIT_TIE_THEOREMS = (Theorem.CONNECTIVITY_LOWER, Theorem.CONNECTIVITY_ATMOST_LOWER)


def in_proven_range(q: BoundQuery) -> bool:
    info = THEOREMS[q.theorem]
    lo, hi = info.c_range(q.n)
    return info.admits(q.gamma) and lo <= q.c <= hi


def check_query(q: BoundQuery) -> BoundQuery:
    check_gamma(q.gamma)
    info = THEOREMS[q.theorem]
    lo, hi = (info.explore_c_range if q.exploratory else info.c_range)(q.n)
    if not lo <= q.c <= hi:
        raise ParameterError(
            f"{q.theorem.value}: c={q.c} violates {lo} <= c <= {hi} for n={q.n}",
            code="c_range",
            theorem=q.theorem.value,
            c=q.c,
            n=q.n,
        )
    if not q.exploratory and not info.admits(q.gamma):
        raise ParameterError(
            f"{q.theorem.value}: gamma={q.gamma} violates {info.gamma_range.value}",
            code="gamma_range",
            theorem=q.theorem.value,
            gamma=q.gamma,
        )
    return q


# ==========================
# BOUND VALUES
# ==========================

def turan_value(n: int, c: int, gamma: float) -> float:
    q, r = divmod(n, c)
    return math.fsum([
        weighted_power((c - r) * q, n - q, gamma),
        weighted_power(r * (q + 1), n - q - 1, gamma),
    ])


def pineapple_value(n: int, c: int, gamma: float) -> float:
    return math.fsum([
        n - c,
        degree_power(n - 1, gamma),
        weighted_power(c - 1, c - 1, gamma),
    ])


def pendant_cycle_value(n: int, c: int, gamma: float) -> float:
    return math.fsum([
        c,
        weighted_power(n - c - 1, 2, gamma),
        degree_power(c + 2, gamma),
    ])


def connectivity_value(n: int, c: int, gamma: float) -> float:
    return math.fsum([
        weighted_power(c, n - 1, gamma),
        weighted_power(n - c - 1, n - 2, gamma),
        degree_power(c, gamma),
    ])


def star_value(n: int, gamma: float) -> float:
    return (n - 1) + degree_power(n - 1, gamma)


def bound_value(q: BoundQuery) -> float:
    check_query(q)
    t, n, c, g = q.theorem, q.n, q.c, q.gamma
    if t in (Theorem.CHROMATIC_LOWER, Theorem.CLIQUE_LOWER):
        return turan_value(n, c, g)
    if t in (Theorem.CHROMATIC_UPPER, Theorem.CLIQUE_UPPER):
        return pineapple_value(n, c, g)
    if t is Theorem.CUTEDGE_UPPER:
        return pendant_cycle_value(n, c, g)
    if t in CONNECTIVITY_FAMILY:
        return connectivity_value(n, c, g)
    return star_value(n, g)


# ==========================
# EXTREMAL GRAPHS
# ==========================

def expected_witnesses(q: BoundQuery) -> List[FamilySpec]:
    """Family specs attaining the bound; empty when no family applies (exploratory only)."""
    check_query(q)
    t, n, c = q.theorem, q.n, q.c
    if t in (Theorem.CHROMATIC_LOWER, Theorem.CLIQUE_LOWER):
        return [families.turan_spec(n, c)]
    if t in (Theorem.CHROMATIC_UPPER, Theorem.CLIQUE_UPPER):
        return [families.pineapple_spec(n, c)]
    if t is Theorem.CUTEDGE_UPPER:
        return [families.pendant_cycle_spec(n, c)] if n - c >= 3 else []
    if t in CONNECTIVITY_FAMILY:
        if c == n - 1:
            return [families.complete_spec(n)]
        if t in SPLIT_TIE_THEOREMS and c == 1 and q.gamma == -1:
            return [
                families.connectivity_split_spec(n, 1, n1)
                for n1 in range(1, (n - 1) // 2 + 1)
            ]
        return [families.connectivity_split_spec(n, c, 1)]
    return [families.star_spec(n)]


def extremal_witnesses(q: BoundQuery) -> ExtremalCharacterization:
    witnesses = expected_witnesses(q)
    if not witnesses:
        raise ParameterError(
            f"{q.theorem.value}: no extremal family for n={q.n}, c={q.c}",
            code="c_range",
        )
    return ExtremalCharacterization(theorem=q.theorem, witnesses=tuple(witnesses))


# ==========================
# LEMMA FUNCTIONS
# ==========================

def psi(x: float, n: int, gamma: float) -> float:
    """(n-x) x^g - (n-x+1)(x-1)^g, strictly increasing on [2, n] for g < 0."""
    check_gamma(gamma)
    if not 2 <= x <= n:
        raise ParameterError(
            f"psi needs 2 <= x <= n, got x={x}, n={n}", code="psi_domain", x=x, n=n
        )
    return weighted_power(n - x, x, gamma) - weighted_power(n - x + 1, x - 1, gamma)


def lemma_f(x: float, n: int, c: int, gamma: float) -> float:
    """x (x+c-1)^g + (n-c-x)(n-1-x)^g, minimal at x = 1 and x = n-c-1."""
    check_gamma(gamma)
    problems = []
    if n < 3:
        problems.append("n >= 3")
    if not 1 <= c <= n - 2:
        problems.append("1 <= c <= n-2")
    if not 1 <= x <= n - c - 1:
        problems.append("1 <= x <= n-c-1")
    if not -1 <= gamma < 0:
        problems.append("-1 <= gamma < 0")
    if problems:
        raise ParameterError(
            f"lemma_f needs {', '.join(problems)}", code="lemma_f_domain", x=x, n=n, c=c
        )
    return weighted_power(x, x + c - 1, gamma) + weighted_power(n - c - x, n - 1 - x, gamma)


def lemma_transfer_gain(x: float, t: int, gamma: float) -> float:
    """x^g - (x-t)^g; strictly increasing in x for x > t and g < 0."""
    check_gamma(gamma)
    if not x > t > 0:
        raise ParameterError(f"needs x > t > 0, got x={x}, t={t}", code="psi_domain")
    return degree_power(x, gamma) - degree_power(x - t, gamma)


def phi_star(x: float, gamma: float) -> float:
    """(x+1)^g - x^g; strictly increasing for x > 0 and g < 0."""
    check_gamma(gamma)
    if x <= 0:
        raise ParameterError(f"needs x > 0, got {x}", code="psi_domain")
    return degree_power(x + 1, gamma) - degree_power(x, gamma)


def connectivity_psi(x: float, n: int, gamma: float) -> float:
    """x^g + (n-x-1)(n-2)^g + x(n-1)^g; strictly decreasing for x > 0 and g < 0."""
    check_gamma(gamma)
    if x <= 0 or n < 3:
        raise ParameterError(f"needs x > 0 and n >= 3, got x={x}, n={n}", code="psi_domain")
    return math.fsum([
        degree_power(x, gamma),
        weighted_power(n - x - 1, n - 2, gamma),
        weighted_power(x, n - 1, gamma),
    ])


def chain_inequality_margins(n: int, c_max: int, gamma: float) -> List[float]:
    """index(K_{i-1}+(K_1 u K_{n-i})) - index(K_i+(K_1 u K_{n-i-1})) for 2 <= i <= c_max."""
    check_gamma(gamma)
    if gamma >= 0:
        raise ParameterError(f"needs gamma < 0, got {gamma}", code="gamma_range")
    if not 2 <= c_max <= n - 2:
        raise ParameterError(
            f"needs 2 <= c_max <= n-2, got c_max={c_max}, n={n}", code="c_range"
        )
    return [
        families.predicted_index(families.connectivity_split_spec(n, i - 1, 1), gamma)
        - families.predicted_index(families.connectivity_split_spec(n, i, 1), gamma)
        for i in range(2, c_max + 1)
    ]


def chain_inequality_check(n: int, c_max: int, gamma: float) -> bool:
    return all(margin > 0 for margin in chain_inequality_margins(n, c_max, gamma))
