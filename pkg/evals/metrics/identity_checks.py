"""Counting identities: the TDV sum, subgraphs, disjoint unions and complements."""

import logging

from evals.closed_forms import mk2_complement_tdv
from evals.metrics.base import (
    CheckReport,
    PropertyCheck,
    Relation,
    Verdict,
    compare,
    not_applicable,
)
from evals.solver import NoTdsExists, TdvReport, solve
from graphs.families import FamilyKind, FamilySpec, generate
from graphs.graph import (
    Graph,
    complement,
    disjoint_union,
    has_isolated_vertex,
    is_matching,
    is_spanning_subgraph,
    remove_edge,
)

logger = logging.getLogger(__name__)


class SumIdentityCheck(PropertyCheck):
    """Sum of TDV over all vertices equals tau * gamma_t."""

    check_id = "sum_identity"

    def measure(self, graph: Graph, report: TdvReport) -> CheckReport:
        return compare(
            self.check_id,
            graph,
            lhs=sum(report.tdv),
            rhs=report.tau * report.gamma_t,
            relation=Relation.EQ,
        )


def subgraph_tau_report(h: Graph, g: Graph, h_report: TdvReport | None, g_report: TdvReport) -> CheckReport:
    check_id = SubgraphTauCheck.check_id
    if not is_spanning_subgraph(h, g):
        return not_applicable(check_id, g, "precondition unmet: h is not a spanning subgraph of g")
    if h_report is None:
        return not_applicable(check_id, g, "precondition unmet: h has an isolated vertex")
    if h_report.gamma_t != g_report.gamma_t:
        return not_applicable(
            check_id, g, f"precondition unmet: gamma_t(h)={h_report.gamma_t} != gamma_t(g)={g_report.gamma_t}"
        )
    return compare(check_id, g, lhs=h_report.tau, rhs=g_report.tau, detail=f"h={h.name}")


class SubgraphTauCheck(PropertyCheck):
    """tau(H) <= tau(G) for spanning H with the same gamma_t.

    Inside ``run_all`` the spanning subgraphs tried are the single-edge
    deletions of the graph.
    """

    check_id = "subgraph_tau"

    def measure(self, graph: Graph, report: TdvReport) -> CheckReport:
        applicable = []
        for u, v in graph.edges():
            h = remove_edge(graph, u, v)
            if has_isolated_vertex(h):
                continue
            result = subgraph_tau_report(h, graph, solve(h), report)
            if result.verdict is Verdict.FAIL:
                return result
            if result.verdict is Verdict.PASS:
                applicable.append(result)
        if not applicable:
            return not_applicable(self.check_id, graph, "no single-edge deletion keeps gamma_t")
        # the subgraph with the largest tau is the one closest to the bound
        best = max(applicable, key=lambda r: r.lhs)
        logger.debug(f"subgraph_tau on {graph.name}: {len(applicable)} spanning subgraph(s) checked")
        return best


class DisjointUnionCheck(PropertyCheck):
    """gamma_t adds, tau multiplies and TDV scales by the other side's tau.

    Inside ``run_all`` the graph is paired with P3 (gamma_t = 2, tau = 2).
    """

    check_id = "disjoint_union"

    def measure(self, graph: Graph, report: TdvReport) -> CheckReport:
        other = generate(FamilySpec(FamilyKind.PATH, (3,)))
        return disjoint_union_report(graph, report, other, solve(other))


def disjoint_union_report(g1: Graph, r1: TdvReport, g2: Graph, r2: TdvReport) -> CheckReport:
    union = disjoint_union(g1, g2)
    combined = solve(union)
    expected_tdv = tuple(t * r2.tau for t in r1.tdv) + tuple(t * r1.tau for t in r2.tdv)
    mismatch = next((v for v in union.vertices if combined.tdv_of(v) != expected_tdv[v - 1]), None)
    return compare(
        DisjointUnionCheck.check_id,
        g1,
        lhs=combined.tau,
        rhs=r1.tau * r2.tau,
        relation=Relation.EQ,
        witness=(mismatch,) if mismatch is not None else None,
        detail=f"gamma_t {combined.gamma_t} vs {r1.gamma_t}+{r2.gamma_t} with {g2.name}",
        extra_ok=combined.gamma_t == r1.gamma_t + r2.gamma_t and mismatch is None,
    )


class ComplementGammaCheck(PropertyCheck):
    """gamma_t(G) + gamma_t(complement) <= n + 2, equality iff G or its complement is mK2."""

    check_id = "complement_gamma"

    def measure(self, graph: Graph, report: TdvReport) -> CheckReport:
        if graph.max_degree >= graph.n - 1:
            return not_applicable(self.check_id, graph, "needs Delta(G) < n - 1")
        co = complement(graph)
        if has_isolated_vertex(co):
            return not_applicable(self.check_id, graph, "complement has an isolated vertex")
        co_report = solve(co)
        total = report.gamma_t + co_report.gamma_t
        equality = total == graph.n + 2
        matching = is_matching(graph) or is_matching(co)
        return compare(
            self.check_id,
            graph,
            lhs=total,
            rhs=graph.n + 2,
            detail=f"gamma_t={report.gamma_t}, complement gamma_t={co_report.gamma_t}, mK2={matching}",
            extra_ok=equality == matching,
        )


class Mk2ComplementTdvCheck(PropertyCheck):
    """TDV_G(v) + TDV_complement(v) = n - 1 when G or its complement is mK2, n >= 4."""

    check_id = "mk2_complement_tdv"

    def measure(self, graph: Graph, report: TdvReport) -> CheckReport:
        co = complement(graph)
        if graph.n < 4 or not (is_matching(graph) or is_matching(co)):
            return not_applicable(self.check_id, graph, "needs G or its complement to be mK2 with n >= 4")
        co_report = solve(co)
        sums = [report.tdv_of(v) + co_report.tdv_of(v) for v in graph.vertices]
        values = mk2_complement_tdv(graph.n // 2)
        matching_side = report if is_matching(graph) else co_report
        other_side = co_report if is_matching(graph) else report
        formula_ok = set(matching_side.tdv) == {values[0]} and set(other_side.tdv) == {values[1]}
        bad = next((v for v in graph.vertices if sums[v - 1] != graph.n - 1), None)
        return compare(
            self.check_id,
            graph,
            lhs=sums[(bad or 1) - 1],
            rhs=graph.n - 1,
            relation=Relation.EQ,
            witness=(bad,) if bad is not None else None,
            detail=f"closed form {values}",
            extra_ok=bad is None and formula_ok,
        )


def _solve_or_raise(g: Graph, report: TdvReport | None) -> TdvReport:
    return report if report is not None else solve(g)


def check_sum_identity(g: Graph, report: TdvReport | None = None) -> CheckReport:
    return SumIdentityCheck().measure(g, _solve_or_raise(g, report))


def check_subgraph_tau(h: Graph, g: Graph) -> CheckReport:
    g_report = solve(g)
    try:
        h_report = solve(h)
    except NoTdsExists:
        h_report = None
    return subgraph_tau_report(h, g, h_report, g_report)


def check_disjoint_union(g1: Graph, g2: Graph) -> CheckReport:
    return disjoint_union_report(g1, solve(g1), g2, solve(g2))


def check_complement_gamma(g: Graph, report: TdvReport | None = None) -> CheckReport:
    if has_isolated_vertex(g):
        return not_applicable(ComplementGammaCheck.check_id, g, "G has an isolated vertex")
    return ComplementGammaCheck().measure(g, _solve_or_raise(g, report))


def check_mk2_complement_tdv(g: Graph, report: TdvReport | None = None) -> CheckReport:
    return Mk2ComplementTdvCheck().measure(g, _solve_or_raise(g, report))
