"""Bounds on the TDV mass of a closed neighborhood N[v0]."""

import logging

from evals.metrics.base import (
    CheckReport,
    PropertyCheck,
    Relation,
    Verdict,
    compare,
    not_applicable,
)
from evals.solver import TdvReport, solve
from graphs.graph import Graph, closed_neighborhood, support_vertices

logger = logging.getLogger(__name__)


def neighborhood_sum_report(graph: Graph, report: TdvReport, v0: int) -> CheckReport:
    """tau <= sum over N[v0] of TDV <= min(tau * gamma_t, tau * (1 + deg v0))."""
    total = report.neighborhood_sum(closed_neighborhood(graph, v0))
    upper_gamma = report.tau * report.gamma_t
    upper_degree = report.tau * (1 + graph.degree(v0))
    tight_bounds = tuple(
        name
        for name, bound in (("lower", report.tau), ("upper_gamma", upper_gamma), ("upper_degree", upper_degree))
        if total == bound
    )
    ok = report.tau <= total <= min(upper_gamma, upper_degree)
    return CheckReport(
        check_id=NeighborhoodSumCheck.check_id,
        verdict=Verdict.PASS if ok else Verdict.FAIL,
        lhs=total,
        rhs=min(upper_gamma, upper_degree),
        relation=Relation.LE,
        lower=report.tau,
        tight=bool(tight_bounds),
        tight_bounds=tight_bounds,
        witness=(v0,),
        graph=graph.name,
        detail=f"tau*gamma_t={upper_gamma}, tau*(1+deg)={upper_degree}",
    )


def _aggregate(check_id: str, graph: Graph, reports: list[CheckReport]) -> CheckReport:
    """First failing report, else the first one with a tight bound, else the first."""
    if not reports:
        return not_applicable(check_id, graph, "no vertex satisfies the precondition")
    for result in reports:
        if result.verdict is Verdict.FAIL:
            logger.debug(f"{check_id} on {graph.name}: first failure at vertex {result.witness}")
            return result
    return next((r for r in reports if r.tight), reports[0])


class NeighborhoodSumCheck(PropertyCheck):
    check_id = "neighborhood_sum_bounds"

    def measure(self, graph: Graph, report: TdvReport) -> CheckReport:
        return _aggregate(self.check_id, graph, [neighborhood_sum_report(graph, report, v) for v in graph.vertices])


def support_vertex_report(graph: Graph, report: TdvReport, s: int) -> CheckReport:
    """Sum over N[s] of TDV >= 2 tau for a support vertex s, or any s with TDV(s) = tau."""
    graph.check_vertex(s)
    is_support = s in support_vertices(graph)
    if not is_support and report.tdv_of(s) != report.tau:
        return not_applicable(SupportVertexCheck.check_id, graph, f"vertex {s} is not a support vertex")
    return compare(
        SupportVertexCheck.check_id,
        graph,
        lhs=report.neighborhood_sum(closed_neighborhood(graph, s)),
        rhs=2 * report.tau,
        relation=Relation.GE,
        witness=(s,),
        detail="support vertex" if is_support else "TDV(s) = tau",
    )


class SupportVertexCheck(PropertyCheck):
    check_id = "support_vertex"

    def measure(self, graph: Graph, report: TdvReport) -> CheckReport:
        supports = support_vertices(graph)
        candidates = [v for v in graph.vertices if v in supports or report.tdv_of(v) == report.tau]
        return _aggregate(self.check_id, graph, [support_vertex_report(graph, report, s) for s in candidates])


def check_neighborhood_sum_bounds(g: Graph, v0: int, report: TdvReport | None = None) -> CheckReport:
    g.check_vertex(v0)
    return neighborhood_sum_report(g, report if report is not None else solve(g), v0)


def check_support_vertex(g: Graph, s: int, report: TdvReport | None = None) -> CheckReport:
    return support_vertex_report(g, report if report is not None else solve(g), s)
