"""Checks tied to vertex degrees: gamma_t = 2 graphs and large maximum degree."""

import logging

from evals.metrics.base import (
    CheckReport,
    PropertyCheck,
    Relation,
    compare,
    not_applicable,
)
from evals.solver import TdvReport, solve
from graphs.graph import Graph, is_connected

logger = logging.getLogger(__name__)


class Gamma2DegreeCheck(PropertyCheck):
    """gamma_t = 2 implies TDV(v) <= deg(v) for every v."""

    check_id = "gamma2_degree_bound"

    def measure(self, graph: Graph, report: TdvReport) -> CheckReport:
        if report.gamma_t != 2:
            return not_applicable(self.check_id, graph, f"gamma_t={report.gamma_t}, needs 2")
        # the vertex with the least slack deg(v) - TDV(v)
        v = min(graph.vertices, key=lambda u: (graph.degree(u) - report.tdv_of(u), u))
        return compare(self.check_id, graph, lhs=report.tdv_of(v), rhs=graph.degree(v), witness=(v,))


class Gamma2PairIdentityCheck(PropertyCheck):
    """gamma_t = 2 implies TDV(v) = |{w in N(v) : N(v) | N(w) = V}|."""

    check_id = "gamma2_pair_identity"

    def measure(self, graph: Graph, report: TdvReport) -> CheckReport:
        if report.gamma_t != 2:
            return not_applicable(self.check_id, graph, f"gamma_t={report.gamma_t}, needs 2")
        masks, full = graph.masks, graph.vertex_mask
        partners = [
            sum(1 for w in graph.neighbors(v) if masks[v - 1] | masks[w - 1] == full) for v in graph.vertices
        ]
        bad = next((v for v in graph.vertices if partners[v - 1] != report.tdv_of(v)), None)
        v = bad if bad is not None else max(graph.vertices, key=report.tdv_of)
        return compare(
            self.check_id,
            graph,
            lhs=report.tdv_of(v),
            rhs=partners[v - 1],
            relation=Relation.EQ,
            witness=(v,),
        )


class GammaMaxDegreeCheck(PropertyCheck):
    """gamma_t <= n - Delta + 1, and gamma_t <= n - Delta when connected with Delta < n - 1."""

    check_id = "gamma_max_degree"

    def measure(self, graph: Graph, report: TdvReport) -> CheckReport:
        delta = graph.max_degree
        if delta < graph.n - 1 and is_connected(graph):
            bound, detail = graph.n - delta, "connected, Delta < n - 1"
        else:
            bound, detail = graph.n - delta + 1, "no isolated vertices"
        return compare(self.check_id, graph, lhs=report.gamma_t, rhs=bound, detail=detail)


def _gamma3_bound(n: int) -> int:
    # floor of ((n - 3) / 2)^2 + 2(n - 4)
    return (n - 3) ** 2 // 4 + 2 * (n - 4)


class MaxDegreeCasesCheck(PropertyCheck):
    """gamma_t and TDV of maximum-degree vertices when Delta is n - 1, n - 2 or n - 3."""

    check_id = "max_degree_cases"

    def measure(self, graph: Graph, report: TdvReport) -> CheckReport:
        n, delta = graph.n, graph.max_degree
        top = [v for v in graph.vertices if graph.degree(v) == delta]
        if delta == n - 1:
            return self._full_degree(graph, report, top)
        if delta == n - 2:
            return self._one_missing(graph, report, top)
        if delta == n - 3 and n >= 4:
            return self._two_missing(graph, report, top)
        return not_applicable(self.check_id, graph, f"Delta={delta} is below n - 3")

    def _full_degree(self, graph: Graph, report: TdvReport, top: list[int]) -> CheckReport:
        n = graph.n
        # TDV(v) <= n - 1 everywhere, with equality exactly at the degree n - 1 vertices
        iff_ok = all((report.tdv_of(v) == n - 1) == (graph.degree(v) == n - 1) for v in graph.vertices)
        v = max(graph.vertices, key=report.tdv_of)
        return compare(
            self.check_id,
            graph,
            lhs=report.tdv_of(v),
            rhs=n - 1,
            witness=(v,),
            detail=f"Delta = n - 1, gamma_t={report.gamma_t}",
            extra_ok=report.gamma_t == 2 and iff_ok,
        )

    def _one_missing(self, graph: Graph, report: TdvReport, top: list[int]) -> CheckReport:
        n = graph.n
        identity_ok = True
        for v in top:
            (w,) = set(graph.vertices) - graph.neighbors(v) - {v}
            if report.tdv_of(v) != graph.degree(w):
                identity_ok = False
                logger.debug(f"max_degree_cases on {graph.name}: TDV({v})={report.tdv_of(v)} but |N({w})|={graph.degree(w)}")
        v = max(graph.vertices, key=report.tdv_of)
        return compare(
            self.check_id,
            graph,
            lhs=report.tdv_of(v),
            rhs=n - 2,
            witness=(v,),
            detail=f"Delta = n - 2, gamma_t={report.gamma_t}, TDV(v)=|N(w)| at {top}",
            extra_ok=report.gamma_t == 2 and identity_ok,
        )

    def _two_missing(self, graph: Graph, report: TdvReport, top: list[int]) -> CheckReport:
        n = graph.n
        if not is_connected(graph):
            ok = report.gamma_t == 4 and all(report.tdv_of(v) == n - 3 for v in top)
            return compare(
                self.check_id,
                graph,
                lhs=max(report.tdv_of(v) for v in top),
                rhs=n - 3,
                relation=Relation.EQ,
                witness=tuple(top),
                detail=f"Delta = n - 3, disconnected, gamma_t={report.gamma_t}",
                extra_ok=ok,
            )
        if report.gamma_t == 2:
            bound = n - 3
        elif report.gamma_t == 3:
            bound = _gamma3_bound(n)
        else:
            return compare(
                self.check_id,
                graph,
                lhs=report.gamma_t,
                rhs=3,
                witness=tuple(top),
                detail="Delta = n - 3, connected: gamma_t must be 2 or 3",
                extra_ok=False,
            )
        v = max(top, key=report.tdv_of)
        separated = [u for u in top if _split_non_neighbors(graph, u) is not None]
        product_ok = True
        if report.gamma_t == 3:
            for u in separated:
                alpha, beta = _split_non_neighbors(graph, u)
                if report.tdv_of(u) != graph.degree(alpha) * graph.degree(beta):
                    product_ok = False
                    v = u
        return compare(
            self.check_id,
            graph,
            lhs=report.tdv_of(v),
            rhs=bound,
            witness=(v,),
            detail=f"Delta = n - 3, connected, gamma_t={report.gamma_t}, product identity at {separated}",
            extra_ok=product_ok,
        )


def _split_non_neighbors(graph: Graph, v: int) -> tuple[int, int] | None:
    """The two non-neighbors alpha, beta of v when they are non-adjacent, have
    disjoint neighborhoods and each meets N(v); None otherwise."""
    missing = sorted(set(graph.vertices) - graph.neighbors(v) - {v})
    if len(missing) != 2:
        return None
    alpha, beta = missing
    n_alpha, n_beta, n_v = graph.neighbors(alpha), graph.neighbors(beta), graph.neighbors(v)
    if beta in n_alpha or n_alpha & n_beta:
        return None
    if not (n_alpha & n_v and n_beta & n_v):
        return None
    return alpha, beta


def _solved(g: Graph, report: TdvReport | None) -> TdvReport:
    return report if report is not None else solve(g)


def check_gamma2_degree_bound(g: Graph, report: TdvReport | None = None) -> CheckReport:
    return Gamma2DegreeCheck().measure(g, _solved(g, report))


def check_gamma2_pair_identity(g: Graph, report: TdvReport | None = None) -> CheckReport:
    return Gamma2PairIdentityCheck().measure(g, _solved(g, report))


def check_gamma_max_degree(g: Graph, report: TdvReport | None = None) -> CheckReport:
    return GammaMaxDegreeCheck().measure(g, _solved(g, report))


def check_max_degree_cases(g: Graph, report: TdvReport | None = None) -> CheckReport:
    return MaxDegreeCasesCheck().measure(g, _solved(g, report))
