"""Bounds on tau and on gamma_t in terms of the order n."""

import logging
import math
from functools import cache

import networkx as nx

from evals.metrics.base import CheckReport, PropertyCheck, compare, not_applicable
from evals.solver import TdvReport, solve
from graphs.graph import Graph, is_connected

logger = logging.getLogger(__name__)

# Orders for which upper tightness of the tau range has been searched exhaustively.
TAU_RANGE_EXHAUSTIVE_MAX = 8


def _is_complete(graph: Graph) -> bool:
    return all(d == graph.n - 1 for d in graph.degrees)


class TauRangeCheck(PropertyCheck):
    """1 <= tau <= C(n, floor(n/2)) on connected graphs with n >= 3.

    The upper bound is met only by K3, K4 and K5; a tight graph of order up to
    ``TAU_RANGE_EXHAUSTIVE_MAX`` that is not one of them fails the check.
    """

    check_id = "tau_range"

    def measure(self, graph: Graph, report: TdvReport) -> CheckReport:
        if graph.n < 3 or not is_connected(graph):
            return not_applicable(self.check_id, graph, "needs a connected graph with n >= 3")
        upper = math.comb(graph.n, graph.n // 2)
        extremal_ok = True
        detail = ""
        if report.tau == upper:
            expected = _is_complete(graph) and 3 <= graph.n <= 5
            if graph.n <= TAU_RANGE_EXHAUSTIVE_MAX:
                extremal_ok = expected
                detail = "upper bound met by K3/K4/K5" if expected else "upper bound met by a graph other than K3/K4/K5"
            else:
                detail = f"upper bound met at n={graph.n}, beyond the exhaustively searched orders"
                logger.warning(f"tau_range tight on {graph.name} with n={graph.n}: unchecked territory")
        return compare(self.check_id, graph, lhs=report.tau, rhs=upper, lower=1, detail=detail, extra_ok=extremal_ok)


class TauGamma2UpperCheck(PropertyCheck):
    """gamma_t = 2 and Delta <= n - 2 imply tau <= C(n, 2) - ceil(n / 2)."""

    check_id = "tau_gamma2_upper"

    def measure(self, graph: Graph, report: TdvReport) -> CheckReport:
        if report.gamma_t != 2 or graph.max_degree > graph.n - 2:
            return not_applicable(self.check_id, graph, "needs gamma_t = 2 and Delta <= n - 2")
        bound = math.comb(graph.n, 2) - (graph.n + 1) // 2
        return compare(self.check_id, graph, lhs=report.tau, rhs=bound)


class GammaTwoThirdsCheck(PropertyCheck):
    """gamma_t <= floor(2n / 3) on connected graphs with n >= 3."""

    check_id = "gamma_two_thirds"

    def measure(self, graph: Graph, report: TdvReport) -> CheckReport:
        if graph.n < 3 or not is_connected(graph):
            return not_applicable(self.check_id, graph, "needs a connected graph with n >= 3")
        return compare(self.check_id, graph, lhs=report.gamma_t, rhs=2 * graph.n // 3)


def check_tau_range(g: Graph, report: TdvReport | None = None) -> CheckReport:
    return TauRangeCheck().measure(g, report if report is not None else solve(g))


def check_tau_gamma2_upper(g: Graph, report: TdvReport | None = None) -> CheckReport:
    return TauGamma2UpperCheck().measure(g, report if report is not None else solve(g))


def check_gamma_two_thirds(g: Graph, report: TdvReport | None = None) -> CheckReport:
    return GammaTwoThirdsCheck().measure(g, report if report is not None else solve(g))


@cache
def _atlas_masks(n: int) -> tuple[tuple[int, ...], ...]:
    """Neighborhood masks of every graph of order n in the networkx atlas (n <= 7)."""
    out = []
    for atlas_graph in nx.graph_atlas_g():
        if atlas_graph.number_of_nodes() != n:
            continue
        out.append(tuple(sum(1 << w for w in atlas_graph.adj[v]) for v in range(n)))
    return tuple(out)


def _graphs_of_order(n: int):
    """Every graph of order n up to isomorphism, possibly with repeats, as masks.

    Orders up to 7 come straight from the atlas. Order 8 is covered by adding
    a vertex with every possible neighborhood to each order-7 atlas graph, since
    deleting any vertex of an order-8 graph leaves some atlas graph.
    """
    if n <= 7:
        yield from _atlas_masks(n)
        return
    if n != 8:
        raise ValueError(f"Exhaustive graph search is limited to n <= 8, got {n}")
    new_bit = 1 << 7
    for base in _atlas_masks(7):
        for pattern in range(1 << 7):
            masks = [m | new_bit if pattern >> v & 1 else m for v, m in enumerate(base)]
            masks.append(pattern)
            yield tuple(masks)


def tau_range_extremal_graphs(n: int) -> list[Graph]:
    """Connected graphs of order n (n <= 8) whose tau equals C(n, floor(n/2)).

    tau <= C(n, gamma_t), and C(n, gamma_t) reaches C(n, floor(n/2)) only when
    gamma_t is floor(n/2) or ceil(n/2) with every gamma_t-subset a total
    dominating set. That forces deg(v) >= n - ceil(n/2) + 1 for every v, which
    filters candidates before the exact solver runs.
    """
    if n < 3:
        raise ValueError(f"The tau range bound needs n >= 3, got {n}")
    target = math.comb(n, n // 2)
    min_degree = n - (n + 1) // 2 + 1
    found: list[Graph] = []
    seen: set[tuple[int, ...]] = set()
    candidates = 0
    for masks in _graphs_of_order(n):
        if min(m.bit_count() for m in masks) < min_degree:
            continue
        graph = Graph(n=n, adj=tuple(frozenset(w + 1 for w in range(n) if m >> w & 1) for m in masks))
        if not is_connected(graph):
            continue
        candidates += 1
        if solve(graph).tau == target:
            key = tuple(sorted(graph.degrees))
            if key in seen and any(nx.is_isomorphic(graph.to_networkx(), g.to_networkx()) for g in found):
                continue
            seen.add(key)
            found.append(graph.with_name(f"extremal-n{n}-{len(found) + 1}"))
    logger.info(f"tau range search n={n}: {candidates} candidate(s), {len(found)} extremal graph(s)")
    return found
