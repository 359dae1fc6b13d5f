"""Runs every property check on a graph and tallies verdicts."""

import logging

import pandas as pd

from evals.metrics.base import CheckReport, PropertyCheck, Verdict
from evals.metrics.degree_checks import (
    Gamma2DegreeCheck,
    Gamma2PairIdentityCheck,
    GammaMaxDegreeCheck,
    MaxDegreeCasesCheck,
    check_gamma2_degree_bound,
    check_gamma2_pair_identity,
    check_gamma_max_degree,
    check_max_degree_cases,
)
from evals.metrics.identity_checks import (
    ComplementGammaCheck,
    DisjointUnionCheck,
    Mk2ComplementTdvCheck,
    SubgraphTauCheck,
    SumIdentityCheck,
    check_complement_gamma,
    check_disjoint_union,
    check_mk2_complement_tdv,
    check_subgraph_tau,
    check_sum_identity,
)
from evals.metrics.neighborhood_checks import (
    NeighborhoodSumCheck,
    SupportVertexCheck,
    check_neighborhood_sum_bounds,
    check_support_vertex,
)
from evals.metrics.tau_checks import (
    GammaTwoThirdsCheck,
    TauGamma2UpperCheck,
    TauRangeCheck,
    check_gamma_two_thirds,
    check_tau_gamma2_upper,
    check_tau_range,
    tau_range_extremal_graphs,
)
from evals.solver import NoTdsExists, TdvReport, solve
from graphs.graph import Graph

logger = logging.getLogger(__name__)

SOLVE_CHECK_ID = "solve"

ALL_CHECKS: tuple[PropertyCheck, ...] = tuple(
    sorted(
        (
            ComplementGammaCheck(),
            DisjointUnionCheck(),
            Gamma2DegreeCheck(),
            Gamma2PairIdentityCheck(),
            GammaMaxDegreeCheck(),
            GammaTwoThirdsCheck(),
            MaxDegreeCasesCheck(),
            Mk2ComplementTdvCheck(),
            NeighborhoodSumCheck(),
            SubgraphTauCheck(),
            SumIdentityCheck(),
            SupportVertexCheck(),
            TauGamma2UpperCheck(),
            TauRangeCheck(),
        ),
        key=lambda check: check.check_id,
    )
)

__all__ = [
    "ALL_CHECKS",
    "check_complement_gamma",
    "check_disjoint_union",
    "check_gamma2_degree_bound",
    "check_gamma2_pair_identity",
    "check_gamma_max_degree",
    "check_gamma_two_thirds",
    "check_max_degree_cases",
    "check_mk2_complement_tdv",
    "check_neighborhood_sum_bounds",
    "check_subgraph_tau",
    "check_sum_identity",
    "check_support_vertex",
    "check_tau_gamma2_upper",
    "check_tau_range",
    "run_all",
    "run_checks",
    "score_reports",
    "tau_range_extremal_graphs",
]


def run_checks(graph: Graph, report: TdvReport, checks: tuple[PropertyCheck, ...] = ALL_CHECKS) -> list[CheckReport]:
    """Runs ``checks`` against an already solved graph, in check_id order.

    A check that raises is turned into a FAIL report for that check.
    """
    results = []
    for check in checks:
        try:
            results.append(check.measure(graph, report))
        except Exception as e:
            logger.error(f"Check {check.check_id} raised on {graph.name}: {e}", exc_info=True)
            results.append(
                CheckReport(check_id=check.check_id, verdict=Verdict.FAIL, graph=graph.name, detail=f"raised {e!r}")
            )
    return results


def run_all(g: Graph, workers: int = 1) -> list[CheckReport]:
    """Every check on ``g``; never raises.

    A graph without a total dominating set yields a single NOT_APPLICABLE
    "solve" report; any other solver error yields a FAIL "solve" report.
    """
    try:
        report = solve(g, workers=workers)
    except NoTdsExists as e:
        logger.info(f"run_all skipped {g.name}: {e}")
        return [CheckReport(check_id=SOLVE_CHECK_ID, verdict=Verdict.NOT_APPLICABLE, graph=g.name, detail=str(e))]
    except Exception as e:
        logger.error(f"Solver failed on {g.name}: {e}", exc_info=True)
        return [CheckReport(check_id=SOLVE_CHECK_ID, verdict=Verdict.FAIL, graph=g.name, detail=f"raised {e!r}")]
    results = run_checks(g, report)
    failed = [r.check_id for r in results if r.verdict is Verdict.FAIL]
    if failed:
        logger.warning(f"run_all on {g.name}: failing check(s) {failed}")
    else:
        logger.debug(f"run_all on {g.name}: no failures")
    return results


def score_reports(reports: list[CheckReport]) -> pd.DataFrame:
    """Per-check verdict counts, one row per check_id.

    Columns: pass, fail, not_applicable, tight.
    """
    columns = [v.value for v in Verdict] + ["tight"]
    if not reports:
        return pd.DataFrame(columns=columns, dtype=int).rename_axis("check_id")
    frame = pd.DataFrame(
        {"check_id": r.check_id, "verdict": r.verdict.value, "tight": r.tight and r.passed} for r in reports
    )
    counts = pd.crosstab(frame["check_id"], frame["verdict"]).reindex(columns=columns[:-1], fill_value=0)
    counts["tight"] = frame.groupby("check_id")["tight"].sum().astype(int)
    return counts
