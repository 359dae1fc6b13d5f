"""Cross-checks closed forms and stated values against the exact solver.

Every comparison becomes one ComparisonRow (family, param, field, expected,
got). Property checks run through ``run_all`` and are kept as CheckReports.
"""

import logging
import math
from dataclasses import asdict, dataclass, field, fields

import pandas as pd

from evals import closed_forms
from evals.corpus import compositions, family_corpus, figure_specs, queen_specs, random_corpus
from evals.metrics.base import CheckReport, Verdict
from evals.metrics.neighborhood_checks import neighborhood_sum_report
from evals.metrics.tau_checks import check_tau_gamma2_upper, check_tau_range, tau_range_extremal_graphs
from evals.property_suite import run_all, score_reports
from evals.solver import TdvReport, solve
from graphs.families import FamilyKind, FamilySpec, generate
from graphs.figures import FIGURE_ROOTS
from graphs.graph import Graph, closed_neighborhood

logger = logging.getLogger(__name__)

CLAIM_COLUMNS = ["claim", "pass", "fail", "not_applicable", "tight"]


@dataclass
class ComparisonRow:
    family: str
    param: str
    field: str
    expected: object
    got: object
    match: bool


@dataclass
class VerificationResult:
    """Outcome of a verification run."""

    rows: list[ComparisonRow] = field(default_factory=list)
    reports: list[CheckReport] = field(default_factory=list)

    @property
    def comparisons(self) -> pd.DataFrame:
        return pd.DataFrame([asdict(row) for row in self.rows], columns=[f.name for f in fields(ComparisonRow)])

    @property
    def mismatches(self) -> list[ComparisonRow]:
        return [row for row in self.rows if not row.match]

    @property
    def failures(self) -> list[CheckReport]:
        return [r for r in self.reports if r.verdict is Verdict.FAIL]

    @property
    def ok(self) -> bool:
        return not self.mismatches and not self.failures

    def claim_counts(self) -> pd.DataFrame:
        """Pass / fail counts per family comparison and per property check."""
        records = []
        comparisons = self.comparisons
        if not comparisons.empty:
            for family, matches in comparisons.groupby("family", sort=False)["match"]:
                passed = int(matches.sum())
                records.append({"claim": family, "pass": passed, "fail": len(matches) - passed})
        for check_id, counts in score_reports(self.reports).iterrows():
            records.append({"claim": f"check:{check_id}", **{k: int(v) for k, v in counts.items()}})
        return pd.DataFrame(records, columns=CLAIM_COLUMNS).fillna(0).astype({c: int for c in CLAIM_COLUMNS[1:]})

    def summary(self) -> dict:
        return {
            "comparisons": len(self.rows),
            "mismatches": len(self.mismatches),
            "check_reports": len(self.reports),
            "check_failures": len(self.failures),
            "ok": self.ok,
        }

    def to_dict(self) -> dict:
        return {
            "summary": self.summary(),
            "claims": self.claim_counts().to_dict(orient="records"),
            "mismatches": [asdict(row) for row in self.mismatches],
            "failures": [{"graph": r.graph, **r.to_dict()} for r in self.failures],
        }

    def extend(self, other: "VerificationResult") -> None:
        self.rows.extend(other.rows)
        self.reports.extend(other.reports)


def _row(family: str, param, field_name: str, expected, got) -> ComparisonRow:
    # tuples and lists compare by content
    if isinstance(expected, tuple | list) and isinstance(got, tuple | list):
        expected, got = list(expected), list(got)
    row = ComparisonRow(family, str(param), field_name, expected, got, expected == got)
    if not row.match:
        logger.warning(f"Mismatch {family} {param} {field_name}: expected {expected}, got {got}")
    return row


def _solve_spec(spec: FamilySpec, workers: int) -> tuple[Graph, TdvReport]:
    graph = generate(spec)
    return graph, solve(graph, workers=workers)


def verify_paths(orders: range, workers: int = 1) -> VerificationResult:
    result = VerificationResult()
    for n in orders:
        _, report = _solve_spec(FamilySpec(FamilyKind.PATH, (n,)), workers)
        result.rows += [
            _row("path", n, "gamma_t", closed_forms.gamma_t_path(n), report.gamma_t),
            _row("path", n, "tau", closed_forms.tau_path(n), report.tau),
            _row("path", n, "tdv", closed_forms.tdv_path_vector(n), report.tdv),
            _row("path", n, "tdv_symmetric", report.tdv[::-1], report.tdv),
        ]
    logger.info(f"Paths {orders.start}..{orders.stop - 1}: {len(result.mismatches)} mismatch(es)")
    return result


def verify_cycles(orders: range, workers: int = 1) -> VerificationResult:
    result = VerificationResult()
    for n in orders:
        _, report = _solve_spec(FamilySpec(FamilyKind.CYCLE, (n,)), workers)
        result.rows += [
            _row("cycle", n, "gamma_t", closed_forms.gamma_t_cycle(n), report.gamma_t),
            _row("cycle", n, "tau", closed_forms.tau_cycle(n), report.tau),
            _row("cycle", n, "tdv", closed_forms.tdv_cycle_vector(n), report.tdv),
            _row("cycle", n, "tau_path_le_tau_cycle", True, closed_forms.tau_path(n) <= report.tau),
        ]
    logger.info(f"Cycles {orders.start}..{orders.stop - 1}: {len(result.mismatches)} mismatch(es)")
    return result


def verify_multipartite(max_n: int, workers: int = 1) -> VerificationResult:
    """Every composition of every n <= max_n into at least two parts."""
    result = VerificationResult()
    for n in range(2, max_n + 1):
        for parts in compositions(n):
            _, report = _solve_spec(FamilySpec(FamilyKind.MULTIPARTITE, parts), workers)
            label = ",".join(map(str, parts))
            result.rows += [
                _row("kpartite", label, "gamma_t", 2, report.gamma_t),
                _row("kpartite", label, "tau", closed_forms.multipartite_tau(parts), report.tau),
                _row("kpartite", label, "tdv", closed_forms.multipartite_tdv_vector(parts), report.tdv),
            ]
    logger.info(f"Multipartite up to n={max_n}: {len(result.rows) // 3} composition(s) checked")
    return result


def verify_special_families(workers: int = 1) -> VerificationResult:
    """Closed forms for complete graphs, K_{a,b} (stars included), cocktail-party graphs and mK2 complements."""
    result = VerificationResult()
    for n in range(2, 9):
        _, report = _solve_spec(FamilySpec(FamilyKind.COMPLETE, (n,)), workers)
        result.rows += [
            _row("complete", n, "tau", closed_forms.complete_tau(n), report.tau),
            _row("complete", n, "tdv", (closed_forms.complete_tdv(n),) * n, report.tdv),
        ]
    for a1, a2 in ((1, 3), (2, 3), (3, 3), (2, 5)):
        _, report = _solve_spec(FamilySpec(FamilyKind.MULTIPARTITE, (a1, a2)), workers)
        expected = tuple(closed_forms.bipartite_tdv(a1, a2, j) for j, size in ((1, a1), (2, a2)) for _ in range(size))
        result.rows += [
            _row("bipartite", f"{a1},{a2}", "tau", closed_forms.bipartite_tau(a1, a2), report.tau),
            _row("bipartite", f"{a1},{a2}", "tdv", expected, report.tdv),
        ]
    for n in (4, 6, 8):
        spec = FamilySpec(FamilyKind.COMPLEMENT, children=(FamilySpec(FamilyKind.MK2, (n // 2,)),))
        _, report = _solve_spec(spec, workers)
        result.rows.append(_row("regular_n_minus_2", n, "tau", closed_forms.regular_n_minus_2_tau(n), report.tau))
    for m in range(2, 6):
        matching = FamilySpec(FamilyKind.MK2, (m,))
        _, on_matching = _solve_spec(matching, workers)
        _, on_complement = _solve_spec(FamilySpec(FamilyKind.COMPLEMENT, children=(matching,)), workers)
        expected = closed_forms.mk2_complement_tdv(m)
        result.rows.append(
            _row("mk2_complement", m, "tdv", expected, (max(on_matching.tdv), max(on_complement.tdv)))
        )
    return result


# (field, expected) pairs per figure key; "nsum" is the TDV sum over N[v0]
FIGURE_EXPECTED = {
    "1a": {"gamma_t": 2, "tau": 3, "nsum": 6},
    "1b": {"gamma_t": 6, "tau": 2, "nsum": 8},
    "2": {"gamma_t": 2, "tau": 12},
    "4a": {"gamma_t": 3, "tau": 4, "tdv_v0": 4},
    "4b": {"gamma_t": 3, "tau": 12, "tdv_v0": 8},
    "5": {"gamma_t": 2, "tau": 1, "tdv_v0": 0, "unique_max_degree": True},
}


def _figure_values(graph: Graph, report: TdvReport, v0: int) -> dict:
    top = [v for v in graph.vertices if graph.degree(v) == graph.max_degree]
    return {
        "gamma_t": report.gamma_t,
        "tau": report.tau,
        "nsum": report.neighborhood_sum(closed_neighborhood(graph, v0)),
        "tdv_v0": report.tdv_of(v0),
        "unique_max_degree": top == [v0],
    }


def verify_figures(workers: int = 1) -> VerificationResult:
    result = VerificationResult()
    for spec in figure_specs():
        key = spec.kind.value.removeprefix("figure:")
        graph, report = _solve_spec(spec, workers)
        got = _figure_values(graph, report, FIGURE_ROOTS[key])
        result.rows += [_row(str(spec), "", name, expected, got[name]) for name, expected in FIGURE_EXPECTED[key].items()]
    return result


def verify_queens(workers: int = 1) -> VerificationResult:
    """3x3: center 8, periphery 4. 4x4: the four center squares 3, the twelve others 1."""
    center_squares = {(3, 3): {5}, (4, 4): {6, 7, 10, 11}}
    inner_outer = {(3, 3): (8, 4), (4, 4): (3, 1)}
    result = VerificationResult()
    for spec in queen_specs():
        graph, report = _solve_spec(spec, workers)
        inner, outer = inner_outer[spec.params]
        expected = tuple(inner if v in center_squares[spec.params] else outer for v in graph.vertices)
        result.rows += [
            _row(str(spec), "", "gamma_t", 2, report.gamma_t),
            _row(str(spec), "", "tdv", expected, report.tdv),
        ]
    return result


def verify_sharpness(workers: int = 1) -> VerificationResult:
    """Each sharp bound is met on its witness graph."""
    result = VerificationResult()
    witnesses = [
        ("path:8", 1, "lower"),
        ("star:3", 1, "upper_gamma"),
        ("uppersharp:6", 3, "upper_degree"),
    ]
    for text, v0, bound in witnesses:
        spec = FamilySpec(FamilyKind(text.split(":")[0]), (int(text.split(":")[1]),))
        graph, report = _solve_spec(spec, workers)
        tight = neighborhood_sum_report(graph, report, v0).tight_bounds
        result.rows.append(_row("sharpness", f"{text}@{v0}", f"neighborhood_sum:{bound}", True, bound in tight))
    octahedron, report = _solve_spec(FamilySpec(FamilyKind.FIGURE_2), workers)
    result.rows.append(
        _row("sharpness", "figure:2", "tau_gamma2_upper", True, check_tau_gamma2_upper(octahedron, report).tight)
    )
    for n in (3, 4, 5):
        graph, report = _solve_spec(FamilySpec(FamilyKind.COMPLETE, (n,)), workers)
        upper_tight = "upper" in check_tau_range(graph, report).tight_bounds
        result.rows.append(_row("sharpness", f"complete:{n}", "tau_range:upper", True, upper_tight))
    return result


def verify_tau_extremal(max_n: int) -> VerificationResult:
    """Exhaustive search: only K3, K4 and K5 reach tau = C(n, floor(n/2))."""
    result = VerificationResult()
    for n in range(3, max_n + 1):
        found = tau_range_extremal_graphs(n)
        complete = [g for g in found if g.edge_count == math.comb(n, 2)]
        expected = 1 if n <= 5 else 0
        result.rows += [
            _row("tau_range_extremal", n, "count", expected, len(found)),
            _row("tau_range_extremal", n, "complete", expected, len(complete)),
        ]
    return result


def verify_properties(graphs: list[Graph], workers: int = 1) -> VerificationResult:
    result = VerificationResult()
    for graph in graphs:
        result.reports += run_all(graph, workers=workers)
    logger.info(f"Property suite on {len(graphs)} graph(s): {len(result.failures)} failing report(s)")
    return result


def property_corpus(random_count: int, random_max_n: int, seed: int) -> list[Graph]:
    return family_corpus() + random_corpus(random_count, random_max_n, seed)
