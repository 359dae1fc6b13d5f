import datetime
import json
import logging
import os
import sys
from dataclasses import asdict, dataclass
from enum import IntEnum
from pathlib import Path
from typing import TYPE_CHECKING, Annotated, Optional

import typer
from rich.console import Console
from rich.table import Table

from evals.metrics.base import CheckReport, Verdict
from evals.solver import NoTdsExists, SolverConsistencyError, TdvReport, solve
from graphs.families import generate_from_text
from graphs.graph import MAX_VERTICES, Graph, GraphInputError
from utils.config import Settings

if TYPE_CHECKING:
    from evals.verification import VerificationResult

app = typer.Typer(help="Exact total domination: gamma_t, tau, TDV and TDM of small graphs.")
console = Console()
logger = logging.getLogger(__name__)

PATHS_DEFAULT = "2..22"
CYCLES_DEFAULT = "3..22"
MULTIPARTITE_DEFAULT = 9
TAU_EXTREMAL_DEFAULT = 8


class ExitCode(IntEnum):
    OK = 0
    VERIFICATION_FAILED = 1
    INPUT_ERROR = 2
    NO_TDS = 3


@dataclass
class OutputRecord:
    """What ``tdv solve --json`` prints. Key order is fixed."""

    graph: str | None
    n: int
    gamma_t: int
    tau: int
    tdv: list[int]
    tdm: list[list[int]] | None = None
    checks: list[dict] | None = None

    @classmethod
    def build(cls, graph: Graph, report: TdvReport, checks: list[CheckReport] | None = None) -> "OutputRecord":
        return cls(
            graph=graph.name,
            n=graph.n,
            gamma_t=report.gamma_t,
            tau=report.tau,
            tdv=list(report.tdv),
            tdm=[s.to_list() for s in report.tdm] if report.tdm is not None else None,
            checks=[c.to_dict() for c in checks] if checks is not None else None,
        )

    def to_json(self) -> str:
        return json.dumps(asdict(self), indent=2)

    @classmethod
    def from_json(cls, text: str) -> "OutputRecord":
        return cls(**json.loads(text))


def _settings() -> Settings:
    try:
        return Settings.from_env()
    except ValueError as e:
        raise typer.BadParameter(str(e)) from None


@app.callback()
def main(
    log_level: Annotated[Optional[str], typer.Option(help="Set the logging level (default: TDV_LOG_LEVEL or WARNING).")] = None,
    log_file: Annotated[Optional[Path], typer.Option(help="Also write log records to this file.")] = None,
):
    """Configures logging for every command. Logs go to stderr; stdout carries results."""
    level_name = log_level or _settings().log_level
    numeric_level = getattr(logging, level_name.upper(), None)
    if not isinstance(numeric_level, int):
        raise typer.BadParameter(f"Invalid log level: {level_name}", param_hint="--log-level")

    handlers: list[logging.Handler] = [logging.StreamHandler(sys.stderr)]
    if log_file:
        handlers.append(logging.FileHandler(log_file))
    logging.basicConfig(
        level=numeric_level,
        format="%(asctime)s - %(levelname)s - %(name)s - %(message)s",
        handlers=handlers,
        force=True,
    )


def load_graph(source: str, zero_based: bool = False) -> Graph:
    """``-`` or an existing path is read as a graph file, anything else as a family spec."""
    from utils.graph_io import read_graph

    if source == "-" or Path(source).is_file():
        return read_graph(source, zero_based=zero_based)
    if ":" not in source:
        raise GraphInputError(f"'{source}' is neither a readable file nor a graph spec like 'path:6'")
    return generate_from_text(source)


def _fail(code: ExitCode, message: str) -> typer.Exit:
    logger.error(message)
    return typer.Exit(code=int(code))


def _print_report(graph: Graph, report: TdvReport, checks: list[CheckReport] | None) -> None:
    table = Table(title=f"{graph.name or 'graph'}: n={graph.n}, gamma_t={report.gamma_t}, tau={report.tau}")
    table.add_column("Vertex", justify="right")
    table.add_column("Degree", justify="right")
    table.add_column("TDV", justify="right")
    for v in graph.vertices:
        table.add_row(str(v), str(graph.degree(v)), str(report.tdv_of(v)))
    console.print(table)

    if report.tdm is not None:
        sets = Table(title=f"Minimum total dominating sets ({report.tau})")
        sets.add_column("#", justify="right")
        sets.add_column("Set")
        for i, members in enumerate(report.tdm, start=1):
            sets.add_row(str(i), repr(members))
        console.print(sets)

    if checks is not None:
        console.print(_checks_table(checks))


def _checks_table(checks: list[CheckReport], title: str = "Property checks") -> Table:
    table = Table(title=title)
    for column in ("Check", "Graph", "Verdict", "Relation", "Tight", "Witness", "Details"):
        table.add_column(column)
    styles = {Verdict.PASS: "green", Verdict.FAIL: "bold red", Verdict.NOT_APPLICABLE: "dim"}
    for c in checks:
        relation = ""
        if c.lhs is not None:
            relation = f"{c.lhs} {c.relation.value} {c.rhs}"
            if c.lower is not None:
                relation = f"{c.lower} <= {relation}"
        table.add_row(
            c.check_id,
            c.graph or "",
            f"[{styles[c.verdict]}]{c.verdict.value}[/]",
            relation,
            ", ".join(c.tight_bounds) or ("yes" if c.tight else ""),
            str(list(c.witness)) if c.witness else "",
            c.detail,
        )
    return table


@app.command("solve")
def solve_command(
    source: Annotated[str, typer.Argument(metavar="INPUT", help="Graph file, '-' for stdin, or a family spec such as 'cycle:7'.")],
    json_output: Annotated[bool, typer.Option("--json", help="Print the result as JSON.")] = False,
    tdm: Annotated[bool, typer.Option(help="Include every minimum total dominating set.")] = False,
    checks: Annotated[bool, typer.Option(help="Run the property checks on the graph.")] = False,
    threads: Annotated[Optional[int], typer.Option(min=1, help="Worker processes (default: TDV_THREADS or 1).")] = None,
    zero_based: Annotated[bool, typer.Option(help="Input file labels vertices from 0.")] = False,
):
    """Computes gamma_t, tau and TDV for one graph."""
    workers = threads or _settings().threads
    try:
        graph = load_graph(source, zero_based=zero_based)
        report = solve(graph, want_tdm=tdm, workers=workers)
    except GraphInputError as e:
        raise _fail(ExitCode.INPUT_ERROR, f"Invalid input: {e}")
    except NoTdsExists as e:
        raise _fail(ExitCode.NO_TDS, str(e))
    except SolverConsistencyError as e:
        raise _fail(ExitCode.VERIFICATION_FAILED, f"Solver self-check failed: {e}")

    check_reports = None
    if checks:
        from evals.property_suite import run_checks

        check_reports = run_checks(graph, report)

    record = OutputRecord.build(graph, report, check_reports)
    if json_output:
        typer.echo(record.to_json())
    else:
        _print_report(graph, report, check_reports)
    if check_reports and any(c.verdict is Verdict.FAIL for c in check_reports):
        raise _fail(ExitCode.VERIFICATION_FAILED, f"Property check failure on {graph.name}")


def parse_range(value: str, option: str, minimum: int) -> range:
    """``A..B`` (inclusive) within minimum..MAX_VERTICES."""
    start, sep, stop = value.partition("..")
    try:
        low, high = int(start), int(stop)
    except ValueError:
        raise typer.BadParameter(f"expected A..B, got '{value}'", param_hint=option) from None
    if not sep or low > high or low < minimum or high > MAX_VERTICES:
        raise typer.BadParameter(f"range must satisfy {minimum} <= A <= B <= {MAX_VERTICES}, got '{value}'", param_hint=option)
    return range(low, high + 1)


@app.command()
def verify(
    paths: Annotated[Optional[str], typer.Option(help="Path orders A..B to check against the closed forms.")] = None,
    cycles: Annotated[Optional[str], typer.Option(help="Cycle orders A..B to check against the closed forms.")] = None,
    multipartite_max: Annotated[Optional[int], typer.Option(min=2, max=MAX_VERTICES, help="Check every composition of n <= N into at least two parts.")] = None,
    figures: Annotated[bool, typer.Option(help="Check the stated values of the figure graphs.")] = False,
    queens: Annotated[bool, typer.Option(help="Check the 3x3 and 4x4 queen boards.")] = False,
    properties: Annotated[bool, typer.Option(help="Run the property suite on the family and random corpus.")] = False,
    random_count: Annotated[int, typer.Option(min=0, help="Random connected graphs in the property corpus.")] = 200,
    random_max_n: Annotated[int, typer.Option(min=3, max=MAX_VERTICES, help="Largest order of a random graph.")] = 12,
    seed: Annotated[Optional[int], typer.Option(min=0, help="Seed of the random corpus.")] = None,
    tau_extremal_max: Annotated[Optional[int], typer.Option(min=3, max=8, help="Search all graphs up to this order for tau = C(n, n/2).")] = None,
    threads: Annotated[Optional[int], typer.Option(min=1, help="Worker processes (default: TDV_THREADS or 1).")] = None,
    generate_report: Annotated[bool, typer.Option(help="Write a Markdown report and the JSON results to the results directory.")] = False,
):
    """Compares closed forms and stated values with the exact solver and runs the property suite.

    With no selection flag the full acceptance set runs.
    """
    from evals import verification
    from evals.corpus import DEFAULT_SEED

    settings = _settings()
    workers = threads or settings.threads
    selected = any(x is not None for x in (paths, cycles, multipartite_max, tau_extremal_max)) or figures or queens or properties
    if not selected:
        paths, cycles = PATHS_DEFAULT, CYCLES_DEFAULT
        multipartite_max, tau_extremal_max = MULTIPARTITE_DEFAULT, TAU_EXTREMAL_DEFAULT
        figures = queens = properties = True
    path_orders = parse_range(paths, "--paths", 2) if paths else None
    cycle_orders = parse_range(cycles, "--cycles", 3) if cycles else None

    result = verification.VerificationResult()
    try:
        if path_orders:
            result.extend(verification.verify_paths(path_orders, workers))
        if cycle_orders:
            result.extend(verification.verify_cycles(cycle_orders, workers))
        if multipartite_max is not None:
            result.extend(verification.verify_multipartite(multipartite_max, workers))
            result.extend(verification.verify_special_families(workers))
        if figures:
            result.extend(verification.verify_figures(workers))
        if queens:
            result.extend(verification.verify_queens(workers))
        if properties:
            corpus = verification.property_corpus(random_count, random_max_n, DEFAULT_SEED if seed is None else seed)
            result.extend(verification.verify_properties(corpus, workers))
            result.extend(verification.verify_sharpness(workers))
        if tau_extremal_max is not None:
            result.extend(verification.verify_tau_extremal(tau_extremal_max))
    except GraphInputError as e:
        raise _fail(ExitCode.INPUT_ERROR, f"Invalid input: {e}")

    _print_verification(result)

    if generate_report:
        from utils.reporter import generate_markdown_report

        os.makedirs(settings.results_dir, exist_ok=True)
        results = result.to_dict()
        results["summary"]["timestamp"] = datetime.datetime.now(datetime.timezone.utc).isoformat()
        timestamp = datetime.datetime.now().strftime("%Y%m%d-%H%M%S")
        results_filename = os.path.join(settings.results_dir, f"verification_results_{timestamp}.json")
        with open(results_filename, "w") as f:
            json.dump(results, f, indent=2)
        logger.info(f"Verification results saved to {results_filename}")
        generate_markdown_report(results, os.path.join(settings.results_dir, "verification_report.md"))

    if not result.ok:
        raise _fail(
            ExitCode.VERIFICATION_FAILED,
            f"{len(result.mismatches)} mismatch(es) and {len(result.failures)} failing check(s)",
        )


def _print_verification(result: "VerificationResult") -> None:
    claims = Table(title="Claims")
    for column in ("Claim", "Pass", "Fail", "N/A", "Tight"):
        claims.add_column(column, justify="left" if column == "Claim" else "right")
    for row in result.claim_counts().to_dict(orient="records"):
        claims.add_row(row["claim"], *(str(row[c]) for c in ("pass", "fail", "not_applicable", "tight")))
    console.print(claims)

    if result.mismatches:
        table = Table(title="Mismatches")
        for column in ("Family", "n", "Field", "Expected", "Got"):
            table.add_column(column)
        for m in result.mismatches:
            table.add_row(m.family, m.param, m.field, str(m.expected), str(m.got))
        console.print(table)
    if result.failures:
        console.print(_checks_table(result.failures, title="Failing checks"))
    verdict = "[green]all claims hold[/]" if result.ok else "[bold red]verification failed[/]"
    console.print(f"{len(result.rows)} comparison(s), {len(result.reports)} check report(s): {verdict}")


@app.command()
def gen(
    spec: Annotated[str, typer.Argument(help="Family spec, e.g. 'kpartite:2,3' or 'figure:5'.")],
    out: Annotated[str, typer.Argument(help="Output file, '-' for stdout.")] = "-",
):
    """Writes a generated graph in the edge-list format."""
    from utils.graph_io import write_graph

    try:
        graph = generate_from_text(spec)
        write_graph(graph, out)
    except GraphInputError as e:
        raise _fail(ExitCode.INPUT_ERROR, f"Invalid graph spec: {e}")
    except OSError as e:
        raise _fail(ExitCode.INPUT_ERROR, f"Cannot write {out}: {e}")


if __name__ == "__main__":
    app()
