"""Check reports and the abstract base class every property check derives from."""

from abc import ABC, abstractmethod
from dataclasses import dataclass
from enum import Enum

from evals.solver import TdvReport
from graphs.graph import Graph


class Verdict(str, Enum):
    PASS = "pass"
    FAIL = "fail"
    NOT_APPLICABLE = "not_applicable"


class Relation(str, Enum):
    LE = "<="
    GE = ">="
    EQ = "=="

    def holds(self, lhs: int, rhs: int) -> bool:
        if self is Relation.LE:
            return lhs <= rhs
        if self is Relation.GE:
            return lhs >= rhs
        return lhs == rhs


@dataclass(frozen=True)
class CheckReport:
    """Outcome of one check: ``lower <= lhs`` (when lower is set) and ``lhs <relation> rhs``."""

    check_id: str
    verdict: Verdict
    lhs: int | None = None
    rhs: int | None = None
    relation: Relation = Relation.LE
    lower: int | None = None
    tight: bool = False
    tight_bounds: tuple[str, ...] = ()
    witness: tuple[int, ...] | None = None
    graph: str | None = None
    detail: str = ""

    @property
    def passed(self) -> bool:
        return self.verdict is Verdict.PASS

    def to_dict(self) -> dict:
        return {
            "check_id": self.check_id,
            "verdict": self.verdict.value,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "relation": self.relation.value,
            "lower": self.lower,
            "tight": self.tight,
            "tight_bounds": list(self.tight_bounds),
            "witness": list(self.witness) if self.witness is not None else None,
            "detail": self.detail,
        }


def compare(
    check_id: str,
    graph: Graph,
    lhs: int,
    rhs: int,
    relation: Relation = Relation.LE,
    lower: int | None = None,
    witness: tuple[int, ...] | None = None,
    detail: str = "",
    extra_ok: bool = True,
) -> CheckReport:
    """Builds a PASS/FAIL report from the two sides of a relation.

    ``extra_ok`` lets a check fold in side conditions (e.g. an "if and only
    if" clause) that must also hold for a pass.
    """
    ok = relation.holds(lhs, rhs) and (lower is None or lower <= lhs) and extra_ok
    tight_bounds = []
    if lower is not None and lower == lhs:
        tight_bounds.append("lower")
    if relation is not Relation.EQ and lhs == rhs:
        tight_bounds.append("upper" if relation is Relation.LE else "lower")
    return CheckReport(
        check_id=check_id,
        verdict=Verdict.PASS if ok else Verdict.FAIL,
        lhs=lhs,
        rhs=rhs,
        relation=relation,
        lower=lower,
        tight=bool(tight_bounds) or (relation is Relation.EQ and lhs == rhs),
        tight_bounds=tuple(tight_bounds),
        witness=witness,
        graph=graph.name,
        detail=detail,
    )


def not_applicable(check_id: str, graph: Graph, detail: str) -> CheckReport:
    return CheckReport(check_id=check_id, verdict=Verdict.NOT_APPLICABLE, graph=graph.name, detail=detail)


class PropertyCheck(ABC):
    """Abstract base class for a machine-checkable property of a solved graph."""

    check_id: str = ""

    @abstractmethod
    def measure(self, graph: Graph, report: TdvReport) -> CheckReport:
        """Checks the property on ``graph``.

        Args:
            graph: The graph under test; it has no isolated vertices.
            report: The exact solver's report for ``graph``.

        Returns:
            A CheckReport with verdict PASS, FAIL or NOT_APPLICABLE.
        """
        pass
