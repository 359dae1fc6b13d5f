"""Exact total domination: gamma_t, tau, TDM and TDV by pruned enumeration.

The search walks k = 2, 3, ... and enumerates k-subsets of V(G) in
lexicographic order over neighborhood bit masks. The first k with a total
dominating set is gamma_t; that level is always enumerated completely, so the
counts below are exact. This module is the oracle every closed form and
property check is compared against.
"""

import logging
from concurrent.futures import ProcessPoolExecutor
from contextlib import nullcontext
from dataclasses import dataclass, field
from itertools import repeat

from graphs.graph import (
    MAX_VERTICES,
    Graph,
    GraphInputError,
    VertexSet,
    is_connected,
    isolated_vertices,
)

logger = logging.getLogger(__name__)


class NoTdsExists(Exception):
    """The graph has an isolated vertex, so no total dominating set exists."""

    def __init__(self, vertex: int, graph_name: str | None = None):
        self.vertex = vertex
        self.graph_name = graph_name
        where = f" of {graph_name}" if graph_name else ""
        super().__init__(f"No total dominating set exists: vertex {vertex}{where} is isolated")


class SolverConsistencyError(RuntimeError):
    """The gamma_t search ran past the 2n/3 ceiling on a connected graph."""


@dataclass(frozen=True)
class TdvReport:
    """gamma_t, tau, the TDV vector (``tdv[v - 1]``) and optionally TDM."""

    gamma_t: int
    tau: int
    tdv: tuple[int, ...]
    tdm: tuple[VertexSet, ...] | None = None

    def tdv_of(self, v: int) -> int:
        return self.tdv[v - 1]

    def neighborhood_sum(self, members) -> int:
        return sum(self.tdv[v - 1] for v in members)


@dataclass
class _LevelCount:
    """Result of one prefix of one level: set count, per-vertex counts, set masks."""

    count: int = 0
    tdv: list[int] = field(default_factory=list)
    sets: list[int] = field(default_factory=list)


def _search_prefix(
    masks: tuple[int, ...], k: int, first: int, collect_tdv: bool, collect_sets: bool
) -> _LevelCount:
    """Counts total dominating k-subsets whose smallest member has bit index ``first``."""
    n = len(masks)
    full = (1 << n) - 1
    delta = max(mask.bit_count() for mask in masks)
    result = _LevelCount(tdv=[0] * n)
    chosen = [first]

    def extend(last: int, undominated: int, remaining: int) -> None:
        if remaining == 0:
            if undominated == 0:
                result.count += 1
                if collect_tdv:
                    for i in chosen:
                        result.tdv[i] += 1
                if collect_sets:
                    result.sets.append(sum(1 << i for i in chosen))
            return
        if undominated.bit_count() > remaining * delta:
            return
        stop = n - remaining
        if undominated:
            # the lowest undominated vertex needs a neighbor among the later picks
            u = (undominated & -undominated).bit_length() - 1
            reachable = masks[u] & full & ~((1 << (last + 1)) - 1)
            if not reachable:
                return
            stop = min(stop, reachable.bit_length() - 1)
        for i in range(last + 1, stop + 1):
            chosen.append(i)
            extend(i, undominated & ~masks[i], remaining - 1)
            chosen.pop()

    extend(first, full & ~masks[first], k - 1)
    return result


def _check_solvable(g: Graph) -> None:
    if g.n > MAX_VERTICES:
        raise GraphInputError(f"{g.name or 'graph'} has {g.n} vertices; the solver handles at most {MAX_VERTICES}")
    isolated = isolated_vertices(g)
    if isolated:
        raise NoTdsExists(isolated[0], g.name)


def _search(g: Graph, collect_tdv: bool, collect_sets: bool, workers: int) -> tuple[int, _LevelCount]:
    """Runs the level search and returns (gamma_t, merged counts of that level)."""
    _check_solvable(g)
    connected = g.n >= 3 and is_connected(g)
    ceiling = 2 * g.n // 3 if connected else g.n

    pool = ProcessPoolExecutor(max_workers=workers) if workers > 1 else nullcontext()
    with pool as executor:
        mapper = executor.map if executor is not None else map
        for k in range(2, g.n + 1):
            if k > max(2, ceiling):
                raise SolverConsistencyError(
                    f"No total dominating set of size <= {ceiling} on connected {g.name or 'graph'} (n={g.n})"
                )
            firsts = range(g.n - k + 1)
            partials = list(
                mapper(
                    _search_prefix,
                    repeat(g.masks),
                    repeat(k),
                    firsts,
                    repeat(collect_tdv),
                    repeat(collect_sets),
                )
            )
            total = sum(p.count for p in partials)
            logger.debug(f"{g.name or 'graph'}: k={k} gives {total} total dominating set(s)")
            if total:
                merged = _LevelCount(count=total, tdv=[0] * g.n)
                for partial in partials:
                    merged.tdv = [a + b for a, b in zip(merged.tdv, partial.tdv)]
                    merged.sets.extend(partial.sets)
                return k, merged
    # unreachable: without isolated vertices V(G) itself is a total dominating set
    raise SolverConsistencyError(f"Search on {g.name or 'graph'} found no total dominating set")


def is_tds(g: Graph, s: VertexSet) -> bool:
    """Every vertex of g, members of s included, has a neighbor in s."""
    if not s.issubset(VertexSet(g.vertex_mask)):
        raise GraphInputError(f"{s} is not a subset of 1..{g.n}")
    return all(mask & s.mask for mask in g.masks)


def gamma_t(g: Graph, workers: int = 1) -> int:
    k, _ = _search(g, collect_tdv=False, collect_sets=False, workers=workers)
    return k


def tau(g: Graph, workers: int = 1) -> int:
    """Number of gamma_t-sets, counted without materializing them."""
    _, level = _search(g, collect_tdv=False, collect_sets=False, workers=workers)
    return level.count


def enumerate_min_tds(g: Graph, workers: int = 1) -> list[VertexSet]:
    """All gamma_t-sets, each once, in canonical (lexicographic) order."""
    _, level = _search(g, collect_tdv=False, collect_sets=True, workers=workers)
    return [VertexSet(mask) for mask in level.sets]


def tdv_all(g: Graph, workers: int = 1) -> tuple[int, ...]:
    _, level = _search(g, collect_tdv=True, collect_sets=False, workers=workers)
    return tuple(level.tdv)


def tdv(g: Graph, v: int, workers: int = 1) -> int:
    g.check_vertex(v)
    return tdv_all(g, workers=workers)[v - 1]


def solve(g: Graph, want_tdm: bool = False, workers: int = 1) -> TdvReport:
    """Bundles gamma_t, tau and TDV, plus TDM when asked for, from one search."""
    k, level = _search(g, collect_tdv=True, collect_sets=want_tdm, workers=workers)
    report = TdvReport(
        gamma_t=k,
        tau=level.count,
        tdv=tuple(level.tdv),
        tdm=tuple(VertexSet(mask) for mask in level.sets) if want_tdm else None,
    )
    logger.info(f"Solved {g.name or 'graph'}: gamma_t={report.gamma_t}, tau={report.tau}")
    return report
