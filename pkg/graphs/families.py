"""Parametric graph families and the one-token spec grammar used by the CLI.

Grammar: ``path:N``, ``cycle:N``, ``complete:N``, ``kpartite:a,b,c``,
``star:L``, ``extstar:A``, ``mk2:M``, ``queen:RxC``,
``figure:{1a|1b|2|4a|4b|5}``, ``lowersharp:N``, ``uppersharp:N``,
``random:N,P,SEED``, ``complement:SPEC`` and ``union:SPEC+SPEC[+...]``.
Unions split on every ``+`` so a union cannot directly contain another union.
"""

import itertools
import logging
import random
from dataclasses import dataclass
from enum import Enum
from functools import reduce

import networkx as nx

from graphs.figures import FIGURES
from graphs.graph import (
    MAX_VERTICES,
    Graph,
    GraphInputError,
    complement,
    disjoint_union,
    from_edge_list,
)

logger = logging.getLogger(__name__)

QUEEN_SIDES = (3, 4)
RANDOM_ATTEMPTS = 1000


class FamilyKind(Enum):
    PATH = "path"
    CYCLE = "cycle"
    COMPLETE = "complete"
    MULTIPARTITE = "kpartite"
    STAR = "star"
    EXTENDED_STAR = "extstar"
    MK2 = "mk2"
    QUEEN = "queen"
    FIGURE_1A = "figure:1a"
    FIGURE_1B = "figure:1b"
    FIGURE_2 = "figure:2"
    FIGURE_4A = "figure:4a"
    FIGURE_4B = "figure:4b"
    FIGURE_5 = "figure:5"
    LOWER_SHARP = "lowersharp"
    UPPER_SHARP = "uppersharp"
    RANDOM = "random"
    COMPLEMENT = "complement"
    UNION = "union"

    @property
    def is_figure(self) -> bool:
        return self.value.startswith("figure:")


# minimum value of the single integer parameter
_SINGLE_PARAM_MINIMUM = {
    FamilyKind.PATH: 2,
    FamilyKind.CYCLE: 3,
    FamilyKind.COMPLETE: 2,
    FamilyKind.STAR: 1,
    FamilyKind.EXTENDED_STAR: 3,
    FamilyKind.MK2: 1,
    FamilyKind.LOWER_SHARP: 4,
    FamilyKind.UPPER_SHARP: 5,
}


@dataclass(frozen=True)
class FamilySpec:
    """A named graph family member: variant tag, parameters and child specs."""

    kind: FamilyKind
    params: tuple[int | float, ...] = ()
    children: tuple["FamilySpec", ...] = ()

    def __post_init__(self):
        kind, params = self.kind, self.params
        if kind in _SINGLE_PARAM_MINIMUM:
            minimum = _SINGLE_PARAM_MINIMUM[kind]
            if len(params) != 1 or not isinstance(params[0], int) or params[0] < minimum:
                raise GraphInputError(f"{kind.value} needs one integer parameter >= {minimum}, got {params}")
        elif kind is FamilyKind.MULTIPARTITE:
            if len(params) < 2 or any(not isinstance(a, int) or a < 1 for a in params):
                raise GraphInputError(f"kpartite needs at least two part sizes >= 1, got {params}")
        elif kind is FamilyKind.QUEEN:
            if len(params) != 2 or params[0] != params[1] or params[0] not in QUEEN_SIDES:
                raise GraphInputError(f"queen boards must be square with side in {QUEEN_SIDES}, got {params}")
        elif kind is FamilyKind.RANDOM:
            if len(params) != 3:
                raise GraphInputError(f"random needs n, p and seed, got {params}")
            n, p, seed = params
            if not isinstance(n, int) or not 2 <= n <= MAX_VERTICES:
                raise GraphInputError(f"random graph order must be in 2..{MAX_VERTICES}, got {n}")
            if not 0 < p <= 1:
                raise GraphInputError(f"edge probability must be in (0, 1], got {p}")
            if not isinstance(seed, int) or seed < 0:
                raise GraphInputError(f"seed must be a non-negative integer, got {seed}")
        elif kind.is_figure:
            if params:
                raise GraphInputError(f"{kind.value} takes no parameters")

        if kind is FamilyKind.COMPLEMENT and len(self.children) != 1:
            raise GraphInputError("complement takes exactly one graph spec")
        if kind is FamilyKind.UNION and len(self.children) < 2:
            raise GraphInputError("union takes at least two graph specs")
        if kind not in (FamilyKind.COMPLEMENT, FamilyKind.UNION) and self.children:
            raise GraphInputError(f"{kind.value} does not take child specs")

    def __str__(self) -> str:
        kind = self.kind
        if kind.is_figure:
            return kind.value
        if kind is FamilyKind.QUEEN:
            return f"queen:{self.params[0]}x{self.params[1]}"
        if kind is FamilyKind.COMPLEMENT:
            return f"complement:{self.children[0]}"
        if kind is FamilyKind.UNION:
            return "union:" + "+".join(str(child) for child in self.children)
        return f"{kind.value}:" + ",".join(format(p, "g") if isinstance(p, float) else str(p) for p in self.params)


def parse_family_spec(text: str) -> FamilySpec:
    """Parses one spec token, e.g. ``kpartite:2,3`` or ``complement:mk2:3``."""
    token = text.strip().lower()
    tag, sep, rest = token.partition(":")
    if not sep or not rest:
        raise GraphInputError(f"Graph spec '{text}' must look like 'family:parameters'")

    if tag == "complement":
        return FamilySpec(FamilyKind.COMPLEMENT, children=(parse_family_spec(rest),))
    if tag == "union":
        return FamilySpec(FamilyKind.UNION, children=tuple(parse_family_spec(part) for part in rest.split("+")))
    if tag == "figure":
        try:
            return FamilySpec(FamilyKind(f"figure:{rest}"))
        except ValueError:
            raise GraphInputError(f"Unknown figure '{rest}'; expected one of {sorted(FIGURES)}") from None
    if tag == "queen":
        rows, _, cols = rest.partition("x")
        return FamilySpec(FamilyKind.QUEEN, (_parse_int(rows, text), _parse_int(cols, text)))
    if tag == "random":
        parts = rest.split(",")
        if len(parts) != 3:
            raise GraphInputError(f"random spec '{text}' must be random:N,P,SEED")
        try:
            p = float(parts[1])
        except ValueError:
            raise GraphInputError(f"Invalid edge probability in '{text}'") from None
        return FamilySpec(FamilyKind.RANDOM, (_parse_int(parts[0], text), p, _parse_int(parts[2], text)))

    try:
        kind = FamilyKind(tag)
    except ValueError:
        raise GraphInputError(f"Unknown graph family '{tag}' in '{text}'") from None
    if kind in (FamilyKind.COMPLEMENT, FamilyKind.UNION) or kind.is_figure:
        raise GraphInputError(f"Unknown graph family '{tag}' in '{text}'")
    return FamilySpec(kind, tuple(_parse_int(part, text) for part in rest.split(",")))


def _parse_int(value: str, text: str) -> int:
    try:
        return int(value)
    except ValueError:
        raise GraphInputError(f"Expected an integer, got '{value}' in '{text}'") from None


def _from_nx(nx_graph: nx.Graph) -> Graph:
    """Shifts a networkx graph on 0..n-1 to labels 1..n."""
    return Graph.from_networkx(nx.convert_node_labels_to_integers(nx_graph, first_label=1, ordering="sorted"))


def _extended_star(arms: int) -> Graph:
    # center 1, inner ring 2..arms+1, outer ring arms+2..2*arms+1
    edges = [(1, 1 + i) for i in range(1, arms + 1)]
    edges += [(1 + i, 1 + arms + i) for i in range(1, arms + 1)]
    return from_edge_list(2 * arms + 1, edges)


def _mk2(m: int) -> Graph:
    return from_edge_list(2 * m, [(2 * i - 1, 2 * i) for i in range(1, m + 1)])


def queen_graph(rows: int, cols: int) -> Graph:
    """Squares labeled row-major from 1; adjacent iff one queen move apart."""
    squares = list(itertools.product(range(rows), range(cols)))
    edges = [
        (r1 * cols + c1 + 1, r2 * cols + c2 + 1)
        for (r1, c1), (r2, c2) in itertools.combinations(squares, 2)
        if r1 == r2 or c1 == c2 or abs(r1 - r2) == abs(c1 - c2)
    ]
    return from_edge_list(rows * cols, edges)


def _pendant_path(path_order: int, n: int) -> Graph:
    # path 1..path_order, extra vertices path_order+1..n attached to support vertex 2
    edges = [(i, i + 1) for i in range(1, path_order)]
    edges += [(2, extra) for extra in range(path_order + 1, n + 1)]
    return from_edge_list(n, edges)


def random_connected_graph(n: int, p: float, seed: int) -> Graph:
    """Seeded G(n, p) with rejection of disconnected samples."""
    rng = random.Random(seed)
    for attempt in range(RANDOM_ATTEMPTS):
        sample = nx.gnp_random_graph(n, p, seed=rng.randrange(2**32))
        if nx.is_connected(sample):
            logger.debug(f"random:{n},{p},{seed} accepted after {attempt + 1} sample(s)")
            return _from_nx(sample)
    raise GraphInputError(f"No connected G({n}, {p}) sample in {RANDOM_ATTEMPTS} attempts for seed {seed}")


_BUILDERS = {
    FamilyKind.PATH: lambda s: _from_nx(nx.path_graph(s.params[0])),
    FamilyKind.CYCLE: lambda s: _from_nx(nx.cycle_graph(s.params[0])),
    FamilyKind.COMPLETE: lambda s: _from_nx(nx.complete_graph(s.params[0])),
    FamilyKind.MULTIPARTITE: lambda s: _from_nx(nx.complete_multipartite_graph(*s.params)),
    FamilyKind.STAR: lambda s: _from_nx(nx.star_graph(s.params[0])),
    FamilyKind.EXTENDED_STAR: lambda s: _extended_star(s.params[0]),
    FamilyKind.MK2: lambda s: _mk2(s.params[0]),
    FamilyKind.QUEEN: lambda s: queen_graph(*s.params),
    FamilyKind.LOWER_SHARP: lambda s: _pendant_path(4, s.params[0]),
    FamilyKind.UPPER_SHARP: lambda s: _pendant_path(5, s.params[0]),
    FamilyKind.RANDOM: lambda s: random_connected_graph(*s.params),
    FamilyKind.COMPLEMENT: lambda s: complement(generate(s.children[0])),
    FamilyKind.UNION: lambda s: reduce(disjoint_union, (generate(child) for child in s.children)),
}


def generate(spec: FamilySpec) -> Graph:
    """Builds the graph a spec names, labeled the way the formulas expect.

    Paths and cycles are labeled 1..n consecutively, multipartite parts take
    consecutive label blocks in part order, stars have center 1.
    """
    if spec.kind.is_figure:
        graph = FIGURES[spec.kind.value.removeprefix("figure:")]()
    else:
        graph = _BUILDERS[spec.kind](spec)
    logger.debug(f"Generated {spec}: n={graph.n}, m={graph.edge_count}")
    return graph.with_name(str(spec))


def generate_from_text(text: str) -> Graph:
    return generate(parse_family_spec(text))
