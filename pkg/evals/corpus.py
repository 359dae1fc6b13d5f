"""Graph corpora for the verification run: families, figures and seeded random graphs."""

import itertools
import logging
import random
from collections.abc import Iterator

from graphs.families import FamilyKind, FamilySpec, generate
from graphs.figures import FIGURES
from graphs.graph import Graph

logger = logging.getLogger(__name__)

RANDOM_MAX_N = 12
RANDOM_MIN_N = 3
DEFAULT_RANDOM_COUNT = 200
DEFAULT_SEED = 20240229


def compositions(n: int, min_parts: int = 2) -> Iterator[tuple[int, ...]]:
    """Every ordered tuple of positive integers summing to n with at least ``min_parts`` entries."""
    if n < 1:
        return
    # choose the cut points between n unit blocks
    for cuts_count in range(min_parts - 1, n):
        for cuts in itertools.combinations(range(1, n), cuts_count):
            bounds = (0, *cuts, n)
            yield tuple(b - a for a, b in zip(bounds, bounds[1:]))


def random_specs(
    count: int = DEFAULT_RANDOM_COUNT,
    max_n: int = RANDOM_MAX_N,
    seed: int = DEFAULT_SEED,
) -> list[FamilySpec]:
    """Seeded random-graph specs; each spec carries its own seed so it can be replayed alone."""
    if max_n < RANDOM_MIN_N:
        raise ValueError(f"random corpus needs max_n >= {RANDOM_MIN_N}, got {max_n}")
    rng = random.Random(seed)
    specs = []
    for _ in range(count):
        n = rng.randint(RANDOM_MIN_N, max_n)
        p = rng.choice((0.2, 0.25, 0.3, 0.4, 0.5, 0.6))
        specs.append(FamilySpec(FamilyKind.RANDOM, (n, p, rng.randrange(10**6))))
    return specs


def random_corpus(count: int = DEFAULT_RANDOM_COUNT, max_n: int = RANDOM_MAX_N, seed: int = DEFAULT_SEED) -> list[Graph]:
    graphs = [generate(spec) for spec in random_specs(count, max_n, seed)]
    logger.info(f"Random corpus: {len(graphs)} connected graph(s), n <= {max_n}, seed {seed}")
    return graphs


def figure_specs() -> list[FamilySpec]:
    return [FamilySpec(FamilyKind(f"figure:{key}")) for key in FIGURES]


def queen_specs() -> list[FamilySpec]:
    return [FamilySpec(FamilyKind.QUEEN, (3, 3)), FamilySpec(FamilyKind.QUEEN, (4, 4))]


def family_specs(max_n: int = 12) -> list[FamilySpec]:
    """The structured part of the acceptance corpus.

    Paths, cycles, complete graphs and stars up to ``max_n`` vertices, the
    lower / upper sharpness constructions, mK2 for m = 1..5 with their
    complements, extended stars, the figure graphs and the two queen boards.
    """
    single = lambda kind, values: [FamilySpec(kind, (v,)) for v in values]  # noqa: E731
    specs = []
    specs += single(FamilyKind.PATH, range(2, max_n + 1))
    specs += single(FamilyKind.CYCLE, range(3, max_n + 1))
    specs += single(FamilyKind.COMPLETE, range(2, max_n + 1))
    specs += single(FamilyKind.STAR, range(1, max_n))
    specs += single(FamilyKind.LOWER_SHARP, range(4, 13))
    specs += single(FamilyKind.UPPER_SHARP, range(5, 13))
    specs += single(FamilyKind.EXTENDED_STAR, range(3, 6))
    for m in range(1, 6):
        matching = FamilySpec(FamilyKind.MK2, (m,))
        specs += [matching, FamilySpec(FamilyKind.COMPLEMENT, children=(matching,))]
    specs += figure_specs()
    specs += queen_specs()
    return specs


def family_corpus(max_n: int = 12) -> list[Graph]:
    return [generate(spec) for spec in family_specs(max_n)]
