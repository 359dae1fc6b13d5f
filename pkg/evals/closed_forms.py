"""Closed forms for gamma_t, tau and TDV of paths, cycles, complete multipartite
graphs and matchings. Exact integer arithmetic only."""

import math
from dataclasses import dataclass


@dataclass(frozen=True)
class PathCycleParams:
    """Order n of a path or cycle with k = n // 4; split(v) gives v = 4q + r."""

    n: int

    @property
    def k(self) -> int:
        return self.n // 4

    @property
    def residue(self) -> int:
        return self.n % 4

    def split(self, v: int) -> tuple[int, int]:
        if not 1 <= v <= self.n:
            raise ValueError(f"Vertex {v} is not in 1..{self.n}")
        return divmod(v, 4)


def _require(n: int, minimum: int, family: str) -> PathCycleParams:
    if not isinstance(n, int) or n < minimum:
        raise ValueError(f"{family} needs n >= {minimum}, got {n}")
    return PathCycleParams(n)


def gamma_t_cycle(n: int) -> int:
    params = _require(n, 3, "cycle")
    return n // 2 if params.residue == 0 else n // 2 + 1


def gamma_t_path(n: int) -> int:
    params = _require(n, 2, "path")
    return n // 2 if params.residue == 0 else n // 2 + 1


def tau_cycle(n: int) -> int:
    params = _require(n, 3, "cycle")
    if params.residue == 0:
        return 4
    if params.residue in (1, 3):
        return n
    return (n // 2) ** 2


def tdv_cycle(n: int) -> int:
    """TDV of any vertex of C_n (constant by vertex transitivity)."""
    params = _require(n, 3, "cycle")
    if params.residue == 0:
        return 2
    if params.residue in (1, 3):
        return n // 2 + 1
    # n = 4k + 2, so n + 2 is divisible by 4
    return (n // 2) * ((n + 2) // 4)


def tdv_cycle_vector(n: int) -> tuple[int, ...]:
    return (tdv_cycle(n),) * n


def tau_path(n: int) -> int:
    params = _require(n, 2, "path")
    k = params.k
    return {0: 1, 1: k, 2: (k + 1) ** 2, 3: k + 2}[params.residue]


def tdv_path(n: int, v: int) -> int:
    """TDV of vertex v on P_n, dispatched on n mod 4 and then on v = 4q + r."""
    params = _require(n, 2, "path")
    k = params.k
    q, r = params.split(v)
    if params.residue == 0:
        return 0 if r in (0, 1) else 1
    if params.residue == 1:
        return (q, 0, k - q, k)[r]
    if params.residue == 2:
        return ((k + 1) * q, (k + 1) * (q + 1), (k + 1) * (k + 1 - q), (k + 1) * (k - q))[r]
    return (0, q + 1, k + 2, k + 1 - q)[r]


def tdv_path_vector(n: int) -> tuple[int, ...]:
    return tuple(tdv_path(n, v) for v in range(1, n + 1))


def _require_parts(parts) -> tuple[int, ...]:
    parts = tuple(parts)
    if len(parts) < 2:
        raise ValueError(f"A complete multipartite graph needs at least two parts, got {parts}")
    if any(not isinstance(a, int) or a < 1 for a in parts):
        raise ValueError(f"Part sizes must be positive integers, got {parts}")
    return parts


def multipartite_tau(parts) -> int:
    parts = _require_parts(parts)
    total = sum(parts)
    return (total * total - sum(a * a for a in parts)) // 2


def multipartite_tdv(parts, j: int) -> int:
    """TDV of a vertex in part j (1-based): its degree, (sum of a_i) - a_j."""
    parts = _require_parts(parts)
    if not 1 <= j <= len(parts):
        raise ValueError(f"Part index {j} is not in 1..{len(parts)}")
    return sum(parts) - parts[j - 1]


def multipartite_tdv_vector(parts) -> tuple[int, ...]:
    """TDV per vertex with parts occupying consecutive label blocks."""
    parts = _require_parts(parts)
    return tuple(multipartite_tdv(parts, j) for j, size in enumerate(parts, start=1) for _ in range(size))


def complete_tau(n: int) -> int:
    _require(n, 2, "complete graph")
    return math.comb(n, 2)


def complete_tdv(n: int) -> int:
    _require(n, 2, "complete graph")
    return n - 1


def bipartite_tau(a1: int, a2: int) -> int:
    return multipartite_tau((a1, a2))


def bipartite_tdv(a1: int, a2: int, j: int) -> int:
    """a2 on the first side, a1 on the second."""
    return multipartite_tdv((a1, a2), j)


def regular_n_minus_2_tau(n: int) -> int:
    """tau of the (n-2)-regular graph on even n >= 4 vertices."""
    if not isinstance(n, int) or n < 4 or n % 2:
        raise ValueError(f"The (n-2)-regular graph needs even n >= 4, got {n}")
    return n * (n - 2) // 2


def mk2_complement_tdv(m: int) -> tuple[int, int]:
    """(TDV in mK2, TDV in its complement) for every vertex; they sum to n - 1."""
    if not isinstance(m, int) or m < 2:
        raise ValueError(f"mK2 complement values need m >= 2, got {m}")
    n = 2 * m
    return 1, n - 2
