"""Simple undirected graphs on vertices labeled 1..n, and vertex subsets."""

import logging
from dataclasses import dataclass, replace
from functools import cached_property, total_ordering
from typing import Iterable, Iterator, Mapping, Sequence

import networkx as nx

logger = logging.getLogger(__name__)

# Vertex sets are single-word bit masks; the solver refuses anything larger.
MAX_VERTICES = 64


class GraphInputError(ValueError):
    """Raised for malformed graphs, vertex references and family parameters."""


@total_ordering
@dataclass(frozen=True)
class VertexSet:
    """A subset of V(G) stored as a bit mask, bit v-1 standing for vertex v.

    Iteration is in ascending label order, and sets compare lexicographically
    on their sorted members, which is the canonical order of enumerated
    minimum total dominating sets.
    """

    mask: int = 0

    @classmethod
    def of(cls, members: Iterable[int]) -> "VertexSet":
        mask = 0
        for v in members:
            if v < 1:
                raise GraphInputError(f"Vertex labels start at 1, got {v}")
            mask |= 1 << (v - 1)
        return cls(mask)

    @property
    def members(self) -> tuple[int, ...]:
        out = []
        mask = self.mask
        while mask:
            low = mask & -mask
            out.append(low.bit_length())
            mask ^= low
        return tuple(out)

    def __iter__(self) -> Iterator[int]:
        return iter(self.members)

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __contains__(self, v: object) -> bool:
        return isinstance(v, int) and v >= 1 and bool(self.mask >> (v - 1) & 1)

    def __or__(self, other: "VertexSet") -> "VertexSet":
        return VertexSet(self.mask | other.mask)

    def __and__(self, other: "VertexSet") -> "VertexSet":
        return VertexSet(self.mask & other.mask)

    def __sub__(self, other: "VertexSet") -> "VertexSet":
        return VertexSet(self.mask & ~other.mask)

    def __lt__(self, other: "VertexSet") -> bool:
        if not isinstance(other, VertexSet):
            return NotImplemented
        return self.members < other.members

    def issubset(self, other: "VertexSet") -> bool:
        return self.mask & ~other.mask == 0

    def to_list(self) -> list[int]:
        return list(self.members)

    def __repr__(self) -> str:
        return "{" + ", ".join(str(v) for v in self.members) + "}"


@dataclass(frozen=True)
class Graph:
    """An immutable simple undirected graph.

    ``adj[v - 1]`` is the open neighborhood N(v). Construction validates that
    labels are exactly 1..n, that there are no self loops and that adjacency is
    symmetric.
    """

    n: int
    adj: tuple[frozenset[int], ...]
    name: str | None = None

    def __post_init__(self):
        if self.n < 1:
            raise GraphInputError(f"A graph needs at least one vertex, got n={self.n}")
        if len(self.adj) != self.n:
            raise GraphInputError(
                f"Adjacency has {len(self.adj)} rows for n={self.n} vertices"
            )
        for v, nbrs in enumerate(self.adj, start=1):
            if v in nbrs:
                raise GraphInputError(f"Self loop at vertex {v}")
            for u in nbrs:
                if not 1 <= u <= self.n:
                    raise GraphInputError(f"Vertex {v} lists out-of-range neighbor {u}")
                if v not in self.adj[u - 1]:
                    raise GraphInputError(f"Asymmetric adjacency between {v} and {u}")

    @classmethod
    def from_networkx(cls, nx_graph: nx.Graph, name: str | None = None) -> "Graph":
        """Builds a Graph from a networkx graph whose nodes are exactly 1..n."""
        n = nx_graph.number_of_nodes()
        if set(nx_graph.nodes) != set(range(1, n + 1)):
            raise GraphInputError("networkx graph nodes must be labeled 1..n")
        adj = tuple(frozenset(nx_graph.adj[v]) for v in range(1, n + 1))
        return cls(n=n, adj=adj, name=name)

    def to_networkx(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(self.vertices)
        g.add_edges_from(self.edges())
        return g

    def with_name(self, name: str | None) -> "Graph":
        return replace(self, name=name)

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    @cached_property
    def masks(self) -> tuple[int, ...]:
        """Neighborhood bit masks, ``masks[v - 1]`` for N(v)."""
        return tuple(VertexSet.of(nbrs).mask for nbrs in self.adj)

    @property
    def vertex_mask(self) -> int:
        return (1 << self.n) - 1

    def check_vertex(self, v: int) -> None:
        if not isinstance(v, int) or not 1 <= v <= self.n:
            raise GraphInputError(f"Vertex {v} is not in 1..{self.n}")

    def neighbors(self, v: int) -> frozenset[int]:
        self.check_vertex(v)
        return self.adj[v - 1]

    def has_edge(self, u: int, v: int) -> bool:
        self.check_vertex(u)
        self.check_vertex(v)
        return v in self.adj[u - 1]

    def degree(self, v: int) -> int:
        return len(self.neighbors(v))

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        return tuple(len(nbrs) for nbrs in self.adj)

    @property
    def max_degree(self) -> int:
        return max(self.degrees)

    def edges(self) -> list[tuple[int, int]]:
        """Edges as sorted (u, v) pairs with u < v, in lexicographic order."""
        return [(u, v) for u in self.vertices for v in sorted(self.adj[u - 1]) if u < v]

    @property
    def edge_count(self) -> int:
        return sum(self.degrees) // 2

    def __repr__(self) -> str:
        return f"Graph(name={self.name!r}, n={self.n}, m={self.edge_count})"


def from_edge_list(
    n: int, edges: Iterable[Sequence[int]], name: str | None = None
) -> Graph:
    """Builds a graph on 1..n from unordered pairs; duplicate edges collapse."""
    if not isinstance(n, int) or n < 1:
        raise GraphInputError(f"Vertex count must be a positive integer, got {n!r}")
    adj: list[set[int]] = [set() for _ in range(n)]
    duplicates = 0
    for pair in edges:
        if len(pair) != 2:
            raise GraphInputError(f"Edge {pair!r} is not a pair")
        u, v = int(pair[0]), int(pair[1])
        for endpoint in (u, v):
            if not 1 <= endpoint <= n:
                raise GraphInputError(f"Edge ({u}, {v}) has endpoint outside 1..{n}")
        if u == v:
            raise GraphInputError(f"Self loop at vertex {u}")
        if v in adj[u - 1]:
            duplicates += 1
        adj[u - 1].add(v)
        adj[v - 1].add(u)
    if duplicates:
        logger.warning(f"Collapsed {duplicates} duplicate edge(s) while building {name or 'graph'}")
    return Graph(n=n, adj=tuple(frozenset(s) for s in adj), name=name)


def complement(g: Graph) -> Graph:
    """uv is an edge of the result iff u != v and uv is not an edge of g."""
    name = f"complement:{g.name}" if g.name else None
    return Graph.from_networkx(nx.complement(g.to_networkx()), name=name)


def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    """Block graph on n1 + n2 vertices; the labels of g2 are shifted by n1."""
    shifted = nx.relabel_nodes(g2.to_networkx(), {v: v + g1.n for v in g2.vertices})
    name = f"union:{g1.name}+{g2.name}" if g1.name and g2.name else None
    return Graph.from_networkx(nx.union(g1.to_networkx(), shifted), name=name)


def open_neighborhood(g: Graph, v: int) -> VertexSet:
    return VertexSet.of(g.neighbors(v))


def closed_neighborhood(g: Graph, v: int) -> VertexSet:
    return VertexSet.of(g.neighbors(v) | {v})


def isolated_vertices(g: Graph) -> list[int]:
    return [v for v in g.vertices if g.degrees[v - 1] == 0]


def has_isolated_vertex(g: Graph) -> bool:
    return bool(isolated_vertices(g))


def is_connected(g: Graph) -> bool:
    return nx.is_connected(g.to_networkx())


def is_matching(g: Graph) -> bool:
    """True iff g is mK2: every vertex has exactly one neighbor."""
    return all(d == 1 for d in g.degrees)


def is_spanning_subgraph(h: Graph, g: Graph) -> bool:
    """V(h) = V(g) and E(h) is contained in E(g)."""
    return h.n == g.n and all(h.adj[i] <= g.adj[i] for i in range(g.n))


def support_vertices(g: Graph) -> VertexSet:
    """Vertices adjacent to at least one end-vertex."""
    return VertexSet.of(
        u for v in g.vertices if g.degrees[v - 1] == 1 for u in g.adj[v - 1]
    )


def remove_edge(g: Graph, u: int, v: int) -> Graph:
    if not g.has_edge(u, v):
        raise GraphInputError(f"({u}, {v}) is not an edge of {g.name or 'the graph'}")
    adj = list(g.adj)
    adj[u - 1] = adj[u - 1] - {v}
    adj[v - 1] = adj[v - 1] - {u}
    name = f"{g.name}-({u},{v})" if g.name else None
    return Graph(n=g.n, adj=tuple(adj), name=name)


def relabel(g: Graph, mapping: Mapping[int, int]) -> Graph:
    """Applies a permutation of 1..n given as old label -> new label."""
    if sorted(mapping) != list(g.vertices) or sorted(mapping.values()) != list(g.vertices):
        raise GraphInputError("Relabeling must be a permutation of the vertex labels")
    return Graph.from_networkx(nx.relabel_nodes(g.to_networkx(), dict(mapping)), name=g.name)
