"""Fixed example graphs with known gamma_t, tau and TDV values.

Each builder documents which label plays which role in the drawing. The
distinguished vertex of every figure is exported in ``FIGURE_ROOTS`` so checks
and tests can refer to "v0" without repeating the label.
"""

from graphs.graph import Graph, complement, from_edge_list

FIGURE_ROOTS = {
    "1a": 1,
    "1b": 1,
    "2": 1,
    "4a": 1,
    "4b": 1,
    "5": 1,
}


def figure_1a() -> Graph:
    """Graph (A) of the upper-bound comparison figure.

    Vertex 1 is v0, the vertex of degree 3; 2, 3 and 4 are its end-vertices.
    gamma_t = 2, tau = 3 and the closed neighborhood of v0 carries TDV sum 6.
    """
    return from_edge_list(4, [(1, 2), (1, 3), (1, 4)], name="figure:1a")


def figure_1b() -> Graph:
    """Graph (B) of the upper-bound comparison figure.

    1 is v0 (degree 3). 2, 3, 4 are the support vertices around it with
    end-vertices 5, 6, 7. A pendant path 4-8-9-10-11 hangs off 4, so 10 is a
    fourth support vertex and 9 / 11 are interchangeable partners for it.
    gamma_t = 6, tau = 2 and the closed neighborhood of v0 carries TDV sum 8.
    """
    edges = [
        (1, 2), (1, 3), (1, 4),
        (2, 5), (3, 6), (4, 7),
        (4, 8), (8, 9), (9, 10), (10, 11),
    ]
    return from_edge_list(11, edges, name="figure:1b")


def figure_2() -> Graph:
    """The 4-regular graph on 6 vertices (octahedron).

    Non-adjacent pairs are {1, 2}, {3, 4}, {5, 6}.
    """
    matching = from_edge_list(6, [(1, 2), (3, 4), (5, 6)])
    return complement(matching).with_name("figure:2")


def figure_4a() -> Graph:
    """Subcase drawing with alpha and beta non-adjacent, Delta = n - 3.

    1 is v; 2, 3 are x0, x1 (common neighbors of v and alpha); 4, 5 are
    y0, y1 (common neighbors of v and beta); 6 is alpha, 7 is beta.
    gamma_t = 3 and TDV(v) = |N(alpha)| * |N(beta)| = 4.
    """
    edges = [
        (1, 2), (1, 3), (1, 4), (1, 5),
        (2, 6), (3, 6),
        (4, 7), (5, 7),
    ]
    return from_edge_list(7, edges, name="figure:4a")


def figure_4b() -> Graph:
    """Same labels as figure_4a with the edge alpha-beta (6-7) added.

    gamma_t = 3, tau = 12 and TDV(v) = 8: besides the four sets of figure_4a,
    v now pairs with x0 or x1 and alpha, or with y0 or y1 and beta, and
    {alpha, beta} pairs with any of x0, x1, y0, y1.
    """
    g = figure_4a()
    edges = g.edges() + [(6, 7)]
    return from_edge_list(7, edges, name="figure:4b")


def figure_5() -> Graph:
    """A maximum-degree vertex that lies in no minimum total dominating set.

    1 is v with deg(v) = n - 3 = 6, the unique maximum. 2 is x0, 3 is y0 and
    {2, 3} is the unique gamma_t-set. 4 is alpha (end-vertex on x0), 5 is beta
    (end-vertex on y0). 6, 7 hang between v and x0; 8, 9 between v and y0.
    """
    edges = [
        (1, 2), (1, 3), (1, 6), (1, 7), (1, 8), (1, 9),
        (2, 3), (2, 4), (2, 6), (2, 7),
        (3, 5), (3, 8), (3, 9),
    ]
    return from_edge_list(9, edges, name="figure:5")


FIGURES = {
    "1a": figure_1a,
    "1b": figure_1b,
    "2": figure_2,
    "4a": figure_4a,
    "4b": figure_4b,
    "5": figure_5,
}
