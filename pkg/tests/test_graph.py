import unittest

from graphs.graph import (
    Graph,
    GraphInputError,
    VertexSet,
    closed_neighborhood,
    complement,
    disjoint_union,
    from_edge_list,
    has_isolated_vertex,
    is_connected,
    is_matching,
    is_spanning_subgraph,
    open_neighborhood,
    relabel,
    remove_edge,
    support_vertices,
)


class TestVertexSet(unittest.TestCase):

    def test_members_are_sorted(self):
        """Test that members come out in ascending order regardless of input order"""
        s = VertexSet.of([5, 1, 3])
        self.assertEqual(s.members, (1, 3, 5))
        self.assertEqual(list(s), [1, 3, 5])
        self.assertEqual(len(s), 3)

    def test_set_algebra(self):
        """Test union, intersection, difference and membership"""
        a, b = VertexSet.of([1, 2, 3]), VertexSet.of([3, 4])
        self.assertEqual((a | b).members, (1, 2, 3, 4))
        self.assertEqual((a & b).members, (3,))
        self.assertEqual((a - b).members, (1, 2))
        self.assertIn(2, a)
        self.assertNotIn(4, a)
        self.assertTrue(VertexSet.of([3]).issubset(b))

    def test_canonical_order_is_lexicographic(self):
        """Test that sets sort lexicographically on their sorted members"""
        sets = [VertexSet.of(m) for m in ([3, 4], [1, 4], [2, 3], [1, 2])]
        self.assertEqual([s.to_list() for s in sorted(sets)], [[1, 2], [1, 4], [2, 3], [3, 4]])

    def test_rejects_non_positive_labels(self):
        """Test that label 0 is rejected"""
        with self.assertRaises(GraphInputError):
            VertexSet.of([0, 1])

    def test_repr(self):
        """Test the brace notation"""
        self.assertEqual(repr(VertexSet.of([2, 1])), "{1, 2}")


class TestGraph(unittest.TestCase):

    def setUp(self):
        """Set up a path on four vertices"""
        self.p4 = from_edge_list(4, [(1, 2), (2, 3), (3, 4)], name="p4")

    def test_from_edge_list(self):
        """Test adjacency, degrees and edges of P4"""
        self.assertEqual(self.p4.n, 4)
        self.assertEqual(self.p4.edge_count, 3)
        self.assertEqual(self.p4.neighbors(2), frozenset({1, 3}))
        self.assertEqual(self.p4.degrees, (1, 2, 2, 1))
        self.assertEqual(self.p4.max_degree, 2)
        self.assertEqual(self.p4.edges(), [(1, 2), (2, 3), (3, 4)])

    def test_duplicate_edges_collapse_with_warning(self):
        """Test that repeated edges, in either orientation, collapse to one"""
        with self.assertLogs("graphs.graph", level="WARNING"):
            g = from_edge_list(3, [(1, 2), (2, 1), (2, 3)])
        self.assertEqual(g.edge_count, 2)

    def test_invalid_edges(self):
        """Test that self loops and out-of-range endpoints raise GraphInputError"""
        with self.assertRaises(GraphInputError):
            from_edge_list(3, [(1, 4)])
        with self.assertRaises(GraphInputError):
            from_edge_list(3, [(2, 2)])
        with self.assertRaises(GraphInputError):
            from_edge_list(0, [])

    def test_asymmetric_adjacency_rejected(self):
        """Test that the constructor enforces symmetry"""
        with self.assertRaises(GraphInputError):
            Graph(n=2, adj=(frozenset({2}), frozenset()))

    def test_neighborhoods(self):
        """Test open and closed neighborhoods and invalid vertices"""
        self.assertEqual(open_neighborhood(self.p4, 2).members, (1, 3))
        self.assertEqual(closed_neighborhood(self.p4, 2).members, (1, 2, 3))
        with self.assertRaises(GraphInputError):
            open_neighborhood(self.p4, 5)

    def test_complement_is_an_involution(self):
        """Test that complementing twice gives back the edges"""
        twice = complement(complement(self.p4))
        self.assertEqual(twice.edges(), self.p4.edges())
        self.assertEqual(complement(self.p4).edges(), [(1, 3), (1, 4), (2, 4)])

    def test_disjoint_union_shifts_labels(self):
        """Test that the second graph's labels move up by n1"""
        k2 = from_edge_list(2, [(1, 2)])
        union = disjoint_union(k2, self.p4)
        self.assertEqual(union.n, 6)
        self.assertEqual(union.edges(), [(1, 2), (3, 4), (4, 5), (5, 6)])
        self.assertFalse(is_connected(union))

    def test_isolated_and_connectivity(self):
        """Test isolated-vertex and connectivity helpers"""
        g = from_edge_list(3, [(1, 2)])
        self.assertTrue(has_isolated_vertex(g))
        self.assertFalse(has_isolated_vertex(self.p4))
        self.assertTrue(is_connected(self.p4))

    def test_matching_and_supports(self):
        """Test mK2 detection and support vertices"""
        self.assertTrue(is_matching(from_edge_list(4, [(1, 2), (3, 4)])))
        self.assertFalse(is_matching(self.p4))
        self.assertEqual(support_vertices(self.p4).members, (2, 3))

    def test_spanning_subgraph_and_edge_removal(self):
        """Test that removing an edge gives a spanning subgraph"""
        h = remove_edge(self.p4, 2, 3)
        self.assertTrue(is_spanning_subgraph(h, self.p4))
        self.assertFalse(is_spanning_subgraph(self.p4, h))
        with self.assertRaises(GraphInputError):
            remove_edge(self.p4, 1, 3)

    def test_relabel(self):
        """Test that a permutation moves the edges and keeps the name"""
        g = relabel(self.p4, {1: 4, 2: 3, 3: 2, 4: 1})
        self.assertEqual(g.edges(), self.p4.edges())
        self.assertEqual(g.name, "p4")
        with self.assertRaises(GraphInputError):
            relabel(self.p4, {1: 1, 2: 2})

    def test_networkx_round_trip(self):
        """Test conversion to networkx and back"""
        back = Graph.from_networkx(self.p4.to_networkx(), name="p4")
        self.assertEqual(back, self.p4)


if __name__ == '__main__':
    unittest.main()
