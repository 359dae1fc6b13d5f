import unittest

from graphs.families import FamilyKind, FamilySpec, generate, generate_from_text, parse_family_spec
from graphs.figures import FIGURE_ROOTS, FIGURES
from graphs.graph import GraphInputError, is_connected, is_matching


class TestFamilySpecGrammar(unittest.TestCase):

    def test_round_trip(self):
        """Test that str(spec) reproduces every canonical token"""
        tokens = [
            "path:6",
            "cycle:5",
            "complete:4",
            "kpartite:2,3,1",
            "star:3",
            "extstar:3",
            "mk2:3",
            "queen:3x3",
            "queen:4x4",
            "figure:1a",
            "figure:4b",
            "lowersharp:6",
            "uppersharp:6",
            "random:10,0.3,7",
            "complement:mk2:3",
            "union:path:3+cycle:4+star:2",
        ]
        for token in tokens:
            with self.subTest(token=token):
                self.assertEqual(str(parse_family_spec(token)), token)

    def test_invalid_specs(self):
        """Test that bad tags and parameters raise GraphInputError"""
        for token in [
            "path:1",
            "cycle:2",
            "queen:5x5",
            "queen:3x8",
            "queen:3x4",
            "queen:4x3",
            "kpartite:3",
            "kpartite:2,0",
            "foo:3",
            "figure:9",
            "path",
            "path:x",
            "union:path:3",
            "random:10,1.5,3",
            "lowersharp:3",
            "uppersharp:4",
            "extstar:2",
        ]:
            with self.subTest(token=token):
                with self.assertRaises(GraphInputError):
                    generate_from_text(token)

    def test_spec_validates_directly(self):
        """Test that FamilySpec validates on construction"""
        with self.assertRaises(GraphInputError):
            FamilySpec(FamilyKind.PATH, (1,))
        with self.assertRaises(GraphInputError):
            FamilySpec(FamilyKind.COMPLEMENT)


class TestGenerators(unittest.TestCase):

    def test_path_and_cycle_labeling(self):
        """Test consecutive labeling and edge counts"""
        path = generate_from_text("path:4")
        self.assertEqual(path.edges(), [(1, 2), (2, 3), (3, 4)])
        self.assertEqual(path.name, "path:4")
        cycle = generate_from_text("cycle:5")
        self.assertEqual(cycle.edge_count, 5)
        self.assertIn((1, 5), cycle.edges())

    def test_multipartite_degrees(self):
        """Test that a vertex in part j has degree sum(a) - a_j"""
        g = generate_from_text("kpartite:2,3,1")
        self.assertEqual(g.degrees, (4, 4, 3, 3, 3, 5))
        self.assertFalse(g.has_edge(1, 2))
        self.assertFalse(g.has_edge(3, 5))

    def test_star_and_extended_star(self):
        """Test center labels and orders"""
        star = generate_from_text("star:3")
        self.assertEqual(star.n, 4)
        self.assertEqual(star.degree(1), 3)
        ext = generate_from_text("extstar:3")
        self.assertEqual(ext.n, 7)
        self.assertEqual(ext.degrees, (3, 2, 2, 2, 1, 1, 1))

    def test_mk2_and_complement(self):
        """Test the matching and its cocktail-party complement"""
        m = generate_from_text("mk2:3")
        self.assertEqual((m.n, m.edge_count), (6, 3))
        self.assertTrue(is_matching(m))
        co = generate_from_text("complement:mk2:3")
        self.assertEqual(set(co.degrees), {4})
        self.assertEqual(co.name, "complement:mk2:3")

    def test_queen_boards(self):
        """Test queen-move adjacency on 3x3 and 4x4 boards"""
        q3 = generate_from_text("queen:3x3")
        self.assertEqual(q3.neighbors(5), frozenset(v for v in range(1, 10) if v != 5))
        self.assertEqual(q3.degree(1), 6)
        q4 = generate_from_text("queen:4x4")
        self.assertEqual(q4.n, 16)
        self.assertEqual(q4.degree(1), 9)
        self.assertEqual(q4.degree(6), 11)
        for u, v in q4.edges():
            self.assertTrue(q4.has_edge(v, u))

    def test_sharpness_constructions(self):
        """Test the pendant-path constructions"""
        lower = generate_from_text("lowersharp:6")
        self.assertEqual(lower.edges(), [(1, 2), (2, 3), (2, 5), (2, 6), (3, 4)])
        upper = generate_from_text("uppersharp:6")
        self.assertEqual(upper.edges(), [(1, 2), (2, 3), (2, 6), (3, 4), (4, 5)])
        self.assertEqual(upper.degree(3), 2)

    def test_union(self):
        """Test that unions place the parts in order"""
        g = generate_from_text("union:path:2+path:3")
        self.assertEqual(g.edges(), [(1, 2), (3, 4), (4, 5)])

    def test_random_is_seeded_and_connected(self):
        """Test that the same random spec always gives the same connected graph"""
        a = generate_from_text("random:10,0.3,42")
        b = generate_from_text("random:10,0.3,42")
        self.assertEqual(a, b)
        self.assertTrue(is_connected(a))
        self.assertEqual(a.name, "random:10,0.3,42")


class TestFigures(unittest.TestCase):

    def test_every_figure_has_a_root(self):
        """Test that roots and builders line up"""
        self.assertEqual(set(FIGURES), set(FIGURE_ROOTS))
        for key, build in FIGURES.items():
            with self.subTest(figure=key):
                g = build()
                self.assertEqual(g.name, f"figure:{key}")
                g.check_vertex(FIGURE_ROOTS[key])

    def test_figure_degrees(self):
        """Test the degree facts each figure is drawn to show"""
        self.assertEqual(generate_from_text("figure:1a").degree(1), 3)
        self.assertEqual(generate_from_text("figure:1b").degree(1), 3)
        self.assertEqual(set(generate_from_text("figure:2").degrees), {4})
        for key in ("4a", "4b", "5"):
            g = generate_from_text(f"figure:{key}")
            with self.subTest(figure=key):
                self.assertEqual(g.max_degree, g.n - 3)
                self.assertEqual([v for v in g.vertices if g.degree(v) == g.max_degree], [1])

    def test_figure_4b_adds_alpha_beta(self):
        """Test that 4b is 4a plus the edge 6-7"""
        a, b = generate(FamilySpec(FamilyKind.FIGURE_4A)), generate(FamilySpec(FamilyKind.FIGURE_4B))
        self.assertEqual(sorted(set(b.edges()) - set(a.edges())), [(6, 7)])


if __name__ == '__main__':
    unittest.main()
