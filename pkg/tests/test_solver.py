import unittest

from evals.solver import (
    NoTdsExists,
    enumerate_min_tds,
    gamma_t,
    is_tds,
    solve,
    tau,
    tdv,
    tdv_all,
)
from graphs.families import generate_from_text
from graphs.graph import MAX_VERTICES, GraphInputError, VertexSet, from_edge_list


class TestSolverExamples(unittest.TestCase):

    def test_path_4(self):
        """Test P4: the two support vertices form the only gamma_t-set"""
        report = solve(generate_from_text("path:4"), want_tdm=True)
        self.assertEqual(report.gamma_t, 2)
        self.assertEqual(report.tau, 1)
        self.assertEqual(report.tdv, (0, 1, 1, 0))
        self.assertEqual([s.to_list() for s in report.tdm], [[2, 3]])

    def test_path_6(self):
        """Test P6 values and its four gamma_t-sets in canonical order"""
        report = solve(generate_from_text("path:6"), want_tdm=True)
        self.assertEqual(report.gamma_t, 4)
        self.assertEqual(report.tau, 4)
        self.assertEqual(report.tdv, (2, 4, 2, 2, 4, 2))
        self.assertEqual(
            [s.to_list() for s in report.tdm],
            [[1, 2, 4, 5], [1, 2, 5, 6], [2, 3, 4, 5], [2, 3, 5, 6]],
        )

    def test_cycles(self):
        """Test C4 and C5"""
        c4 = generate_from_text("cycle:4")
        self.assertEqual([s.to_list() for s in enumerate_min_tds(c4)], [[1, 2], [1, 4], [2, 3], [3, 4]])
        self.assertEqual(tdv_all(c4), (2, 2, 2, 2))
        c5 = solve(generate_from_text("cycle:5"))
        self.assertEqual((c5.gamma_t, c5.tau), (3, 5))
        self.assertEqual(set(c5.tdv), {3})

    def test_k2(self):
        """Test the smallest solvable graph"""
        k2 = from_edge_list(2, [(1, 2)])
        self.assertEqual(gamma_t(k2), 2)
        self.assertEqual(tau(k2), 1)

    def test_queen_boards(self):
        """Test the TDV patterns of the 3x3 and 4x4 queen graphs"""
        q3 = solve(generate_from_text("queen:3x3"))
        self.assertEqual(q3.gamma_t, 2)
        self.assertEqual(q3.tdv_of(5), 8)
        self.assertEqual({q3.tdv_of(v) for v in range(1, 10) if v != 5}, {4})
        q4 = solve(generate_from_text("queen:4x4"))
        self.assertEqual(q4.gamma_t, 2)
        centers = {6, 7, 10, 11}
        self.assertEqual({q4.tdv_of(v) for v in centers}, {3})
        self.assertEqual({q4.tdv_of(v) for v in range(1, 17) if v not in centers}, {1})
        self.assertEqual(q4.tau, 12)

    def test_figures(self):
        """Test gamma_t and tau of the figure graphs"""
        expected = {"1a": (2, 3), "1b": (6, 2), "2": (2, 12), "4a": (3, 4), "4b": (3, 12), "5": (2, 1)}
        for key, (g, t) in expected.items():
            with self.subTest(figure=key):
                report = solve(generate_from_text(f"figure:{key}"))
                self.assertEqual((report.gamma_t, report.tau), (g, t))

    def test_figure_4b_sets(self):
        """Test that the extra edge 6-7 adds four sets through vertex 1 and four sets {6, 7, x}"""
        report = solve(generate_from_text("figure:4b"), want_tdm=True)
        self.assertEqual(
            [s.to_list() for s in report.tdm],
            [
                [1, 2, 4], [1, 2, 5], [1, 2, 6], [1, 3, 4], [1, 3, 5], [1, 3, 6],
                [1, 4, 7], [1, 5, 7], [2, 6, 7], [3, 6, 7], [4, 6, 7], [5, 6, 7],
            ],
        )
        self.assertEqual(report.tdv_of(1), 8)

    def test_single_vertex_tdv(self):
        """Test that tdv(g, v) reads the vector"""
        g = generate_from_text("path:6")
        self.assertEqual(tdv(g, 2), 4)
        with self.assertRaises(GraphInputError):
            tdv(g, 7)

    def test_tau_counts_the_enumeration(self):
        """Test that streaming tau matches the enumerated set count"""
        for token in ("cycle:10", "kpartite:2,2,3", "uppersharp:7"):
            with self.subTest(graph=token):
                g = generate_from_text(token)
                self.assertEqual(tau(g), len(enumerate_min_tds(g)))


class TestSolverErrors(unittest.TestCase):

    def test_isolated_vertex(self):
        """Test that an isolated vertex raises NoTdsExists naming it"""
        with self.assertRaises(NoTdsExists) as ctx:
            solve(from_edge_list(3, [(1, 2)]))
        self.assertEqual(ctx.exception.vertex, 3)

    def test_single_vertex(self):
        """Test that K1 has no total dominating set"""
        with self.assertRaises(NoTdsExists) as ctx:
            gamma_t(from_edge_list(1, []))
        self.assertEqual(ctx.exception.vertex, 1)

    def test_size_cutoff(self):
        """Test that graphs above the cutoff are rejected"""
        n = MAX_VERTICES + 1
        big = from_edge_list(n, [(i, i + 1) for i in range(1, n)])
        with self.assertRaises(GraphInputError):
            solve(big)

    def test_is_tds(self):
        """Test the TDS predicate, including vertices inside the set"""
        p4 = generate_from_text("path:4")
        self.assertTrue(is_tds(p4, VertexSet.of([2, 3])))
        self.assertFalse(is_tds(p4, VertexSet.of([1, 2])))
        self.assertFalse(is_tds(p4, VertexSet.of([2, 4])))
        with self.assertRaises(GraphInputError):
            is_tds(p4, VertexSet.of([5]))


class TestSolverDeterminism(unittest.TestCase):

    def test_worker_count_does_not_change_output(self):
        """Test that the process pool yields identical reports"""
        for token in ("cycle:9", "figure:1b", "random:11,0.3,5"):
            with self.subTest(graph=token):
                g = generate_from_text(token)
                self.assertEqual(solve(g, want_tdm=True, workers=1), solve(g, want_tdm=True, workers=3))


if __name__ == '__main__':
    unittest.main()
