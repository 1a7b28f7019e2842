from django.test import SimpleTestCase, override_settings

from tutte.exceptions import ResourceLimitError
from tutte.generators import complete
from tutte.multigraph import Multigraph
from tutte.oracle import SubsetRank, rank_counts, tutte_bruteforce
from tutte.polynomial import BiPoly

from .helpers import triangle


class OracleTests(SimpleTestCase):

    def test_small_graphs(self):
        x, y = BiPoly.x(), BiPoly.y()
        self.assertEqual(tutte_bruteforce(Multigraph.from_edges(1, [])), 1)
        self.assertEqual(tutte_bruteforce(Multigraph.from_edges(2, [(1, 2)])), x)
        self.assertEqual(tutte_bruteforce(Multigraph.from_edges(1, [(1, 1)])), y)
        self.assertEqual(tutte_bruteforce(Multigraph.from_edges(2, [(1, 2), (1, 2)])), x + y)
        self.assertEqual(tutte_bruteforce(triangle()), x ** 2 + x + y)

    def test_complete_graph_on_four_vertices(self):
        expected = BiPoly({
            (3, 0): 1, (2, 0): 3, (1, 0): 2, (1, 1): 4,
            (0, 1): 2, (0, 2): 3, (0, 3): 1,
        })
        self.assertEqual(tutte_bruteforce(complete(4)), expected)

    def test_rank_counts_cover_all_subsets(self):
        counts = rank_counts(triangle())
        self.assertEqual(sum(counts.values()), 8)
        self.assertEqual(counts[SubsetRank(3, 2)], 1)
        self.assertEqual(counts[SubsetRank(2, 2)], 3)

    @override_settings(TUTTE_ORACLE_MAX_EDGES=2)
    def test_edge_limit(self):
        with self.assertRaises(ResourceLimitError):
            tutte_bruteforce(triangle())
