from collections import Counter

from django.test import SimpleTestCase

from tutte.exceptions import GraphInputError
from tutte.generators import grid, petersen
from tutte.multigraph import Multigraph
from tutte.ordering import (
    BFS, INPUT, RANDOM, SHARC, apply_order, bfs_order, make_order, random_order, sharc_order,
)

from .helpers import random_catalog, triangle

# Граф из описания порядка коротких дуг
SHORT_ARC_EXAMPLE = [(1, 3), (1, 4), (1, 5), (3, 4), (2, 4), (2, 5)]


class SharcTests(SimpleTestCase):

    def test_petersen_prism(self):
        self.assertEqual(sharc_order(petersen(5, 1)).perm, (1, 2, 7, 6, 10, 5, 4, 3, 8, 9))

    def test_petersen_graph(self):
        self.assertEqual(sharc_order(petersen(5, 2)).perm, (1, 5, 4, 3, 2, 8, 6, 9, 10, 7))

    def test_short_arc_example(self):
        # те же множества дуг {3, 4} и {5, 2}, вершины дуги идут от конца закрытия
        graph = Multigraph.from_edges(5, SHORT_ARC_EXAMPLE)
        order = sharc_order(graph)
        self.assertEqual(order.perm, (1, 4, 3, 2, 5))
        self.assertEqual(order.strategy, SHARC)

    def test_single_vertex_arc_between_two_chosen_vertices(self):
        # 1-2-3 уже в S после первой дуги, 4 смежна с 1 и 3
        graph = Multigraph.from_edges(4, [(1, 2), (2, 3), (1, 3), (1, 4), (3, 4)])
        self.assertEqual(sharc_order(graph).perm, (1, 3, 2, 4))

    def test_path_falls_back_to_neighbors(self):
        path = Multigraph.from_edges(3, [(1, 2), (2, 3)])
        self.assertEqual(sharc_order(path).perm, (1, 2, 3))

    def test_single_vertex(self):
        self.assertEqual(sharc_order(Multigraph.from_edges(1, [])).perm, (1,))

    def test_is_permutation_starting_at_one(self):
        graphs = [petersen(5, 1), petersen(5, 2), petersen(10, 3), grid(3, 4)]
        graphs += random_catalog(seed=21, count=30, max_n=9, max_m=14)
        for graph in graphs:
            perm = sharc_order(graph).perm
            self.assertEqual(perm[0], 1)
            self.assertEqual(sorted(perm), list(range(1, graph.n + 1)))

    def test_prefixes_stay_connected(self):
        graph = petersen(10, 3)
        perm = sharc_order(graph).perm
        for size in range(1, graph.n + 1):
            prefix = set(perm[:size])
            for v in perm[1:size]:
                self.assertTrue(any(w in prefix for w in graph.neighbors(v)))

    def test_disconnected_graph_rejected(self):
        with self.assertRaises(GraphInputError):
            sharc_order(Multigraph.from_edges(3, [(1, 2)]))


class OtherOrdersTests(SimpleTestCase):

    def test_bfs_order(self):
        graph = Multigraph.from_edges(4, [(1, 3), (3, 2), (1, 4)])
        self.assertEqual(bfs_order(graph).perm, (1, 3, 4, 2))

    def test_random_order_is_reproducible(self):
        self.assertEqual(random_order(1, 99).perm, (1,))
        self.assertEqual(random_order(12, 7), random_order(12, 7))
        self.assertEqual(sorted(random_order(12, 7).perm), list(range(1, 13)))

    def test_random_order_first_position_is_uniform(self):
        counts = Counter(random_order(10, seed).perm[0] for seed in range(10000))
        for label in range(1, 11):
            self.assertAlmostEqual(counts[label] / 10000, 0.1, delta=0.02)

    def test_make_order_dispatch(self):
        graph = petersen(5, 2)
        for strategy in (INPUT, RANDOM, BFS, SHARC):
            self.assertEqual(make_order(graph, strategy, seed=3).strategy, strategy)
        with self.assertRaises(GraphInputError):
            make_order(graph, 'dfs')


class ApplyOrderTests(SimpleTestCase):

    def test_identity(self):
        graph = petersen(5, 2)
        self.assertEqual(apply_order(graph, make_order(graph, INPUT)), graph)

    def test_triangle_stays_triangle(self):
        order = make_order(triangle(), INPUT)._replace(perm=(3, 1, 2))
        self.assertEqual(apply_order(triangle(), order), triangle())

    def test_first_vertex_keeps_its_neighbors(self):
        graph = petersen(5, 1)
        order = sharc_order(graph)
        position = {old: new for new, old in enumerate(order.perm, start=1)}
        relabeled = apply_order(graph, order)
        self.assertEqual(
            set(relabeled.neighbors(1)), {position[2], position[5], position[6]}
        )

    def test_wrong_length_rejected(self):
        order = make_order(triangle(), INPUT)._replace(perm=(1, 2))
        with self.assertRaises(GraphInputError):
            apply_order(triangle(), order)
