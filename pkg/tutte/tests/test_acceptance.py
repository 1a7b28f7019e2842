"""
Сквозные проверки на семействах графов: тождества T(1, 1) и T(2, 2),
совпадение с оракулом на полном каталоге малых графов, сравнение
эвристик. Долгие проверки помечены тегом slow, усеченный икосаэдр -
тегом stretch.
"""
import itertools

from django.test import SimpleTestCase, tag

from tutte.engine import ISO_FULL, ISO_IDENTICAL, ISO_MODES, EngineConfig, tutte
from tutte.generators import complete, grid, petersen, truncated_icosahedron
from tutte.heuristics import HEURISTICS, VORDER_PULL, VORDER_PUSH
from tutte.invariants import spanning_trees
from tutte.multigraph import Multigraph
from tutte.oracle import tutte_bruteforce
from tutte.ordering import SHARC, STRATEGIES
from tutte.polynomial import BiPoly

from .helpers import connected_multigraph_catalog, random_catalog


def connected_simple_graphs(n):
    pairs = list(itertools.combinations(range(1, n + 1), 2))
    for mask in range(1 << len(pairs)):
        edges = [pair for bit, pair in enumerate(pairs) if mask >> bit & 1]
        graph = Multigraph.from_edges(n, edges)
        if graph.is_connected():
            yield graph


def swap_variables(poly):
    return BiPoly({(j, i): c for (i, j), c in poly.terms.items()})


class SpecializationMixin:

    def assertIdentities(self, graph, config=None):
        poly, stats = tutte(graph, config or EngineConfig())
        self.assertEqual(poly.eval(1, 1), spanning_trees(graph))
        self.assertEqual(poly.eval(2, 2), 2 ** graph.m)
        self.assertGreaterEqual(stats.calls, stats.ident + stats.isom)
        return poly, stats


class SpecializationTests(SpecializationMixin, SimpleTestCase):

    def test_petersen_family(self):
        for n in range(3, 9):
            for k in range(1, (n + 1) // 2):
                with self.subTest(n=n, k=k):
                    self.assertIdentities(petersen(n, k))

    def test_complete_graphs(self):
        for n in range(1, 7):
            with self.subTest(n=n):
                self.assertIdentities(complete(n))

    def test_grids(self):
        for rows, cols in itertools.product(range(1, 5), repeat=2):
            with self.subTest(rows=rows, cols=cols):
                self.assertIdentities(grid(rows, cols))

    def test_petersen_graph_spanning_trees(self):
        poly, _ = self.assertIdentities(petersen(5, 2))
        self.assertEqual(poly.eval(1, 1), 2000)


class OracleCatalogTests(SimpleTestCase):

    def test_all_connected_graphs_up_to_four_vertices(self):
        for n in range(1, 5):
            for graph in connected_simple_graphs(n):
                self.assertEqual(tutte(graph, EngineConfig())[0], tutte_bruteforce(graph))

    @tag('slow')
    def test_all_connected_graphs_on_five_vertices(self):
        config = EngineConfig(iso_mode=ISO_FULL, min_iso_vertices=1, debug_checks=True)
        for graph in connected_simple_graphs(5):
            self.assertEqual(tutte(graph, config)[0], tutte_bruteforce(graph))


def all_configs():
    for heuristic, order, iso_mode in itertools.product(HEURISTICS, STRATEGIES, ISO_MODES):
        yield EngineConfig(
            heuristic=heuristic, order=order, iso_mode=iso_mode, seed=11, min_iso_vertices=1,
        )


class OracleMatrixTests(SimpleTestCase):
    """Все эвристики, порядки и режимы кэша против перебора"""

    def assertMatchesOracle(self, graphs):
        configs = list(all_configs())
        for graph in graphs:
            expected = tutte_bruteforce(graph)
            for config in configs:
                poly, _ = tutte(graph, config)
                self.assertEqual(
                    poly, expected,
                    f'{graph!r} {config.heuristic} {config.order} {config.iso_mode}',
                )

    def test_small_multigraph_catalog(self):
        self.assertMatchesOracle(connected_multigraph_catalog(max_n=4, max_m=5))

    @tag('slow')
    def test_multigraph_catalog_up_to_five_vertices_and_eight_edges(self):
        self.assertMatchesOracle(connected_multigraph_catalog(max_n=5, max_m=8))

    @tag('slow')
    def test_random_multigraphs(self):
        self.assertMatchesOracle(random_catalog(seed=1993, count=200, max_n=7, max_m=12))


@tag('slow')
class LargeFamilyTests(SpecializationMixin, SimpleTestCase):

    def test_petersen_family_up_to_ten(self):
        for n in (9, 10):
            for k in range(1, (n + 1) // 2):
                with self.subTest(n=n, k=k):
                    self.assertIdentities(petersen(n, k))

    def test_complete_graphs_up_to_nine(self):
        config = EngineConfig(iso_mode=ISO_FULL, min_iso_vertices=5)
        for n in range(7, 10):
            with self.subTest(n=n):
                self.assertIdentities(complete(n), config)

    def test_push_needs_five_times_fewer_calls_than_pull(self):
        graph = petersen(10, 3)
        config = EngineConfig(order=SHARC, iso_mode=ISO_IDENTICAL)
        _, push = tutte(graph, config.with_changes(heuristic=VORDER_PUSH))
        _, pull = tutte(graph, config.with_changes(heuristic=VORDER_PULL))
        self.assertLessEqual(push.calls * 5, pull.calls)

    def test_push_calls_grow_linearly_on_petersen_k3(self):
        config = EngineConfig(heuristic=VORDER_PUSH, order=SHARC, iso_mode=ISO_IDENTICAL)
        calls = [tutte(petersen(n, 3), config)[1].calls for n in range(20, 31, 2)]
        deltas = [b - a for a, b in zip(calls, calls[1:])]
        self.assertTrue(all(d > 0 for d in deltas), deltas)
        self.assertLessEqual(max(deltas) / min(deltas), 1.5, deltas)


@tag('slow', 'stretch')
class TruncatedIcosahedronTests(SimpleTestCase):

    def test_duality(self):
        config = EngineConfig(iso_mode=ISO_FULL)
        primal, _ = tutte(truncated_icosahedron(), config)
        dual, _ = tutte(truncated_icosahedron(dual=True), config)
        self.assertEqual(primal.eval(1, 1), dual.eval(1, 1))
        self.assertEqual(primal.eval(2, 2), 2 ** 90)
        self.assertEqual(primal, swap_variables(dual))
