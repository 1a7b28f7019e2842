import io
import itertools
import re
import sys
from concurrent.futures import ThreadPoolExecutor

from django.test import SimpleTestCase, override_settings

from tutte import engine
from tutte.engine import (
    ISO_FULL, ISO_IDENTICAL, ISO_MODES, ISO_NONE, EngineConfig, MemoStore, RunStats,
    trace_emit, tutte,
)
from tutte.exceptions import GraphInputError, ResourceLimitError
from tutte.generators import complete, grid, petersen
from tutte.heuristics import HEURISTICS, MINDEG, VORDER_PULL, VORDER_PUSH
from tutte.multigraph import Multigraph
from tutte.oracle import tutte_bruteforce
from tutte.ordering import STRATEGIES
from tutte.polynomial import BiPoly

from .helpers import random_catalog, shuffled, triangle

TRACE_LINE = re.compile(r'^n=\d+ time=\d+\.\d{2}s space=\d+b$')


def config(**kwargs):
    kwargs.setdefault('debug_checks', True)
    return EngineConfig(**kwargs)


class BaseCaseTests(SimpleTestCase):

    def test_single_vertex(self):
        poly, stats = tutte(Multigraph.from_edges(1, []), config())
        self.assertEqual(poly, 1)
        self.assertEqual(stats.calls, 0)
        self.assertIsNone(stats.avgdeg)

    def test_bridges_and_loops_only(self):
        x, y = BiPoly.x(), BiPoly.y()
        self.assertEqual(tutte(Multigraph.from_edges(2, [(1, 2)]), config())[0], x)
        self.assertEqual(tutte(Multigraph.from_edges(1, [(1, 1), (1, 1)]), config())[0], y ** 2)
        path = Multigraph.from_edges(3, [(1, 2), (2, 3), (3, 3)])
        self.assertEqual(tutte(path, config())[0], x ** 2 * y)

    def test_triangle_under_every_configuration(self):
        for heuristic, order, iso_mode in itertools.product(HEURISTICS, STRATEGIES, ISO_MODES):
            cfg = config(heuristic=heuristic, order=order, iso_mode=iso_mode, seed=1,
                         min_iso_vertices=1)
            poly, stats = tutte(triangle(), cfg)
            self.assertEqual(str(poly), 'x^2 + x + y')
            self.assertEqual(stats.calls, 2)

    def test_complete_graph_on_four_vertices(self):
        poly, _ = tutte(complete(4), config())
        self.assertEqual(str(poly), 'x^3 + y^3 + 3*x^2 + 4*x*y + 3*y^2 + 2*x + 2*y')

    def test_disconnected_graph_rejected(self):
        with self.assertRaises(GraphInputError):
            tutte(Multigraph.from_edges(4, [(1, 2), (3, 4)]), config())


class OracleAgreementTests(SimpleTestCase):

    def test_random_multigraphs(self):
        for graph in random_catalog(seed=2024, count=60, max_n=6, max_m=11):
            expected = tutte_bruteforce(graph)
            for heuristic in HEURISTICS:
                poly, stats = tutte(graph, config(heuristic=heuristic))
                self.assertEqual(poly, expected)
                self.assertGreaterEqual(stats.calls, stats.ident + stats.isom)

    def test_petersen(self):
        graph = petersen(5, 2)
        self.assertEqual(tutte(graph, config())[0], tutte_bruteforce(graph))

    def test_blocks_give_same_polynomial(self):
        bowtie_with_tail = Multigraph.from_edges(
            7, [(1, 2), (1, 3), (2, 3), (3, 4), (4, 5), (3, 5), (5, 6), (6, 7), (6, 7)],
        )
        plain, _ = tutte(bowtie_with_tail, config())
        factored, _ = tutte(bowtie_with_tail, config(use_blocks=True))
        self.assertEqual(plain, factored)
        self.assertEqual(plain, tutte_bruteforce(bowtie_with_tail))


class CacheTests(SimpleTestCase):

    def test_modes_agree(self):
        graph = complete(5)
        results = {
            mode: tutte(graph, config(iso_mode=mode, min_iso_vertices=1)) for mode in ISO_MODES
        }
        polys = {str(poly) for poly, _ in results.values()}
        self.assertEqual(len(polys), 1)
        self.assertEqual(results[ISO_NONE][1].ident, 0)
        self.assertEqual(results[ISO_NONE][1].isom, 0)
        self.assertEqual(results[ISO_IDENTICAL][1].isom, 0)
        self.assertGreater(results[ISO_FULL][1].isom, 0)
        self.assertLessEqual(results[ISO_IDENTICAL][1].calls, results[ISO_NONE][1].calls)

    def test_isomorphism_threshold(self):
        _, stats = tutte(complete(5), config(iso_mode=ISO_FULL, min_iso_vertices=100))
        self.assertEqual(stats.isom, 0)

    def test_memo_store_finds_relabeled_graph(self):
        store = MemoStore()
        graph = petersen(5, 2)
        store.store_exact(graph, BiPoly.x())
        store.store_isomorphic(graph, BiPoly.x())
        other = shuffled(graph, 3)
        self.assertEqual(store.lookup_exact(graph), BiPoly.x())
        found = store.lookup_isomorphic(other)
        self.assertIsNotNone(found)
        self.assertEqual(found[0], BiPoly.x())
        self.assertIsNone(store.lookup_isomorphic(petersen(5, 1)))

    def test_relabeled_input_gives_same_polynomial(self):
        graph = grid(3, 3)
        expected, _ = tutte(graph, config())
        for seed in range(3):
            self.assertEqual(tutte(shuffled(graph, seed), config())[0], expected)


class StatsAndTraceTests(SimpleTestCase):

    def test_average_degree_is_reported(self):
        for heuristic in (MINDEG, VORDER_PULL, VORDER_PUSH):
            _, stats = tutte(petersen(5, 2), config(heuristic=heuristic))
            self.assertIsNotNone(stats.avgdeg)
            self.assertGreaterEqual(stats.avgdeg, 2)

    def test_summary_line(self):
        stats = RunStats(calls=10, ident=3, isom=1, sum_selected_degree=30, selections=10,
                         peak_memory_bytes=2048)
        self.assertEqual(stats.summary(), 'calls=10 ident=3 isom=1 avgdeg=3.00 peakmem=2048')

    def test_trace_lines(self):
        stream = io.StringIO()
        _, stats = tutte(petersen(5, 2), config(trace=True), trace_stream=stream)
        lines = stream.getvalue().splitlines()
        self.assertTrue(lines)
        for line in lines:
            self.assertRegex(line, TRACE_LINE)
        sizes = [int(line.split()[0][2:]) for line in lines]
        self.assertEqual(len(sizes), len(set(sizes)))
        self.assertEqual(set(sizes), set(stats.wall_time))

    def test_no_trace_when_disabled(self):
        _, stats = tutte(petersen(5, 2), config())
        self.assertEqual(stats.wall_time, {})

    def test_trace_emit_once_per_size(self):
        stats = RunStats()
        stream = io.StringIO()
        self.assertEqual(trace_emit(stats, 7, 0.5, 1024, stream), 'n=7 time=0.50s space=1024b')
        self.assertIsNone(trace_emit(stats, 7, 0.25, 1024, stream))
        self.assertEqual(stream.getvalue(), 'n=7 time=0.50s space=1024b\n')


class ConfigTests(SimpleTestCase):

    def test_invalid_values(self):
        with self.assertRaises(GraphInputError):
            EngineConfig(heuristic='maxdeg')
        with self.assertRaises(GraphInputError):
            EngineConfig(order='dfs')
        with self.assertRaises(GraphInputError):
            EngineConfig(iso_mode='canonical')
        with self.assertRaises(GraphInputError):
            EngineConfig(iso_mode=ISO_FULL, prime=91)

    @override_settings(TUTTE_DEFAULT_HEURISTIC='mindeg', TUTTE_ISO_MIN_VERTICES=4)
    def test_from_settings(self):
        cfg = EngineConfig.from_settings(iso_mode=ISO_FULL, order=None)
        self.assertEqual(cfg.heuristic, MINDEG)
        self.assertEqual(cfg.min_iso_vertices, 4)
        self.assertEqual(cfg.iso_mode, ISO_FULL)
        self.assertEqual(cfg.order, 'sharc')

    def test_memory_budget(self):
        if engine.resource is None:
            self.skipTest('Учет памяти недоступен на этой платформе')
        cfg = config(memory_budget=1, memory_report_interval=1)
        with self.assertRaises(ResourceLimitError) as ctx:
            tutte(petersen(5, 2), cfg)
        self.assertIsInstance(ctx.exception.stats, RunStats)
        self.assertEqual(ctx.exception.stats.calls, 1)


class RecursionLimitTests(SimpleTestCase):

    def setUp(self):
        self.before = sys.getrecursionlimit()
        self.addCleanup(sys.setrecursionlimit, self.before)

    def test_limit_only_grows(self):
        engine.ensure_recursion_limit(self.before - 100)
        self.assertEqual(sys.getrecursionlimit(), self.before)
        engine.ensure_recursion_limit(self.before + 50)
        self.assertEqual(sys.getrecursionlimit(), self.before + 50)

    def test_computation_keeps_raised_limit(self):
        # предел, поднятый другим вычислением, не опускается обратно
        sys.setrecursionlimit(self.before + 5000)
        tutte(petersen(5, 2), config())
        self.assertEqual(sys.getrecursionlimit(), self.before + 5000)

    def test_parallel_computations(self):
        graphs = [petersen(n, 2) for n in (5, 6, 7, 8)] * 2
        with ThreadPoolExecutor(max_workers=4) as pool:
            results = list(pool.map(lambda g: tutte(g, config())[0], graphs))
        for graph, poly in zip(graphs, results):
            self.assertEqual(poly.eval(2, 2), 2 ** graph.m)
