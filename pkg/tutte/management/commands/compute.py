"""
Вычисление полинома Татта графа из файла.

    python manage.py compute graph.txt --heuristic vorder-push --order sharc --iso full
"""
import logging
from fractions import Fraction
from pathlib import Path

from tutte.derived import chromatic_from_tutte, reliability_from_tutte
from tutte.engine import TutteEngine
from tutte.graph_io import read_graph
from tutte.management.options import TutteCommand, add_engine_arguments, engine_config

logger = logging.getLogger(__name__)


class Command(TutteCommand):
    help = 'Вычисляет полином Татта T(G, x, y) графа из файла'

    def add_arguments(self, parser):
        parser.add_argument('graph_file', help='Файл графа: строка "n m", затем m строк "u v"')
        add_engine_arguments(parser)
        parser.add_argument('--trace', action='store_true', help='Трасса времени и памяти в stderr')
        derived = parser.add_mutually_exclusive_group()
        derived.add_argument(
            '--reliability', action='store_true', help='Вывести R_p(G) вместо T(G, x, y)',
        )
        derived.add_argument(
            '--chromatic', action='store_true', help='Вывести P_λ(G) вместо T(G, x, y)',
        )
        parser.add_argument(
            '--evaluate', nargs=2, type=Fraction, metavar=('X', 'Y'),
            help='Точное значение T(G, X, Y) в рациональной точке',
        )
        parser.add_argument('-o', '--output', help='Файл для записи многочлена')

    def run(self, *args, **options):
        graph = read_graph(options['graph_file'])
        config = engine_config(options, trace=options['trace'] or None)
        engine = TutteEngine(config, trace_stream=self.stderr if config.trace else None)
        poly, stats = engine.compute(graph)

        if options['reliability']:
            text = str(reliability_from_tutte(poly, graph.n, graph.m))
        elif options['chromatic']:
            text = str(chromatic_from_tutte(poly, graph.n))
        else:
            text = str(poly)
        self.stdout.write(text)
        if options['output']:
            Path(options['output']).write_text(text + '\n', encoding='utf-8')
            logger.info('Многочлен записан в %s', options['output'])
        if options['evaluate']:
            x0, y0 = options['evaluate']
            self.stdout.write(f'T({x0}, {y0}) = {poly.eval(x0, y0)}')
        if config.trace:
            self.stderr.write(f'total time={stats.elapsed:.2f}s')
        self.stdout.write(stats.summary())
