"""
Проверка вычисленного полинома Татта по независимым тождествам:
T(1, 1) равно числу остовных деревьев, T(2, 2) = 2^m, и по запросу
совпадение с переборным оракулом.
"""
from django.core.management.base import CommandError

from tutte.engine import tutte
from tutte.graph_io import read_graph
from tutte.invariants import spanning_trees
from tutte.management.options import TutteCommand, add_engine_arguments, engine_config
from tutte.oracle import tutte_bruteforce


class Command(TutteCommand):
    help = 'Сверяет T(G) с числом остовных деревьев, 2^m и (по запросу) с оракулом'

    def add_arguments(self, parser):
        parser.add_argument('graph_file', help='Файл графа')
        add_engine_arguments(parser)
        parser.add_argument(
            '--oracle', action='store_true',
            help='Сравнить с перебором по подмножествам ребер (не больше 20 ребер)',
        )

    def run(self, *args, **options):
        graph = read_graph(options['graph_file'])
        poly, stats = tutte(graph, engine_config(options))

        checks = []
        trees = spanning_trees(graph)
        checks.append(('T(1,1) = остовные деревья', poly.eval(1, 1), trees))
        checks.append(('T(2,2) = 2^m', poly.eval(2, 2), 2 ** graph.m))
        if options['oracle']:
            checks.append(('оракул', poly, tutte_bruteforce(graph)))

        failed = 0
        for name, got, expected in checks:
            if got == expected:
                self.stdout.write(f'{name}: ok')
            else:
                failed += 1
                self.stdout.write(f'{name}: FAIL ({got} != {expected})')
        self.stdout.write(stats.summary())
        if failed:
            raise CommandError(f'Не пройдено проверок: {failed}')
