"""
Замеры по серии графов одного семейства: CSV с одной строкой на каждую
комбинацию размера, эвристики, порядка вершин, режима кэша и выборки.

    python manage.py bench petersen --k 3 --range 6 12 --heuristics vorder-pull vorder-push
    python manage.py bench random-regular --d 3 --range 10 20 --step 2 --samples 5 -o cubic.csv
    python manage.py bench petersen --range 14 14 --k-range 1 6
"""
import csv
import itertools
import logging
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import replace

from django.conf import settings

from tutte import generators
from tutte.engine import ISO_MODES, tutte
from tutte.heuristics import HEURISTICS
from tutte.management.options import TutteCommand, engine_config, usage_error
from tutte.ordering import STRATEGIES

logger = logging.getLogger(__name__)

CSV_COLUMNS = (
    'family', 'graph', 'n', 'm', 'k', 'girth', 'heuristic', 'order', 'iso_mode', 'seed',
    'calls', 'ident', 'isom', 'avgdeg', 'time_s', 'peakmem_b',
)


class Command(TutteCommand):
    help = 'Замеры вычисления T(G) по серии графов, результат в CSV'

    def add_arguments(self, parser):
        parser.add_argument(
            'family', choices=('petersen', 'complete', 'grid', 'random-regular', 'random-connected'),
            help='Семейство графов',
        )
        parser.add_argument(
            '--range', nargs=2, type=int, required=True, metavar=('A', 'B'),
            help='Размеры серии от A до B включительно',
        )
        parser.add_argument('--step', type=int, default=1, help='Шаг размера')
        parser.add_argument('--k', type=int, help='Параметр k для petersen')
        parser.add_argument(
            '--k-range', nargs=2, type=int, metavar=('K1', 'K2'),
            help='Серия по k от K1 до K2 для petersen (допустимые k < n/2)',
        )
        parser.add_argument('--d', type=int, default=3, help='Степень для random-regular')
        parser.add_argument('--p', type=float, default=0.5, help='Плотность для random-connected')
        parser.add_argument('--heuristics', nargs='+', choices=HEURISTICS, help='Эвристики')
        parser.add_argument('--orders', nargs='+', choices=STRATEGIES, help='Порядки вершин')
        parser.add_argument('--iso-modes', nargs='+', choices=ISO_MODES, help='Режимы кэша')
        parser.add_argument('--iso-min-vertices', type=int)
        parser.add_argument('--blocks', action='store_true')
        parser.add_argument('--samples', type=int, default=1, help='Выборок на размер для случайных семейств')
        parser.add_argument('--seed', type=int, default=0, help='Начальное зерно выборок')
        parser.add_argument('--workers', type=int, help='Число рабочих потоков')
        parser.add_argument('-o', '--output', help='Файл CSV (по умолчанию stdout)')

    def run(self, *args, **options):
        low, high = options['range']
        if options['step'] < 1 or low > high:
            raise usage_error('Ожидается A <= B и положительный шаг')
        if options['samples'] < 1:
            raise usage_error('Число выборок должно быть положительным')

        ks = self._k_values(options)
        base = generators.FamilySpec(
            options['family'],
            n=low, k=ks[0], rows=low, cols=low, d=options['d'], p=options['p'],
        )
        samples = options['samples'] if base.is_random else 1
        graphs = []
        for size in range(low, high + 1, options['step']):
            for k in ks:
                if k is not None and not 1 <= k < size / 2:
                    logger.warning('Пропуск P(%d,%d): нужно 1 <= k < n/2', size, k)
                    continue
                for sample in range(samples):
                    seed = options['seed'] + sample if base.is_random else None
                    spec = replace(base.with_size(size, seed=seed), k=k)
                    graphs.append((spec, spec.build()))
        if not graphs:
            raise usage_error('Серия не содержит ни одного графа')

        girths = {spec: _girth_text(graph) for spec, graph in graphs}
        defaults = engine_config(options)
        cells = list(itertools.product(
            graphs,
            options['heuristics'] or [defaults.heuristic],
            options['orders'] or [defaults.order],
            options['iso_modes'] or [defaults.iso_mode],
        ))
        workers = options['workers'] or getattr(settings, 'TUTTE_BENCH_WORKERS', 1)
        logger.info('Замеры: %d ячеек, %d потоков', len(cells), workers)

        def measure(cell):
            (spec, graph), heuristic, order, iso_mode = cell
            config = defaults.with_changes(
                heuristic=heuristic, order=order, iso_mode=iso_mode, seed=options['seed'],
            )
            _, stats = tutte(graph, config)
            return {
                'family': spec.family,
                'graph': spec.label(),
                'n': graph.n,
                'm': graph.m,
                'k': '' if spec.k is None else spec.k,
                'girth': girths[spec],
                'heuristic': heuristic,
                'order': order,
                'iso_mode': iso_mode,
                'seed': '' if spec.seed is None else spec.seed,
                'calls': stats.calls,
                'ident': stats.ident,
                'isom': stats.isom,
                'avgdeg': '' if stats.avgdeg is None else f'{stats.avgdeg:.4f}',
                'time_s': f'{stats.elapsed:.6f}',
                'peakmem_b': stats.peak_memory_bytes,
            }

        with ThreadPoolExecutor(max_workers=max(1, workers)) as pool:
            rows = list(pool.map(measure, cells))

        if options['output']:
            with open(options['output'], 'w', newline='', encoding='utf-8') as handle:
                self._write_csv(handle, rows)
            logger.info('Записано %d строк в %s', len(rows), options['output'])
        else:
            self._write_csv(self.stdout, rows)

    def _k_values(self, options):
        """Значения k серии: одно значение --k, диапазон --k-range или [None]"""
        k, k_range = options['k'], options['k_range']
        if options['family'] != generators.PETERSEN:
            if k is not None or k_range:
                raise usage_error('Параметры --k и --k-range относятся только к petersen')
            return [None]
        if (k is None) == (not k_range):
            raise usage_error('Для petersen нужен ровно один из параметров --k и --k-range')
        if k_range:
            first, last = k_range
            if first < 1 or first > last:
                raise usage_error('Ожидается 1 <= K1 <= K2')
            return list(range(first, last + 1))
        return [k]

    def _write_csv(self, handle, rows):
        writer = csv.DictWriter(handle, fieldnames=CSV_COLUMNS, lineterminator='\n')
        writer.writeheader()
        writer.writerows(rows)


def _girth_text(graph):
    girth = graph.girth()
    return '' if girth == math.inf else girth
