"""
Сводные таблицы по CSV команды bench: для каждой конфигурации и размера
(n, k) - число выборок, обхват, среднее и медиана времени, средние счетчики.
"""
import csv
from collections import defaultdict
from pathlib import Path
from statistics import mean, median

from django.core.management.base import CommandError

from tutte.management.options import TutteCommand

GROUP_COLUMNS = ('family', 'heuristic', 'order', 'iso_mode')


def _mean_or_dash(values, fmt):
    values = [v for v in values if v is not None]
    return format(mean(values), fmt) if values else '-'


def summarize(rows):
    """Строки CSV -> {конфигурация: [((n, k), сводка), ...]} по возрастанию n и k"""
    groups = defaultdict(lambda: defaultdict(list))
    for row in rows:
        config = tuple(row[c] for c in GROUP_COLUMNS)
        k = int(row['k']) if row.get('k') else None
        groups[config][(int(row['n']), k)].append(row)

    result = {}
    for config, by_size in groups.items():
        lines = []
        for size in sorted(by_size, key=lambda item: (item[0], item[1] or 0)):
            cell = by_size[size]
            times = [float(r['time_s']) for r in cell]
            lines.append((size, {
                'samples': len(cell),
                'girth': cell[0].get('girth') or '-',
                'm': _mean_or_dash([int(r['m']) for r in cell], '.1f'),
                'mean_time': f'{mean(times):.4f}',
                'median_time': f'{median(times):.4f}',
                'calls': _mean_or_dash([int(r['calls']) for r in cell], '.1f'),
                'ident': _mean_or_dash([int(r['ident']) for r in cell], '.1f'),
                'isom': _mean_or_dash([int(r['isom']) for r in cell], '.1f'),
                'avgdeg': _mean_or_dash(
                    [float(r['avgdeg']) if r['avgdeg'] else None for r in cell], '.2f'
                ),
            }))
        result[config] = lines
    return result


class Command(TutteCommand):
    help = 'Печатает сводные таблицы по CSV, полученному командой bench'

    def add_arguments(self, parser):
        parser.add_argument('csv_file', help='CSV команды bench')

    def run(self, *args, **options):
        path = Path(options['csv_file'])
        try:
            with path.open(newline='', encoding='utf-8') as handle:
                rows = list(csv.DictReader(handle))
        except OSError as exc:
            raise CommandError(f'Не удалось прочитать {path}: {exc}')
        if not rows:
            raise CommandError(f'В файле {path} нет строк с замерами')
        missing = set(GROUP_COLUMNS + ('n', 'm', 'time_s', 'calls')) - set(rows[0])
        if missing:
            raise CommandError(f'В CSV нет столбцов: {", ".join(sorted(missing))}')

        header = (
            'n', 'k', 'samples', 'girth', 'm',
            'mean_time', 'median_time', 'calls', 'ident', 'isom', 'avgdeg',
        )
        for config, lines in sorted(summarize(rows).items()):
            family, heuristic, order, iso_mode = config
            self.stdout.write(f'{family}  heuristic={heuristic} order={order} iso={iso_mode}')
            self.stdout.write(' '.join(f'{h:>12}' for h in header))
            for (n, k), values in lines:
                cells = [str(n), '-' if k is None else str(k)]
                cells += [str(values[h]) for h in header[2:]]
                self.stdout.write(' '.join(f'{c:>12}' for c in cells))
            self.stdout.write('')
