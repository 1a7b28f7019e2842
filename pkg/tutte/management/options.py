"""
Общие флаги движка и обработка ошибок для команд управления.
"""
from django.core.exceptions import ValidationError
from django.core.management.base import BaseCommand, CommandError

from ..engine import ISO_MODES, EngineConfig
from ..exceptions import ResourceLimitError
from ..heuristics import HEURISTICS
from ..ordering import STRATEGIES


def add_engine_arguments(parser):
    parser.add_argument('--heuristic', choices=HEURISTICS, help='Эвристика выбора ребра')
    parser.add_argument('--order', choices=STRATEGIES, help='Порядок вершин перед вычислением')
    parser.add_argument('--seed', type=int, help='Зерно для случайного порядка и генераторов')
    parser.add_argument('--iso', choices=ISO_MODES, help='Режим кэша: none, identical, full')
    parser.add_argument(
        '--iso-min-vertices', type=int,
        help='Минимальное число вершин для проверки изоморфизма',
    )
    parser.add_argument('--blocks', action='store_true', help='Разложение на блоки в корне')
    parser.add_argument('--memory-budget', type=int, help='Лимит памяти в байтах')


def engine_config(options, **overrides):
    """EngineConfig из настроек проекта и флагов команды"""
    values = {
        'heuristic': options.get('heuristic'),
        'order': options.get('order'),
        'seed': options.get('seed'),
        'iso_mode': options.get('iso'),
        'min_iso_vertices': options.get('iso_min_vertices'),
        'use_blocks': options.get('blocks') or None,
        'memory_budget': options.get('memory_budget'),
    }
    values.update(overrides)
    return EngineConfig.from_settings(**values)


def usage_error(message):
    """Ошибка аргументов команды: код возврата 2, как у ошибок разбора"""
    return CommandError(message, returncode=2)


def error_message(exc):
    if isinstance(exc, ValidationError):
        return '; '.join(exc.messages)
    return str(exc)


class TutteCommand(BaseCommand):
    """
    Базовая команда: ошибки входных данных и превышение ресурсов
    превращаются в CommandError (код возврата 1).
    """

    def handle(self, *args, **options):
        try:
            return self.run(*args, **options)
        except ResourceLimitError as exc:
            if exc.stats is not None:
                self.stderr.write(exc.stats.summary())
            raise CommandError(error_message(exc))
        except ValidationError as exc:
            raise CommandError(error_message(exc))

    def run(self, *args, **options):
        raise NotImplementedError
