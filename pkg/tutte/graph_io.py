"""
Текстовый формат графа.

Первая строка "n m", затем m строк "u v" с метками 1..n.
Повторяющиеся строки задают кратные ребра, "u u" - петлю.
Строки, начинающиеся с '#', и пустые строки игнорируются.
"""
import logging
from pathlib import Path

from .exceptions import GraphInputError
from .multigraph import Multigraph

logger = logging.getLogger(__name__)


def parse_graph(text):
    """Разобрать граф из текста"""
    rows = []
    for number, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line or line.startswith('#'):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise GraphInputError(f'Строка {number}: ожидалось два целых числа, получено {line!r}')
        try:
            rows.append((int(parts[0]), int(parts[1])))
        except ValueError:
            raise GraphInputError(f'Строка {number}: ожидались целые числа, получено {line!r}')

    if not rows:
        raise GraphInputError('Пустое описание графа: нет строки "n m"')
    (n, m), edges = rows[0], rows[1:]
    if len(edges) != m:
        raise GraphInputError(f'Заголовок объявляет {m} ребер, найдено {len(edges)}')
    return Multigraph.from_edges(n, edges)


def read_graph(path):
    """Прочитать граф из файла"""
    path = Path(path)
    try:
        text = path.read_text(encoding='utf-8')
    except OSError as exc:
        raise GraphInputError(f'Не удалось прочитать файл {path}: {exc}')
    graph = parse_graph(text)
    logger.info('Прочитан граф %s: n=%d m=%d', path, graph.n, graph.m)
    return graph


def write_graph(graph, path):
    """Записать граф в файл"""
    path = Path(path)
    path.write_text(graph.to_text(), encoding='utf-8')
    logger.info('Записан граф %s: n=%d m=%d', path, graph.n, graph.m)
