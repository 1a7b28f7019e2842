"""
Генераторы семейств графов для вычислений и замеров.
"""
import logging
import random
from dataclasses import dataclass, replace

from django.conf import settings

from .exceptions import GenerationError, GraphInputError
from .multigraph import Multigraph
from .ti_data import TI_DUAL_EDGES, TI_DUAL_VERTICES, TI_EDGES, TI_VERTICES

logger = logging.getLogger(__name__)

DEFAULT_MAX_ATTEMPTS = 100000


def _max_attempts():
    return getattr(settings, 'TUTTE_RANDOM_REGULAR_MAX_ATTEMPTS', DEFAULT_MAX_ATTEMPTS)


# ============================================================================
# ДЕТЕРМИНИРОВАННЫЕ СЕМЕЙСТВА
# ============================================================================

def petersen(n, k):
    """
    Обобщенный граф Петерсена P(n, k): внешний цикл 1..n, спицы (i, n+i)
    и внутренние ребра (n+i, n+((i+k-1) mod n)+1).
    """
    if not (1 <= k and 2 * k < n):
        raise GraphInputError(f'P(n, k) требует 1 <= k < n/2, получено n={n}, k={k}')
    edges = []
    for i in range(1, n + 1):
        edges.append((i, i % n + 1))
        edges.append((i, n + i))
        edges.append((n + i, n + (i + k - 1) % n + 1))
    return Multigraph.from_edges(2 * n, edges)


def dodecahedron():
    """Граф додекаэдра, P(10, 2)"""
    return petersen(10, 2)


def complete(n):
    """Полный граф K_n"""
    if n < 1:
        raise GraphInputError(f'K_n требует n >= 1, получено {n}')
    edges = [(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1)]
    return Multigraph.from_edges(n, edges)


def grid(rows, cols):
    """Решетка rows x cols, вершины нумеруются по строкам"""
    if rows < 1 or cols < 1:
        raise GraphInputError(f'Размеры решетки должны быть положительными: {rows} x {cols}')

    def label(r, c):
        return r * cols + c + 1

    edges = []
    for r in range(rows):
        for c in range(cols):
            if c + 1 < cols:
                edges.append((label(r, c), label(r, c + 1)))
            if r + 1 < rows:
                edges.append((label(r, c), label(r + 1, c)))
    return Multigraph.from_edges(rows * cols, edges)


def truncated_icosahedron(dual=False):
    """Усеченный икосаэдр (60 вершин) или двойственный граф (32 вершины)"""
    if dual:
        return Multigraph.from_edges(TI_DUAL_VERTICES, TI_DUAL_EDGES)
    return Multigraph.from_edges(TI_VERTICES, TI_EDGES)


# ============================================================================
# СЛУЧАЙНЫЕ СЕМЕЙСТВА
# ============================================================================

def _is_simple(edges):
    seen = set()
    for u, v in edges:
        if u == v:
            return False
        key = (min(u, v), max(u, v))
        if key in seen:
            return False
        seen.add(key)
    return True


def random_regular(n, d, seed=None):
    """
    Случайный связный простой d-регулярный граф по модели спариваний.
    Выборки с петлями, кратными ребрами или несвязные отбрасываются.
    """
    if d < 1 or d >= n:
        raise GenerationError(f'Регулярный граф требует 1 <= d < n, получено n={n}, d={d}')
    if n * d % 2:
        raise GenerationError(f'Произведение n*d должно быть четным, получено n={n}, d={d}')
    rng = random.Random(seed)
    points = [v for v in range(1, n + 1) for _ in range(d)]
    limit = _max_attempts()
    for attempt in range(1, limit + 1):
        rng.shuffle(points)
        edges = list(zip(points[0::2], points[1::2]))
        if not _is_simple(edges):
            logger.debug('Попытка %d: выборка не простая', attempt)
            continue
        graph = Multigraph.from_edges(n, edges)
        if not graph.is_connected():
            logger.debug('Попытка %d: выборка несвязна', attempt)
            continue
        logger.info('Случайный %d-регулярный граф на %d вершинах за %d попыток', d, n, attempt)
        return graph
    raise GenerationError(
        f'Не удалось построить {d}-регулярный граф на {n} вершинах за {limit} попыток'
    )


def random_connected(n, p, seed=None):
    """
    Случайный связный граф G(n, p): каждое ребро независимо с вероятностью p,
    несвязные выборки отбрасываются.
    """
    if n < 1:
        raise GenerationError(f'Число вершин должно быть положительным, получено {n}')
    if not (0 < p <= 1):
        raise GenerationError(f'Плотность p должна лежать в (0, 1], получено {p}')
    rng = random.Random(seed)
    pairs = [(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1)]
    limit = _max_attempts()
    for attempt in range(1, limit + 1):
        edges = [pair for pair in pairs if rng.random() < p]
        graph = Multigraph.from_edges(n, edges)
        if graph.is_connected():
            logger.info('Случайный связный граф G(%d, %s) за %d попыток', n, p, attempt)
            return graph
        logger.debug('Попытка %d: выборка несвязна', attempt)
    raise GenerationError(
        f'Не удалось построить связный граф G({n}, {p}) за {limit} попыток'
    )


# ============================================================================
# ОПИСАНИЕ СЕМЕЙСТВА
# ============================================================================

PETERSEN = 'petersen'
COMPLETE = 'complete'
GRID = 'grid'
RANDOM_REGULAR = 'random_regular'
RANDOM_CONNECTED = 'random_connected'
TRUNCATED_ICOSAHEDRON = 'truncated_icosahedron'
TRUNCATED_ICOSAHEDRON_DUAL = 'truncated_icosahedron_dual'
DODECAHEDRON = 'dodecahedron'

FAMILIES = (
    PETERSEN, COMPLETE, GRID, RANDOM_REGULAR, RANDOM_CONNECTED,
    TRUNCATED_ICOSAHEDRON, TRUNCATED_ICOSAHEDRON_DUAL, DODECAHEDRON,
)

# Имена семейств в командной строке
FAMILY_ALIASES = {
    'ti': TRUNCATED_ICOSAHEDRON,
    'ti-dual': TRUNCATED_ICOSAHEDRON_DUAL,
    'random-regular': RANDOM_REGULAR,
    'random-connected': RANDOM_CONNECTED,
}

RANDOM_FAMILIES = (RANDOM_REGULAR, RANDOM_CONNECTED)


def normalize_family(tag):
    tag = str(tag).lower()
    tag = FAMILY_ALIASES.get(tag, tag.replace('-', '_'))
    if tag not in FAMILIES:
        raise GraphInputError(f'Неизвестное семейство графов: {tag}')
    return tag


@dataclass(frozen=True)
class FamilySpec:
    """Семейство графов и его параметры"""
    family: str
    n: int = None
    k: int = None
    rows: int = None
    cols: int = None
    d: int = None
    p: float = None
    seed: int = None

    def __post_init__(self):
        object.__setattr__(self, 'family', normalize_family(self.family))
        required = {
            PETERSEN: ('n', 'k'),
            COMPLETE: ('n',),
            GRID: ('rows', 'cols'),
            RANDOM_REGULAR: ('n', 'd'),
            RANDOM_CONNECTED: ('n', 'p'),
        }.get(self.family, ())
        missing = [name for name in required if getattr(self, name) is None]
        if missing:
            raise GraphInputError(
                f'Для семейства {self.family} не заданы параметры: {", ".join(missing)}'
            )

    @property
    def is_random(self):
        return self.family in RANDOM_FAMILIES

    def with_size(self, size, seed=None):
        """
        Та же серия с другим размером: n для petersen, complete и случайных
        семейств, сторона квадратной решетки для grid.
        """
        if self.family == GRID:
            return replace(self, rows=size, cols=size, seed=seed)
        if self.family in (PETERSEN, COMPLETE) + RANDOM_FAMILIES:
            return replace(self, n=size, seed=seed)
        raise GraphInputError(f'Семейство {self.family} имеет фиксированный размер')

    def label(self):
        """Краткое обозначение графа для отчетов"""
        if self.family == PETERSEN:
            return f'P({self.n},{self.k})'
        if self.family == COMPLETE:
            return f'K{self.n}'
        if self.family == GRID:
            return f'grid({self.rows}x{self.cols})'
        if self.family == RANDOM_REGULAR:
            return f'RR({self.n},{self.d};seed={self.seed})'
        if self.family == RANDOM_CONNECTED:
            return f'G({self.n},{self.p};seed={self.seed})'
        return self.family

    def build(self):
        if self.family == PETERSEN:
            return petersen(self.n, self.k)
        if self.family == COMPLETE:
            return complete(self.n)
        if self.family == GRID:
            return grid(self.rows, self.cols)
        if self.family == RANDOM_REGULAR:
            return random_regular(self.n, self.d, self.seed)
        if self.family == RANDOM_CONNECTED:
            return random_connected(self.n, self.p, self.seed)
        if self.family == DODECAHEDRON:
            return dodecahedron()
        return truncated_icosahedron(dual=self.family == TRUNCATED_ICOSAHEDRON_DUAL)
