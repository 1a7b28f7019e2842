"""
Рекурсия удаления-стягивания для полинома Татта.

    T(G) = 1                  если ребер нет,
           x * T(G / e)       если e - мост,
           y * T(G - e)       если e - петля,
           T(G - e) + T(G / e) иначе.

На каждом вызове сначала удаляются все петли (множитель y^l), затем
стягиваются все мосты (множитель x^b); результат для оставшегося графа
запоминается в точном кэше по ключу помеченного графа и, в режиме full,
в корзинах по характеристическому многочлену лапласиана с точной
проверкой изоморфизма.
"""
import logging
import sys
import threading
import time
from dataclasses import dataclass, field, replace

from django.conf import settings

from . import heuristics
from .exceptions import GraphInputError, ResourceLimitError
from .invariants import DEFAULT_PRIME, bucket_key, find_isomorphism, is_prime
from .ordering import STRATEGIES, SHARC, apply_order, make_order
from .polynomial import BiPoly

try:
    import resource
except ImportError:
    # Windows: учет памяти недоступен
    resource = None

logger = logging.getLogger(__name__)

ISO_NONE = 'none'
ISO_IDENTICAL = 'identical'
ISO_FULL = 'full'
ISO_MODES = (ISO_NONE, ISO_IDENTICAL, ISO_FULL)


def current_memory_bytes():
    """Пиковый размер резидентной памяти процесса в байтах"""
    if resource is None:
        return 0
    usage = resource.getrusage(resource.RUSAGE_SELF).ru_maxrss
    # Linux отдает килобайты, macOS - байты
    return usage if sys.platform == 'darwin' else usage * 1024


_recursion_lock = threading.Lock()


def ensure_recursion_limit(depth):
    """
    Поднять предел глубины рекурсии интерпретатора до depth.
    Предел общий для всех потоков и только растет.
    """
    with _recursion_lock:
        if sys.getrecursionlimit() < depth:
            sys.setrecursionlimit(depth)


# ============================================================================
# КОНФИГУРАЦИЯ И СТАТИСТИКА
# ============================================================================

@dataclass(frozen=True)
class EngineConfig:
    """Выбор эвристики, порядка вершин и режима кэша"""
    heuristic: str = heuristics.VORDER_PUSH
    order: str = SHARC
    seed: int = None
    iso_mode: str = ISO_IDENTICAL
    min_iso_vertices: int = 15
    use_blocks: bool = False
    trace: bool = False
    memory_report_interval: int = 10000
    memory_budget: int = None
    prime: int = DEFAULT_PRIME
    debug_checks: bool = False

    def __post_init__(self):
        object.__setattr__(self, 'heuristic', heuristics.normalize(self.heuristic))
        if self.order not in STRATEGIES:
            raise GraphInputError(f'Неизвестная стратегия порядка вершин: {self.order}')
        if self.iso_mode not in ISO_MODES:
            raise GraphInputError(f'Неизвестный режим изоморфизма: {self.iso_mode}')
        if self.min_iso_vertices < 1:
            raise GraphInputError('Порог проверки изоморфизма должен быть не меньше 1')
        if self.memory_report_interval < 1:
            raise GraphInputError('Интервал учета памяти должен быть положительным')
        if self.iso_mode == ISO_FULL and not is_prime(self.prime):
            raise GraphInputError(f'Модуль {self.prime} не является простым числом')

    @classmethod
    def from_settings(cls, **overrides):
        """Конфигурация из настроек проекта с явными переопределениями"""
        values = {
            'heuristic': getattr(settings, 'TUTTE_DEFAULT_HEURISTIC', heuristics.VORDER_PUSH),
            'order': getattr(settings, 'TUTTE_DEFAULT_ORDER', SHARC),
            'iso_mode': getattr(settings, 'TUTTE_DEFAULT_ISO_MODE', ISO_IDENTICAL),
            'min_iso_vertices': getattr(settings, 'TUTTE_ISO_MIN_VERTICES', 15),
            'memory_report_interval': getattr(settings, 'TUTTE_MEMORY_REPORT_INTERVAL', 10000),
            'memory_budget': getattr(settings, 'TUTTE_MEMORY_BUDGET', None),
            'prime': getattr(settings, 'TUTTE_CHARPOLY_PRIME', DEFAULT_PRIME),
            'debug_checks': getattr(settings, 'TUTTE_DEBUG_CHECKS', False),
        }
        values.update({k: v for k, v in overrides.items() if v is not None})
        return cls(**values)

    def with_changes(self, **changes):
        return replace(self, **changes)

    @property
    def contraction_mode(self):
        return heuristics.contraction_mode(self.heuristic)


@dataclass
class RunStats:
    """Счетчики одного вычисления"""
    calls: int = 0
    ident: int = 0
    isom: int = 0
    sum_selected_degree: int = 0
    selections: int = 0
    peak_memory_bytes: int = 0
    elapsed: float = 0.0
    # время до первого завершения графа данного размера (трасса)
    wall_time: dict = field(default_factory=dict)

    @property
    def avgdeg(self):
        """Средняя степень первой вершины выбранного ребра"""
        if not self.selections:
            return None
        return self.sum_selected_degree / self.selections

    def summary(self):
        avgdeg = f'{self.avgdeg:.2f}' if self.avgdeg is not None else '-'
        return (
            f'calls={self.calls} ident={self.ident} isom={self.isom} '
            f'avgdeg={avgdeg} peakmem={self.peak_memory_bytes}'
        )


def trace_emit(stats, n_first, dt, mem, stream=None):
    """
    Строка трассы для первого завершения графа с n_first вершинами.
    Повторные завершения того же размера строк не дают (возвращается None).
    """
    if n_first in stats.wall_time:
        return None
    stats.wall_time[n_first] = dt
    line = f'n={n_first} time={dt:.2f}s space={mem}b'
    if stream is not None:
        stream.write(line + '\n')
        stream.flush()
    return line


# ============================================================================
# КЭШ
# ============================================================================

class MemoStore:
    """
    Двухуровневый кэш: точная таблица по ключу помеченного графа и
    корзины по отпечатку лапласиана для поиска изоморфных графов.
    """

    def __init__(self, prime=DEFAULT_PRIME):
        self.prime = prime
        self.exact = {}
        self.iso_buckets = {}

    def lookup_exact(self, graph):
        return self.exact.get(graph.encode_key())

    def store_exact(self, graph, poly):
        self.exact[graph.encode_key()] = poly

    def bucket_key(self, graph):
        return bucket_key(graph, self.prime)

    def lookup_isomorphic(self, graph, key=None):
        """(многочлен, биекция) для ранее вычисленного изоморфного графа или None"""
        if key is None:
            key = self.bucket_key(graph)
        for other, poly in self.iso_buckets.get(key, ()):
            mapping = find_isomorphism(graph, other, check_fingerprint=False)
            if mapping is not None:
                return poly, other, mapping
        return None

    def store_isomorphic(self, graph, poly, key=None):
        if key is None:
            key = self.bucket_key(graph)
        self.iso_buckets.setdefault(key, []).append((graph, poly))

    def __len__(self):
        return len(self.exact)


# ============================================================================
# ДВИЖОК
# ============================================================================

class TutteEngine:
    """Одно вычисление T(G): кэш и счетчики принадлежат экземпляру"""

    def __init__(self, config=None, trace_stream=None):
        self.config = config or EngineConfig.from_settings()
        self.trace_stream = trace_stream
        self.memo = MemoStore(self.config.prime)
        self.stats = RunStats()
        self._mode = self.config.contraction_mode
        self._caching = self.config.iso_mode != ISO_NONE
        self._full = self.config.iso_mode == ISO_FULL
        self._started = None
        self._last_first = None

    def compute(self, graph):
        """Полином Татта связного графа: (BiPoly, RunStats)"""
        if not graph.is_connected():
            raise GraphInputError('Полином Татта вычисляется только для связного графа')
        config = self.config
        logger.info(
            'Вычисление T(G): n=%d m=%d heuristic=%s order=%s iso=%s blocks=%s',
            graph.n, graph.m, config.heuristic, config.order, config.iso_mode, config.use_blocks,
        )
        graph = apply_order(graph, make_order(graph, config.order, config.seed))

        ensure_recursion_limit(4 * graph.m + 200)
        self._started = self._last_first = time.perf_counter()
        try:
            if config.use_blocks:
                result = BiPoly.constant(1)
                for block in graph.blocks():
                    result = result.mul(self._tutte(block))
            else:
                result = self._tutte(graph)
        finally:
            self.stats.elapsed = time.perf_counter() - self._started
            self._sample_memory(check_budget=False)
        logger.info('Готово за %.2f с: %s', self.stats.elapsed, self.stats.summary())
        return result, self.stats

    def _sample_memory(self, check_budget=True):
        memory = current_memory_bytes()
        if memory > self.stats.peak_memory_bytes:
            self.stats.peak_memory_bytes = memory
        logger.debug('Вызовов %d, память %d байт', self.stats.calls, memory)
        budget = self.config.memory_budget
        if check_budget and budget and memory > budget:
            raise ResourceLimitError(
                f'Превышен бюджет памяти: {memory} > {budget} байт', stats=self.stats
            )
        return memory

    def _trace(self, n):
        if n in self.stats.wall_time:
            return
        now = time.perf_counter()
        trace_emit(self.stats, n, now - self._last_first, current_memory_bytes(), self.trace_stream)
        self._last_first = now

    def _tutte(self, graph):
        graph, loops = graph.strip_loops()
        bridges = graph.bridge_list() if graph.m else []
        if bridges:
            graph = graph.contract_edges(bridges, self._mode)
        if not graph.m:
            return BiPoly.monomial(len(bridges), loops)
        return self._core(graph).mul_monomial(len(bridges), loops)

    def _core(self, graph):
        """Граф без петель и мостов, m >= 1"""
        stats = self.stats
        stats.calls += 1
        if stats.calls % self.config.memory_report_interval == 0:
            self._sample_memory()

        key = None
        if self._caching:
            poly = self.memo.lookup_exact(graph)
            if poly is not None:
                stats.ident += 1
                return poly
            if self._full and graph.n >= self.config.min_iso_vertices:
                key = self.memo.bucket_key(graph)
                found = self.memo.lookup_isomorphic(graph, key)
                if found is not None:
                    poly, other, mapping = found
                    if self.config.debug_checks:
                        _check_isomorphism(graph, other, mapping)
                    stats.isom += 1
                    self.memo.store_exact(graph, poly)
                    return poly

        e = heuristics.select_edge(graph, self.config.heuristic)
        if self.config.debug_checks and (e.u == e.v or e in graph.bridges()):
            raise AssertionError(f'Выбрано ребро {e}, являющееся петлей или мостом')
        stats.sum_selected_degree += graph.degree(e.u)
        stats.selections += 1

        poly = self._tutte(graph.delete_edge(e)).add(
            self._tutte(graph.contract_edge(e, self._mode))
        )

        if self._caching:
            self.memo.store_exact(graph, poly)
            if key is not None:
                self.memo.store_isomorphic(graph, poly, key)
        if self.config.trace:
            self._trace(graph.n)
        return poly


def _check_isomorphism(graph, other, mapping):
    for v in range(1, graph.n + 1):
        for w in range(v, graph.n + 1):
            if graph.multiplicity(v, w) != other.multiplicity(mapping[v], mapping[w]):
                raise AssertionError('Совпадение в корзине изоморфизма не подтверждено')


def tutte(graph, config=None, trace_stream=None):
    """Полином Татта T(G, x, y) и статистика вычисления"""
    return TutteEngine(config, trace_stream).compute(graph)
