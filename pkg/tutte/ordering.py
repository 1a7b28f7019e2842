"""
Перенумерация вершин входного графа перед рекурсией.

Стратегии: input (исходный порядок), random (случайная перестановка),
bfs (обход в ширину) и sharc (порядок «коротких дуг»).
"""
import random
from collections import deque, namedtuple

from .exceptions import GraphInputError

INPUT = 'input'
RANDOM = 'random'
BFS = 'bfs'
SHARC = 'sharc'
STRATEGIES = (INPUT, RANDOM, BFS, SHARC)


VertexOrder = namedtuple('VertexOrder', ['perm', 'strategy', 'seed'])
VertexOrder.__new__.__defaults__ = (INPUT, None)


def _require_connected(graph):
    if not graph.is_connected():
        raise GraphInputError('Порядок вершин строится только для связного графа')


def input_order(graph):
    return VertexOrder(tuple(range(1, graph.n + 1)), INPUT, None)


def random_order(n, seed):
    """Равномерно выбранная перестановка 1..n, воспроизводимая при фиксированном seed"""
    if n < 1:
        raise GraphInputError(f'Число вершин должно быть положительным, получено {n}')
    perm = list(range(1, n + 1))
    random.Random(seed).shuffle(perm)
    return VertexOrder(tuple(perm), RANDOM, seed)


def bfs_order(graph):
    """Обход в ширину из вершины 1, соседи по возрастанию меток"""
    _require_connected(graph)
    seen = {1}
    perm = [1]
    queue = deque([1])
    while queue:
        u = queue.popleft()
        for w in graph.neighbors(u):
            if w not in seen:
                seen.add(w)
                perm.append(w)
                queue.append(w)
    return VertexOrder(tuple(perm), BFS, None)


def _trace(parent, v, in_order):
    """Путь от вершины из S до v по массиву предков (без вершины из S)"""
    path = []
    while not in_order[v]:
        path.append(v)
        v = parent[v]
    path.reverse()
    return path


def _find_short_arc(graph, order, in_order):
    """
    Первый найденный обходом в ширину путь u -> v1 -> ... -> vm -> w,
    где u, w из S, а v1..vm - новые попарно различные вершины.
    Очередь начинается с вершин S по возрастанию меток. Внутренние
    вершины возвращаются начиная со стороны w: [vm, ..., v1].
    Возвращает список или None, если такого пути нет.
    """
    n = graph.n
    parent = [0] * (n + 1)
    queue = deque(sorted(order))

    while queue:
        u = queue.popleft()
        if in_order[u]:
            for w in graph.neighbors(u):
                if in_order[w]:
                    # ребра внутри S не дают новых вершин
                    continue
                if not parent[w]:
                    parent[w] = u
                    queue.append(w)
                elif parent[w] != u:
                    # w уже найдена другой вершиной S: дуга из одной вершины
                    return [w]
            continue
        skipped_parent = False
        for w in graph.neighbors(u):
            if w == parent[u] and not skipped_parent:
                # ребро, по которому пришли в u
                skipped_parent = True
                continue
            if in_order[w]:
                return _trace(parent, u, in_order)[::-1]
            if parent[w]:
                head = _trace(parent, u, in_order)
                tail = _trace(parent, w, in_order)
                if set(head).isdisjoint(tail):
                    return tail + head[::-1]
                continue
            parent[w] = u
            queue.append(w)
    return None


def sharc_order(graph):
    """
    Порядок «коротких дуг» (SHARC).

    S = [1]; пока |S| < n, обходом в ширину от вершин S (по возрастанию
    меток, соседи тоже по возрастанию) ищется первый путь из S обратно
    в S через хотя бы одну новую вершину, и его внутренние вершины
    дописываются в S, начиная с конца, ближнего к вершине закрытия дуги.
    Если пути нет (мост), дописывается наименьшая вершина вне S,
    смежная с S. Состояние обхода строится заново на каждой итерации.
    """
    _require_connected(graph)
    n = graph.n
    order = [1]
    in_order = [False] * (n + 1)
    in_order[1] = True
    while len(order) < n:
        arc = _find_short_arc(graph, order, in_order)
        if not arc:
            arc = [min(
                w for s in order for w in graph.neighbors(s) if not in_order[w]
            )]
        for v in arc:
            in_order[v] = True
        order.extend(arc)
    return VertexOrder(tuple(order), SHARC, None)


def make_order(graph, strategy, seed=None):
    """Построить порядок вершин по имени стратегии"""
    if strategy == INPUT:
        return input_order(graph)
    if strategy == RANDOM:
        return random_order(graph.n, seed)
    if strategy == BFS:
        return bfs_order(graph)
    if strategy == SHARC:
        return sharc_order(graph)
    raise GraphInputError(f'Неизвестная стратегия порядка вершин: {strategy}')


def apply_order(graph, order):
    """Вершина в позиции i последовательности S получает метку i"""
    if len(order.perm) != graph.n:
        raise GraphInputError(
            f'Длина перестановки {len(order.perm)} не совпадает с числом вершин {graph.n}'
        )
    return graph.relabel(order.perm)
