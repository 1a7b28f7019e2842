"""
Переборный оракул: полином Татта как ранговая производящая функция

    T(G, x, y) = сумма по подмножествам ребер A
                 (x - 1)^(r(E) - r(A)) * (y - 1)^(|A| - r(A)),

где r(A) = n - число компонент связности графа (V, A).
Используется только тестами и командой verify.
"""
from collections import Counter, namedtuple
from math import comb

from django.conf import settings

from .exceptions import ResourceLimitError
from .polynomial import BiPoly

DEFAULT_MAX_EDGES = 20


SubsetRank = namedtuple('SubsetRank', ['size', 'rank'])


def max_edges():
    return getattr(settings, 'TUTTE_ORACLE_MAX_EDGES', DEFAULT_MAX_EDGES)


def rank_counts(graph):
    """
    Счетчик пар (|A|, r(A)) по всем подмножествам ребер.
    Перебор ведется в глубину с системой непересекающихся множеств с откатом.
    """
    edges = graph.edges()
    limit = max_edges()
    if len(edges) > limit:
        raise ResourceLimitError(
            f'Переборный оракул ограничен {limit} ребрами, в графе {len(edges)}'
        )
    parent = list(range(graph.n + 1))
    size = [1] * (graph.n + 1)
    counts = Counter()

    def find(x):
        while parent[x] != x:
            x = parent[x]
        return x

    def walk(k, chosen, rank):
        if k == len(edges):
            counts[SubsetRank(chosen, rank)] += 1
            return
        walk(k + 1, chosen, rank)
        u, v = edges[k]
        ru, rv = find(u), find(v)
        if ru == rv:
            walk(k + 1, chosen + 1, rank)
            return
        if size[ru] < size[rv]:
            ru, rv = rv, ru
        parent[rv] = ru
        size[ru] += size[rv]
        walk(k + 1, chosen + 1, rank + 1)
        parent[rv] = rv
        size[ru] -= size[rv]

    walk(0, 0, 0)
    return counts


def _expand(a, b):
    """(x - 1)^a * (y - 1)^b как словарь членов"""
    terms = {}
    for i in range(a + 1):
        ci = comb(a, i) * (-1) ** (a - i)
        for j in range(b + 1):
            terms[(i, j)] = ci * comb(b, j) * (-1) ** (b - j)
    return terms


def tutte_bruteforce(graph):
    """Полином Татта перебором всех подмножеств ребер (m не больше 20)"""
    counts = rank_counts(graph)
    full_rank = graph.n - _components(graph)
    total = {}
    for subset, count in counts.items():
        a = full_rank - subset.rank
        b = subset.size - subset.rank
        for key, c in _expand(a, b).items():
            total[key] = total.get(key, 0) + count * c
    return BiPoly(total)


def _components(graph):
    seen = set()
    count = 0
    for v in range(1, graph.n + 1):
        if v not in seen:
            seen |= graph.component_of(v)
            count += 1
    return count
