"""
Вспомогательные функции тестов: случайные мультиграфы и перевод в networkx.
"""
import itertools
import random

import networkx as nx

from tutte.multigraph import Multigraph

TRIANGLE = [(1, 2), (1, 3), (2, 3)]


def triangle():
    return Multigraph.from_edges(3, TRIANGLE)


def to_networkx(graph):
    result = nx.MultiGraph()
    result.add_nodes_from(range(1, graph.n + 1))
    result.add_edges_from(graph.edges())
    return result


def random_multigraph(rng, n, m, loops=True):
    """Случайный связный мультиграф: остовное дерево плюс случайные ребра"""
    edges = [(v, rng.randint(1, v - 1)) for v in range(2, n + 1)]
    while len(edges) < m:
        u, v = rng.randint(1, n), rng.randint(1, n)
        if u == v and not loops:
            continue
        edges.append((u, v))
    return Multigraph.from_edges(n, edges)


def random_catalog(seed, count, max_n=6, max_m=10):
    rng = random.Random(seed)
    graphs = []
    for _ in range(count):
        n = rng.randint(1, max_n)
        m = rng.randint(n - 1, max(n - 1, max_m))
        graphs.append(random_multigraph(rng, n, m))
    return graphs


def shuffled(graph, seed):
    perm = list(range(1, graph.n + 1))
    random.Random(seed).shuffle(perm)
    return graph.relabel(perm)


def _canonical(edges, perms):
    return min(
        tuple(sorted(tuple(sorted((p[u - 1], p[v - 1]))) for u, v in edges))
        for p in perms
    )


def connected_multigraph_catalog(max_n, max_m):
    """
    Все связные мультиграфы с петлями и кратными ребрами, n <= max_n и
    m <= max_m, по одному представителю на класс изоморфизма.

    Деревья берутся с родителем меньше потомка; каждый связный граф с
    циклом получается из связного графа с меньшим числом ребер
    добавлением одного ребра.
    """
    for n in range(1, max_n + 1):
        perms = list(itertools.permutations(range(1, n + 1)))
        pairs = list(itertools.combinations_with_replacement(range(1, n + 1), 2))
        parents = itertools.product(*(range(1, v) for v in range(2, n + 1)))
        level = {
            _canonical([(v, p) for v, p in zip(range(2, n + 1), choice)], perms)
            for choice in parents
        }
        for m in range(n - 1, max_m + 1):
            for edges in sorted(level):
                yield Multigraph.from_edges(n, edges)
            if m == max_m:
                break
            level = {_canonical(edges + (pair,), perms) for edges in level for pair in pairs}
