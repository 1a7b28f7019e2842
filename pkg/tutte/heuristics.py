"""
Эвристики выбора ребра для шага удаления-стягивания.

MINDEG: u - первая вершина минимальной степени, v - первый сосед u
минимальной степени. VORDER: u - первая вершина графа, v - первый
сосед u. VORDER-pull и VORDER-push выбирают одно и то же ребро и
различаются только режимом стягивания.
"""
from .exceptions import GraphInputError
from .multigraph import Edge, PULL, PUSH

MINDEG = 'mindeg'
VORDER_PULL = 'vorder-pull'
VORDER_PUSH = 'vorder-push'
HEURISTICS = (MINDEG, VORDER_PULL, VORDER_PUSH)

# Режим стягивания для каждой эвристики
CONTRACTION_MODE = {
    MINDEG: PULL,
    VORDER_PULL: PULL,
    VORDER_PUSH: PUSH,
}


def normalize(tag):
    """Принимает как 'vorder-push', так и 'vorder_push'"""
    tag = str(tag).replace('_', '-').lower()
    if tag not in HEURISTICS:
        raise GraphInputError(f'Неизвестная эвристика: {tag}')
    return tag


def contraction_mode(tag):
    return CONTRACTION_MODE[normalize(tag)]


def select_edge(graph, heuristic):
    """
    Выбрать ребро e = (u, v) для T(G) = T(G - e) + T(G / e).
    Граф должен быть без петель и мостов и содержать хотя бы одно ребро.
    """
    heuristic = normalize(heuristic)
    if graph.m < 1:
        raise GraphInputError('В графе нет ребер для выбора')

    if heuristic == MINDEG:
        degrees = graph.degrees()
        u = None
        for v, d in enumerate(degrees, start=1):
            if d and (u is None or d < degrees[u - 1]):
                u = v
        v = min(graph.neighbors(u), key=lambda w: (degrees[w - 1], w))
        return Edge(u, v)

    for u in range(1, graph.n + 1):
        neighbors = graph.neighbors(u)
        if neighbors:
            return Edge(u, neighbors[0])
    raise GraphInputError('В графе нет ребер для выбора')
