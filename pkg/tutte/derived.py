"""
Многочлены, получаемые из полинома Татта подстановкой.

    R_p(G) = (1 - p)^(n-1) * p^(m-n+1) * T(G, 1, 1/p)
    P_λ(G) = (-1)^(n-1) * λ * T(G, 1 - λ, 0)
"""
import logging

from .engine import tutte
from .exceptions import GraphInputError
from .polynomial import UniPoly

logger = logging.getLogger(__name__)


def _require_connected(graph):
    if not graph.is_connected():
        raise GraphInputError('Граф должен быть связным')


def reliability_from_tutte(poly, n, m):
    """Многочлен надежности по готовому T(G) графа с n вершинами и m ребрами"""
    corank = m - n + 1
    total = UniPoly([], 'p')
    for j, c in poly.y_coefficients_at(1).items():
        # степень по y не превосходит цикломатического числа
        total = total + UniPoly.monomial(corank - j, 'p', int(c))
    return UniPoly.binomial_power(1, -1, n - 1, 'p') * total


def chromatic_from_tutte(poly, n):
    """Хроматический многочлен по готовому T(G) графа с n вершинами"""
    in_lambda = poly.restrict_y0().substitute_x_linear(1, -1, 'λ')
    return in_lambda * UniPoly.monomial(1, 'λ', (-1) ** (n - 1))


def reliability(graph, config=None):
    """Вероятность связности при независимом отказе каждого ребра с вероятностью p"""
    _require_connected(graph)
    poly, _ = tutte(graph, config)
    result = reliability_from_tutte(poly, graph.n, graph.m)
    logger.info('R_p(G) степени %d', result.degree())
    return result


def chromatic(graph, config=None):
    """Число правильных раскрасок в λ цветов как многочлен от λ"""
    _require_connected(graph)
    poly, _ = tutte(graph, config)
    result = chromatic_from_tutte(poly, graph.n)
    logger.info('P_λ(G) степени %d', result.degree())
    return result
