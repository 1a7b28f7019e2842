"""
Инварианты графов.

- характеристический многочлен лапласиана D - A по модулю простого p
  (отпечаток для корзин слоя изоморфизма);
- точная проверка изоморфизма мультиграфов (перебор с возвратом);
- число остовных деревьев по матричной теореме о деревьях.
"""
import logging
from collections import Counter, namedtuple
from functools import lru_cache

from django.conf import settings

from .exceptions import GraphInputError

logger = logging.getLogger(__name__)

DEFAULT_PRIME = 2147483647


CharPolyFingerprint = namedtuple('CharPolyFingerprint', ['prime', 'coeffs'])


def default_prime():
    return getattr(settings, 'TUTTE_CHARPOLY_PRIME', DEFAULT_PRIME)


@lru_cache(maxsize=32)
def is_prime(p):
    """Детерминированный тест Миллера-Рабина для p < 3.3 * 10^24"""
    if p < 2:
        return False
    bases = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
    for q in bases:
        if p % q == 0:
            return p == q
    d, s = p - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in bases:
        x = pow(a, d, p)
        if x in (1, p - 1):
            continue
        for _ in range(s - 1):
            x = x * x % p
            if x == p - 1:
                break
        else:
            return False
    return True


def laplacian_matrix(graph):
    """Матрица D - A без учета петель (целые числа)"""
    n = graph.n
    matrix = [[0] * n for _ in range(n)]
    for u in range(1, graph.n + 1):
        for w in graph.neighbors(u):
            if w != u:
                matrix[u - 1][w - 1] -= 1
                matrix[u - 1][u - 1] += 1
    return matrix


# ============================================================================
# ХАРАКТЕРИСТИЧЕСКИЙ МНОГОЧЛЕН ПО МОДУЛЮ p
# ============================================================================

def _hessenberg(matrix, p):
    """Приведение к верхней форме Хессенберга преобразованиями подобия над F_p"""
    h = [[a % p for a in row] for row in matrix]
    n = len(h)
    for m in range(1, n - 1):
        pivot = next((r for r in range(m, n) if h[r][m - 1]), None)
        if pivot is None:
            continue
        if pivot != m:
            h[pivot], h[m] = h[m], h[pivot]
            for row in h:
                row[pivot], row[m] = row[m], row[pivot]
        inverse = pow(h[m][m - 1], p - 2, p)
        for r in range(m + 1, n):
            factor = h[r][m - 1] * inverse % p
            if not factor:
                continue
            row_m = h[m]
            h[r] = [(a - factor * b) % p for a, b in zip(h[r], row_m)]
            for row in h:
                row[m] = (row[m] + factor * row[r]) % p
    return h


def _sub_scaled(a, b, factor, p):
    """a - factor * b для списков коэффициентов (младшие степени первыми)"""
    result = list(a) + [0] * max(0, len(b) - len(a))
    for k, c in enumerate(b):
        result[k] = (result[k] - factor * c) % p
    return result


def charpoly_modp(matrix, p):
    """Коэффициенты det(tI - M) mod p, от младшей степени к старшей"""
    h = _hessenberg(matrix, p)
    n = len(h)
    polys = [[1]]
    for m in range(1, n + 1):
        previous = polys[m - 1]
        current = _sub_scaled([0] + previous, previous, h[m - 1][m - 1], p)
        t = 1
        for i in range(1, m):
            t = t * h[m - i][m - i - 1] % p
            if not t:
                break
            coef = h[m - i - 1][m - 1] * t % p
            if coef:
                current = _sub_scaled(current, polys[m - i - 1], coef, p)
        polys.append(current)
    return polys[n]


def laplacian_charpoly_modp(graph, p=None):
    """Отпечаток графа: характеристический многочлен лапласиана по модулю p"""
    if p is None:
        p = default_prime()
    if not is_prime(p):
        raise GraphInputError(f'Модуль {p} не является простым числом')
    return CharPolyFingerprint(p, tuple(charpoly_modp(laplacian_matrix(graph), p)))


def bucket_key(graph, p=None):
    """
    Ключ корзины слоя изоморфизма: n, m, мультимножества степеней и петель
    и характеристический многочлен лапласиана.
    """
    fingerprint = laplacian_charpoly_modp(graph, p)
    loops = tuple(sorted(graph.loop_count(v) for v in range(1, graph.n + 1)))
    return (graph.n, graph.m, tuple(sorted(graph.degrees())), loops, fingerprint.coeffs)


# ============================================================================
# ИЗОМОРФИЗМ МУЛЬТИГРАФОВ
# ============================================================================

def _multiplicities(graph):
    """Для каждой вершины: Counter соседей (петля учитывается дважды)"""
    return [None] + [Counter(graph.neighbors(v)) for v in range(1, graph.n + 1)]


def _colors(graph, mult):
    """Цвет вершины: степень, число петель и мультимножество степеней соседей"""
    degrees = graph.degrees()
    colors = [None]
    for v in range(1, graph.n + 1):
        around = sorted(degrees[w - 1] for w in graph.neighbors(v) if w != v)
        colors.append((degrees[v - 1], mult[v][v], tuple(around)))
    return colors


def _search_order(graph, colors):
    """
    Порядок сопоставления вершин: сначала самая ограниченная (наибольшая
    степень, самый редкий цвет), далее - вершина с наибольшим числом уже
    упорядоченных соседей.
    """
    frequency = Counter(colors[1:])
    remaining = set(range(1, graph.n + 1))
    order = []
    links = Counter()
    while remaining:
        v = min(
            remaining,
            key=lambda x: (-links[x], frequency[colors[x]], -graph.degree(x), x),
        )
        remaining.discard(v)
        order.append(v)
        for w in graph.neighbors(v):
            if w in remaining:
                links[w] += 1
    return order


def find_isomorphism(g1, g2, check_fingerprint=True):
    """
    Биекция вершин g1 -> g2, сохраняющая кратности ребер и петли,
    или None, если графы не изоморфны.
    """
    if g1.n != g2.n or g1.m != g2.m:
        return None
    if sorted(g1.degrees()) != sorted(g2.degrees()):
        return None
    mult1, mult2 = _multiplicities(g1), _multiplicities(g2)
    colors1, colors2 = _colors(g1, mult1), _colors(g2, mult2)
    if Counter(colors1[1:]) != Counter(colors2[1:]):
        return None
    if check_fingerprint and laplacian_charpoly_modp(g1) != laplacian_charpoly_modp(g2):
        return None

    by_color = {}
    for w in range(1, g2.n + 1):
        by_color.setdefault(colors2[w], []).append(w)
    order = _search_order(g1, colors1)
    mapping = {}
    used = set()

    def compatible(v, w):
        for x, target in mapping.items():
            if mult1[v][x] != mult2[w][target]:
                return False
        return True

    def extend(depth):
        if depth == len(order):
            return True
        v = order[depth]
        for w in by_color[colors1[v]]:
            if w in used or not compatible(v, w):
                continue
            mapping[v] = w
            used.add(w)
            if extend(depth + 1):
                return True
            del mapping[v]
            used.discard(w)
        return False

    if extend(0):
        return dict(mapping)
    return None


def isomorphic(g1, g2):
    """Существует ли биекция вершин, сохраняющая кратности ребер и числа петель"""
    return find_isomorphism(g1, g2) is not None


# ============================================================================
# ОСТОВНЫЕ ДЕРЕВЬЯ
# ============================================================================

def bareiss_determinant(matrix):
    """Точный определитель целочисленной матрицы (исключение без дробей)"""
    a = [list(row) for row in matrix]
    n = len(a)
    if n == 0:
        return 1
    sign = 1
    previous = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((r for r in range(k + 1, n) if a[r][k]), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        pivot = a[k][k]
        for i in range(k + 1, n):
            row_i = a[i]
            lead = row_i[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * pivot - lead * a[k][j]) // previous
            row_i[k] = 0
        previous = pivot
    return sign * a[n - 1][n - 1]


def spanning_trees(graph):
    """Число остовных деревьев: минор лапласиана без первой строки и столбца"""
    if not graph.is_connected():
        raise GraphInputError('Число остовных деревьев считается только для связного графа')
    matrix = laplacian_matrix(graph)
    minor = [row[1:] for row in matrix[1:]]
    return bareiss_determinant(minor)
