"""
Усеченный икосаэдр TI и двойственный к нему граф TI*.

Вершины TI пронумерованы концентрическими циклами: пятиугольник 1..5,
цикл 6..20, цикл 21..40, цикл 41..55 и пятиугольник 56..60. Внутри
кольца вершины идут по порядку обхода; i пробегает 0..4, индексы
берутся по модулю 5.

    кольцо 2: q_i = 6+3i,  a_i = 7+3i,  a'_i = 8+3i
    кольцо 3: b_i = 21+4i, y_i = 22+4i, x_i = 23+4i, b'_i = 24+4i
    кольцо 4: d_i = 41+3i, z_i = 42+3i, d'_i = 43+3i

Вершины TI* - грани TI: полюс P0 = 1, шестиугольники H_i = 2+i,
F_i = 7+2i (пятиугольники), G_i = 8+2i, X_i = 17+2i (пятиугольники),
K_i = 18+2i, L_i = 27+i и полюс P1 = 32.
"""

TI_VERTICES = 60
TI_DUAL_VERTICES = 32


def _cycle(first, length):
    return [(first + k, first + (k + 1) % length) for k in range(length)]


def _ti_edges():
    edges = []
    edges += _cycle(1, 5)
    edges += _cycle(6, 15)
    edges += _cycle(21, 20)
    edges += _cycle(41, 15)
    edges += _cycle(56, 5)
    for i in range(5):
        p, t = 1 + i, 56 + i
        q, a, a2 = 6 + 3 * i, 7 + 3 * i, 8 + 3 * i
        b, y, x, b2 = 21 + 4 * i, 22 + 4 * i, 23 + 4 * i, 24 + 4 * i
        d, z, d2 = 41 + 3 * i, 42 + 3 * i, 43 + 3 * i
        edges += [(p, q), (a, b), (a2, b2), (y, d), (x, d2), (z, t)]
    return tuple(sorted((min(u, v), max(u, v)) for u, v in edges))


def _ti_dual_edges():
    p0, p1 = 1, 32

    def h(i):
        return 2 + i % 5

    def f(i):
        return 7 + 2 * (i % 5)

    def g(i):
        return 8 + 2 * (i % 5)

    def x(i):
        return 17 + 2 * (i % 5)

    def k(i):
        return 18 + 2 * (i % 5)

    def l(i):
        return 27 + i % 5

    edges = []
    for i in range(5):
        edges += [
            (p0, h(i)), (h(i - 1), h(i)),
            (h(i), f(i)), (h(i), g(i)), (h(i), f(i + 1)),
            (f(i), g(i)), (g(i), f(i + 1)),
            (g(i), k(i - 1)), (g(i), x(i)), (g(i), k(i)),
            (f(i + 1), k(i)),
            (k(i - 1), x(i)), (x(i), k(i)),
            (x(i), l(i - 1)), (x(i), l(i)),
            (k(i), l(i)), (l(i - 1), l(i)),
            (l(i), p1),
        ]
    return tuple(sorted((min(u, v), max(u, v)) for u, v in edges))


TI_EDGES = _ti_edges()
TI_DUAL_EDGES = _ti_dual_edges()
