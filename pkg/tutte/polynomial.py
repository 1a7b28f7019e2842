"""
Точная арифметика многочленов с целыми коэффициентами произвольной точности.

BiPoly - разреженный многочлен от x и y (полином Татта T(G, x, y)).
UniPoly - плотный многочлен от одной переменной (R_p(G) и P_λ(G)).
"""
from fractions import Fraction
from math import comb

from .exceptions import GraphInputError


# ============================================================================
# ДВУМЕРНЫЕ МНОГОЧЛЕНЫ
# ============================================================================

def _graded_key(exponents):
    i, j = exponents
    return (-(i + j), -i)


def _render_term(coeff, factors):
    """Одночлен вида c*x^i*y^j; единичные коэффициенты и показатели опускаются"""
    parts = [f'{name}^{exp}' if exp > 1 else name for name, exp in factors if exp]
    if not parts:
        return str(coeff)
    if coeff == 1:
        return '*'.join(parts)
    if coeff == -1:
        return '-' + '*'.join(parts)
    return '*'.join([str(coeff)] + parts)


def _join_terms(terms):
    if not terms:
        return '0'
    text = terms[0]
    for term in terms[1:]:
        if term.startswith('-'):
            text += ' - ' + term[1:]
        else:
            text += ' + ' + term
    return text


class BiPoly:
    """Разреженный многочлен: словарь {(i, j): коэффициент} без нулевых коэффициентов"""

    __slots__ = ('terms',)

    def __init__(self, terms=None):
        if terms is None:
            terms = {}
        self.terms = {k: c for k, c in dict(terms).items() if c}

    @classmethod
    def _trusted(cls, terms):
        poly = cls.__new__(cls)
        poly.terms = terms
        return poly

    @classmethod
    def constant(cls, c):
        return cls({(0, 0): c})

    @classmethod
    def monomial(cls, i, j, c=1):
        if i < 0 or j < 0:
            raise GraphInputError(f'Отрицательный показатель одночлена: ({i}, {j})')
        return cls({(i, j): c})

    @classmethod
    def x(cls):
        return cls.monomial(1, 0)

    @classmethod
    def y(cls):
        return cls.monomial(0, 1)

    def is_zero(self):
        return not self.terms

    def add(self, other):
        """Почленная сумма"""
        if len(self.terms) < len(other.terms):
            small, large = self.terms, other.terms
        else:
            small, large = other.terms, self.terms
        result = dict(large)
        for key, c in small.items():
            total = result.get(key, 0) + c
            if total:
                result[key] = total
            else:
                del result[key]
        return BiPoly._trusted(result)

    def mul(self, other):
        """Произведение (раскрытие скобок)"""
        result = {}
        for (i1, j1), c1 in self.terms.items():
            for (i2, j2), c2 in other.terms.items():
                key = (i1 + i2, j1 + j2)
                result[key] = result.get(key, 0) + c1 * c2
        return BiPoly(result)

    def mul_monomial(self, i, j):
        """Умножение на x^i * y^j"""
        if i < 0 or j < 0:
            raise GraphInputError(f'Отрицательный показатель одночлена: ({i}, {j})')
        if not i and not j:
            return self
        return BiPoly._trusted({(a + i, b + j): c for (a, b), c in self.terms.items()})

    def eval(self, x0, y0):
        """Точное значение в рациональной точке (x0, y0)"""
        x0, y0 = Fraction(x0), Fraction(y0)
        total = Fraction(0)
        for (i, j), c in self.terms.items():
            total += c * x0 ** i * y0 ** j
        return total

    def y_coefficients_at(self, x0):
        """Частичная подстановка x = x0: словарь {j: коэффициент при y^j}"""
        x0 = Fraction(x0)
        result = {}
        for (i, j), c in self.terms.items():
            result[j] = result.get(j, 0) + c * x0 ** i
        return {j: c for j, c in result.items() if c}

    def restrict_y0(self):
        """T(x, 0): только члены без y"""
        return BiPoly._trusted({k: c for k, c in self.terms.items() if k[1] == 0})

    def substitute_x_linear(self, c0, c1, variable='t'):
        """
        Подстановка x = c0 + c1*t в многочлен без y.
        Возвращает UniPoly от t.
        """
        if any(j for _, j in self.terms):
            raise GraphInputError('Подстановка x = c0 + c1*t требует многочлен без переменной y')
        degree = max((i for i, _ in self.terms), default=0)
        coeffs = [0] * (degree + 1)
        for (i, _), c in self.terms.items():
            for k in range(i + 1):
                coeffs[k] += c * comb(i, k) * c0 ** (i - k) * c1 ** k
        return UniPoly(coeffs, variable)

    def degree_x(self):
        return max((i for i, _ in self.terms), default=0)

    def degree_y(self):
        return max((j for _, j in self.terms), default=0)

    def coefficient(self, i, j):
        return self.terms.get((i, j), 0)

    def sorted_terms(self):
        """Члены в градуированном лексикографическом порядке"""
        return sorted(self.terms.items(), key=lambda item: _graded_key(item[0]))

    def __add__(self, other):
        if isinstance(other, int):
            other = BiPoly.constant(other)
        return self.add(other)

    __radd__ = __add__

    def __mul__(self, other):
        if isinstance(other, int):
            other = BiPoly.constant(other)
        return self.mul(other)

    __rmul__ = __mul__

    def __pow__(self, k):
        result = BiPoly.constant(1)
        for _ in range(k):
            result = result.mul(self)
        return result

    def __eq__(self, other):
        if isinstance(other, int):
            other = BiPoly.constant(other)
        if not isinstance(other, BiPoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __str__(self):
        return _join_terms([
            _render_term(c, (('x', i), ('y', j))) for (i, j), c in self.sorted_terms()
        ])

    def __repr__(self):
        return f'BiPoly({self})'


# ============================================================================
# ОДНОМЕРНЫЕ МНОГОЧЛЕНЫ
# ============================================================================

class UniPoly:
    """Плотный многочлен: коэффициенты от младшей степени к старшей"""

    __slots__ = ('coeffs', 'variable')

    def __init__(self, coeffs, variable='t'):
        coeffs = list(coeffs)
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        self.coeffs = coeffs
        self.variable = variable

    @classmethod
    def monomial(cls, k, variable='t', c=1):
        return cls([0] * k + [c], variable)

    @classmethod
    def binomial_power(cls, c0, c1, k, variable='t'):
        """(c0 + c1*t)^k"""
        return cls([comb(k, i) * c0 ** (k - i) * c1 ** i for i in range(k + 1)], variable)

    def degree(self):
        return len(self.coeffs) - 1

    def leading_coefficient(self):
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self):
        return not self.coeffs

    def __add__(self, other):
        size = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + [0] * (size - len(self.coeffs))
        b = other.coeffs + [0] * (size - len(other.coeffs))
        return UniPoly([p + q for p, q in zip(a, b)], self.variable)

    def __mul__(self, other):
        if isinstance(other, int):
            return UniPoly([c * other for c in self.coeffs], self.variable)
        if not self.coeffs or not other.coeffs:
            return UniPoly([], self.variable)
        result = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                result[i + j] += a * b
        return UniPoly(result, self.variable)

    __rmul__ = __mul__

    def eval(self, t0):
        """Точное значение (схема Горнера)"""
        t0 = Fraction(t0)
        total = Fraction(0)
        for c in reversed(self.coeffs):
            total = total * t0 + c
        return total

    def __eq__(self, other):
        if not isinstance(other, UniPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(tuple(self.coeffs))

    def __str__(self):
        name = self.variable
        return _join_terms([
            _render_term(c, ((name, k),))
            for k, c in reversed(list(enumerate(self.coeffs))) if c
        ])

    def __repr__(self):
        return f'UniPoly({self}, variable={self.variable!r})'
