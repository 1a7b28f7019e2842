"""
Исключения приложения tutte.
"""
from django.core.exceptions import ValidationError


class GraphInputError(ValidationError):
    """Некорректные входные данные: граф, ребро, перестановка, параметры семейства"""


class GenerationError(GraphInputError):
    """Не удалось построить случайный граф с заданными параметрами"""


class ResourceLimitError(Exception):
    """
    Превышен предел ресурсов: бюджет памяти движка или
    ограничение на число ребер у переборного оракула.
    Частичная статистика вычисления доступна в атрибуте stats.
    """

    def __init__(self, message, stats=None):
        super().__init__(message)
        self.stats = stats
