"""
Django settings for tutte_count project.

Проект не имеет HTTP-интерфейса и базы данных: Django используется
для конфигурации, команд управления (manage.py) и запуска тестов.

For the full list of settings and their values, see
https://docs.djangoproject.com/en/5.2/ref/settings/
"""

import os
from pathlib import Path
from django.core.management.utils import get_random_secret_key

# Build paths inside the project like this: BASE_DIR / 'subdir'.
BASE_DIR = Path(__file__).resolve().parent.parent

# Загрузка переменных окружения из .env файла
# Для production используйте системные переменные окружения
try:
    from dotenv import load_dotenv
    load_dotenv(BASE_DIR / '.env')
except ImportError:
    # Если python-dotenv не установлен, переменные окружения должны быть установлены в системе
    pass


# Секретный ключ не используется для вычислений, но обязателен для Django
SECRET_KEY = os.getenv('SECRET_KEY', get_random_secret_key())

# Режим отладки включает дополнительные проверки в движке
# (выбранное ребро не является мостом, совпадения по изоморфизму подтверждены)
DEBUG = os.getenv('DEBUG', 'False').lower() in ('true', '1', 'yes')


# Application definition

INSTALLED_APPS = [
    'tutte',
]

# База данных не нужна: кэши живут только в памяти одного вычисления
DATABASES = {}


# Internationalization
# https://docs.djangoproject.com/en/5.2/topics/i18n/

LANGUAGE_CODE = 'ru'

TIME_ZONE = 'Europe/Moscow'

USE_I18N = True

USE_TZ = True


def _env_int(name, default):
    """Целое значение из переменной окружения"""
    value = os.getenv(name, '')
    if not value:
        return default
    try:
        return int(value)
    except ValueError:
        raise ValueError(
            f"Переменная окружения {name} должна быть целым числом, получено: {value!r}"
        )


# ============================================================================
# НАСТРОЙКИ ВЫЧИСЛЕНИЯ ПОЛИНОМА ТАТТА
# ============================================================================

# Значения по умолчанию для флагов команд compute/verify/bench
# Эвристика: mindeg, vorder-pull, vorder-push
TUTTE_DEFAULT_HEURISTIC = os.getenv('TUTTE_DEFAULT_HEURISTIC', 'vorder-push')
# Порядок вершин: input, random, bfs, sharc
TUTTE_DEFAULT_ORDER = os.getenv('TUTTE_DEFAULT_ORDER', 'sharc')
# Режим кэша: none, identical, full
TUTTE_DEFAULT_ISO_MODE = os.getenv('TUTTE_DEFAULT_ISO_MODE', 'identical')

# Проверка изоморфизма выполняется только для графов с числом вершин не меньше порога
TUTTE_ISO_MIN_VERTICES = _env_int('TUTTE_ISO_MIN_VERTICES', 15)

# Простой модуль для характеристического многочлена лапласиана (2^31 - 1)
TUTTE_CHARPOLY_PRIME = _env_int('TUTTE_CHARPOLY_PRIME', 2147483647)

# Через сколько вызовов снимать показания памяти
TUTTE_MEMORY_REPORT_INTERVAL = _env_int('TUTTE_MEMORY_REPORT_INTERVAL', 10000)

# Лимит памяти в байтах (не задан - лимита нет)
TUTTE_MEMORY_BUDGET = _env_int('TUTTE_MEMORY_BUDGET', None)

# Жесткий предел числа ребер для переборного оракула
TUTTE_ORACLE_MAX_EDGES = _env_int('TUTTE_ORACLE_MAX_EDGES', 20)

# Предел числа попыток при генерации случайного регулярного графа
TUTTE_RANDOM_REGULAR_MAX_ATTEMPTS = _env_int('TUTTE_RANDOM_REGULAR_MAX_ATTEMPTS', 100000)

# Число рабочих потоков команды bench
TUTTE_BENCH_WORKERS = _env_int('TUTTE_BENCH_WORKERS', 1)

# Проверки во время вычисления включаются вместе с режимом отладки
TUTTE_DEBUG_CHECKS = DEBUG


# ============================================================================
# ЛОГИРОВАНИЕ
# ============================================================================

TUTTE_LOG_LEVEL = os.getenv('TUTTE_LOG_LEVEL', 'WARNING').upper()

LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'simple': {
            'format': '{asctime} {levelname} {name}: {message}',
            'style': '{',
        },
    },
    'handlers': {
        'console': {
            'class': 'logging.StreamHandler',
            'formatter': 'simple',
        },
    },
    'loggers': {
        'tutte': {
            'handlers': ['console'],
            'level': TUTTE_LOG_LEVEL,
            'propagate': False,
        },
    },
}
