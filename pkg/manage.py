#!/usr/bin/env python
"""
Командная строка проекта tutte_count.

    python manage.py compute graph.txt
    python manage.py gen petersen 5 2
    python manage.py verify graph.txt --oracle
    python manage.py bench petersen --k 3 --range 5 10
    python manage.py test tutte --exclude-tag slow
"""
import os
import sys


def main():
    """Запуск команды управления"""
    os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'tutte_count.settings')
    try:
        from django.core.management import execute_from_command_line
    except ImportError as exc:
        raise ImportError(
            "Couldn't import Django. Are you sure it's installed and "
            "available on your PYTHONPATH environment variable? Did you "
            "forget to activate a virtual environment?"
        ) from exc
    execute_from_command_line(sys.argv)


if __name__ == '__main__':
    main()
