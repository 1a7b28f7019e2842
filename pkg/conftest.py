import os

import django

os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'tutte_count.settings')
django.setup()
