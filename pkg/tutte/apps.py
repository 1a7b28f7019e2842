from django.apps import AppConfig


class TutteConfig(AppConfig):
    name = 'tutte'
    verbose_name = 'Полином Татта'
