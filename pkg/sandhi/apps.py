from django.apps import AppConfig


class SandhiConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'sandhi'
    verbose_name = 'Tamil noun sandhi'
