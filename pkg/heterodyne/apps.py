from django.apps import AppConfig


class HeterodyneConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'heterodyne'
