from django.apps import AppConfig


class SingularitiesConfig(AppConfig):
    name = 'singularities'
    verbose_name = 'Weight systems and Orlik blocks'
