from django.apps import AppConfig


class EndoappConfig(AppConfig):
    name = 'endoapp'
    verbose_name = 'Arithmetic in End(Z_p x Z_{p^m})'
