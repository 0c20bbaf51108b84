from django.apps import AppConfig


class CmatrixConfig(AppConfig):
    default_auto_field = "django.db.models.BigAutoField"
    name = "cmatrix"
    verbose_name = "Dense complex linear algebra"
