from django.apps import AppConfig


class SepConfig(AppConfig):
    default_auto_field = "django.db.models.BigAutoField"
    name = "sep"
    verbose_name = "Separability certification"
