from django.apps import AppConfig


class SgwsConfig(AppConfig):
    default_auto_field = "django.db.models.BigAutoField"
    name = "sgws"
    verbose_name = "Special generalized Werner states"
