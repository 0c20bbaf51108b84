from django.apps import AppConfig


class Ent2qConfig(AppConfig):
    default_auto_field = "django.db.models.BigAutoField"
    name = "ent2q"
    verbose_name = "Two-qubit entanglement measures"
