from __future__ import annotations

from django.apps import AppConfig


class FiniteAlgebraConfig(AppConfig):
    name = "finite_algebra"
