from __future__ import annotations

from django.apps import AppConfig


class SyntacticConfig(AppConfig):
    name = "syntactic"
