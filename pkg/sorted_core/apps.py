from __future__ import annotations

from django.apps import AppConfig


class SortedCoreConfig(AppConfig):
    name = "sorted_core"
