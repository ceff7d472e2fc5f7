#!/usr/bin/env python
import os
import sys

if __name__ == "__main__":
    os.environ.setdefault("DJANGO_SETTINGS_MODULE", "SortedAlgebra.settings")
    try:
        from django.core.management import execute_from_command_line
    except ImportError:
        # only report a missing django; any other import error propagates
        try:
            import django
        except ImportError:
            raise ImportError(
                "Couldn't import Django. Is it installed and on your PYTHONPATH? "
                "Try 'poetry install' and run the commands inside 'poetry run'."
            )
        raise
    execute_from_command_line(sys.argv)
