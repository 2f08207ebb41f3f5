"""Command-line entry point: the concurrence-bounds management commands."""

import os
import sys


def main():
    """Run a management command with the standalone settings"""
    os.environ.setdefault(
        "DJANGO_SETTINGS_MODULE", "concurrence_bounds.settings.standalone"
    )
    error_msg = (
        "Couldn't import Django. Are you sure it's installed and "
        "available on your PYTHONPATH environment variable? Did you "
        "forget to activate a virtual environment?"
    )

    try:
        from django.core.management import execute_from_command_line  # noqa: PLC0415
    except ImportError as exc:
        raise ImportError(error_msg) from exc
    execute_from_command_line(sys.argv)


if __name__ == "__main__":
    main()
