"""
Tabulate the bounds of a one-parameter family as CSV
"""

import logging
from pathlib import Path

from django.conf import settings
from django.core.management.base import BaseCommand, CommandError

from concurrence_bounds import api
from concurrence_bounds.constants import EXIT_INPUT_ERROR, SWEEPABLE_FAMILIES
from concurrence_bounds.management.options import add_range_arguments, command_errors

log = logging.getLogger(__name__)


class Command(BaseCommand):
    """Sweep a one-parameter family"""

    help = "Write param, ||T||_F and every raw bound on a parameter grid to CSV"
    requires_system_checks = []

    def add_arguments(self, parser):
        parser.add_argument("--family", choices=SWEEPABLE_FAMILIES, required=True)
        add_range_arguments(parser, settings.CONCURRENCE_BOUNDS_SWEEP_STEP)
        parser.add_argument("--out", help="CSV output path (default: stdout)")

    def handle(self, *args, **options):  # noqa: ARG002
        """Evaluate the grid and write the CSV"""
        family = options["family"]
        with command_errors():
            rows = api.sweep(
                family,
                options["start"],
                options["stop"],
                options["step"],
                max_workers=settings.CONCURRENCE_BOUNDS_SWEEP_MAX_WORKERS,
                d1=options["d1"],
            )
        if not options["out"]:
            api.write_sweep_csv(rows, family, self.stdout)
            return
        try:
            with Path(options["out"]).open("w", newline="") as out:
                api.write_sweep_csv(rows, family, out)
        except OSError as ex:
            msg = f"Unable to write {options['out']}: {ex}"
            raise CommandError(msg, returncode=EXIT_INPUT_ERROR) from ex
        log.info("Wrote %d rows to %s", len(rows), options["out"])
