"""
Locate where one bound overtakes others along a one-parameter family
"""

from django.conf import settings
from django.core.management.base import BaseCommand

from concurrence_bounds.api import find_crossover
from concurrence_bounds.constants import SWEEPABLE_FAMILIES
from concurrence_bounds.management.options import add_range_arguments, command_errors


class Command(BaseCommand):
    """
    Print the first parameter where ``--bound`` minus the largest ``--against``
    bound changes sign. Defaults compare thm2_c with caf_c, and on example2
    with the closed-form pra_c and old_c bounds.
    """

    help = "Find the parameter where one raw bound crosses the best of others"
    requires_system_checks = []

    def add_arguments(self, parser):
        parser.add_argument("--family", choices=SWEEPABLE_FAMILIES, required=True)
        add_range_arguments(parser, settings.CONCURRENCE_BOUNDS_SWEEP_STEP)
        parser.add_argument("--bound", default=None)
        parser.add_argument("--against", nargs="+", default=None)

    def handle(self, *args, **options):  # noqa: ARG002
        """Locate the first crossing and print it"""
        with command_errors():
            crossing = find_crossover(
                options["family"],
                bound=options["bound"],
                against=options["against"],
                start=options["start"],
                stop=options["stop"],
                step=options["step"],
                tolerance=settings.CONCURRENCE_BOUNDS_CROSSOVER_TOLERANCE,
                d1=options["d1"],
            )
        self.stdout.write(f"{crossing:.9f}")
