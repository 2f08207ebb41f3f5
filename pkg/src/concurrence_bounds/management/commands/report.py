"""
Print every concurrence lower bound of one state
"""

import json
import logging

from django.core.management.base import BaseCommand

from concurrence_bounds.api import render_report, state_from_options
from concurrence_bounds.bounds import full_report
from concurrence_bounds.management.options import add_state_arguments, command_errors

log = logging.getLogger(__name__)


class Command(BaseCommand):
    """
    Evaluate the correlation, PPT and realignment bounds on a family member
    or on a state read from a JSON file.
    """

    help = "Print ||T||_F, ||T||_tr, K, raw and clamped bounds for one state"
    requires_system_checks = []

    def add_arguments(self, parser):
        add_state_arguments(parser)
        parser.add_argument(
            "--json", action="store_true", help="Print the report as a JSON object"
        )

    def handle(self, *args, **options):  # noqa: ARG002
        """Build the state and print its bounds"""
        with command_errors():
            report = full_report(state_from_options(options))
        if options["json"]:
            self.stdout.write(json.dumps(report.as_dict(), indent=2))
        else:
            self.stdout.write(render_report(report))
