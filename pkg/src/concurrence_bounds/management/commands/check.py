"""
Run the property-based validation suites
"""

import logging

from django.conf import settings
from django.core.management.base import BaseCommand

from concurrence_bounds.checks import run_all
from concurrence_bounds.exceptions import CheckFailedError
from concurrence_bounds.management.options import command_errors

log = logging.getLogger(__name__)

MAX_REPORTED_FAILURES = 10


class Command(BaseCommand):
    """
    Replaces Django's system check command: validates the Bloch identities, the
    exactness of the pure-state formulas and the soundness of every lower bound
    on seeded random states. Exits with status 1 when any case fails.
    """

    help = "Validate identities and bounds on seeded random states"
    requires_system_checks = []

    def add_arguments(self, parser):
        parser.add_argument(
            "--seed", type=int, default=settings.CONCURRENCE_BOUNDS_CHECK_SEED
        )
        parser.add_argument(
            "--samples", type=int, default=settings.CONCURRENCE_BOUNDS_CHECK_SAMPLES
        )
        parser.add_argument(
            "--trials",
            type=int,
            default=settings.CONCURRENCE_BOUNDS_DECOMPOSITION_TRIALS,
            help="Random decompositions tried per two-qubit state",
        )

    def handle(self, *args, **options):  # noqa: ARG002
        """Run the suites, print pass counts and the first failures"""
        with command_errors():
            results = run_all(
                dimensions=settings.CONCURRENCE_BOUNDS_CHECK_DIMENSIONS,
                samples=options["samples"],
                seed=options["seed"],
                trials=options["trials"],
                scalar_points=settings.CONCURRENCE_BOUNDS_SCALAR_LEMMA_POINTS,
            )
        failures = []
        for result in results:
            self.stdout.write(f"{result.name}: {result.passed}/{result.total} passed")
            failures.extend(result.failures)
        for failure in failures[:MAX_REPORTED_FAILURES]:
            self.stdout.write(
                f"FAILED {failure.suite} [{failure.case}] seed={failure.seed}: "
                f"{failure.detail}"
            )
        with command_errors():
            if failures:
                log.error("%d validation cases failed", len(failures))
                raise CheckFailedError
