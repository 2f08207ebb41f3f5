"""
Arguments and error mapping shared by the concurrence-bounds commands
"""

import contextlib

from django.core.management.base import CommandError

from concurrence_bounds.constants import EXIT_CHECK_FAILURE, EXIT_INPUT_ERROR
from concurrence_bounds.exceptions import (
    CheckFailedError,
    ComplexCoefficientError,
    InputError,
)
from concurrence_bounds.states import StateFamily


def add_state_arguments(parser):
    """Options selecting one state: a family member or a state file"""
    parser.add_argument(
        "--family", choices=[family.value for family in StateFamily], default=None
    )
    parser.add_argument("--state", help="JSON state file", default=None)
    parser.add_argument("--x", type=float, default=None)
    for name in ("q1", "q2", "q3", "q4"):
        parser.add_argument(f"--{name}", type=float, default=None)
    parser.add_argument("--d1", type=int, default=None)
    parser.add_argument("--d2", type=int, default=None)
    parser.add_argument("--rank", type=int, default=None)
    parser.add_argument("--seed", type=int, default=None)


def add_range_arguments(parser, default_step):
    """--from, --to, --step and the isotropic --d1 for the sweeping commands"""
    parser.add_argument("--from", dest="start", type=float, default=0.0)
    parser.add_argument("--to", dest="stop", type=float, default=1.0)
    parser.add_argument("--step", type=float, default=default_step)
    parser.add_argument(
        "--d1", type=int, default=2, help="Local dimension of the isotropic family"
    )


@contextlib.contextmanager
def command_errors():
    """
    Re-raise package errors as CommandError: exit status 2 for bad input,
    1 for failed validation suites
    """
    try:
        yield
    except (InputError, ComplexCoefficientError) as ex:
        raise CommandError(str(ex), returncode=EXIT_INPUT_ERROR) from ex
    except CheckFailedError as ex:
        raise CommandError(str(ex), returncode=EXIT_CHECK_FAILURE) from ex
