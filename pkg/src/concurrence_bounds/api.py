"""
Service layer behind the management commands: state sources, bound reports,
parameter sweeps and crossover search.
"""

from __future__ import annotations

import csv
import json
import logging
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path
from typing import NamedTuple, Optional

import numpy as np

from concurrence_bounds.bounds import example2_old_lb, example2_pra_lb, full_report
from concurrence_bounds.constants import (
    BOUND_CAF_C,
    BOUND_OLD_C,
    BOUND_PRA_C,
    BOUND_QC_C2,
    BOUND_THM2_C,
    BOUND_THM2_C2,
    CSV_FLOAT_FORMAT,
    EXAMPLE2_ONLY_BOUNDS,
    FAMILY_EXAMPLE1,
    FAMILY_EXAMPLE2,
    FAMILY_ISOTROPIC,
    SWEEPABLE_FAMILIES,
)
from concurrence_bounds.exceptions import (
    InputError,
    NoCrossingError,
    ParamOutOfRangeError,
    StateFileError,
)
from concurrence_bounds.linalg import DensityMatrix
from concurrence_bounds.states import (
    StateFamily,
    StateFamilySpec,
    example1_state,
    example2_slice,
    isotropic_state,
)

log = logging.getLogger(__name__)

FAMILY_PARAMETER = {
    FAMILY_EXAMPLE1: "x",
    FAMILY_EXAMPLE2: "q1",
    FAMILY_ISOTROPIC: "x",
}

DEFAULT_CROSSOVER_PAIRS = {
    FAMILY_EXAMPLE1: (BOUND_THM2_C, (BOUND_CAF_C,)),
    FAMILY_EXAMPLE2: (BOUND_THM2_C, (BOUND_PRA_C, BOUND_OLD_C)),
    FAMILY_ISOTROPIC: (BOUND_THM2_C, (BOUND_CAF_C,)),
}

SWEEP_COLUMNS = (
    "param",
    "t_frobenius",
    BOUND_THM2_C,
    BOUND_CAF_C,
    BOUND_THM2_C2,
    BOUND_QC_C2,
    "best_c",
    "best_c2",
)


class SweepRow(NamedTuple):
    """One grid point of a sweep; pra_c and old_c are set for example2 only"""

    param: float
    t_frobenius: float
    thm2_c: float
    caf_c: float
    thm2_c2: float
    qc_c2: float
    best_c: float
    best_c2: float
    pra_c: Optional[float] = None
    old_c: Optional[float] = None


def load_state_file(path):
    """
    Read a state file: a JSON object with ``d1``, ``d2`` and ``matrix``, the
    latter a row-major list of (d1 d2)^2 ``[re, im]`` pairs.

    Raises:
        StateFileError: unreadable file, malformed JSON or wrong layout
        InvalidStateError: the matrix is not a valid density matrix
    """
    try:
        with Path(path).open(encoding="utf-8") as state_file:
            document = json.load(state_file)
    except OSError as ex:
        msg = f"Unable to read state file {path}: {ex}"
        raise StateFileError(msg) from ex
    except UnicodeDecodeError as ex:
        msg = f"State file {path} is not UTF-8 text: {ex}"
        raise StateFileError(msg) from ex
    except json.JSONDecodeError as ex:
        msg = f"State file {path} is not valid JSON: {ex}"
        raise StateFileError(msg) from ex

    try:
        d1, d2 = document["d1"], document["d2"]
        pairs = np.asarray(document["matrix"], dtype=np.float64)
    except (KeyError, TypeError, ValueError) as ex:
        msg = f"State file {path} must hold d1, d2 and matrix [re, im] pairs: {ex}"
        raise StateFileError(msg) from ex
    for name, value in (("d1", d1), ("d2", d2)):
        if isinstance(value, bool) or not isinstance(value, int):
            msg = f"State file {path} has non-integer {name}={value!r}"
            raise StateFileError(msg)
    size = d1 * d2
    if pairs.shape != (size * size, 2):
        msg = (
            f"State file {path} has matrix of shape {pairs.shape}, "
            f"expected ({size * size}, 2)"
        )
        raise StateFileError(msg)
    mat = (pairs[:, 0] + 1j * pairs[:, 1]).reshape(size, size)
    log.info("Loaded %dx%d state from %s", d1, d2, path)
    return DensityMatrix(d1, d2, mat)


def dump_state_file(rho, path):
    """Write ``rho`` in the state file layout read by load_state_file"""
    flat = rho.mat.reshape(-1)
    document = {
        "d1": rho.d1,
        "d2": rho.d2,
        "matrix": [[float(z.real), float(z.imag)] for z in flat],
    }
    Path(path).write_text(json.dumps(document) + "\n")


def state_from_options(options):
    """Build the state selected by ``--state`` or ``--family`` command options"""
    if options.get("state"):
        return load_state_file(options["state"])
    family = options.get("family")
    if not family:
        msg = "Either --state or --family is required"
        raise InputError(msg)
    params = {
        name: options.get(name)
        for name in ("x", "q1", "q2", "q3", "q4", "d1", "d2", "rank")
        if options.get(name) is not None
    }
    spec = StateFamilySpec(StateFamily(family), params, options.get("seed"))
    return spec.build()


def _format_value(value):
    if value is None:
        return "n/a"
    if isinstance(value, bool):
        return "yes" if value else "no"
    if isinstance(value, float):
        return format(value, CSV_FLOAT_FORMAT)
    return str(value)


def render_report(report):
    """Human readable report, one ``name: value`` line per field"""
    lines = [f"state: {report.d1}x{report.d2}"]
    lines.extend(
        f"{name}: {_format_value(value)}"
        for name, value in report.as_dict().items()
        if name not in ("d1", "d2")
    )
    lines.append(f"clamped_thm2_c: {_format_value(max(0.0, report.thm2_c))}")
    lines.append(f"clamped_caf_c: {_format_value(max(0.0, report.caf_c))}")
    lines.append(f"clamped_thm2_c2: {_format_value(max(0.0, report.thm2_c2))}")
    lines.append(f"clamped_qc_c2: {_format_value(max(0.0, report.qc_c2))}")
    return "\n".join(lines)


def family_state(family, param, d1=2):
    """Member of a one-parameter family"""
    if family == FAMILY_EXAMPLE1:
        return example1_state(param)
    if family == FAMILY_EXAMPLE2:
        return example2_slice(param)
    if family == FAMILY_ISOTROPIC:
        return isotropic_state(d1, param)
    raise ParamOutOfRangeError("family", family, SWEEPABLE_FAMILIES)


def _check_bound_names(family, names):
    known = set(SWEEP_COLUMNS[2:6])
    if family == FAMILY_EXAMPLE2:
        known.update(EXAMPLE2_ONLY_BOUNDS)
    for name in names:
        if name not in known:
            raise ParamOutOfRangeError("bound", name, sorted(known))


def sweep_row(family, param, d1=2):
    """All raw and clamped bounds of one family member"""
    report = full_report(family_state(family, param, d1))
    extra = {}
    if family == FAMILY_EXAMPLE2:
        extra = {
            BOUND_PRA_C: example2_pra_lb(param),
            BOUND_OLD_C: example2_old_lb(param),
        }
    return SweepRow(
        param=float(param),
        t_frobenius=report.t_frobenius,
        thm2_c=report.thm2_c,
        caf_c=report.caf_c,
        thm2_c2=report.thm2_c2,
        qc_c2=report.qc_c2,
        best_c=report.best_c,
        best_c2=report.best_c2,
        **extra,
    )


def bound_values(family, param, d1=2):
    """Named raw bounds of one family member"""
    row = sweep_row(family, param, d1)._asdict()
    return {name: value for name, value in row.items() if value is not None}


def parameter_grid(start, stop, step):
    """
    Evenly spaced grid from ``start`` to ``stop`` inclusive; the last step is
    shortened when the range is not a multiple of ``step``.
    """
    if step <= 0:
        raise ParamOutOfRangeError("step", step, "(0, inf)")
    if stop < start:
        raise ParamOutOfRangeError("to", stop, f"[{start}, inf)")
    count = int(np.floor((stop - start) / step + 1e-9))
    grid = start + step * np.arange(count + 1)
    if stop - grid[-1] > 1e-12:  # noqa: PLR2004
        grid = np.append(grid, stop)
    return np.minimum(grid, stop)


def _check_family_domain(family, start, stop):
    if family not in SWEEPABLE_FAMILIES:
        raise ParamOutOfRangeError("family", family, SWEEPABLE_FAMILIES)
    name = FAMILY_PARAMETER[family]
    for value in (start, stop):
        if not 0 <= value <= 1:
            raise ParamOutOfRangeError(name, value, "[0, 1]")


def sweep(family, start, stop, step, max_workers=1, d1=2):
    """
    Evaluate every bound on the parameter grid. Grid points run concurrently;
    rows come back in parameter order.
    """
    _check_family_domain(family, start, stop)
    grid = parameter_grid(start, stop, step)
    log.info("Sweeping %s over %d points in [%s, %s]", family, len(grid), start, stop)
    with ThreadPoolExecutor(max_workers=max_workers) as executor:
        rows = list(executor.map(lambda p: sweep_row(family, p, d1), grid))
    log.info("Sweep of %s finished", family)
    return rows


def sweep_columns(family):
    """CSV header of a sweep; example2 adds its closed-form bounds"""
    if family == FAMILY_EXAMPLE2:
        return (*SWEEP_COLUMNS, *EXAMPLE2_ONLY_BOUNDS)
    return SWEEP_COLUMNS


def write_sweep_csv(rows, family, stream):
    """CSV with a header row, '.' decimals, 17 significant digits and LF endings"""
    columns = sweep_columns(family)
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(columns)
    for row in rows:
        values = row._asdict()
        writer.writerow(format(values[name], CSV_FLOAT_FORMAT) for name in columns)


def _bound_difference(family, bound, against, d1):
    def difference(param):
        values = bound_values(family, param, d1)
        return values[bound] - max(values[name] for name in against)

    return difference


def find_crossover(  # noqa: PLR0913
    family,
    bound=None,
    against=None,
    start=0.0,
    stop=1.0,
    step=0.005,
    tolerance=1e-6,
    d1=2,
):
    """
    Parameter where ``bound - max(against)`` first changes sign.

    The difference is bracketed on the step grid and refined by bisection down
    to ``tolerance``.

    Raises:
        NoCrossingError: the difference keeps one sign over the grid
    """
    default_bound, default_against = DEFAULT_CROSSOVER_PAIRS.get(
        family, (None, ())
    )
    bound = bound or default_bound
    against = tuple(against or default_against)
    _check_family_domain(family, start, stop)
    _check_bound_names(family, (bound, *against))

    difference = _bound_difference(family, bound, against, d1)
    grid = parameter_grid(start, stop, step)
    signs = np.sign([difference(p) for p in grid])
    changes = [
        index
        for index in range(len(grid) - 1)
        if signs[index] == 0 or signs[index] * signs[index + 1] < 0
    ]
    if not changes:
        raise NoCrossingError
    if len(changes) > 1:
        log.warning(
            "%s - max(%s) changes sign %d times on %s; using the first",
            bound,
            ",".join(against),
            len(changes),
            family,
        )
    index = changes[0]
    low, high = grid[index], grid[index + 1]
    if signs[index] == 0:
        return float(low)
    low_sign = signs[index]
    log.debug("Crossover bracketed in [%s, %s]", low, high)
    while high - low > tolerance:
        middle = (low + high) / 2
        middle_sign = np.sign(difference(middle))
        if middle_sign == 0:
            return float(middle)
        if middle_sign == low_sign:
            low = middle
        else:
            high = middle
    return float((low + high) / 2)
