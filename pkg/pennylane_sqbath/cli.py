# Copyright 2024 Xanadu Quantum Technologies Inc.

# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at

#     http://www.apache.org/licenses/LICENSE-2.0

# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
r"""
Command line interface
======================

.. currentmodule:: pennylane_sqbath.cli

The ``sqbath`` command drives time evolutions and parameter sweeps and
writes the results as CSV tables, optionally with SVG plots.

.. code-block:: console

    $ sqbath evolve --r12 0.1 --temp 1 --squeeze 0.35 --t-max 10 --out evolve.csv
    $ sqbath sweep-r12 --t 1 --range 0.05:1.5:0.01 --temps 1,2 --svg sweep.svg
    $ sqbath state bell.txt

Settings are taken, in increasing order of precedence, from the built-in
defaults, a flat TOML file given with ``--config`` and the command line flags.

Exit status is ``0`` on success, ``2`` for configuration errors and ``3``
when a physical invariant is violated.

.. autosummary::
   :nosignatures:

   RunConfig
   load_config
   build_config
   run_evolve
   run_sweep_r12
   run_sweep_temp
   run_state
   run_qfi
   main

Code details
~~~~~~~~~~~~
"""
import argparse
import csv
import io
import logging
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Optional, Tuple

import numpy as np
import toml

from ._version import __version__
from .bath import BathParams, build_liouvillian
from .evolve import initial_state_eg, state_at, trajectory, validate_density_matrix
from .exceptions import (
    ConfigError,
    NormalizationError,
    PhysicsInvariantError,
    PositivityError,
    SqBathError,
    SymmetryError,
)
from .linalg import POSITIVITY_TOL, TRACE_TOL, eigvalsh
from .measures import default_step, measure_report, qfi, qfi_series
from .teleport import teleport_report

log = logging.getLogger(__name__)

MODES = ("evolve", "sweep-r12", "sweep-temp", "state", "qfi")

MEASURE_COLUMNS = (
    "t",
    "c_rel",
    "concurrence",
    "discord",
    "consonance",
    "lqu",
    "qfi",
    "max_fidelity",
    "fidelity_deviation",
    "det_t",
    "trace_err",
    "min_eig",
)

DEFAULT_RANGES = {"sweep-r12": "0.05:1.5:0.01", "sweep-temp": "0.5:3:0.1"}

# config keys that are fields of BathParams, with the field they set
BATH_KEYS = {
    "temp": "temperature",
    "squeeze": "squeeze",
    "phi": "phi",
    "gamma1": "gamma1",
    "gamma2": "gamma2",
    "r12": "r12",
    "mu_dot_rhat": "mu_dot_rhat",
    "omega1": "omega1",
    "omega2": "omega2",
    "k0_scale": "k0_scale",
    "r12_min": "r12_min",
}

RUN_KEYS = (
    "mode",
    "t",
    "t_max",
    "dt",
    "range",
    "coherence_basis",
    "out",
    "svg",
    "seed",
    "workers",
    "temps",
    "qfi_step",
    "r12_values",
    "mc_samples",
    "state_file",
)


@dataclass(frozen=True)
class RunConfig:  # pylint: disable=too-many-instance-attributes
    """Complete description of one CLI run."""

    mode: str = "evolve"
    bath: BathParams = field(default_factory=BathParams)
    t: float = 1.0
    t_max: float = 10.0
    dt: float = 0.01
    range: Optional[Tuple[float, float, float]] = None  # pylint: disable=redefined-builtin
    coherence_basis: str = "dressed"
    out: Optional[str] = None
    svg: Optional[str] = None
    seed: int = 0
    workers: int = 1
    temps: Tuple[float, ...] = ()
    qfi_step: Optional[float] = None
    r12_values: Tuple[float, ...] = (0.1, 1.1)
    mc_samples: int = 0
    state_file: Optional[str] = None

    def __post_init__(self):
        if self.mode not in MODES:
            raise ConfigError("Unknown mode {!r}; expected one of {}.".format(self.mode, MODES))
        if self.coherence_basis not in ("dressed", "computational"):
            raise ConfigError(
                "coherence_basis must be 'dressed' or 'computational', got {!r}.".format(
                    self.coherence_basis
                )
            )
        if self.t < 0:
            raise ConfigError("t must be non-negative, got {}.".format(self.t))
        if self.t_max <= 0 or self.dt <= 0:
            raise ConfigError("t_max and dt must be positive.")
        if self.workers < 1:
            raise ConfigError("workers must be at least 1, got {}.".format(self.workers))
        if self.qfi_step is not None and self.qfi_step <= 0:
            raise ConfigError("qfi_step must be positive, got {}.".format(self.qfi_step))
        if self.mc_samples and self.mc_samples < 10 ** 4:
            raise ConfigError("mc_samples must be 0 or at least 10000, got {}.".format(self.mc_samples))
        if any(v <= 0 for v in self.temps + self.r12_values):
            raise ConfigError("temps and r12_values must be positive.")
        self._check_qfi_step()

    def _check_qfi_step(self):
        """The QFI difference step must keep every distance of the run positive."""
        if self.mode == "state":
            return
        if self.mode == "sweep-r12":
            distances = (self.sweep_range[0],)
        elif self.mode == "qfi":
            distances = self.r12_values
        else:
            distances = (self.bath.r12,)
        for r12 in distances:
            step = default_step(r12) if self.qfi_step is None else self.qfi_step
            if step >= r12:
                raise ConfigError(
                    "qfi_step {} leaves the r12 domain at r12={}; use a step below {}.".format(
                        step, r12, r12
                    )
                )

    @property
    def sweep_range(self):
        """``(start, stop, step)`` of the swept parameter, with the mode default filled in."""
        if self.range is not None:
            return self.range
        return parse_range(DEFAULT_RANGES.get(self.mode, DEFAULT_RANGES["sweep-r12"]))


def parse_range(text):
    """Parse ``"START:STOP:STEP"`` into a float triple.

    Raises:
        ConfigError: if the text is malformed, the step is not positive or the range is empty
    """
    if isinstance(text, (list, tuple)):
        parts = list(text)
    else:
        parts = str(text).split(":")
    try:
        start, stop, step = (float(p) for p in parts)
    except ValueError as e:
        raise ConfigError("Range must be START:STOP:STEP, got {!r}.".format(text)) from e
    if step <= 0:
        raise ConfigError("Range step must be positive, got {}.".format(step))
    if stop < start:
        raise ConfigError("Range {!r} is empty.".format(text))
    return start, stop, step


def range_values(sweep_range):
    """Grid points ``start, start + step, ...`` up to and including ``stop``."""
    start, stop, step = sweep_range
    count = int(np.floor((stop - start) / step + 1e-9)) + 1
    return np.round(start + step * np.arange(count), 12)


def parse_list(text):
    """Parse a comma separated list of floats."""
    if isinstance(text, (list, tuple)):
        items = list(text)
    else:
        items = [s for s in str(text).split(",") if s.strip()]
    try:
        return tuple(float(s) for s in items)
    except ValueError as e:
        raise ConfigError("Expected a comma separated list of numbers, got {!r}.".format(text)) from e


def load_config(path):
    """Read a flat TOML configuration file.

    Raises:
        ConfigError: if the file cannot be read or contains unknown keys
    """
    try:
        settings = toml.load(path)
    except (OSError, toml.TomlDecodeError) as e:
        raise ConfigError("Cannot read configuration file {}: {}".format(path, e)) from e

    unknown = sorted(set(settings) - set(BATH_KEYS) - set(RUN_KEYS))
    if unknown:
        raise ConfigError("Unknown configuration keys in {}: {}".format(path, ", ".join(unknown)))
    return settings


_CONVERTERS = {
    "range": parse_range,
    "temps": parse_list,
    "r12_values": parse_list,
    "seed": int,
    "workers": int,
    "mc_samples": int,
}


def build_config(settings):
    """Turn a flat mapping of configuration keys into a :class:`RunConfig`.

    Raises:
        ConfigError: if a value is invalid
    """
    unknown = sorted(set(settings) - set(BATH_KEYS) - set(RUN_KEYS))
    if unknown:
        raise ConfigError("Unknown configuration keys: {}".format(", ".join(unknown)))

    bath = {BATH_KEYS[k]: float(v) for k, v in settings.items() if k in BATH_KEYS}
    run = {}
    for key, value in settings.items():
        if key in RUN_KEYS:
            convert = _CONVERTERS.get(key)
            try:
                run[key] = convert(value) if convert else value
            except (TypeError, ValueError) as e:
                raise ConfigError("Invalid value for {}: {!r}".format(key, value)) from e
    for key in ("t", "t_max", "dt", "qfi_step"):
        if run.get(key) is not None:
            run[key] = float(run[key])

    try:
        return RunConfig(bath=BathParams(**bath), **run)
    except ConfigError:
        raise
    except ValueError as e:
        raise ConfigError(str(e)) from e


def _map(func, items, workers):
    """``map`` that keeps input order, on a process pool when ``workers > 1``."""
    items = list(items)
    if workers <= 1 or len(items) <= 1:
        return [func(item) for item in items]
    log.debug("Evaluating %d points on %d worker processes.", len(items), workers)
    chunksize = max(1, len(items) // (4 * workers))
    with ProcessPoolExecutor(max_workers=workers) as executor:
        return list(executor.map(func, items, chunksize=chunksize))


def _measure_row(task):
    """CSV values of :data:`MEASURE_COLUMNS` for one state."""
    t, rho, basis, qfi_value = task
    report = measure_report(rho, basis=basis, qfi=qfi_value).check()
    tele = teleport_report(rho)
    trace_err = abs(np.trace(rho).real - 1)
    min_eig = eigvalsh(rho)[0]
    if trace_err > TRACE_TOL or min_eig < -POSITIVITY_TOL:
        raise PhysicsInvariantError(
            "State at t={} has trace error {:.3e} and minimal eigenvalue {:.3e}.".format(
                t, trace_err, min_eig
            )
        )
    return [
        t,
        report.c_rel,
        report.concurrence,
        report.discord,
        report.consonance,
        report.lqu,
        report.qfi,
        tele.max_fidelity,
        tele.fidelity_deviation,
        tele.det_t,
        trace_err,
        min_eig,
    ]


def _point_row(task):
    params, t, basis, qfi_step = task
    rho = state_at(params, t)
    return _measure_row((t, rho, basis, qfi(params, t, "r12", qfi_step)))


def _report_regime(rows, header):
    column = header.index("det_t")
    outside = sum(1 for row in rows if row[column] >= 0)
    if outside:
        log.warning(
            "%d of %d rows have det T >= 0, outside the validity regime of the fidelity deviation.",
            outside,
            len(rows),
        )


def run_evolve(config):
    """Time series of all measures from :math:`|eg\\rangle` on the grid ``0, dt, ..., t_max``.

    Returns:
        tuple[list[str], list[list[float]]]: header and rows
    """
    params = config.bath
    traj = trajectory(build_liouvillian(params), initial_state_eg(), config.t_max, config.dt)
    traj.check_invariants()
    qfis = qfi_series(params, config.t_max, config.dt, "r12", config.qfi_step, states=traj.states)
    tasks = [
        (float(t), rho, config.coherence_basis, float(q))
        for (t, rho), q in zip(traj, qfis)
    ]
    rows = _map(_measure_row, tasks, config.workers)
    header = list(MEASURE_COLUMNS)
    _report_regime(rows, header)
    return header, rows


def run_sweep_r12(config):
    """Measures at fixed ``t`` for every interqubit distance of the sweep range,
    repeated for each temperature in ``config.temps``."""
    sweep_range = config.sweep_range
    if not (sweep_range[0] > 0.01 and sweep_range[1] <= 10):
        raise ConfigError("The r12 range must lie within (0.01, 10], got {}.".format(sweep_range))
    temps = config.temps or (config.bath.temperature,)
    grid = [(temp, r12) for temp in temps for r12 in range_values(sweep_range)]
    tasks = [
        (config.bath.replace(temperature=temp, r12=float(r12)), config.t, config.coherence_basis, config.qfi_step)
        for temp, r12 in grid
    ]
    rows = [[r12, temp] + row for (temp, r12), row in zip(grid, _map(_point_row, tasks, config.workers))]
    header = ["r12", "T"] + list(MEASURE_COLUMNS)
    _report_regime(rows, header)
    return header, rows


def run_sweep_temp(config):
    """Measures at fixed ``t`` and ``r12`` for every temperature of the sweep range."""
    temps = range_values(config.sweep_range)
    if temps[0] <= 0:
        raise ConfigError("Temperatures must be positive, got range {}.".format(config.sweep_range))
    tasks = [
        (config.bath.replace(temperature=float(temp)), config.t, config.coherence_basis, config.qfi_step)
        for temp in temps
    ]
    rows = [
        [temp, config.bath.r12] + row for temp, row in zip(temps, _map(_point_row, tasks, config.workers))
    ]
    header = ["T", "r12"] + list(MEASURE_COLUMNS)
    _report_regime(rows, header)
    return header, rows


def _qfi_task(task):
    params, t_max, dt, qfi_step = task
    return qfi_series(params, t_max, dt, "r12", qfi_step)


def run_qfi(config):
    """QFI time series with respect to ``r12`` for each distance in ``config.r12_values``."""
    tasks = [
        (config.bath.replace(r12=r12), config.t_max, config.dt, config.qfi_step)
        for r12 in config.r12_values
    ]
    rows = []
    for r12, series in zip(config.r12_values, _map(_qfi_task, tasks, config.workers)):
        dt = config.dt
        rows.extend([r12, k * dt, value] for k, value in enumerate(series))
    return ["r12", "t", "qfi"], rows


def read_state(path):
    """Read a density matrix written as 4 lines of 4 complex entries such as ``0.5+0i``.

    Raises:
        ConfigError: if the file cannot be read or parsed
    """
    try:
        with open(path, encoding="utf-8") as f:
            lines = [line.split() for line in f if line.strip()]
    except OSError as e:
        raise ConfigError("Cannot read state file {}: {}".format(path, e)) from e
    if len(lines) != 4 or any(len(line) != 4 for line in lines):
        raise ConfigError("State file {} must hold 4 lines of 4 entries.".format(path))
    try:
        return np.array([[complex(tok.replace("i", "j")) for tok in line] for line in lines])
    except ValueError as e:
        raise ConfigError("Malformed complex entry in {}: {}".format(path, e)) from e


def _plain(value):
    """Replace numpy scalars in nested dicts and lists by Python scalars."""
    if isinstance(value, dict):
        return {k: _plain(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_plain(v) for v in value]
    if isinstance(value, np.generic):
        return value.item()
    return value


def run_state(config, state_file=None):
    """Full measure and teleportation report of the state stored in ``state_file``.

    Returns:
        dict: report sections, ready for TOML serialization
    """
    path = state_file or config.state_file
    if path is None:
        raise ConfigError("The state mode needs a state file.")
    try:
        rho = validate_density_matrix(read_state(path))
    except (SymmetryError, NormalizationError, PositivityError) as e:
        raise ConfigError("State file {} does not hold a density matrix: {}".format(path, e)) from e
    report = measure_report(rho, basis=config.coherence_basis, allow_oracle=True).check()
    sections = {
        "measures": {k: v for k, v in report.as_dict().items() if v is not None},
        "teleport": teleport_report(rho).as_dict(),
    }
    if config.mc_samples:
        from .oracle import avg_fidelity_monte_carlo  # pylint: disable=import-outside-toplevel

        mean, stddev = avg_fidelity_monte_carlo(rho, config.mc_samples, config.seed)
        sections["monte_carlo"] = {"samples": config.mc_samples, "mean": mean, "stddev": stddev}
    return _plain(sections)


def format_csv(header, rows):
    """Render a table as CSV with 12 significant digits."""
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow(format(float(v), ".12g") for v in row)
    return buffer.getvalue()


_PLOTS = {
    "evolve": ("t", None, MEASURE_COLUMNS[1:10]),
    "sweep-r12": ("r12", "T", MEASURE_COLUMNS[1:10]),
    "sweep-temp": ("T", None, MEASURE_COLUMNS[1:10]),
    "qfi": ("t", "r12", ("qfi",)),
}


def _write(text, path):
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8", newline="\n") as f:
            f.write(text)
        log.info("Wrote %s", path)


def run(config, state_file=None):
    """Execute ``config`` and write its output."""
    log.info("Running %s with %s", config.mode, config.bath)
    if config.mode == "state":
        _write(toml.dumps(run_state(config, state_file)), config.out)
        return

    runner = {
        "evolve": run_evolve,
        "sweep-r12": run_sweep_r12,
        "sweep-temp": run_sweep_temp,
        "qfi": run_qfi,
    }[config.mode]
    header, rows = runner(config)
    _write(format_csv(header, rows), config.out)

    if config.svg:
        from .plotting import plot_columns  # pylint: disable=import-outside-toplevel

        x, group, columns = _PLOTS[config.mode]
        plot_columns(rows, header, x, columns, config.svg, group=group)


def _add_common_arguments(parser):
    parser.add_argument("--config", metavar="PATH", help="flat TOML file with default settings")
    parser.add_argument("--t", type=float, help="evaluation time of sweeps")
    parser.add_argument("--t-max", dest="t_max", type=float, help="final time of time series")
    parser.add_argument("--dt", type=float, help="time step of time series")
    parser.add_argument("--r12", type=float, help="interqubit distance in resonant wavelengths")
    parser.add_argument("--temp", type=float, help="bath temperature")
    parser.add_argument("--squeeze", type=float, help="squeezing magnitude r")
    parser.add_argument("--phi", type=float, help="squeezing phase")
    parser.add_argument("--gamma1", type=float, help="decay rate of qubit A")
    parser.add_argument("--gamma2", type=float, help="decay rate of qubit B")
    parser.add_argument("--mu-dot-rhat", dest="mu_dot_rhat", type=float, help="dipole orientation cosine")
    parser.add_argument("--omega1", type=float, help="transition frequency of qubit A")
    parser.add_argument("--omega2", type=float, help="transition frequency of qubit B")
    parser.add_argument("--k0-scale", dest="k0_scale", type=float, help="factor turning r12 into k0 r12")
    parser.add_argument("--r12-min", dest="r12_min", type=float, help="distance flagged as singular")
    parser.add_argument("--range", metavar="START:STOP:STEP", help="range of the swept parameter")
    parser.add_argument("--temps", help="comma separated temperatures overlaid by sweep-r12")
    parser.add_argument("--r12-values", dest="r12_values", help="comma separated distances for qfi")
    parser.add_argument("--qfi-step", dest="qfi_step", type=float, help="QFI difference step")
    parser.add_argument(
        "--coherence-basis", dest="coherence_basis", choices=("dressed", "computational")
    )
    parser.add_argument("--out", metavar="PATH", help="output file, standard output by default")
    parser.add_argument("--svg", metavar="PATH", help="also plot the table to this SVG file")
    parser.add_argument("--seed", type=int, help="seed of the Monte Carlo sampler")
    parser.add_argument("--workers", type=int, help="number of worker processes for sweeps")
    parser.add_argument("--mc-samples", dest="mc_samples", type=int, help="Monte Carlo samples in state mode")
    parser.add_argument("-v", "--verbose", action="count", default=0, help="more log output")
    parser.add_argument("-q", "--quiet", action="store_true", help="only log errors")


def get_parser():
    """Argument parser of the ``sqbath`` command."""
    parser = argparse.ArgumentParser(
        prog="sqbath", description="Two qubits in a squeezed thermal bath."
    )
    parser.add_argument("--version", action="version", version="%(prog)s " + __version__)
    subparsers = parser.add_subparsers(dest="mode", required=True)
    for mode in MODES:
        sub = subparsers.add_parser(mode)
        _add_common_arguments(sub)
        if mode == "state":
            sub.add_argument("state_file", nargs="?", help="4x4 density matrix, one row per line")
    return parser


def configure_logging(verbose=0, quiet=False):
    """Configure the root logger from the flags or the ``SQBATH_LOGGING`` variable."""
    if quiet:
        level = logging.ERROR
    elif verbose:
        level = logging.DEBUG if verbose > 1 else logging.INFO
    elif "SQBATH_LOGGING" in os.environ:
        level = getattr(logging, os.environ["SQBATH_LOGGING"].upper(), logging.WARNING)
    else:
        level = logging.WARNING
    logging.basicConfig(level=level, format="%(levelname)s:%(name)s: %(message)s", stream=sys.stderr)
    logging.getLogger().setLevel(level)
    logging.captureWarnings(True)


def config_from_args(args):
    """Merge the config file named in ``args`` with the flags set in ``args``."""
    settings = load_config(args.config) if args.config else {}
    flags = {
        k: v
        for k, v in vars(args).items()
        if v is not None and (k in RUN_KEYS or k in BATH_KEYS)
    }
    settings.update(flags)
    settings["mode"] = args.mode
    return build_config(settings)


def main(argv=None):
    """Run the ``sqbath`` command.

    Returns:
        int: exit status
    """
    args = get_parser().parse_args(argv)
    configure_logging(args.verbose, args.quiet)
    try:
        config = config_from_args(args)
        run(config, getattr(args, "state_file", None))
    except ConfigError as e:
        log.error("%s", e)
        return 2
    except SqBathError as e:
        log.error("%s", e)
        return 3
    return 0
