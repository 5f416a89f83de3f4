# Copyright 2026 The polydisc-bounds Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Batch command line surface.

Each invocation runs exactly one command and writes one report, either JSON
(``{"command": ..., "rows": [...]}``) or CSV with a fixed header. Every
float is printed with 17 significant digits, so a report is byte-identical
across runs with the same arguments.

Exit status is 0 on success, 1 when a verification check fails and 2 on a
usage error or an exhausted cap.
"""

import argparse
import csv
import dataclasses
import io
import logging
import math
import re
import sys

from polydisc import _helpers
from polydisc import _suites
from polydisc import bohr
from polydisc import common
from polydisc import kernelproj
from polydisc import polyring
from polydisc import rademacher
from polydisc import sidon_bounds
from polydisc import torusopt


EXIT_OK = 0
"""int: Exit status of a successful run."""

EXIT_FAILED = 1
"""int: Exit status when a verification check fails."""

EXIT_USAGE = 2
"""int: Exit status for usage errors and exhausted caps."""

_PROG = "polydisc"
_RANGE = re.compile(r"^(\d+)\.\.(\d+)$")
_POWER = re.compile(r"^10\^(\d+)$")
_LOG_RANGE = re.compile(r"^10\^(\d+)\.\.10\^(\d+)$")
_MAX_RANGE_VALUES = 10**4
_SEED_LIMIT = 2**64
_DEFAULT_TOL = {"kappa": 1e-6, "bohr": 1e-6}
_DEFAULT_SAMPLES = {"chaos": 10, "project": 10**4}
_SIDON_COLUMNS = ("m", "n", "lower", "upper_trivial", "upper_main", "upper_best")
_COLUMNS = {
    "kappa": ("tol", "lo", "hi", "method"),
    "bounds": _SIDON_COLUMNS,
    "supnorm": ("lo", "hi", "relative_width", "method", "budget_exceeded"),
    "sidon-lower": _SIDON_COLUMNS,
    "bohr": ("n", "r_lower", "r_upper", "b_estimate", "terms_used"),
    "chaos": ("m", "n", "instances", "max_ratio", "bound", "violations"),
    "project": (
        "m",
        "n",
        "estimate_re",
        "estimate_im",
        "stderr",
        "exact_re",
        "exact_im",
        "z_score",
    ),
    "verify": ("suite", "passed", "checks", "failures"),
}
_LOG_LEVELS = (logging.WARNING, logging.INFO, logging.DEBUG)
_LOGGER = logging.getLogger(__name__)


@dataclasses.dataclass
class RunConfig(object):
    """One parsed command line.

    Attributes:
        command (str): The command name.
        m (Tuple[int, ...]): Degrees to run over.
        n (Tuple[int, ...]): Variable counts (or dimensions) to run over.
        tol (Optional[float]): Tolerance; commands supply their own default.
        seed (int): 64-bit base seed of every randomized step.
        budget (~polydisc.common.Budget): Caps threaded through the run.
        samples (Optional[int]): Sample or instance count.
        format (str): ``"json"`` or ``"csv"``.
        input (Optional[str]): Polynomial file for ``supnorm``.
        output (Optional[str]): Report path; standard output when unset.
        strategy (str): Degree bound selection for ``bohr``.
        method (str): Kappa tail method.
        suite (str): Suite for ``verify``.
        verbose (int): Logging verbosity.
    """

    command: str
    m: tuple = ()
    n: tuple = ()
    tol: object = None
    seed: int = common.DEFAULT_SEED
    budget: common.Budget = dataclasses.field(default_factory=common.Budget)
    samples: object = None
    format: str = "json"
    input: object = None
    output: object = None
    strategy: str = "min"
    method: str = "auto"
    suite: str = "all"
    verbose: int = 0


def parse_values(text):
    """Parse ``k``, ``a..b`` or ``10^a..10^b`` into a tuple of integers.

    Args:
        text (str): The flag value.

    Returns:
        Tuple[int, ...]: The values in increasing order.

    Raises:
        argparse.ArgumentTypeError: If ``text`` matches none of the forms.
    """
    text = text.strip()
    if text.isdigit():
        return (int(text),)
    match = _POWER.match(text)
    if match:
        return (10 ** int(match.group(1)),)
    match = _LOG_RANGE.match(text)
    if match:
        lo, hi = int(match.group(1)), int(match.group(2))
        values = tuple(10**k for k in range(lo, hi + 1))
    else:
        match = _RANGE.match(text)
        if not match:
            raise argparse.ArgumentTypeError(
                "expected k, a..b or 10^a..10^b, got {!r}".format(text)
            )
        lo, hi = int(match.group(1)), int(match.group(2))
        if hi - lo + 1 > _MAX_RANGE_VALUES:
            raise argparse.ArgumentTypeError(
                "range {!r} has more than {} values".format(text, _MAX_RANGE_VALUES)
            )
        values = tuple(range(lo, hi + 1))
    if not values:
        raise argparse.ArgumentTypeError("empty range {!r}".format(text))
    return values


def _seed(text):
    try:
        value = int(text, 0)
    except ValueError:
        raise argparse.ArgumentTypeError("invalid seed {!r}".format(text))
    if not 0 <= value < _SEED_LIMIT:
        raise argparse.ArgumentTypeError("seed must fit in 64 unsigned bits")
    return value


def _positive_float(text):
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError("invalid number {!r}".format(text))
    if not (value > 0 and math.isfinite(value)):
        raise argparse.ArgumentTypeError("must be positive, got {!r}".format(text))
    return value


def _positive_int(text):
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError("invalid integer {!r}".format(text))
    if value < 1:
        raise argparse.ArgumentTypeError("must be positive, got {!r}".format(text))
    return value


def build_parser():
    """Build the argument parser with one subcommand per command.

    Returns:
        argparse.ArgumentParser: The parser.
    """
    shared = argparse.ArgumentParser(add_help=False)
    shared.add_argument("--m", type=parse_values, default=None, help="degree(s)")
    shared.add_argument("--n", type=parse_values, default=None, help="variable count(s)")
    shared.add_argument("--tol", type=_positive_float, default=None)
    shared.add_argument("--seed", type=_seed, default=common.DEFAULT_SEED)
    shared.add_argument(
        "--budget",
        type=_positive_int,
        default=common.GRID_BUDGET,
        help="grid evaluations allowed per sup-norm call",
    )
    shared.add_argument("--samples", type=_positive_int, default=None)
    shared.add_argument("--restarts", type=_positive_int, default=common.DEFAULT_RESTARTS)
    shared.add_argument("--threads", type=_positive_int, default=1)
    shared.add_argument("--format", choices=("json", "csv"), default="json")
    shared.add_argument("--output", default=None, help="report path (default stdout)")
    shared.add_argument("-v", "--verbose", action="count", default=0)

    parser = argparse.ArgumentParser(
        prog=_PROG, description="Sidon constant and Bohr radius bounds."
    )
    commands = parser.add_subparsers(dest="command", metavar="command")
    commands.required = True
    kappa = commands.add_parser("kappa", parents=[shared], help="enclose kappa")
    kappa.add_argument(
        "--method", choices=("auto", "termwise", "prime_zeta"), default="auto"
    )
    commands.add_parser("bounds", parents=[shared], help="Sidon upper bound table")
    supnorm = commands.add_parser(
        "supnorm", parents=[shared], help="certified sup norm of a polynomial file"
    )
    supnorm.add_argument("--input", required=True, help="polynomial JSON file")
    commands.add_parser("sidon-lower", parents=[shared], help="Sidon witness search")
    bohr_parser = commands.add_parser("bohr", parents=[shared], help="Bohr radius bounds")
    bohr_parser.add_argument("--strategy", choices=("min", "split"), default="min")
    commands.add_parser("chaos", parents=[shared], help="hypercontractivity sweep")
    commands.add_parser("project", parents=[shared], help="tetrahedral projection")
    verify = commands.add_parser("verify", parents=[shared], help="run suites")
    verify.add_argument(
        "--suite", choices=tuple(_suites.SUITES) + ("all",), default="all"
    )
    return parser


_NEEDS = {
    "bounds": ("m", "n"),
    "sidon-lower": ("m", "n"),
    "bohr": ("n",),
    "chaos": ("m", "n"),
    "project": ("m", "n"),
}


def parse_config(argv):
    """Parse a command line into a :class:`RunConfig`.

    Args:
        argv (Sequence[str]): Arguments without the program name.

    Returns:
        RunConfig: The configuration.

    Raises:
        SystemExit: With status 2 on a usage error.
    """
    parser = build_parser()
    args = parser.parse_args(argv)
    for flag in _NEEDS.get(args.command, ()):
        if getattr(args, flag) is None:
            parser.error("command {} requires --{}".format(args.command, flag))
    budget = common.Budget(
        grid_evaluations=args.budget,
        restarts=args.restarts,
        threads=args.threads,
    )
    return RunConfig(
        command=args.command,
        m=args.m or (),
        n=args.n or (),
        tol=args.tol,
        seed=args.seed,
        budget=budget,
        samples=args.samples,
        format=args.format,
        input=getattr(args, "input", None),
        output=args.output,
        strategy=getattr(args, "strategy", "min"),
        method=getattr(args, "method", "auto"),
        suite=getattr(args, "suite", "all"),
        verbose=args.verbose,
    )


def _tol(config):
    if config.tol is not None:
        return config.tol
    return _DEFAULT_TOL.get(config.command, 1e-3)


def _samples(config):
    if config.samples is not None:
        return config.samples
    return _DEFAULT_SAMPLES[config.command]


def _run_kappa(config):
    tol = _tol(config)
    enclosure = kernelproj.kappa(tol, method=config.method)
    row = {"tol": tol, "lo": enclosure.lo, "hi": enclosure.hi, "method": enclosure.method}
    return [row], True


def _run_bounds(config):
    rows = [
        sidon_bounds.sidon_report(m, n).as_record() for m in config.m for n in config.n
    ]
    return rows, True


def _run_supnorm(config):
    with open(config.input, "rb") as file_obj:
        poly = polyring.read_poly(file_obj.read())
    enclosure = torusopt.sup_norm(
        poly, rel_err=_tol(config), seed=config.seed, **config.budget.sup_norm_kwargs()
    )
    row = {
        "lo": enclosure.lo,
        "hi": enclosure.hi,
        "relative_width": enclosure.relative_width,
        "method": enclosure.method,
        "budget_exceeded": enclosure.budget_exceeded,
    }
    return [row], True


def _run_sidon_lower(config):
    rows = []
    ok = True
    for m in config.m:
        for n in config.n:
            lower = sidon_bounds.lower_search(
                m, n, budget=config.budget, seed=config.seed, rel_err=_tol(config)
            )
            report = sidon_bounds.sidon_report(m, n, lower=lower)
            ok = ok and report.sandwich_holds
            rows.append(report.as_record())
    return rows, ok


def _run_bohr(config):
    reports = [
        bohr.bohr_lower(n, tol=_tol(config), strategy=config.strategy) for n in config.n
    ]
    estimates = [report.b_estimate for report in reports]
    if any(a > b for a, b in zip(estimates, estimates[1:])):
        _LOGGER.info("b_estimate is not monotone over the n grid")
    return [report.as_record() for report in reports], True


def _run_chaos(config):
    instances = _samples(config)
    rows = []
    stream = 0
    for m in config.m:
        for n in config.n:
            if not 1 <= m <= n:
                continue
            ratios = []
            for _ in range(instances):
                generator = _helpers.make_generator(config.seed, stream)
                stream += 1
                chaos = rademacher.random_chaos(n, m, generator)
                check = rademacher.hyper_check(chaos, threads=config.budget.threads)
                ratios.append(check.ratio)
            bound = math.exp(m)
            rows.append(
                {
                    "m": m,
                    "n": n,
                    "instances": instances,
                    "max_ratio": max(ratios),
                    "bound": bound,
                    "violations": sum(r > bound or r < 1.0 - 1e-12 for r in ratios),
                }
            )
    return rows, all(row["violations"] == 0 for row in rows)


def _run_project(config):
    samples = _samples(config)
    rows = []
    stream = 0
    for m in config.m:
        for n in config.n:
            generator = _helpers.make_generator(config.seed, stream)
            poly = polyring.random_hom_poly(n, m, generator)
            z = polyring.random_torus_point(n, generator)
            check = kernelproj.project_tetra_exact_check(
                poly,
                z,
                samples,
                seed=config.seed + stream,
                threads=config.budget.threads,
            )
            stream += 1
            rows.append(
                {
                    "m": m,
                    "n": n,
                    "estimate_re": check.estimate.real,
                    "estimate_im": check.estimate.imag,
                    "stderr": check.stderr,
                    "exact_re": check.exact.real,
                    "exact_im": check.exact.imag,
                    "z_score": check.z_score,
                }
            )
    return rows, True


def _run_verify(config):
    results = _suites.run_suites(config.suite, seed=config.seed, budget=config.budget)
    return [result.as_record() for result in results], all(r.passed for r in results)


_COMMANDS = {
    "kappa": _run_kappa,
    "bounds": _run_bounds,
    "supnorm": _run_supnorm,
    "sidon-lower": _run_sidon_lower,
    "bohr": _run_bohr,
    "chaos": _run_chaos,
    "project": _run_project,
    "verify": _run_verify,
}


def _json_value(value):
    if value is None:
        return "null"
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, int):
        return str(value)
    if isinstance(value, float):
        return _helpers.format_float(value) if math.isfinite(value) else "null"
    if isinstance(value, complex):
        return _json_value([value.real, value.imag])
    if isinstance(value, str):
        return '"{}"'.format(value.replace("\\", "\\\\").replace('"', '\\"'))
    if isinstance(value, dict):
        return "{{{}}}".format(
            ", ".join(
                "{}: {}".format(_json_value(str(k)), _json_value(v))
                for k, v in value.items()
            )
        )
    if isinstance(value, (list, tuple)):
        return "[{}]".format(", ".join(_json_value(item) for item in value))
    return _json_value(float(value))


def render_json(command, rows):
    """Render rows as one JSON document, one row per line.

    Returns:
        bytes: The UTF-8 report.
    """
    lines = ",\n".join("  " + _json_value(row) for row in rows)
    body = "\n{}\n".format(lines) if rows else ""
    return '{{"command": {}, "rows": [{}]}}\n'.format(
        _json_value(command), body
    ).encode("utf-8")


def _csv_cell(value):
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return _helpers.format_float(value)
    return str(value)


def render_csv(command, rows):
    """Render rows as CSV with the command's fixed columns.

    Returns:
        bytes: The UTF-8 report with a header row and LF line endings.
    """
    columns = _COLUMNS[command]
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(columns)
    for row in rows:
        writer.writerow([_csv_cell(row.get(column)) for column in columns])
    return buffer.getvalue().encode("utf-8")


def run(config):
    """Execute one command.

    Args:
        config (RunConfig): The configuration.

    Returns:
        Tuple[int, bytes]: The exit status and the rendered report.
    """
    rows, ok = _COMMANDS[config.command](config)
    if config.format == "csv":
        payload = render_csv(config.command, rows)
    else:
        payload = render_json(config.command, rows)
    return (EXIT_OK if ok else EXIT_FAILED), payload


def _configure_logging(verbose):
    level = _LOG_LEVELS[min(verbose, len(_LOG_LEVELS) - 1)]
    logging.basicConfig(
        level=level, stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s"
    )


def _usage_error(message):
    sys.stderr.write("{}: error: {}\n".format(_PROG, message))
    return EXIT_USAGE


def main(argv=None):
    """Console entry point.

    Args:
        argv (Optional[Sequence[str]]): Arguments; ``sys.argv[1:]`` when
            unset.

    Returns:
        int: The exit status.
    """
    try:
        config = parse_config(sys.argv[1:] if argv is None else argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    _configure_logging(config.verbose)

    try:
        status, payload = run(config)
    except (common.BudgetError, common.CapacityError) as exc:
        return _usage_error("{} (cap {})".format(exc, exc.cap))
    except common.ParseError as exc:
        line, column = exc.position
        return _usage_error(
            "--input: {} at line {} column {}".format(exc, line, column)
        )
    except common.SchemaError as exc:
        return _usage_error("--input: field {}: {}".format(exc.field, exc))
    except (
        common.DimensionError,
        common.NotConvergedError,
        OSError,
        ValueError,
    ) as exc:
        return _usage_error(str(exc))

    _LOGGER.info("report crc32c %s", _helpers.report_digest(payload))
    if config.output:
        with open(config.output, "wb") as file_obj:
            file_obj.write(payload)
    else:
        sys.stdout.write(payload.decode("utf-8"))
        sys.stdout.flush()
    return status
