"""Command line tool for surgery dimensions and knot invariants.

Basic usage:

.. code-block:: shell-session

    $ # Check that a knot data file satisfies every invariant
    $ instcone validate trefoil.json

    $ # Tau, nu, nu sharp and r0 of a built-in model, as JSON
    $ instcone invariants catalog:trefoil-neg --json

    $ # Surgery dimensions for the slopes -3 to 3
    $ instcone surgery trefoil.json --range -3..3

    $ # Dual knot dimensions at m = 5, as CSV
    $ instcone dual catalog:unknot --m 5 --csv

    $ # Property suite with a fixed seed
    $ instcone check catalog:box --seed 7

Exit codes are 0 on success, 1 on validation or precondition failures,
2 when a result is indeterminate and 3 on unreadable input.

.. spelling::

   cli
   csv
   json
"""

import argparse
import logging
import sys
import traceback as traceback_

from . import catalog, knot as knot_data, linalg, output
from .errors import (
    EXIT_FAILURE,
    EXIT_INDETERMINATE,
    EXIT_OK,
    InstconeError,
    exit_code_for,
)
from .surgery import (
    SLOPE_SWEEP,
    STABILITY_PROBES,
    dual_knot_dim,
    dual_knot_table,
    invariant_report,
    is_indeterminate,
    large_surgery_table,
    surgery_sweep,
    zero_surgery_dims,
    zero_surgery_total,
)
from .verify import FAIL, check_suite, default_seed


logger = logging.getLogger(__name__)

CATALOG_PREFIX = "catalog:"


class KnotSource:
    """A place knot data is read from."""

    def load(self, validate_data=True):
        """Return the knot data, validated unless asked otherwise."""
        raise NotImplementedError


class CatalogKnot(KnotSource):
    """CatalogKnot."""

    def __init__(self, name):
        """Initialize.

        Args:
            name (str): catalog name, ``random-<seed>`` included

        """
        self.name = name

    def load(self, validate_data=True):
        """Build the catalog model."""
        knot = catalog.get(self.name)
        return knot_data.ensure_valid(knot) if validate_data else knot


class FileKnot(KnotSource):
    """FileKnot."""

    def __init__(self, path):
        """Initialize."""
        self.path = path

    def load(self, validate_data=True):
        """Read the JSON file."""
        return knot_data.load(self.path, validate_data=validate_data)


def parse_knot_location(location):
    """Convert a command line knot argument to a :py:class:`KnotSource`.

    >>> parse_knot_location('catalog:unknot').name
    'unknot'
    >>> parse_knot_location('data/knot.json').path
    'data/knot.json'
    """
    if location.startswith(CATALOG_PREFIX):
        return CatalogKnot(location[len(CATALOG_PREFIX):])
    return FileKnot(location)


def parse_slope_range(text):
    """Convert ``"a..b"`` into the inclusive range of slopes.

    >>> list(parse_slope_range('-2..1'))
    [-2, -1, 0, 1]
    """
    low, sep, high = text.partition("..")
    try:
        if not sep:
            raise ValueError(text)
        return range(int(low), int(high) + 1)
    except ValueError:
        raise argparse.ArgumentTypeError(
            "expected a range 'a..b' of integers, got {text!r}".format(text=text),
        ) from None


def parse_grading(text):
    """Convert ``"p/q"`` or ``"p"`` into an integer or half-integer grading.

    >>> parse_grading("-3/2")
    Fraction(-3, 2)
    """
    try:
        return linalg.halve(linalg.double(text))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def error_log(msg="", level=logging.INFO, traceback=False):
    """Write a one line diagnostic to stderr and log it.

    Args:
        msg (str): error message
        level (int): logging level of the record sent to the package logger
        traceback (bool): add traceback to output or not
    """
    sys.stderr.write("instcone: {msg!s}\n".format(msg=msg))
    sys.stderr.flush()
    logger.log(level, "%s", msg)
    if traceback:
        sys.stderr.write(traceback_.format_exc())
        sys.stderr.flush()


class _Parser(argparse.ArgumentParser):
    """Argument parser exiting with the precondition failure code."""

    def error(self, message):
        """Print the usage and exit with code 1."""
        self.print_usage(sys.stderr)
        self.exit(
            EXIT_FAILURE,
            "{prog}: error: {message}\n".format(prog=self.prog, message=message),
        )


_common_arg_spec = {
    "_knot": {
        "metavar": "KNOT",
        "type": parse_knot_location,
        "help": "Knot data JSON file, or catalog:NAME for a built-in model",
    },
    "--json": {
        "dest": "fmt",
        "action": "store_const",
        "const": "json",
        "default": "table",
        "help": "Print the result as JSON",
    },
    "--csv": {
        "dest": "fmt",
        "action": "store_const",
        "const": "csv",
        "default": "table",
        "help": "Print the result as CSV",
    },
    "--verbose": {
        "action": "store_true",
        "help": "Log computation details and tracebacks to stderr",
    },
}

_arg_spec = {
    "validate": {},
    "invariants": {},
    "surgery": {
        "--slope": {
            "metavar": "INT",
            "dest": "slopes",
            "type": int,
            "action": "append",
            "help": "Surgery slope; may be repeated",
        },
        "--range": {
            "metavar": "A..B",
            "dest": "slope_range",
            "type": parse_slope_range,
            "help": "Inclusive range of surgery slopes (default: -8..8)",
        },
        "--window-extra": {
            "metavar": "INT",
            "dest": "window_extra",
            "type": int,
            "action": "append",
            "default": [],
            "help": "Extra window enlargement to recheck stability with",
        },
    },
    "zero": {},
    "dual": {
        "--m": {
            "metavar": "INT",
            "dest": "m",
            "type": int,
            "required": True,
            "help": "Surgery parameter of the dual knot",
        },
        "--grading": {
            "metavar": "J",
            "dest": "grading",
            "type": parse_grading,
            "help": "Single Alexander grading to compute",
        },
    },
    "table": {},
    "check": {
        "--seed": {
            "metavar": "INT",
            "dest": "seed",
            "type": int,
            "help": "Seed of the randomized checks (default: $INSTCONE_SEED or 0)",
        },
    },
}

_descriptions = {
    "validate": "Validate knot data and report every invariant check.",
    "invariants": "Print tau, nu, nu sharp and r0.",
    "surgery": "Print surgery dimensions over a set of slopes.",
    "zero": "Print zero surgery dimensions per grading.",
    "dual": "Print dual knot dimensions per grading.",
    "table": "Print the homology dimensions of the bent complexes.",
    "check": "Run the property suite.",
}

# Options whose values may start with a minus sign without being numbers.
_glued_options = ("--range", "--grading")


def _glued(argv):
    """Attach values of :py:data:`_glued_options` as ``--opt=value``."""
    args = []
    pending = None
    for arg in argv:
        if pending is not None:
            args.append("{opt}={value}".format(opt=pending, value=arg))
            pending = None
        elif arg in _glued_options:
            pending = arg
        else:
            args.append(arg)
    if pending is not None:
        args.append(pending)
    return args


def build_parser():
    """Return the argument parser of every subcommand."""
    parser = _Parser(
        prog="instcone",
        description="Surgery dimensions and invariants from knot complex data.",
    )
    subparsers = parser.add_subparsers(
        dest="command",
        metavar="COMMAND",
        required=True,
    )
    for command, spec in _arg_spec.items():
        subparser = subparsers.add_parser(
            command,
            help=_descriptions[command],
            description=_descriptions[command],
        )
        for arg, arg_spec in {**_common_arg_spec, **spec}.items():
            subparser.add_argument(arg, **arg_spec)
    return parser


def cmd_validate(args):
    """Validate the knot data; exit 1 when a check fails."""
    report = knot_data.validate(args._knot.load(validate_data=False))
    status = EXIT_OK if report.ok else EXIT_FAILURE
    return output.validation_document(report), status


def cmd_invariants(args):
    """Compute every defined invariant."""
    report = invariant_report(args._knot.load())
    return output.invariants_document(report), EXIT_OK


def _slopes(args):
    slopes = set(args.slopes or ())
    if args.slope_range is not None:
        slopes.update(args.slope_range)
    return sorted(slopes) if slopes else SLOPE_SWEEP


def cmd_surgery(args):
    """Compute surgery dimensions; exit 2 when one is indeterminate."""
    probes = STABILITY_PROBES + tuple(args.window_extra)
    report = surgery_sweep(args._knot.load(), _slopes(args), probes)
    status = EXIT_INDETERMINATE if report.indeterminate else EXIT_OK
    return output.surgery_document(report), status


def cmd_zero(args):
    """Compute zero surgery dimensions; exit 2 when one is indeterminate."""
    knot = args._knot.load()
    dims = zero_surgery_dims(knot)
    total = zero_surgery_total(knot, dims)
    status = EXIT_INDETERMINATE if is_indeterminate(total) else EXIT_OK
    return output.zero_document(knot.name, dims, total), status


def cmd_dual(args):
    """Compute the dual knot table, or one grading of it."""
    knot = args._knot.load()
    if args.grading is None:
        table = dual_knot_table(knot, args.m)
    else:
        table = {args.grading: dual_knot_dim(knot, args.m, args.grading)}
    return output.dual_document(knot.name, args.m, table), EXIT_OK


def cmd_table(args):
    """Tabulate ``dim H(A(s))`` for ``|s| <= g``."""
    knot = args._knot.load()
    return output.table_document(knot.name, large_surgery_table(knot)), EXIT_OK


def cmd_check(args):
    """Run the property suite; exit 1 when a check fails."""
    knot = args._knot.load()
    seed = default_seed() if args.seed is None else args.seed
    results = check_suite(knot, seed)
    failed = any(result.status == FAIL for result in results)
    status = EXIT_FAILURE if failed else EXIT_OK
    return output.check_document(knot.name, seed, results), status


_commands = {
    "validate": cmd_validate,
    "invariants": cmd_invariants,
    "surgery": cmd_surgery,
    "zero": cmd_zero,
    "dual": cmd_dual,
    "table": cmd_table,
    "check": cmd_check,
}


def main(argv=None):
    """Run one subcommand and return its exit code."""
    parser = build_parser()
    args = parser.parse_args(_glued(sys.argv[1:] if argv is None else argv))

    package_logger = logging.getLogger(__package__)
    handler = None
    if args.verbose:
        handler = logging.StreamHandler(sys.stderr)
        handler.setFormatter(
            logging.Formatter("%(levelname)s %(name)s: %(message)s"),
        )
        package_logger.addHandler(handler)
        package_logger.setLevel(logging.DEBUG)

    try:
        document, status = _commands[args.command](args)
    except (InstconeError, OSError) as exc:
        error_log(exc, logging.ERROR, traceback=args.verbose)
        return exit_code_for(exc)
    finally:
        if handler is not None:
            package_logger.removeHandler(handler)
            package_logger.setLevel(logging.NOTSET)

    sys.stdout.write(document.render(args.fmt))
    return status
