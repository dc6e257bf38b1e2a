"""Command line entry point

    Example - Basic::

        fermiqs bound --config bound.json --out bound.csv
        fermiqs respond --config respond.json --log-level DEBUG
"""

import argparse
import sys

from fermiqs.constants import EXIT_CODES, VERSION
from fermiqs.exceptions import ConfigError, FermiqsError, NonConvergenceError
from fermiqs.logger import Logger, set_level
from .config import COMMANDS, describe_defaults, load_config
from .runner import run

logger = Logger(__name__).get_logger()  # pylint: disable=invalid-name

LOG_LEVELS = ('TRACE', 'DEBUG', 'INFO', 'WARNING', 'ERROR')


class ArgumentParser(argparse.ArgumentParser):
    """ Parser whose usage errors share the config error exit code """

    def error(self, message):
        self.print_usage(sys.stderr)
        raise ConfigError(message)


def build_parser():
    """ Argument parser for the fermiqs command """

    parser = ArgumentParser(
        prog='fermiqs',
        description='Fermi bounds, corrected spectra and detector responses from JSON configs',
        epilog=describe_defaults(),
        formatter_class=argparse.RawDescriptionHelpFormatter)
    parser.add_argument('command', choices=COMMANDS, help='what to compute')
    parser.add_argument('--config', required=True, help='path to a JSON config')
    parser.add_argument('--out', help='output CSV path (default: output_path or stdout)')
    parser.add_argument('--log-level', choices=LOG_LEVELS,
                        help='overrides the FERMIQS_LOG_LEVEL environment variable')
    parser.add_argument('--version', action='version', version='fermiqs %s' % VERSION)
    return parser


def main(argv=None):
    """Run the command line interface

    Parameters
    ----------
    argv : list
        arguments (default sys.argv)

    Returns
    -------
    int
        0 on success, 1 on invalid arguments, config or domain errors, 2 on
        non-convergence
    """

    try:
        args = build_parser().parse_args(argv)
    except ConfigError as err:
        logger.error('Invalid arguments: %s', err)
        return EXIT_CODES['CONFIG_ERROR']
    if args.log_level:
        set_level(args.log_level)

    try:
        config = load_config(config_file=args.config, command=args.command)
        table = run(config)
        output_path = args.out or config.output_path
        if output_path:
            with open(output_path, 'w', newline='') as output:
                table.write(output)
            logger.info('Wrote %s rows to %s', len(table.rows), output_path)
        else:
            table.write(sys.stdout)
    except NonConvergenceError as err:
        logger.error('Quadrature did not converge: %s', err)
        return EXIT_CODES['NON_CONVERGENCE']
    except FermiqsError as err:
        logger.error('%s: %s', err.__class__.__name__, err)
        return EXIT_CODES['CONFIG_ERROR']
    except (IOError, OSError) as err:
        logger.error('Unable to write output: %s', err)
        return EXIT_CODES['CONFIG_ERROR']
    return EXIT_CODES['OK']


if __name__ == '__main__':
    sys.exit(main())
