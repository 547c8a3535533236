"""
Command-line front end.

    verify [--min P] [--max P] [--primes p1,p2,...] [--checks c1,c2,...|all]
           [--out FILE] [--parallel N] [--seed S] [--mutate] [--verbose]

Exit status: 0 every entry passed, 1 some entry failed or errored,
2 usage or configuration error.
"""
import argparse
import logging
import sys

from pydantic import ValidationError

from qharmonic import __version__, configure_logging, load_settings
from qharmonic.errors import ConfigError, ReportIoError
from qharmonic.progress import ProgressLogger
from qharmonic.report import ALL_CHECK_NAMES, RunConfig, write_report
from qharmonic.sweep import run_verify

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_CONFIG = 2


class _ArgumentParser(argparse.ArgumentParser):
    def error(self, message):
        raise ConfigError(message)


def _int_list(text):
    try:
        return [int(item) for item in text.split(',') if item.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def build_parser(settings) -> argparse.ArgumentParser:
    parser = _ArgumentParser(
        prog='verify',
        description="Verify q-analogues of Wolstenholme's harmonic congruence over a range of primes.",
    )
    parser.add_argument('--min', dest='min_p', type=int, default=settings.min_p,
                        help='smallest prime of the range (default %(default)s)')
    parser.add_argument('--max', dest='max_p', type=int, default=settings.max_p,
                        help='largest prime of the range (default %(default)s)')
    parser.add_argument('--primes', dest='explicit_list', type=_int_list, default=None,
                        help='explicit comma-separated inputs; overrides the range')
    parser.add_argument('--checks', default=settings.checks,
                        help=f"comma-separated subset of {', '.join(ALL_CHECK_NAMES)}, or 'all'/'exact'")
    parser.add_argument('--out', dest='out_path', default=None,
                        help='report file (default: standard output)')
    parser.add_argument('--parallel', dest='parallelism', type=int, default=settings.parallelism,
                        help='worker processes (default %(default)s)')
    parser.add_argument('--seed', type=int, default=settings.seed,
                        help='seed for the sampled numeric checks (default %(default)s)')
    parser.add_argument('--mutate', action='store_true',
                        help='perturb every right-hand constant by +1; every affected check must fail')
    parser.add_argument('--verbose', action='store_true', default=settings.verbose,
                        help='debug logging and per-task detail on standard error')
    parser.add_argument('--log-file', default=settings.log_file,
                        help='also log to this rotating file')
    parser.add_argument('--quiet', action='store_true', help='no progress output')
    parser.add_argument('--version', action='version', version=f'%(prog)s {__version__}')
    return parser


def config_from_args(args) -> RunConfig:
    try:
        return RunConfig(
            min_p=args.min_p,
            max_p=args.max_p,
            explicit_list=args.explicit_list,
            checks=args.checks.split(','),
            out_path=args.out_path,
            parallelism=args.parallelism,
            seed=args.seed,
            mutate=args.mutate,
        )
    except ValidationError as e:
        problems = "; ".join(error['msg'] for error in e.errors())
        raise ConfigError(problems) from e


def main(argv=None) -> int:
    try:
        settings = load_settings()
    except ValueError as e:
        print(f"verify: bad environment setting: {e}", file=sys.stderr)
        return EXIT_CONFIG
    try:
        args = build_parser(settings).parse_args(argv)
        configure_logging(args.verbose, args.log_file)
        config = config_from_args(args)
        progress = ProgressLogger(verbose=args.verbose, enabled=not args.quiet)
        progress.start(_describe(config))
        report, status = run_verify(config, progress)
        for note in report.notes:
            progress.warning(note)
        write_report(report, config.out_path)
    except ConfigError as e:
        print(f"verify: configuration error: {e}", file=sys.stderr)
        return EXIT_CONFIG
    except ReportIoError as e:
        print(f"verify: {e}", file=sys.stderr)
        return EXIT_CONFIG

    summary = report.summary
    progress.complete(f"{summary.passed} passed, {summary.failed} failed, {summary.errors} errors")
    return status


def _describe(config: RunConfig) -> str:
    scope = (f"inputs {', '.join(map(str, config.explicit_list))}" if config.explicit_list is not None
             else f"primes {config.min_p}..{config.max_p}")
    return f"{scope}; checks {', '.join(config.checks)}"


if __name__ == '__main__':
    sys.exit(main())
