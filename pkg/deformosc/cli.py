# -*- coding:utf-8 -*-
"""
Command line front end.

    deformosc tabulate --a 1 --c 0.5 --nmax 1 --out psi.csv
    deformosc verify   --a 1 --c 1 --out report.json
    deformosc spectrum --a 0.75 --nmax 4 --out energies.csv
    deformosc gram     --a 1 --c 2 --nmax 8 --out gram.csv

Exit status: 0 on success, 1 when a verification check fails or a run errors,
2 on invalid arguments or parameters.
"""
import argparse
import collections
import sys
from pathlib import Path

from hypernets.utils import logging

from deformosc import __version__
from deformosc.config import Config as cfg
from deformosc.toolbox import OscToolBox
from deformosc.utils import consts
from deformosc.framework.repalgebra import make_params
from deformosc.framework.verification import VerificationReport, run_suites, failed_checks, write_reports

logger = logging.get_logger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2


class RunConfig(
    collections.namedtuple('RunConfig',
                           ['command',
                            'a',
                            'c',
                            'b',
                            'nmax',
                            'x_min',
                            'x_max',
                            'x_step',
                            'output_path',
                            'format',
                            'tolerances',
                            'suites',
                            'n_jobs'])):

    def __new__(cls, command, a, c, b=0., nmax=None, x_min=None, x_max=None, x_step=None,
                output_path=None, format=consts.Format_CSV, tolerances=None, suites=None, n_jobs=None):
        nmax = cfg.nmax if nmax is None else int(nmax)
        x_min = cfg.x_min if x_min is None else float(x_min)
        x_max = cfg.x_max if x_max is None else float(x_max)
        x_step = cfg.x_step if x_step is None else float(x_step)
        if command not in (consts.Command_TABULATE, consts.Command_VERIFY,
                           consts.Command_SPECTRUM, consts.Command_GRAM):
            raise ValueError(f'Unknown command {command}.')
        if not x_min < x_max:
            raise ValueError(f'x_min must be below x_max, got {x_min} and {x_max}.')
        if not x_step > 0:
            raise ValueError(f'x_step must be positive, got {x_step}.')
        if nmax < 0 or (command == consts.Command_SPECTRUM and nmax < 1):
            raise ValueError(f'nmax={nmax} is out of range for {command}.')
        if format not in (consts.Format_CSV, consts.Format_JSON):
            raise ValueError(f'Unknown format {format}.')
        return super(RunConfig, cls).__new__(cls, command, float(a), float(c), float(b), nmax,
                                             x_min, x_max, x_step, output_path, format,
                                             dict(tolerances or {}), suites, n_jobs)


def _parse_tolerances(items):
    tolerances = {}
    for item in items or []:
        key, sep, value = item.partition('=')
        if not sep:
            raise ValueError(f'--tol expects CHECK_ID=VALUE, got {item}.')
        tolerances[key.strip()] = float(value)
    return tolerances


def get_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--a', type=float, default=consts.DEFAULT_A, help='representation label a > 0 (default: 1).')
    common.add_argument('--c', type=float, default=consts.DEFAULT_C, help='deformation label c > 0 (default: 1).')
    common.add_argument('--b', type=float, default=consts.DEFAULT_B,
                        help='third deformation parameter b >= 0 (default: 0).')
    common.add_argument('--nmax', type=int, default=None, help=f'highest level (default: {cfg.nmax}).')
    common.add_argument('--x-min', type=float, default=None, dest='x_min', help=f'grid start (default: {cfg.x_min}).')
    common.add_argument('--x-max', type=float, default=None, dest='x_max', help=f'grid end (default: {cfg.x_max}).')
    common.add_argument('--x-step', type=float, default=None, dest='x_step', help=f'grid step (default: {cfg.x_step}).')
    common.add_argument('--out', type=str, default=None, help='output path, stdout when omitted (csv only).')
    common.add_argument('--format', choices=[consts.Format_CSV, consts.Format_JSON], default=consts.Format_CSV,
                        help='table format of tabulate, spectrum and gram.')
    common.add_argument('--tol', action='append', default=None, metavar='CHECK_ID=VALUE',
                        help='override the tolerance of every check whose id starts with CHECK_ID.')
    common.add_argument('--suites', type=str, default=None,
                        help=f'comma separated subset of {",".join(consts.SUITE_LIST)} (verify only).')
    common.add_argument('--n-jobs', type=int, default=None, dest='n_jobs', help='joblib workers.')
    common.add_argument('--log-level', type=str, default='warn', dest='log_level',
                        help='logging level, e.g. info, warn, error.')

    parser = argparse.ArgumentParser(prog='deformosc',
                                     description='Wave functions and identity checks of the su(1,1)_gamma oscillator.')
    parser.add_argument('--version', action='version', version=f'%(prog)s {__version__}')
    sub = parser.add_subparsers(dest='command', required=True)
    for command, text in ((consts.Command_TABULATE, 'tabulate psi_n(x) as CSV x,n,psi'),
                          (consts.Command_VERIFY, 'run the verification suites and write a JSON report'),
                          (consts.Command_SPECTRUM, 'energies n,energy and position eigenvalues k,q_eigenvalue'),
                          (consts.Command_GRAM, 'Gram matrix as CSV m,n,value')):
        sub.add_parser(command, parents=[common], help=text)
    return parser


def _write_table(df, config, path=None):
    path = config.output_path if path is None else path
    if config.format == consts.Format_JSON:
        text = OscToolBox.to_json(df, path)
    else:
        text = OscToolBox.to_csv(df, path)
    if path is None:
        sys.stdout.write(text)


def cmd_tabulate(config, params):
    x = OscToolBox.grid(config.x_min, config.x_max, config.x_step)
    _write_table(OscToolBox.tabulate(params, config.nmax, x, n_jobs=config.n_jobs), config)
    return EXIT_OK


def q_eigenvalue_path(path):
    path = Path(path)
    return path.with_name(f'{path.stem}_q_eigenvalues{path.suffix}')


def cmd_spectrum(config, params):
    energies, q_values = OscToolBox.spectrum(params, config.nmax)
    _write_table(energies, config)
    if config.output_path is None:
        _write_table(q_values, config)
    else:
        _write_table(q_values, config, str(q_eigenvalue_path(config.output_path)))
    return EXIT_OK


def cmd_gram(config, params):
    df, report = OscToolBox.gram(params, config.nmax)
    _write_table(df, config)
    return EXIT_OK if report.passed else EXIT_FAILED


def _apply_tolerances(reports_by_suite, tolerances):
    if not tolerances:
        return reports_by_suite
    out = collections.OrderedDict()
    for suite, reports in reports_by_suite.items():
        updated = []
        for r in reports:
            tol = r.tolerance
            for prefix, value in tolerances.items():
                if r.check_id.startswith(prefix):
                    tol = value
            updated.append(VerificationReport(r.check_id, r.params, r.scale, r.residual, tol, r.notes))
        out[suite] = updated
    return out


def cmd_verify(config, params):
    suites = config.suites or consts.SUITE_LIST
    reports = run_suites(params, config.nmax, suites, n_jobs=config.n_jobs)
    reports = _apply_tolerances(reports, config.tolerances)
    path = config.output_path or 'verification_report.json'
    write_reports(reports, path)
    failed = failed_checks(reports)
    for check_id in failed:
        print(f'FAILED {check_id}', file=sys.stderr)
    return EXIT_FAILED if failed else EXIT_OK


_COMMANDS = {
    consts.Command_TABULATE: cmd_tabulate,
    consts.Command_VERIFY: cmd_verify,
    consts.Command_SPECTRUM: cmd_spectrum,
    consts.Command_GRAM: cmd_gram,
}


def main(argv=None):
    parser = get_parser()
    args = parser.parse_args(argv)
    logging.set_level(args.log_level)

    try:
        suites = [s.strip() for s in args.suites.split(',') if s.strip()] if args.suites else None
        if suites is not None:
            unknown = [s for s in suites if s not in consts.SUITE_LIST]
            if unknown:
                raise ValueError(f'Unknown suites {unknown}.')
        config = RunConfig(args.command, args.a, args.c, args.b, args.nmax, args.x_min, args.x_max,
                           args.x_step, args.out, args.format, _parse_tolerances(args.tol), suites,
                           args.n_jobs)
        params = make_params(config.a, config.c, config.b)
    except ValueError as e:
        print(f'error: {e}', file=sys.stderr)
        return EXIT_USAGE

    try:
        return _COMMANDS[config.command](config, params)
    except (RuntimeError, ValueError, OSError) as e:
        logger.error(f'{config.command} failed: {e}')
        print(f'error: {e}', file=sys.stderr)
        return EXIT_FAILED


if __name__ == '__main__':
    sys.exit(main())
