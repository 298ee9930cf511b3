import logging
import sys
from argparse import ArgumentParser
from typing import List, Optional, TextIO

from app.api.cli.commands import COMMANDS, CommandContext, exit_code
from app.core import dependencies
from app.core.logger import get_logger, set_level
from app.domain.exceptions import InvalidInput, QuadSolveError

logger = get_logger("main")


class CliArgumentParser(ArgumentParser):
    """사용법 오류는 SystemExit(2) 대신 InvalidInput (종료 코드 1)"""

    def error(self, message):
        raise InvalidInput(message)


def build_parser() -> ArgumentParser:
    """명령행 파서 생성"""
    config = dependencies.get_app_config()

    common = CliArgumentParser(add_help=False)
    common.add_argument('--tol', type=float, default=None,
                        help=f'Relative tolerance (default {config.REL_TOL:g})')
    common.add_argument('--abs-tol', type=float, default=None,
                        help=f'Absolute tolerance (default {config.ABS_TOL:g})')
    common.add_argument('-v', '--verbose', default=False, action='store_true', help='Increase verbosity')

    ap = CliArgumentParser(prog='quadsolve', description='Solvable planar quadratic ODE systems')
    sub = ap.add_subparsers(dest='command', required=True)

    p = sub.add_parser('check', parents=[common], help='Check the 4 constraints and genericity')
    p.add_argument('file', type=str)

    p = sub.add_parser('reduce', parents=[common], help='Print the reduced form and z residuals')
    p.add_argument('file', type=str)

    p = sub.add_parser('solve', parents=[common], help='Evaluate the trajectory at one time')
    p.add_argument('file', type=str)
    p.add_argument('--t', type=float, required=True, help='Time')
    p.add_argument('--x0', type=str, default=None, help='Initial state re,im,re,im')

    p = sub.add_parser('sample', parents=[common], help='Sample the trajectory on a uniform grid')
    p.add_argument('file', type=str)
    p.add_argument('--t0', type=float, default=0.0, help='Grid start (default 0)')
    p.add_argument('--t1', type=float, required=True, help='Grid end')
    p.add_argument('--steps', type=int, required=True, help='Number of grid intervals')
    p.add_argument('--x0', type=str, default=None, help='Initial state re,im,re,im')
    p.add_argument('--format', choices=['csv', 'structured'], default='csv', help='Output format')

    p = sub.add_parser('classify', parents=[common], help='Classify long-time behaviour')
    p.add_argument('file', type=str)
    p.add_argument('--max-denominator', type=int, default=None,
                   help=f'Largest denominator for frequency ratios (default {config.MAX_DENOMINATOR})')

    p = sub.add_parser('forward', parents=[common], help='Coefficients from structural parameters')
    p.add_argument('file', type=str)

    p = sub.add_parser('roundtrip', parents=[common], help='forward -> reduce -> compare')
    p.add_argument('files', type=str, nargs='+')

    p = sub.add_parser('verify', parents=[common], help='Closed form vs numerical integration')
    p.add_argument('files', type=str, nargs='+')
    p.add_argument('--t1', type=float, required=True, help='Final time')
    p.add_argument('--steps', type=int, default=None, help=f'Grid intervals (default {config.VERIFY_STEPS})')
    p.add_argument('--threshold', type=float, default=None,
                   help=f'Accepted sup error (default {config.VERIFY_THRESHOLD:g})')
    p.add_argument('--x0', type=str, default=None, help='Initial state re,im,re,im')

    p = sub.add_parser('case51', parents=[common], help='Match and solve the decoupled special case')
    p.add_argument('file', type=str)
    p.add_argument('--t', type=float, default=0.0, help='Time (default 0)')
    p.add_argument('--x0', type=str, default=None, help='Initial state re,im,re,im')

    return ap


def main(argv: Optional[List[str]] = None, out: Optional[TextIO] = None) -> int:
    """CLI 진입점, 종료 코드 반환"""
    out = out or sys.stdout
    try:
        args = build_parser().parse_args(argv)
        if args.verbose:
            set_level(logging.DEBUG)
        config = dependencies.get_app_config()
        tol = dependencies.get_tolerance(config, rel_tol=args.tol, abs_tol=args.abs_tol)
        return COMMANDS[args.command](args, CommandContext(config, tol, out))
    except QuadSolveError as e:
        logger.error(f"{e.error_code}: {e}")
        return exit_code(e.error_code)
    except ValueError as e:
        # 잘못된 허용오차 등 옵션 값
        logger.error(f"MALFORMED_INPUT: {e}")
        return exit_code("MALFORMED_INPUT")


if __name__ == "__main__":
    sys.exit(main())
