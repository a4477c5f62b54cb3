"""
    Command-line front end: `gridcycles <command> [options]`.

    Results go to standard output in the chosen format; progress messages
    go to standard error. Exit codes: 0 success, 2 memory limit reached,
    3 failed cross-check or inconsistent counts, 4 unreadable checkpoint.

"""

import argparse
from dataclasses import dataclass
import logging
import os
import sys

from pygridcycles.errors import (
    CheckpointFormatError, CrossCheckError, InconsistentCountsError, InvariantViolation, MemoryBudgetExceeded)
from pygridcycles.pipeline import SYMMETRIES, class_counts, symmetry_counts
from pygridcycles.reports import REPORT_FORMATS, Report, format_report
from pygridcycles.symmetry import oeis_row
from pygridcycles.TransferMatrix.TransferMatrix import DEFAULT_MEMORY_LIMIT, Mode
from pygridcycles.TransferMatrix.checkpoint import load_frontier, save_frontier
from pygridcycles.TransferMatrix.counts import (
    count_rect, make_transfer_matrix, per_start_counts, ratio_series, state_census)
from pygridcycles.TransferMatrix.states import is_ending, is_single_pair, rot180_closable

EXIT_MEMORY = 2
EXIT_INCONSISTENT = 3
EXIT_CHECKPOINT = 4

THREADS_VARIABLE = 'GRIDCYCLES_THREADS'

MODES = {'unrestricted': Mode.UNRESTRICTED, 'reflective': Mode.REFLECTIVE}


@dataclass
class RunConfig:
    """Everything one command needs, checked once up front."""

    command: str
    n: int = None
    width: int = None
    height: int = None
    symmetry: str = 'all'
    mode: str = 'unrestricted'
    fmt: str = 'plain'
    action: str = None
    column: int = None
    checkpoint: str = None
    resume: str = None
    memory_limit: int = DEFAULT_MEMORY_LIMIT
    threads: int = 1
    check: bool = False
    verify_parity: bool = False
    oeis: bool = False

    def __post_init__(self):
        is_correct, msg = self._check_inputs()

        if not is_correct:
            logging.error(msg)
            raise ValueError(msg)

    def _check_inputs(self):
        if self.memory_limit is None or self.memory_limit <= 0:
            return False, "The memory limit has to be greater than 0."
        if self.threads is None or self.threads < 1:
            return False, "The number of threads has to be at least 1."
        if self.fmt not in REPORT_FORMATS:
            return False, f"Unknown output format {self.fmt!r}."

        if self.command == 'rect':
            if self.width is None or self.width < 1:
                return False, "The width has to be at least 1."
            if self.height is None or self.height < 2 or self.height % 2 != 0:
                return False, "The height has to be an even number of at least 2."
        elif self.command == 'checkpoint' and self.action == 'resume':
            if not self.resume:
                return False, "Resuming needs --resume <path>."
        elif self.n is None or self.n < 1:
            return False, "n has to be at least 1."

        if self.command == 'ratios' and self.n < 2:
            return False, "Ratios need n >= 2."
        if self.command == 'checkpoint' and self.action == 'save':
            if not self.checkpoint:
                return False, "Saving needs --checkpoint <path>."
            if self.column is None or not 1 <= self.column <= 2 * self.n - 1:
                return False, f"The column has to lie between 1 and {2 * self.n - 1}."

        return True, ""

    @property
    def options(self):
        """Keyword arguments for the transfer matrices."""
        return {'workers': self.threads, 'memory_limit': self.memory_limit}

    @classmethod
    def from_namespace(cls, args):
        symmetry = 'all' if getattr(args, 'all', False) else getattr(args, 'symmetry', 'all')
        return cls(
            command=args.command,
            n=getattr(args, 'n', None),
            width=getattr(args, 'width', None),
            height=getattr(args, 'height', None),
            symmetry=symmetry,
            mode=getattr(args, 'mode', 'unrestricted'),
            fmt=args.format,
            action=getattr(args, 'action', None),
            column=getattr(args, 'column', None),
            checkpoint=getattr(args, 'checkpoint', None),
            resume=getattr(args, 'resume', None),
            memory_limit=args.memory_limit,
            threads=args.threads,
            check=getattr(args, 'check', False),
            verify_parity=getattr(args, 'verify_parity', False),
            oeis=getattr(args, 'oeis', False),
        )


def cmd_count(config):
    symbols = SYMMETRIES if config.symmetry == 'all' else (config.symmetry,)
    counts = symmetry_counts(
        config.n, symbols, check=config.check, verify_parity=config.verify_parity, **config.options)
    return Report('count', [{'n': config.n, **counts}])


def cmd_classes(config):
    counts, classes = class_counts(config.n, **config.options)
    record = {'n': config.n, **classes._asdict()}
    if config.oeis:
        record.update(oeis_row(config.n, classes, counts))
    return Report('classes', [record])


def cmd_census(config):
    states, continuations = state_census(config.n, MODES[config.mode], **config.options)
    return Report('census', [{'n': config.n, 'mode': config.mode, 'states': states, 'continuations': continuations}])


def cmd_from_start(config):
    counts = per_start_counts(config.n, **config.options)
    return Report('from-start', [{'state': state, 'count': count} for state, count in counts.items()])


def cmd_rect(config):
    count = count_rect(config.width, config.height, **config.options)
    return Report('rect', [{'width': config.width, 'height': config.height, 'count': count}])


def cmd_ratios(config):
    return Report.from_frame('ratios', ratio_series(config.n, **config.options))


def _checkpoint_save(config):
    mode = MODES[config.mode]
    matrix = make_transfer_matrix(mode, 2 * config.n, **config.options)
    frontier = matrix.run_to(matrix.starting_frontier(), config.column)
    save_frontier(frontier, config.checkpoint)
    return Report('checkpoint', [{
        'n': config.n, 'mode': config.mode, 'column': frontier.column_index, 'states': len(frontier)}])


def _checkpoint_resume(config):
    try:
        frontier = load_frontier(config.resume)
    except OSError as error:
        msg = f"Cannot read {config.resume}: {error.strerror or error}"
        logging.error(msg)
        raise CheckpointFormatError(msg)
    n = frontier.rows // 2
    matrix = make_transfer_matrix(frontier.mode, frontier.rows, **config.options)

    record = {'n': n, 'column': frontier.column_index}
    if frontier.column_index <= n:
        frontier = matrix.run_to(frontier, n)
        if frontier.mode is Mode.UNRESTRICTED:
            record['B'] = frontier.total(is_single_pair)
            record['C'] = frontier.total(rot180_closable)
        else:
            record['D'] = frontier.total(is_single_pair)

    frontier = matrix.run_to(frontier, 2 * n - 1)
    record['A' if frontier.mode is Mode.UNRESTRICTED else 'B'] = frontier.total(is_ending)
    return Report('resume', [record])


def cmd_checkpoint(config):
    if config.action == 'save':
        return _checkpoint_save(config)
    return _checkpoint_resume(config)


# List of all commands with their names as the keys
COMMANDS = {
    'count': cmd_count,
    'classes': cmd_classes,
    'census': cmd_census,
    'from-start': cmd_from_start,
    'rect': cmd_rect,
    'ratios': cmd_ratios,
    'checkpoint': cmd_checkpoint,
}


def _default_threads():
    value = os.environ.get(THREADS_VARIABLE)
    if not value:
        return 1
    try:
        return int(value)
    except ValueError:
        logging.warning("Ignoring %s=%r, which is not an integer.", THREADS_VARIABLE, value)
        return 1


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--format', choices=sorted(REPORT_FORMATS), default='plain')
    common.add_argument('--threads', type=int, default=_default_threads(),
                        help=f"worker processes per step (default: ${THREADS_VARIABLE} or 1)")
    common.add_argument('--memory-limit', type=int, default=DEFAULT_MEMORY_LIMIT,
                        help="largest number of frontier entries")
    common.add_argument('--quiet', action='store_true', help="only log warnings and errors")

    parser = argparse.ArgumentParser(
        prog='gridcycles', description="Count Hamiltonian cycles on 2n x 2n grids by symmetry.")
    commands = parser.add_subparsers(dest='command', required=True)

    count = commands.add_parser('count', parents=[common], help="symmetry counts A..F")
    count.add_argument('--n', type=int, required=True)
    count.add_argument('--symmetry', choices=list(SYMMETRIES) + ['all'], default='all')
    count.add_argument('--all', action='store_true', help="same as --symmetry all")
    count.add_argument('--check', action='store_true', help="also run the independent cross-checks")
    count.add_argument('--verify-parity', action='store_true', help="search for E even when n is even")

    classes = commands.add_parser('classes', parents=[common], help="isomorphism classes u..z")
    classes.add_argument('--n', type=int, required=True)
    classes.add_argument('--oeis', action='store_true', help="add the OEIS sequence values")

    census = commands.add_parser('census', parents=[common], help="numbers of states and continuations")
    census.add_argument('--n', type=int, required=True)
    census.add_argument('--mode', choices=sorted(MODES), default='unrestricted')

    from_start = commands.add_parser('from-start', parents=[common], help="cycles per starting state")
    from_start.add_argument('--n', type=int, required=True)

    rect = commands.add_parser('rect', parents=[common], help="cycles on a rectangle")
    rect.add_argument('--width', type=int, required=True)
    rect.add_argument('--height', type=int, required=True)

    ratios = commands.add_parser('ratios', parents=[common], help="success ratios of starting states")
    ratios.add_argument('--n', type=int, required=True)

    checkpoint = commands.add_parser('checkpoint', parents=[common], help="save or resume a frontier")
    checkpoint.add_argument('action', choices=['save', 'resume'])
    checkpoint.add_argument('--n', type=int)
    checkpoint.add_argument('--mode', choices=sorted(MODES), default='unrestricted')
    checkpoint.add_argument('--column', type=int)
    checkpoint.add_argument('--checkpoint')
    checkpoint.add_argument('--resume')

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)

    logging.basicConfig(
        stream=sys.stderr, format="%(message)s", level=logging.WARNING if args.quiet else logging.INFO)

    try:
        config = RunConfig.from_namespace(args)
    except ValueError as error:
        parser.error(str(error))

    try:
        report = COMMANDS[config.command](config)
    except MemoryBudgetExceeded as error:
        print(f"gridcycles: {error}", file=sys.stderr)
        return EXIT_MEMORY
    except (CrossCheckError, InconsistentCountsError, InvariantViolation) as error:
        print(f"gridcycles: {error}", file=sys.stderr)
        return EXIT_INCONSISTENT
    except CheckpointFormatError as error:
        print(f"gridcycles: bad checkpoint: {error}", file=sys.stderr)
        return EXIT_CHECKPOINT

    sys.stdout.write(format_report(report, config.fmt))
    return 0
