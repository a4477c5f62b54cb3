"""
    Checkpoint files for frontiers.

    The format is plain text with LF line endings:

        HCFRONTIER v1 n=<n> column=<i> mode=<U|R>
        <state> <decimal count>
        ...

    with one line per state, states in lexicographic order.

"""

import logging
import re

from pygridcycles.errors import CheckpointFormatError
from pygridcycles.TransferMatrix.TransferMatrix import Frontier, Mode
from pygridcycles.TransferMatrix.states import check_state, is_symmetric

MAGIC = 'HCFRONTIER'
VERSION = 'v1'

_HEADER = re.compile(r'^HCFRONTIER v1 n=(\d+) column=(\d+) mode=([UR])$')
_ENTRY = re.compile(r'^([.()]+) (\d+)$')


def format_frontier(frontier):
    """Returns the checkpoint text of a frontier of a 2n x 2n square."""
    if frontier.rows % 2 != 0:
        msg = "Only frontiers with an even number of rows can be checkpointed."
        logging.error(msg)
        raise ValueError(msg)

    lines = [f"{MAGIC} {VERSION} n={frontier.rows // 2} column={frontier.column_index} mode={frontier.mode.value}"]
    lines.extend(f"{state} {count}" for state, count in sorted(frontier.entries.items()))
    return '\n'.join(lines) + '\n'


def parse_frontier(text):
    """Parses checkpoint text, checking the header, every state and every count."""
    lines = text.split('\n')
    if lines and lines[-1] == '':
        lines.pop()

    if not lines:
        raise _bad("The checkpoint is empty.", 1)

    header = _HEADER.match(lines[0])
    if header is None:
        raise _bad(f"Expected a '{MAGIC} {VERSION} n=<n> column=<i> mode=<U|R>' header.", 1)

    n, column_index, mode = int(header.group(1)), int(header.group(2)), Mode(header.group(3))
    rows = 2 * n
    if n < 1 or column_index < 1:
        raise _bad("n and column must both be at least 1.", 1)
    if column_index > rows - 1:
        raise _bad(f"A frontier of the {rows} x {rows} square has a column of at most {rows - 1}.", 1)

    entries = {}
    previous = None
    for line_number, line in enumerate(lines[1:], start=2):
        entry = _ENTRY.match(line)
        if entry is None:
            raise _bad(f"Expected '<state> <count>', got {line!r}.", line_number)

        state, count = entry.group(1), int(entry.group(2))
        is_correct, msg = check_state(state)
        if not is_correct:
            raise _bad(msg, line_number)
        if len(state) != rows:
            raise _bad(f"State {state!r} does not have {rows} rows.", line_number)
        if mode is Mode.REFLECTIVE and not is_symmetric(state):
            raise _bad(f"State {state!r} is not symmetric in the horizontal axis.", line_number)
        if count <= 0:
            raise _bad(f"Count of state {state!r} must be positive.", line_number)
        if previous is not None and state <= previous:
            raise _bad(f"State {state!r} is out of order or repeated.", line_number)

        entries[state] = count
        previous = state

    return Frontier(rows, column_index, mode, entries)


def save_frontier(frontier, path):
    with open(path, 'w', newline='\n') as f:
        f.write(format_frontier(frontier))
    logging.info("checkpoint=%s column=%d states=%d", path, frontier.column_index, len(frontier))


def load_frontier(path):
    with open(path, 'r', newline='') as f:
        text = f.read()
    if '\r' in text:
        raise _bad("Checkpoint files must use LF line endings.", text[:text.index('\r')].count('\n') + 1)
    return parse_frontier(text)


def _bad(msg, line_number):
    error = CheckpointFormatError(msg, line_number)
    logging.error(str(error))
    return error
