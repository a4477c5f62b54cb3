from abc import ABC, abstractmethod
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
import enum
import logging
import time
import warnings

from pygridcycles.errors import InvalidStateError, MemoryBudgetExceeded
from pygridcycles.TransferMatrix.continuations import successor_states, symmetric_continuations_by_filter
from pygridcycles.TransferMatrix.states import check_state

DEFAULT_MEMORY_LIMIT = 50_000_000


class Mode(enum.Enum):
    UNRESTRICTED = 'U'
    REFLECTIVE = 'R'


@dataclass
class Frontier:
    """The number of ways of reaching each state at one column boundary.

    `column_index` is the number of node columns to the left of the
    boundary. Only reached states are stored, each with a positive count.

    """

    rows: int
    column_index: int
    mode: Mode
    entries: dict = field(default_factory=dict)

    def __len__(self):
        return len(self.entries)

    def total(self, predicate=None):
        if predicate is None:
            return sum(self.entries.values())
        return sum(count for state, count in self.entries.items() if predicate(state))


def _successors(kind, state):
    if kind == 'filter':
        return tuple(c.result for c in symmetric_continuations_by_filter(state))
    return successor_states(state, kind == Mode.REFLECTIVE.value)


def _over_budget(size, memory_limit, column_index):
    msg = (f"Frontier at column {column_index} has {size} states, "
           f"above the memory limit of {memory_limit}.")
    logging.error(msg)
    return MemoryBudgetExceeded(msg)


def _advance_chunk(args):
    """Worker body: advances one slice of a frontier by one column.

    Stops as soon as the slice alone holds more than `memory_limit` states.

    """
    kind, items, memory_limit, column_index = args
    partial = Counter()
    for state, count in items:
        for result in _successors(kind, state):
            partial[result] += count
        if len(partial) > memory_limit:
            raise _over_budget(len(partial), memory_limit, column_index)
    return partial


class TransferMatrix(ABC):
    """Counts path systems column by column with the transfer method.

    The matrix T of the method is never built. Each step takes the vector
    of counts at one column boundary, generates the continuations of every
    reached state on the fly and adds each one's contribution to the
    vector at the next boundary.

    It accepts:
        1) the number of node rows in each column
        2) the number of worker processes used per step
        3) the largest number of frontier entries allowed

    A step with several workers splits the source frontier into slices;
    the partial results are merged by addition, so the outcome does not
    depend on the number of workers or on scheduling.

    """

    def __init__(self, rows, workers=1, memory_limit=DEFAULT_MEMORY_LIMIT):
        is_correct, msg = self._check_inputs(rows, workers, memory_limit)

        if is_correct:
            self.rows = rows
            self.workers = workers
            self.memory_limit = memory_limit
        else:
            logging.error(msg)
            raise ValueError(msg)

    def _check_inputs(self, rows, workers, memory_limit):
        """Checks the parameters shared by every mode.

        Child classes extend this with their own requirements.

        """

        if not isinstance(rows, int) or rows < 2:
            return False, "A column must have at least 2 node rows."
        if not isinstance(workers, int) or workers < 1:
            return False, "The number of workers has to be at least 1."
        if memory_limit is None or memory_limit <= 0:
            return False, "The memory limit has to be greater than 0."

        return True, ""

    @property
    @abstractmethod
    def mode(self):
        pass

    @property
    @abstractmethod
    def _kind(self):
        """Key selecting the continuation generator in worker processes."""
        pass

    @abstractmethod
    def starting_states(self):
        """The states produced by the first node column alone."""
        pass

    @abstractmethod
    def admits(self, state):
        """True when `state` may appear in a frontier of this mode."""
        pass

    def successors(self, state):
        return _successors(self._kind, state)

    @abstractmethod
    def continuations(self, state):
        """Yields the continuations of `state` this mode allows."""
        pass

    def starting_frontier(self):
        return Frontier(self.rows, 1, self.mode, {state: 1 for state in self.starting_states()})

    def seeded_frontier(self, entries, column_index=1):
        """A frontier holding the given counts, after checking every state."""
        for state, count in entries.items():
            is_correct, msg = check_state(state)
            if is_correct and len(state) != self.rows:
                is_correct, msg = False, f"State {state!r} does not have {self.rows} rows."
            if is_correct and not self.admits(state):
                is_correct, msg = False, f"State {state!r} is not allowed in mode {self.mode.name}."
            if is_correct and (not isinstance(count, int) or count <= 0):
                is_correct, msg = False, f"Count of state {state!r} must be a positive integer."
            if not is_correct:
                logging.error(msg)
                raise InvalidStateError(msg)

        return Frontier(self.rows, column_index, self.mode, dict(entries))

    def step(self, frontier):
        """Returns the frontier one node column further right."""
        if self.workers > 1:
            with ProcessPoolExecutor(max_workers=self.workers) as pool:
                return self._step(frontier, pool)
        return self._step(frontier, None)

    def run(self, frontier, steps):
        """Applies `steps` steps to `frontier`."""
        if steps <= 0 or self.workers == 1:
            for _ in range(steps):
                frontier = self._step(frontier, None)
            return frontier

        with ProcessPoolExecutor(max_workers=self.workers) as pool:
            for _ in range(steps):
                frontier = self._step(frontier, pool)
        return frontier

    def run_to(self, frontier, column_index):
        return self.run(frontier, column_index - frontier.column_index)

    def _step(self, frontier, pool):
        started = time.perf_counter()
        items = sorted(frontier.entries.items())
        column_index = frontier.column_index + 1

        if pool is None or len(items) < 2:
            entries = _advance_chunk((self._kind, items, self.memory_limit, column_index))
        else:
            chunks = [items[i::self.workers] for i in range(self.workers)]
            args = [(self._kind, chunk, self.memory_limit, column_index) for chunk in chunks]
            entries = Counter()
            for partial in pool.map(_advance_chunk, args):
                entries.update(partial)
                self._check_budget(entries, column_index)

        if not entries and items:
            warnings.warn(f"No state survives column {column_index}.")

        logging.info(
            "column=%d states=%d elapsed=%.3f", column_index, len(entries), time.perf_counter() - started)

        return Frontier(frontier.rows, column_index, frontier.mode, dict(entries))

    def _check_budget(self, entries, column_index):
        if len(entries) > self.memory_limit:
            raise _over_budget(len(entries), self.memory_limit, column_index)
