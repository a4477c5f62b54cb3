import logging

from pygridcycles.errors import InvalidStateError
from pygridcycles.TransferMatrix.TransferMatrix import Mode, TransferMatrix
from pygridcycles.TransferMatrix.continuations import symmetric_continuations, symmetric_continuations_by_filter
from pygridcycles.TransferMatrix.states import is_symmetric, starting_states


class ReflectiveTransferMatrix(TransferMatrix):
    """Transfer method restricted to reflective symmetry in the horizontal axis.

    Every state and every continuation must be unchanged by reversing the
    order of the rows. Path systems counted by this mode are exactly the
    halves of cycles with that reflective symmetry.

    By default continuations are built symmetric, deciding only the top
    half of each column. With `by_filter=True` all continuations are
    generated and the asymmetric ones rejected instead; both must give the
    same frontiers.

    """

    def __init__(self, rows, workers=1, by_filter=False, **kwargs):
        super().__init__(rows, workers, **kwargs)
        self.by_filter = by_filter

    def _check_inputs(self, rows, workers, memory_limit):
        is_correct, msg = super()._check_inputs(rows, workers, memory_limit)

        if is_correct and rows % 2 != 0:
            return False, "Reflective symmetry in the horizontal axis needs an even number of rows."

        return is_correct, msg

    @property
    def mode(self):
        return Mode.REFLECTIVE

    @property
    def _kind(self):
        return 'filter' if self.by_filter else Mode.REFLECTIVE.value

    def starting_states(self):
        return starting_states(self.rows, symmetric=True)

    def admits(self, state):
        return is_symmetric(state)

    def continuations(self, state):
        if not self.admits(state):
            msg = f"State {state!r} is not symmetric in the horizontal axis."
            logging.error(msg)
            raise InvalidStateError(msg)

        if self.by_filter:
            return symmetric_continuations_by_filter(state)
        return symmetric_continuations(state)
