from pygridcycles.TransferMatrix.TransferMatrix import Mode, TransferMatrix
from pygridcycles.TransferMatrix.continuations import continuations
from pygridcycles.TransferMatrix.states import starting_states


class UnrestrictedTransferMatrix(TransferMatrix):
    """Transfer method over all states and all continuations.

    Frontiers of this mode count every path system, so a full run over
    the square gives count A, and a half run feeds the single-pair and
    rotation-closable sums for counts B and C.

    """

    def __init__(self, rows, workers=1, **kwargs):
        super().__init__(rows, workers, **kwargs)

    @property
    def mode(self):
        return Mode.UNRESTRICTED

    @property
    def _kind(self):
        return Mode.UNRESTRICTED.value

    def starting_states(self):
        return starting_states(self.rows)

    def admits(self, state):
        return True

    def continuations(self, state):
        return continuations(state)
