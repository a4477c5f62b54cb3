from pygridcycles.TransferMatrix.TransferMatrix import Frontier, Mode, TransferMatrix
from pygridcycles.TransferMatrix.UnrestrictedTransferMatrix import UnrestrictedTransferMatrix
from pygridcycles.TransferMatrix.ReflectiveTransferMatrix import ReflectiveTransferMatrix
