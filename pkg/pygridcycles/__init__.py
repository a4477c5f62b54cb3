from pygridcycles.grid import ClassCounts, Cycle, D4Op, GridSpec, SymmetryCounts
from pygridcycles.pipeline import all_symmetry_counts, class_counts
