from pygridcycles.CycleSearch.BruteForceSearch import BruteForceSearch
from pygridcycles.CycleSearch.DancingLinksSearch import DancingLinksSearch
