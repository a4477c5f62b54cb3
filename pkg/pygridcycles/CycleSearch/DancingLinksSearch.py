import logging
import time

from pygridcycles.CycleSearch.CycleSearch import CycleSearch
from pygridcycles.destinations import DestinationTable
from pygridcycles.grid import normalize_edges

# Every node lies on exactly two edges of a Hamiltonian cycle.
MULTIPLICITY = 2


class _Column:

    __slots__ = ('index', 'size', 'used', 'left', 'right', 'up', 'down')

    def __init__(self, index):
        self.index = index
        self.size = 0
        self.used = 0
        self.left = self
        self.right = self
        self.up = self
        self.down = self


class _Cell:

    __slots__ = ('column', 'row', 'side', 'left', 'right', 'up', 'down')

    def __init__(self, column, row, side):
        self.column = column
        self.row = row
        self.side = side
        self.left = self
        self.right = self
        self.up = self
        self.down = self


class DancingLinksSearch(CycleSearch):
    """Counts Hamiltonian cycles with a Dancing Links search.

    Each node is a column and each edge a row holding two cells, one in
    each of its endpoint columns. A column must be covered exactly twice:
    the first time one of its rows is selected only that row is removed;
    the second time the whole column and every other row through it are
    removed. Removal leaves the removed cells' own links untouched, so
    reinstating in reverse order restores the exact structure.

    Rows for `forced_edges` are selected before the search starts, so only
    cycles through every one of them are found. After that the search
    branches on the column whose remaining rows exceed the rows it still
    needs by the least, the fewest remaining rows breaking ties. A column that still needs two rows picks them as an ordered pair,
    the second following the first in link order, so that each pair is
    tried once; a column that needs one more row picks just that row.

    With `loop_guard` (the default) a DestinationTable tracks the ends of
    the partial paths and a row closing a loop is only allowed as the last
    edge of the cycle. Without it the search counts 2-factors, i.e. sets of
    disjoint cycles covering every node.

    """

    def __init__(self, nodes, edges, loop_guard=True, forced_edges=()):
        super().__init__(nodes, edges)
        self.loop_guard = loop_guard

        row_of = {edge: row for row, edge in enumerate(self.edges)}
        self.forced_rows = []
        for edge in sorted(set(normalize_edges(forced_edges))):
            if edge not in row_of:
                msg = f"Forced edge {edge[0]}-{edge[1]} is not an edge of the graph."
                logging.error(msg)
                raise ValueError(msg)
            self.forced_rows.append(row_of[edge])

        self.header = _Column(-1)
        self.columns = [_Column(i) for i in range(len(self.nodes))]
        last = self.header
        for column in self.columns:
            column.left = last
            column.right = self.header
            last.right = column
            self.header.left = column
            last = column

        self.rows = []
        for row, (a, b) in enumerate(self.edges):
            first = self._append_cell(self.columns[self.index[a]], row, 0)
            second = self._append_cell(self.columns[self.index[b]], row, 1)
            first.left = first.right = second
            second.left = second.right = first
            self.rows.append((first, second))

        self.table = DestinationTable(len(self.nodes))
        self._chosen = []
        self._records = []
        self._count = 0
        self._callback = None
        self._limit = None

    def _append_cell(self, column, row, side):
        cell = _Cell(column, row, side)
        cell.down = column
        cell.up = column.up
        column.up.down = cell
        column.up = cell
        column.size += 1
        return cell

    def _hide(self, cell):
        cell.up.down = cell.down
        cell.down.up = cell.up
        cell.column.size -= 1

    def _unhide(self, cell):
        cell.column.size += 1
        cell.down.up = cell
        cell.up.down = cell

    def _cover(self, column):
        column.right.left = column.left
        column.left.right = column.right
        cell = column.down
        while cell is not column:
            self._hide(cell.right)
            cell = cell.down

    def _uncover(self, column):
        cell = column.up
        while cell is not column:
            self._unhide(cell.right)
            cell = cell.up
        column.right.left = column
        column.left.right = column

    def _select(self, row):
        """Selects an edge, unless it would close a loop too early.

        Returns True when the edge was selected.

        """

        first, second = self.rows[row]
        p, q = first.column.index, second.column.index

        record = None
        if self.loop_guard:
            if self.table.closes_loop(p, q):
                # Only the last edge of the cycle may close it.
                if len(self._chosen) != len(self.columns) - 1:
                    return False
                record = self.table.close(p, q)
            else:
                record = self.table.link(p, q)

        self._records.append(record)
        self._chosen.append(row)

        self._hide(first)
        self._hide(second)
        for cell in (first, second):
            column = cell.column
            column.used += 1
            if column.used == MULTIPLICITY:
                self._cover(column)
        return True

    def _deselect(self, row):
        first, second = self.rows[row]
        for cell in (second, first):
            column = cell.column
            if column.used == MULTIPLICITY:
                self._uncover(column)
            column.used -= 1
        self._unhide(second)
        self._unhide(first)

        self._chosen.pop()
        record = self._records.pop()
        if record is not None:
            self.table.unlink(record)

    def _choose_column(self):
        """Returns the active column with the least slack, or None at a dead end.

        The slack of a column is the number of its remaining rows minus the
        number of rows it still needs.

        """

        best, best_key = None, None
        column = self.header.right
        while column is not self.header:
            slack = column.size - (MULTIPLICITY - column.used)
            if slack < 0:
                return None
            key = (slack, column.size)
            if best is None or key < best_key:
                best, best_key = column, key
            column = column.right
        return best

    def _solution(self):
        return tuple(sorted(self.edges[row] for row in self._chosen))

    def _search(self):
        """Returns True when the search must stop."""
        if self.header.right is self.header:
            self._count += 1
            if self._callback is not None:
                self._callback(self._solution())
            return self._limit is not None and self._count >= self._limit

        column = self._choose_column()
        if column is None:
            return False

        stop = False
        first = column.down
        while first is not column and not stop:
            if self._select(first.row):
                if column.used < MULTIPLICITY:
                    # The same column is used again at once, with a later row.
                    second = first.down
                    while second is not column and not stop:
                        if self._select(second.row):
                            stop = self._search()
                            self._deselect(second.row)
                        second = second.down
                else:
                    stop = self._search()
                self._deselect(first.row)
            first = first.down
        return stop

    def search(self, callback=None, limit=None):
        started = time.perf_counter()
        self._callback = callback
        self._limit = limit
        self._count = 0

        selected = []
        for row in self.forced_rows:
            # A node already on two forced edges cannot take a third.
            if any(cell.column.used == MULTIPLICITY for cell in self.rows[row]) or not self._select(row):
                break
            selected.append(row)
        else:
            self._search()
        for row in reversed(selected):
            self._deselect(row)

        logging.info(
            "search=dlx nodes=%d edges=%d solutions=%d elapsed=%.3f",
            len(self.nodes), len(self.edges), self._count, time.perf_counter() - started)
        return self._count

    def link_snapshot(self):
        """A picture of every link in the structure, for round-trip checks."""

        def name(item):
            if isinstance(item, _Column):
                return ('column', item.index)
            return ('cell', item.row, item.side)

        picture = []
        for item in [self.header] + self.columns:
            picture.append((name(item), name(item.left), name(item.right), name(item.up),
                            name(item.down), item.size, item.used))
        for row in self.rows:
            for cell in row:
                picture.append((name(cell), name(cell.up), name(cell.down)))
        return tuple(picture), self.table.snapshot()
