import logging
import time

from pygridcycles.CycleSearch.CycleSearch import CycleSearch
from pygridcycles.errors import SizeLimitError


class BruteForceSearch(CycleSearch):
    """Lists Hamiltonian cycles by walking paths depth first.

    The walk is anchored at a node of degree 2 (by default the smallest
    such node, e.g. the top-left corner of a grid). Both of its edges lie
    on every Hamiltonian cycle, so each cycle is walked exactly once by
    leaving the anchor towards its smaller neighbour and returning from
    the larger one.

    A partial path is abandoned as soon as some unvisited node is left
    with too few usable neighbours: two in general, one for the node that
    must close the cycle back to the anchor.

    It accepts, besides the graph:
        1) the anchor node (optional)
        2) the largest number of nodes accepted

    """

    def __init__(self, nodes, edges, anchor=None, max_nodes=40):
        super().__init__(nodes, edges)

        if len(self.nodes) > max_nodes:
            msg = f"Brute force is limited to {max_nodes} nodes; this graph has {len(self.nodes)}."
            logging.error(msg)
            raise SizeLimitError(msg)

        if anchor is None:
            anchor = next((node for node in self.nodes if len(self.adjacency[node]) == 2), None)
        if anchor is None or len(self.adjacency.get(anchor, ())) != 2:
            msg = "Brute force needs an anchor node of degree 2."
            logging.error(msg)
            raise ValueError(msg)

        self.anchor = anchor

    def _usable(self, node, visited, head):
        return sum(1 for other in self.adjacency[node] if other not in visited or other == head)

    def search(self, callback=None, limit=None):
        started = time.perf_counter()
        anchor = self.anchor
        first, last = self.adjacency[anchor]
        total = len(self.nodes)

        path = [anchor, first]
        visited = {anchor, first}
        count = 0

        def still_possible(old_head, head):
            for node in self.adjacency[old_head]:
                if node in visited:
                    continue
                needed = 1 if node == last else 2
                if self._usable(node, visited, head) < needed:
                    return False
            return True

        def extend(head):
            nonlocal count
            if len(path) == total:
                if head != last:
                    return False
                count += 1
                if callback is not None:
                    edges = list(zip(path, path[1:])) + [(last, anchor)]
                    callback(tuple(sorted(tuple(sorted(edge)) for edge in edges)))
                return limit is not None and count >= limit

            for node in self.adjacency[head]:
                if node in visited:
                    continue
                if node == last and len(path) != total - 1:
                    continue
                path.append(node)
                visited.add(node)
                stop = still_possible(head, node) and extend(node)
                visited.discard(node)
                path.pop()
                if stop:
                    return True
            return False

        extend(first)

        logging.info(
            "search=brute nodes=%d edges=%d solutions=%d elapsed=%.3f",
            total, len(self.edges), count, time.perf_counter() - started)
        return count
