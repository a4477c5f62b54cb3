from abc import ABC, abstractmethod
import logging

from pygridcycles.grid import normalize_edges


class CycleSearch(ABC):
    """Finds the Hamiltonian cycles of a simple graph by exhaustive search.

    Child classes implement different searches: a modified Dancing Links
    search (DancingLinksSearch) and a plain depth-first walk
    (BruteForceSearch). Each undirected cycle is reported exactly once, as
    its sorted edge list.

    It accepts:
        1) the nodes of the graph, any sortable hashable values
        2) the edges, as pairs of nodes

    """

    def __init__(self, nodes, edges):
        is_correct, msg = self._check_inputs(nodes, edges)

        if is_correct:
            self.nodes = sorted(nodes)
            self.edges = normalize_edges(edges)
            self.index = {node: i for i, node in enumerate(self.nodes)}
            self.adjacency = {node: [] for node in self.nodes}
            for a, b in self.edges:
                self.adjacency[a].append(b)
                self.adjacency[b].append(a)
            for adjacent in self.adjacency.values():
                adjacent.sort()
        else:
            logging.error(msg)
            raise ValueError(msg)

    def _check_inputs(self, nodes, edges):
        """Checks that the graph is simple and its edges join known nodes.

        Child classes may extend this with their own requirements.

        """

        node_set = set(nodes)
        if len(node_set) != len(list(nodes)):
            return False, "Nodes must be distinct."

        seen = set()
        for a, b in edges:
            if a not in node_set or b not in node_set:
                return False, f"Edge {a}-{b} joins a node that is not in the graph."
            if a == b:
                return False, f"Edge {a}-{b} is a self-loop."
            key = frozenset((a, b))
            if key in seen:
                return False, f"Edge {a}-{b} appears twice."
            seen.add(key)

        return True, ""

    @abstractmethod
    def search(self, callback=None, limit=None):
        """Runs the search and returns the number of cycles found.

        `callback`, if given, is called with the sorted edge list of each
        cycle. With `limit` the search stops after that many cycles.

        """

        pass

    def cycles(self, limit=None):
        """Returns the sorted edge lists of all cycles found."""
        found = []
        self.search(found.append, limit)
        return found
