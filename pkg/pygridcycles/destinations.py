"""
    Path-endpoint bookkeeping for backtracking searches.

    A DestinationTable records, for every node that is an endpoint of a
    partial path, the node at the other end of that path. A node with no
    edges is its own destination. Interior nodes keep whatever value they
    last had; it is never read while they stay interior.

    Adding an edge p-q joins the path ending at p with the path ending at q:

        r <- D(p);  s <- D(q);  D(r) <- s;  D(s) <- r

    If r == q the edge would close a loop, and the caller decides whether
    that is allowed. Removal restores D(r) <- p and D(s) <- q, which were
    the values before the edge was added (both when p and q were proper
    endpoints and when either had no edges at all). Edges must be removed
    in the reverse order of addition.

"""


class DestinationTable:

    __slots__ = ('dest',)

    def __init__(self, size):
        self.dest = list(range(size))

    @classmethod
    def from_pairs(cls, size, pairs):
        """A table where each (a, b) in `pairs` are the two ends of one path."""
        table = cls(size)
        for a, b in pairs:
            table.dest[a] = b
            table.dest[b] = a
        return table

    def __getitem__(self, node):
        return self.dest[node]

    def closes_loop(self, p, q):
        """True when p and q are the two ends of the same path."""
        return self.dest[p] == q

    def link(self, p, q):
        """Adds the edge p-q unless it closes a loop.

        Returns the record needed by `unlink`, or None (and leaves the table
        untouched) when p and q are the two ends of one path.

        """

        dest = self.dest
        r = dest[p]
        if r == q:
            return None
        s = dest[q]
        dest[r] = s
        dest[s] = r
        return p, q, r, s

    def close(self, p, q):
        """Adds the loop-closing edge p-q; returns its unlink record.

        Closing leaves every destination as it was, so the record only
        restores the same values.

        """

        return p, q, q, p

    def unlink(self, record):
        p, q, r, s = record
        self.dest[r] = p
        self.dest[s] = q

    def snapshot(self):
        return tuple(self.dest)
