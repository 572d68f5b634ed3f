"""Pure-Python forward-chaining kernel.

Fallback for the compiled extension in ``_fastclosure``; both implement the
same counter-based propagation and must return identical results.  One engine
instance is bound to one clause list; ``calls`` counts closure computations
and is the basis for the enumeration delay instrumentation, so share an
engine between threads only if you do not care about its counter.
"""


class Engine:
    """Forward-chaining closures for a fixed list of (body, head) clauses.

    Work per call is linear in the total clause size: every clause keeps a
    counter of body variables not yet derived, and each derived variable
    decrements the counters of the clauses whose bodies contain it.
    """

    backend = "python"

    def __init__(self, n, bodies, heads):
        if len(bodies) != len(heads):
            raise ValueError("bodies and heads must have equal length")
        self.n = n
        self.m = len(heads)
        self.calls = 0
        self._heads = list(heads)
        self._base_count = [len(b) for b in bodies]
        self._empty_heads = [heads[i] for i, b in enumerate(bodies) if len(b) == 0]
        occ = [[] for _ in range(n)]
        for i, body in enumerate(bodies):
            for v in body:
                occ[v].append(i)
        self._occ = occ

    def closure(self, seed):
        """Return the sorted list of variables derivable from ``seed``."""
        self.calls += 1
        n = self.n
        in_f = bytearray(n)
        stack = []
        for v in seed:
            if v < 0 or v >= n:
                raise ValueError(f"variable index {v} out of range 0..{n - 1}")
            if not in_f[v]:
                in_f[v] = 1
                stack.append(v)
        count = self._base_count[:]
        heads = self._heads
        occ = self._occ
        for h in self._empty_heads:
            if not in_f[h]:
                in_f[h] = 1
                stack.append(h)
        while stack:
            v = stack.pop()
            for i in occ[v]:
                count[i] -= 1
                if count[i] == 0:
                    h = heads[i]
                    if not in_f[h]:
                        in_f[h] = 1
                        stack.append(h)
        return [v for v in range(n) if in_f[v]]
