# cython: boundscheck=False, wraparound=False
"""Compiled forward-chaining kernel.

Mirror of ``_closure_py.Engine``; the two must return identical results for
identical inputs (see tests/test_kernel.py).
"""

from libc.stdlib cimport calloc, free, malloc
from libc.string cimport memcpy, memset


cdef class Engine:
    cdef int n, m, n_empty
    cdef int* heads
    cdef int* base_count
    cdef int* occ_start
    cdef int* occ_item
    cdef int* empty_heads
    cdef public long calls

    backend = "cython"

    def __cinit__(self, int n, bodies, heads):
        cdef int m = len(heads)
        if len(bodies) != m:
            raise ValueError("bodies and heads must have equal length")
        self.n = n
        self.m = m
        self.calls = 0
        self.heads = <int*> malloc(m * sizeof(int)) if m else NULL
        self.base_count = <int*> malloc(m * sizeof(int)) if m else NULL
        self.occ_start = <int*> malloc((n + 1) * sizeof(int))
        if (m and (self.heads == NULL or self.base_count == NULL)) or self.occ_start == NULL:
            raise MemoryError()

        cdef int i, v, total = 0, n_empty = 0
        cdef int* deg = <int*> calloc(n if n else 1, sizeof(int))
        if deg == NULL:
            raise MemoryError()
        for i in range(m):
            self.heads[i] = heads[i]
            body = bodies[i]
            self.base_count[i] = len(body)
            if len(body) == 0:
                n_empty += 1
            for v in body:
                deg[v] += 1
                total += 1
        self.occ_item = <int*> malloc(total * sizeof(int)) if total else NULL
        self.empty_heads = <int*> malloc(n_empty * sizeof(int)) if n_empty else NULL
        if (total and self.occ_item == NULL) or (n_empty and self.empty_heads == NULL):
            free(deg)
            raise MemoryError()
        self.n_empty = n_empty

        self.occ_start[0] = 0
        for v in range(n):
            self.occ_start[v + 1] = self.occ_start[v] + deg[v]
        cdef int* fill = <int*> calloc(n if n else 1, sizeof(int))
        if fill == NULL:
            free(deg)
            raise MemoryError()
        n_empty = 0
        for i in range(m):
            body = bodies[i]
            if len(body) == 0:
                self.empty_heads[n_empty] = heads[i]
                n_empty += 1
            for v in body:
                self.occ_item[self.occ_start[v] + fill[v]] = i
                fill[v] += 1
        free(deg)
        free(fill)

    def __dealloc__(self):
        free(self.heads)
        free(self.base_count)
        free(self.occ_start)
        free(self.occ_item)
        free(self.empty_heads)

    def closure(self, seed):
        """Return the sorted list of variables derivable from ``seed``."""
        self.calls += 1
        cdef int n = self.n, m = self.m
        cdef unsigned char* in_f = <unsigned char*> malloc(n if n else 1)
        cdef int* count = <int*> malloc(m * sizeof(int)) if m else NULL
        cdef int* stack = <int*> malloc(n * sizeof(int)) if n else NULL
        if in_f == NULL or (m and count == NULL) or (n and stack == NULL):
            free(in_f)
            free(count)
            free(stack)
            raise MemoryError()
        memset(in_f, 0, n if n else 1)
        if m:
            memcpy(count, self.base_count, m * sizeof(int))

        cdef int top = 0, v, i, j, h
        try:
            for x in seed:
                v = x
                if v < 0 or v >= n:
                    raise ValueError(f"variable index {v} out of range 0..{n - 1}")
                if not in_f[v]:
                    in_f[v] = 1
                    stack[top] = v
                    top += 1
            for j in range(self.n_empty):
                h = self.empty_heads[j]
                if not in_f[h]:
                    in_f[h] = 1
                    stack[top] = h
                    top += 1
            while top:
                top -= 1
                v = stack[top]
                for j in range(self.occ_start[v], self.occ_start[v + 1]):
                    i = self.occ_item[j]
                    count[i] -= 1
                    if count[i] == 0:
                        h = self.heads[i]
                        if not in_f[h]:
                            in_f[h] = 1
                            stack[top] = h
                            top += 1
            return [v for v in range(n) if in_f[v]]
        finally:
            free(in_f)
            free(count)
            free(stack)
