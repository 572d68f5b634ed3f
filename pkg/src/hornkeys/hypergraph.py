"""Sperner hypergraph algebra and 2-uniform (graph) specializations.

A Sperner hypergraph is an antichain of variable sets.  This module supplies
restriction, projection, dualization (minimal transversals), independence and
transversality tests, the key Horn CNF Phi_B, and maximal-independent-set
enumeration for plain graphs.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Optional

from ._bitset import bits_of, mask_of
from .core import HornClause, HornCNF, VariableUniverse, _as_varset
from .errors import InputError, ResourceGuardError, dual_cap


class SpernerHypergraph:
    """An antichain of variable sets over a fixed universe.

    Edges are stored in canonical order (lexicographic on their sorted
    element sequences) so that downstream constructions are reproducible.
    Non-antichain input is rejected; use :func:`minimalize` first.
    """

    def __init__(self, universe: VariableUniverse, edges: Iterable[Iterable[int]]):
        self.universe = universe
        n = universe.n
        uniq = {}
        for e in edges:
            e = _as_varset(e, n)
            uniq[tuple(sorted(e))] = e
        ordered = tuple(uniq[k] for k in sorted(uniq))
        for a in ordered:
            for b in ordered:
                if a is not b and a < b:
                    raise InputError(
                        f"not an antichain: edge {sorted(a)} is contained "
                        f"in edge {sorted(b)}"
                    )
        self.edges = ordered

    @property
    def n(self) -> int:
        return self.universe.n

    def edge_masks(self) -> list[int]:
        return [mask_of(e) for e in self.edges]

    def __eq__(self, other):
        if not isinstance(other, SpernerHypergraph):
            return NotImplemented
        return self.universe == other.universe and self.edges == other.edges

    def __hash__(self):
        return hash((self.universe, self.edges))

    def __repr__(self):
        return f"SpernerHypergraph(n={self.n}, k={len(self.edges)})"


def sperner(n, edges, labels=None) -> SpernerHypergraph:
    """Build a SpernerHypergraph from raw iterables; convenience helper."""
    return SpernerHypergraph(VariableUniverse(n, labels), edges)


def check_sperner(edges: Iterable[Iterable[int]]) -> bool:
    """True iff the given family of sets is an antichain."""
    family = {frozenset(e) for e in edges}
    return not any(a < b for a in family for b in family)


def minimalize(universe, edges: Iterable[Iterable[int]]) -> SpernerHypergraph:
    """The inclusion-minimal members of an arbitrary family (minl in short)."""
    if isinstance(universe, int):
        universe = VariableUniverse(universe)
    family = {_as_varset(e, universe.n) for e in edges}
    keep = [e for e in family if not any(o < e for o in family)]
    return SpernerHypergraph(universe, keep)


def restrict(b: SpernerHypergraph, s: Iterable[int]) -> SpernerHypergraph:
    """The subhypergraph induced by ``s``: edges entirely inside ``s``."""
    s = _as_varset(s, b.n)
    return SpernerHypergraph(b.universe, [e for e in b.edges if e <= s])


def project(b: SpernerHypergraph, s: Iterable[int]) -> SpernerHypergraph:
    """Minimal traces ``minl{e ∩ s}``; equals {∅} when s is no transversal."""
    s = _as_varset(s, b.n)
    return minimalize(b.universe, [e & s for e in b.edges])


def is_transversal(b: SpernerHypergraph, t: Iterable[int]) -> bool:
    """True iff ``t`` meets every edge (vacuously true for no edges)."""
    t = _as_varset(t, b.n)
    return all(e & t for e in b.edges)


def is_independent(b: SpernerHypergraph, s: Iterable[int]) -> bool:
    """True iff ``s`` contains no edge, i.e. the complement is a transversal."""
    s = _as_varset(s, b.n)
    return not any(e <= s for e in b.edges)


def support_union(b: SpernerHypergraph) -> frozenset[int]:
    out: frozenset[int] = frozenset()
    for e in b.edges:
        out |= e
    return out


def _minimal_masks(masks: Iterable[int]) -> list[int]:
    # Sort by popcount so each candidate only needs checks against kept,
    # smaller-or-equal-size masks.
    out: list[int] = []
    for m in sorted(set(masks), key=lambda x: (x.bit_count(), x)):
        if not any(k & m == k for k in out):
            out.append(m)
    return out


def minimal_transversals(b: SpernerHypergraph, cap: Optional[int] = None) -> SpernerHypergraph:
    """The dual hypergraph B^d of all inclusion-minimal transversals.

    Sequential edge-by-edge multiplication with intermediate minimalization;
    exact, intended for desk scale.  The intermediate family size is capped
    (``cap``, default from HORNKEYS_DUAL_CAP) and exceeding it raises a
    resource error carrying the partial count.
    """
    cap = dual_cap(cap)
    if any(not e for e in b.edges):
        raise InputError("cannot dualize a family containing the empty edge")
    if not b.edges:
        # Every set, including ∅, hits all zero edges.
        return SpernerHypergraph(b.universe, [frozenset()])
    masks = b.edge_masks()
    cur = _minimal_masks(1 << v for v in bits_of(masks[0]))
    for i, em in enumerate(masks[1:], start=2):
        if len(cur) * em.bit_count() > 8 * cap:
            raise ResourceGuardError(
                f"dualization guard: {len(cur)} partial transversals before "
                f"edge {i} of {len(masks)} would expand past {8 * cap}"
            )
        cur = _minimal_masks(t | (1 << v) for t in cur for v in bits_of(em))
        if len(cur) > cap:
            raise ResourceGuardError(
                f"dualization guard: {len(cur)} partial transversals after "
                f"edge {i} of {len(masks)} exceeds cap {cap}"
            )
    return SpernerHypergraph(b.universe, [frozenset(bits_of(m)) for m in cur])


def key_horn_cnf(b: SpernerHypergraph) -> HornCNF:
    """The key Horn CNF Φ_B with one clause e→v per edge e and v outside e.

    Clauses follow canonical edge order with heads ascending; the minimal
    keys of the result are exactly the edges of ``b``.
    """
    full = b.universe.full_set()
    clauses = [
        HornClause(e, v) for e in b.edges for v in sorted(full - e)
    ]
    return HornCNF(b.universe, clauses)


class Graph:
    """Undirected simple graph: a 2-uniform hypergraph with adjacency."""

    def __init__(self, universe: VariableUniverse, edges: Iterable[Iterable[int]]):
        self.universe = universe
        n = universe.n
        uniq = set()
        for e in edges:
            e = _as_varset(e, n)
            if len(e) != 2:
                raise InputError(f"graph edge must have 2 distinct endpoints, got {sorted(e)}")
            uniq.add(tuple(sorted(e)))
        self.edges = tuple(sorted(uniq))
        adj = [set() for _ in range(n)]
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        self.adj = tuple(frozenset(a) for a in adj)
        self._adj_masks: Optional[list[int]] = None

    @property
    def n(self) -> int:
        return self.universe.n

    def neighbors(self, v: int) -> frozenset[int]:
        return self.adj[v]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def adj_masks(self) -> list[int]:
        if self._adj_masks is None:
            self._adj_masks = [mask_of(a) for a in self.adj]
        return self._adj_masks

    def as_hypergraph(self) -> SpernerHypergraph:
        return SpernerHypergraph(self.universe, [frozenset(e) for e in self.edges])

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.universe == other.universe and self.edges == other.edges

    def __hash__(self):
        return hash((self.universe, self.edges))

    def __repr__(self):
        return f"Graph(n={self.n}, m={len(self.edges)})"


def graph(n, edges, labels=None) -> Graph:
    return Graph(VariableUniverse(n, labels), edges)


def as_graph(b: SpernerHypergraph) -> Graph:
    """Reinterpret a 2-uniform hypergraph as a graph; rejects other arities."""
    return Graph(b.universe, b.edges)


def maximal_independent_sets(g: Graph) -> Iterator[frozenset[int]]:
    """Every maximal independent set exactly once, deterministic order.

    Incremental construction over vertices 0..n-1: a maximal independent set
    of the subgraph induced on the first i vertices is extended by either
    keeping it (when vertex i conflicts) or adding i; the swap-child
    (I ∖ N(i)) ∪ {i} is emitted only when it is maximal and its greedy
    completion reproduces I, which makes every MIS reachable exactly once.
    Delay between outputs is polynomial in the graph size.
    """
    n = g.n
    if n == 0:
        yield frozenset()
        return
    adj = g.adj_masks()

    def greedy_complete(mask: int, upto: int) -> int:
        for u in range(upto):
            if not (mask >> u) & 1 and not (adj[u] & mask):
                mask |= 1 << u
        return mask

    stack = [(0, 0)]
    while stack:
        i, cur = stack.pop()
        if i == n:
            yield frozenset(bits_of(cur))
            continue
        bit = 1 << i
        if not (adj[i] & cur):
            stack.append((i + 1, cur | bit))
            continue
        swap = (cur & ~adj[i]) | bit
        maximal = True
        for u in range(i):
            if not (swap >> u) & 1 and not (adj[u] & swap):
                maximal = False
                break
        if maximal and greedy_complete(swap & ~bit, i) == cur:
            stack.append((i + 1, swap))
        stack.append((i + 1, cur))
