"""Recognition of unique key hypergraphs and graphs, with witnesses.

A Sperner hypergraph B is *unique key* when exactly one pure Horn function
has B as its set of minimal keys.  Two equivalent tests are provided: the
dual-transversal characterization (is_unique_key_hypergraph) and emptiness
of the addable-clause family (addable_clauses).  For graphs there is an
individual-neighbor test over maximal independent sets, a perfect-matching
fast path for bipartite inputs, and the SAT gadget G_Phi used to generate
hard instances.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

from ._bitset import bits_of, set_of
from .core import forward_closure
from .errors import ContractError, InputError, ResourceGuardError, subset_budget
from .hypergraph import (
    Graph,
    SpernerHypergraph,
    VariableUniverse,
    key_horn_cnf,
    maximal_independent_sets,
    minimal_transversals,
    project,
    support_union,
)

WITNESS_KINDS = ("transversal-pair-missing", "no-individual-neighbor", "addable-clause")


@dataclass(frozen=True)
class Witness:
    """A counterexample produced by a recognizer.

    kind 'transversal-pair-missing': data = (T, v) with T a minimal
    transversal and v a vertex such that no other minimal transversal fits
    inside T ∪ {v}.  kind 'no-individual-neighbor': data = (I, v) with I a
    maximal independent set whose member v has no individual neighbor.
    kind 'addable-clause': data = (A, v), a clause that can be added to Φ_B
    without changing the key set.
    """

    kind: str
    data: tuple

    def __post_init__(self):
        if self.kind not in WITNESS_KINDS:
            raise InputError(f"unknown witness kind {self.kind!r}")


def verify_witness(w: Witness, obj) -> bool:
    """Re-check a witness against the definition it claims to violate."""
    if w.kind == "transversal-pair-missing":
        t, v = w.data
        dual = minimal_transversals(obj).edges
        if t not in dual or v in t:
            return False
        tv = t | {v}
        return not any(t2 != t and t2 <= tv for t2 in dual)
    if w.kind == "no-individual-neighbor":
        i, v = w.data
        if v not in i or any(a <= i for a in map(frozenset, obj.edges)):
            return False
        outside = set(range(obj.n)) - i
        if any(not (obj.adj[u] & i) for u in outside):
            return False  # not maximal
        return not any(obj.adj[u] & i == {v} for u in outside)
    if w.kind == "addable-clause":
        a, v = w.data
        full = obj.universe.full_set()
        if any(e <= a for e in obj.edges) or v in a:
            return False
        if v in support_union(project(obj, full - a)):
            return False
        return v not in forward_closure(key_horn_cnf(obj), a)
    raise InputError(f"unknown witness kind {w.kind!r}")


def _require_edges(b: SpernerHypergraph):
    if not b.edges:
        raise InputError("recognizer requires a hypergraph with at least one edge")
    if any(not e for e in b.edges):
        raise InputError("recognizer does not accept the empty edge")


def is_unique_key_hypergraph(
    b: SpernerHypergraph, cap: Optional[int] = None
) -> tuple[bool, Optional[Witness]]:
    """Dual-based test: B is unique key iff for every minimal transversal T
    and every v ∉ T some distinct minimal transversal fits inside T ∪ {v}.

    Returns (True, None) or (False, witness); the witness is re-verified
    before being returned.
    """
    _require_edges(b)
    dual = minimal_transversals(b, cap).edges
    full = b.universe.full_set()
    for t in dual:
        for v in sorted(full - t):
            tv = t | {v}
            if not any(t2 != t and t2 <= tv for t2 in dual):
                w = Witness("transversal-pair-missing", (t, v))
                if not verify_witness(w, b):
                    raise ContractError("recognizer produced an invalid witness", witness=w)
                return False, w
    return True, None


def addable_clauses(
    b: SpernerHypergraph, budget: Optional[int] = None
) -> list[tuple[frozenset[int], int]]:
    """All clauses A→v addable to Φ_B without changing its minimal keys.

    These are the non-implicates with A independent and v outside the
    support union of the projection of B to V ∖ A.  B is unique key iff the
    list is empty.  Exponential scan over all A ⊆ V; desk scale only.
    """
    _require_edges(b)
    n = b.n
    if (1 << n) > subset_budget(budget):
        raise ResourceGuardError(
            f"addable-clause scan over 2^{n} subsets exceeds budget "
            f"{subset_budget(budget)}"
        )
    edge_masks = b.edge_masks()
    full = (1 << n) - 1
    out = []
    for a in range(1 << n):
        if any(em & a == em for em in edge_masks):
            continue  # A must be independent
        traces = [em & ~a for em in edge_masks]
        union = 0
        for t in traces:
            if not any(o != t and o & t == o for o in traces):
                union |= t
        # A independent means no clause of Φ_B fires on A, so A→v is a
        # non-implicate exactly when v ∉ A; both exclusions happen here.
        for v in bits_of(full & ~(a | union)):
            out.append((set_of(a), v))
    out.sort(key=lambda av: (tuple(sorted(av[0])), av[1]))
    return out


def _two_coloring(g: Graph) -> Optional[list[int]]:
    color = [-1] * g.n
    for s in range(g.n):
        if color[s] != -1:
            continue
        color[s] = 0
        queue = [s]
        while queue:
            u = queue.pop()
            for v in g.adj[u]:
                if color[v] == -1:
                    color[v] = 1 - color[u]
                    queue.append(v)
                elif color[v] == color[u]:
                    return None
    return color


def _is_perfect_matching(g: Graph) -> bool:
    return all(g.degree(v) == 1 for v in range(g.n))


def is_unique_key_graph(g: Graph) -> tuple[bool, Optional[Witness]]:
    """Individual-neighbor test, streaming over maximal independent sets.

    G is unique key iff every maximal independent set I and every v ∈ I has
    an individual neighbor: some u ∉ I with N(u) ∩ I = {v}.  A bipartite
    perfect-matching fast path answers positives in linear time; negatives
    always come with a re-verified (I, v) witness.
    """
    if _two_coloring(g) is not None and all(g.degree(v) > 0 for v in range(g.n)):
        if _is_perfect_matching(g):
            return True, None
    adj = g.adj_masks()
    n = g.n
    for i in maximal_independent_sets(g):
        imask = 0
        for v in i:
            imask |= 1 << v
        for v in sorted(i):
            vbit = 1 << v
            if not any(
                not (imask >> u) & 1 and adj[u] & imask == vbit for u in range(n)
            ):
                w = Witness("no-individual-neighbor", (i, v))
                if not verify_witness(w, g):
                    raise ContractError("recognizer produced an invalid witness", witness=w)
                return False, w
    return True, None


def is_unique_key_bipartite(g: Graph) -> bool:
    """Fast test for bipartite graphs without isolated vertices: unique key
    iff the edge set is a perfect matching.  Falls back to the general
    checker when the preconditions fail."""
    if _two_coloring(g) is None or any(g.degree(v) == 0 for v in range(g.n)):
        return is_unique_key_graph(g)[0]
    return _is_perfect_matching(g)


@dataclass(frozen=True)
class GeneralCNF:
    """A general (not necessarily Horn) CNF as signed 1-based literal lists."""

    n: int
    clauses: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.n < 0:
            raise InputError("variable count must be nonnegative")
        object.__setattr__(
            self, "clauses", tuple(tuple(c) for c in self.clauses)
        )
        for i, clause in enumerate(self.clauses):
            for lit in clause:
                if not isinstance(lit, int) or lit == 0 or abs(lit) > self.n:
                    raise InputError(
                        f"clause {i + 1}: literal {lit!r} out of range ±1..±{self.n}"
                    )

    @property
    def m(self) -> int:
        return len(self.clauses)


def build_sat_graph(cnf: GeneralCNF) -> Graph:
    """The gadget graph G_Φ on 3n+m+1 vertices.

    Per variable i a triangle x_i, nx_i, y_i; one clique over the clause
    vertices C_1..C_m plus z; and an edge from each C_j to every literal
    vertex it contains.  Φ is satisfiable iff G_Φ is NOT unique key.
    """
    n, m = cnf.n, cnf.m
    labels = []
    for i in range(1, n + 1):
        labels += [f"x{i}", f"nx{i}", f"y{i}"]
    labels += [f"C{j}" for j in range(1, m + 1)] + ["z"]
    universe = VariableUniverse(3 * n + m + 1, tuple(labels))
    edges = []
    for i in range(n):
        x, nx, y = 3 * i, 3 * i + 1, 3 * i + 2
        edges += [(x, nx), (x, y), (nx, y)]
    clique = list(range(3 * n, 3 * n + m + 1))  # C_1..C_m and z
    for a in range(len(clique)):
        for b in range(a + 1, len(clique)):
            edges.append((clique[a], clique[b]))
    for j, clause in enumerate(cnf.clauses):
        if not clause:
            raise InputError(f"clause {j + 1} is empty")
        cj = 3 * n + j
        for lit in clause:
            v = abs(lit) - 1
            edges.append((cj, 3 * v if lit > 0 else 3 * v + 1))
    return Graph(universe, edges)
