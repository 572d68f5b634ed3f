"""Target set selection: threshold activation and the two key reductions.

Activation is the synchronous process where a vertex becomes active once at
least t(v) of its neighbors are active; a target set activates everything.
``tss_to_horn`` turns a threshold graph into the Horn CNF Ψ_G whose keys are
exactly the target sets; ``horn_to_tss`` goes the other way through a gadget
graph, with ``lift_target_set_to_key`` mapping target sets back to keys of
no greater size.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Callable, Iterable, Iterator, Optional

from ._bitset import bits_of, mask_of
from .core import HornClause, HornCNF, VariableUniverse, _as_varset, is_key
from .errors import ContractError, InputError, ResourceGuardError, subset_budget
from .hypergraph import Graph
from .keygen import (
    KeyEnumerationStats,
    enumerate_minimal_keys,
    iter_minimal_keys,
)


class ThresholdGraph:
    """An undirected simple graph with a positive integer threshold per vertex."""

    def __init__(self, graph: Graph, thresholds: Iterable[int]):
        self.graph = graph
        t = tuple(int(x) for x in thresholds)
        if len(t) != graph.n:
            raise InputError(f"expected {graph.n} thresholds, got {len(t)}")
        for v, k in enumerate(t):
            if k < 1:
                raise InputError(f"threshold of vertex {v} must be >= 1, got {k}")
        self.thresholds = t

    @property
    def n(self) -> int:
        return self.graph.n

    @property
    def universe(self) -> VariableUniverse:
        return self.graph.universe

    def __eq__(self, other):
        if not isinstance(other, ThresholdGraph):
            return NotImplemented
        return self.graph == other.graph and self.thresholds == other.thresholds

    def __hash__(self):
        return hash((self.graph, self.thresholds))

    def __repr__(self):
        return f"ThresholdGraph(n={self.n}, m={len(self.graph.edges)})"


def threshold_graph(n, edges, thresholds, labels=None) -> ThresholdGraph:
    return ThresholdGraph(Graph(VariableUniverse(n, labels), edges), thresholds)


def activate(tg: ThresholdGraph, s: Iterable[int]) -> frozenset[int]:
    """Fixed point of synchronous threshold activation from seed ``s``."""
    seed = _as_varset(s, tg.n)
    adj = tg.graph.adj_masks()
    t = tg.thresholds
    active = mask_of(seed)
    frontier = list(range(tg.n))
    while True:
        newly = 0
        for v in frontier:
            if not (active >> v) & 1 and (adj[v] & active).bit_count() >= t[v]:
                newly |= 1 << v
        if not newly:
            return frozenset(bits_of(active))
        active |= newly
        frontier = [v for v in frontier if not (active >> v) & 1]


def is_target_set(tg: ThresholdGraph, s: Iterable[int]) -> bool:
    return len(activate(tg, s)) == tg.n


def tss_to_horn(tg: ThresholdGraph, max_threshold: int = 3) -> HornCNF:
    """The CNF Ψ_G with a clause A→v for every A ⊆ N(v) of size t(v).

    Keys of Ψ_G are exactly the target sets of the graph.  Clause count is
    Σ_v C(deg v, t v), polynomial only for bounded thresholds, so thresholds
    above ``max_threshold`` raise a resource error naming the vertex.
    """
    clauses = []
    for v in range(tg.n):
        t = tg.thresholds[v]
        if t > max_threshold:
            raise ResourceGuardError(
                f"threshold {t} at vertex {tg.universe.name(v)} exceeds the "
                f"guard {max_threshold}"
            )
        for body in combinations(sorted(tg.graph.neighbors(v)), t):
            clauses.append(HornClause(frozenset(body), v))
    return HornCNF(tg.universe, clauses)


BODY_ROLES = ("x", "y", "z", "w")
HEAD_ROLES = ("xh", "yh", "zh", "wh")
HUB_ROLE = "p"


@dataclass(frozen=True)
class RoleMap:
    """Gadget bookkeeping for ``horn_to_tss``.

    ``roles`` maps each gadget vertex id to (clause index, role, attached
    original variable); original vertices 0..n_original-1 carry no entry.
    """

    n_original: int
    n_total: int
    roles: dict

    def __post_init__(self):
        for vid, (ci, role, var) in self.roles.items():
            if role not in BODY_ROLES + HEAD_ROLES + (HUB_ROLE,):
                raise InputError(f"vertex {vid}: unknown gadget role {role!r}")
            if not (self.n_original <= vid < self.n_total):
                raise InputError(f"role entry {vid} outside the gadget range")


def horn_to_tss(cnf: HornCNF) -> tuple[ThresholdGraph, RoleMap]:
    """Per-clause gadget reduction from keys to target sets.

    Every clause A→v contributes a hub p with threshold |A| plus a four-vertex
    chain (x, y, z, w) for each body variable and for the head; original
    variables keep threshold 1.  Empty bodies are rejected (the hub would
    need threshold 0): saturate unit clauses away before reducing.
    """
    n = cnf.n
    labels = [cnf.universe.name(v) for v in range(n)]
    edges: list[tuple[int, int]] = []
    roles: dict[int, tuple[int, str, int]] = {}
    thresholds = [1] * n
    nxt = n

    def fresh(label: str, t: int, clause_idx: int, role: str, var: int) -> int:
        nonlocal nxt
        vid = nxt
        nxt += 1
        labels.append(label)
        thresholds.append(t)
        roles[vid] = (clause_idx, role, var)
        return vid

    for ci, c in enumerate(cnf.clauses):
        if not c.body:
            raise InputError(
                f"clause {ci + 1} has an empty body; apply unit clauses to the "
                f"seed side before reducing"
            )
        tag = f"C{ci + 1}"
        hub = fresh(f"p^{tag}", len(c.body), ci, HUB_ROLE, c.head)
        for a in sorted(c.body):
            aname = cnf.universe.name(a)
            x = fresh(f"x^{tag}_{aname}", 1, ci, "x", a)
            y = fresh(f"y^{tag}_{aname}", 1, ci, "y", a)
            z = fresh(f"z^{tag}_{aname}", 1, ci, "z", a)
            w = fresh(f"w^{tag}_{aname}", 2, ci, "w", a)
            edges += [(a, x), (x, y), (x, z), (y, w), (z, w), (w, hub)]
        hname = cnf.universe.name(c.head)
        xh = fresh(f"x^{tag}_{hname}", 1, ci, "xh", c.head)
        yh = fresh(f"y^{tag}_{hname}", 1, ci, "yh", c.head)
        zh = fresh(f"z^{tag}_{hname}", 1, ci, "zh", c.head)
        wh = fresh(f"w^{tag}_{hname}", 2, ci, "wh", c.head)
        edges += [(hub, xh), (xh, yh), (xh, zh), (yh, wh), (zh, wh), (wh, c.head)]

    universe = VariableUniverse(nxt, tuple(labels))
    tg = ThresholdGraph(Graph(universe, edges), thresholds)
    return tg, RoleMap(n, nxt, roles)


def lift_target_set_to_key(
    cnf: HornCNF,
    roles: RoleMap,
    s: Iterable[int],
    tg: Optional[ThresholdGraph] = None,
) -> frozenset[int]:
    """Map a target set of the gadget graph to a key of the original CNF.

    The key collects the original vertices of ``s``, the variable attached to
    any chain vertex of ``s``, and the head of any clause whose hub is in
    ``s``; its size never exceeds |s|.  When ``tg`` is supplied the target-set
    precondition and the key contract are both checked.
    """
    s = frozenset(int(v) for v in s)
    for v in s:
        if v < 0 or v >= roles.n_total:
            raise InputError(f"vertex {v} outside the gadget universe")
    if tg is not None and len(activate(tg, s)) != tg.n:
        raise ContractError("the given set is not a target set of the gadget")
    key = set()
    for v in s:
        if v < roles.n_original:
            key.add(v)
            continue
        ci, role, var = roles.roles[v]
        if role == HUB_ROLE:
            key.add(cnf.clauses[ci].head)
        else:
            key.add(var)
    out = frozenset(key)
    if len(out) > len(s) or (tg is not None and not is_key(cnf, out)):
        raise ContractError("lifted set violates the key contract", witness=out)
    return out


def iter_minimal_target_sets(
    tg: ThresholdGraph,
    limit: Optional[int] = None,
    stats: Optional[KeyEnumerationStats] = None,
    max_threshold: int = 3,
) -> Iterator[frozenset[int]]:
    """Minimal target sets = minimal keys of Ψ_G; same order, same delay."""
    return iter_minimal_keys(tss_to_horn(tg, max_threshold), limit=limit, stats=stats)


def enumerate_minimal_target_sets(
    tg: ThresholdGraph,
    sink: Callable[[frozenset[int]], None],
    limit: Optional[int] = None,
    max_threshold: int = 3,
) -> KeyEnumerationStats:
    return enumerate_minimal_keys(tss_to_horn(tg, max_threshold), sink, limit=limit)


def _cardinality_search(n: int, predicate, budget: Optional[int]) -> frozenset[int]:
    # Ascending size, lexicographic within a size; the first hit is the
    # lexicographically smallest optimum.
    cap = subset_budget(budget)
    examined = 0
    for size in range(n + 1):
        for combo in combinations(range(n), size):
            examined += 1
            if examined > cap:
                raise ResourceGuardError(
                    f"minimum search examined more than {cap} subsets"
                )
            if predicate(combo):
                return frozenset(combo)
    raise ContractError("search space exhausted without a feasible set")


def minimum_key(cnf: HornCNF, budget: Optional[int] = None) -> frozenset[int]:
    """Exhaustive minimum-cardinality key, smallest lexicographic tie chosen."""
    engine = cnf.engine()
    n = cnf.n
    return _cardinality_search(n, lambda c: len(engine.closure(c)) == n, budget)


def minimum_target_set(tg: ThresholdGraph, budget: Optional[int] = None) -> frozenset[int]:
    """Exhaustive minimum-cardinality target set, lexicographically smallest."""
    return _cardinality_search(tg.n, lambda c: len(activate(tg, c)) == tg.n, budget)
