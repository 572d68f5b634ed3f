"""Polynomial-delay enumeration of minimal keys, plus the key graph D_Φ.

The enumerator walks a directed graph on the minimal keys: from a key K,
each pair (v ∈ K, clause A→v) yields the candidate S = (K ∖ {v}) ∪ A, which
is always a key and minimizes to an out-neighbor.  The walk keeps a LIFO
queue of pending keys and a visited set; before a key is output all its
out-neighbors are generated and the unseen ones queued, which bounds the
number of closure computations between consecutive outputs by m·(n+1)+1.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterator, Optional

from .core import HornCNF, _as_varset, _minimize, is_key
from .errors import ContractError, ResourceGuardError


@dataclass
class KeyEnumerationStats:
    """Counters for one enumeration run.

    ``closures`` counts every forward-closure computation of the run;
    ``startup_closures`` covers the work before the first emission (initial
    greedy minimization plus the first expansion); ``max_delay_closures`` is
    the largest number of closures between consecutive emissions, which the
    delay bound m·(n+1)+1 applies to.
    """

    keys: int = 0
    candidates: int = 0
    closures: int = 0
    startup_closures: int = 0
    max_delay_closures: int = 0

    def as_dict(self) -> dict:
        return {
            "keys": self.keys,
            "candidates": self.candidates,
            "closures": self.closures,
            "startup_closures": self.startup_closures,
            "max_delay_closures": self.max_delay_closures,
        }


def first_minimal_key(cnf: HornCNF) -> frozenset[int]:
    """Greedy minimization of V itself (V is always a key)."""
    return _minimize(cnf.engine(), cnf.n, cnf.universe.full_set())


def _expand(engine, cnf: HornCNF, key: frozenset[int], stats: Optional[KeyEnumerationStats]):
    # Candidate order is part of the contract: v ∈ K ascending, clauses in
    # input order; duplicates dropped keeping the first occurrence.
    n = cnf.n
    out = []
    seen = set()
    for v in sorted(key):
        base = key - {v}
        for c in cnf.clauses:
            if c.head != v:
                continue
            if stats is not None:
                stats.candidates += 1
            k2 = _minimize(engine, n, frozenset(base | c.body))
            if k2 not in seen:
                seen.add(k2)
                out.append(k2)
    return out


def neighbors(cnf: HornCNF, key) -> list[frozenset[int]]:
    """Out-neighbors of a minimal key in D_Φ, deterministic order.

    Raises a contract error when ``key`` is not a minimal key.
    """
    key = _as_varset(key, cnf.n)
    engine = cnf.engine()
    if len(engine.closure(key)) != cnf.n:
        raise ContractError(f"{sorted(key)} is not a key", witness=key)
    for v in key:
        if len(engine.closure(key - {v})) == cnf.n:
            raise ContractError(
                f"{sorted(key)} is not minimal: dropping {v} keeps it a key",
                witness=key - {v},
            )
    return _expand(engine, cnf, key, None)


def iter_minimal_keys(
    cnf: HornCNF,
    limit: Optional[int] = None,
    stats: Optional[KeyEnumerationStats] = None,
) -> Iterator[frozenset[int]]:
    """Yield every minimal key exactly once, polynomial delay.

    Pop a key, expand all its out-neighbors, queue the unseen ones, then
    emit the popped key.  The run uses a private closure engine so the
    counters in ``stats`` describe this run alone.
    """
    if limit is not None and limit <= 0:
        return
    engine = cnf.fresh_engine()
    n = cnf.n
    first = _minimize(engine, n, cnf.universe.full_set())
    pending = [first]
    visited = {first}
    emitted = 0
    prev_mark = None  # closure count at the previous emission
    while pending:
        key = pending.pop()
        for k2 in _expand(engine, cnf, key, stats):
            if k2 not in visited:
                visited.add(k2)
                pending.append(k2)
        if stats is not None:
            if prev_mark is None:
                stats.startup_closures = engine.calls
            else:
                stats.max_delay_closures = max(
                    stats.max_delay_closures, engine.calls - prev_mark
                )
            prev_mark = engine.calls
            stats.keys += 1
            stats.closures = engine.calls
        emitted += 1
        yield key
        if limit is not None and emitted >= limit:
            return


def enumerate_minimal_keys(
    cnf: HornCNF,
    sink: Callable[[frozenset[int]], None],
    limit: Optional[int] = None,
) -> KeyEnumerationStats:
    """Drive the enumeration into ``sink`` and return the run's counters."""
    stats = KeyEnumerationStats()
    for key in iter_minimal_keys(cnf, limit=limit, stats=stats):
        sink(key)
    return stats


@dataclass(frozen=True)
class KeyGraph:
    """The deterministic D_Φ instance induced by this library's tie-breaking."""

    nodes: tuple[frozenset[int], ...]
    arcs: tuple[tuple[frozenset[int], frozenset[int]], ...]


def build_key_graph(cnf: HornCNF, max_keys: int = 100_000) -> KeyGraph:
    """Materialize all minimal keys and their out-arcs; desk scale only."""
    engine = cnf.fresh_engine()
    n = cnf.n
    first = _minimize(engine, n, cnf.universe.full_set())
    order = [first]
    visited = {first}
    arcs = []
    pending = [first]
    while pending:
        key = pending.pop()
        for k2 in _expand(engine, cnf, key, None):
            arcs.append((key, k2))
            if k2 not in visited:
                visited.add(k2)
                pending.append(k2)
                order.append(k2)
                if len(order) > max_keys:
                    raise ResourceGuardError(
                        f"key graph exceeds {max_keys} minimal keys"
                    )
    return KeyGraph(tuple(order), tuple(arcs))


def is_strongly_connected(kg: KeyGraph) -> bool:
    if not kg.nodes:
        return True
    index = {k: i for i, k in enumerate(kg.nodes)}
    fwd = [[] for _ in kg.nodes]
    rev = [[] for _ in kg.nodes]
    for a, b in kg.arcs:
        fwd[index[a]].append(index[b])
        rev[index[b]].append(index[a])
    for adjacency in (fwd, rev):
        seen = {0}
        stack = [0]
        while stack:
            u = stack.pop()
            for w in adjacency[u]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        if len(seen) != len(kg.nodes):
            return False
    return True


def closure_layers(cnf: HornCNF, s) -> list[frozenset[int]]:
    """Round decomposition of forward chaining from ``s``.

    Layer 0 is ``s``; layer i+1 holds the heads that first become derivable
    once all earlier layers are available.  The layers partition the closure.
    """
    s = _as_varset(s, cnf.n)
    layers = [s]
    current = set(s)
    remaining = list(cnf.clauses)
    while True:
        new = set()
        rest = []
        for c in remaining:
            if c.body <= current:
                if c.head not in current:
                    new.add(c.head)
            else:
                rest.append(c)
        new -= current
        if not new:
            return layers
        layers.append(frozenset(new))
        current |= new
        remaining = rest


def rho_measure(cnf: HornCNF, k1, k2) -> tuple[int, ...]:
    """The progress measure ρ(K1, K2): per-layer overlap of K1 with the
    forward-chaining layers grown from K2.  Both arguments must be keys."""
    k1 = _as_varset(k1, cnf.n)
    k2 = _as_varset(k2, cnf.n)
    for name, k in (("K1", k1), ("K2", k2)):
        if not is_key(cnf, k):
            raise ContractError(f"{name}={sorted(k)} is not a key", witness=k)
    layers = closure_layers(cnf, k2)
    return tuple(len(layer & k1) for layer in layers)
