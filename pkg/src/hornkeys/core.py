"""Pure Horn CNFs and the forward-chaining primitives built on them.

A pure Horn clause is an implication ``body -> head`` with a set-valued body
and a single head variable.  The forward-chaining closure of a seed set S is
the least superset of S such that every clause whose body it contains also
contributes its head; a set whose closure is the whole universe is a key.

All operations are pure functions of immutable values and can be shared
freely across threads.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

from ._kernel import Engine
from .errors import ContractError, InputError


@dataclass(frozen=True)
class VariableUniverse:
    """A set of ``n`` variables indexed 0..n-1, optionally carrying labels."""

    n: int
    labels: Optional[tuple[str, ...]] = None

    def __post_init__(self):
        if self.n < 0:
            raise InputError(f"universe size must be nonnegative, got {self.n}")
        if self.labels is not None:
            labels = tuple(self.labels)
            object.__setattr__(self, "labels", labels)
            if len(labels) != self.n:
                raise InputError(f"expected {self.n} labels, got {len(labels)}")
            if len(set(labels)) != len(labels):
                raise InputError("labels must be pairwise distinct")

    def name(self, v: int) -> str:
        """Label of ``v`` when labels exist, else its 1-based id as text."""
        if self.labels is not None:
            return self.labels[v]
        return str(v + 1)

    def index(self, label: str) -> int:
        if self.labels is None:
            raise InputError("universe carries no labels")
        try:
            return self.labels.index(label)
        except ValueError:
            raise InputError(f"unknown variable label {label!r}") from None

    def full_set(self) -> frozenset[int]:
        return frozenset(range(self.n))


def _as_varset(s: Iterable[int], n: int) -> frozenset[int]:
    out = frozenset(s)
    for v in out:
        if not isinstance(v, int) or isinstance(v, bool):
            raise InputError(f"variable index must be an int, got {v!r}")
        if v < 0 or v >= n:
            raise InputError(f"variable index {v} out of range 0..{n - 1}")
    return out


@dataclass(frozen=True)
class HornClause:
    """One implication ``body -> head``; a head inside the body is rejected."""

    body: frozenset[int]
    head: int

    def __post_init__(self):
        object.__setattr__(self, "body", frozenset(self.body))
        if self.head in self.body:
            raise InputError(
                f"clause head {self.head} occurs in its own body (tautology)"
            )


class HornCNF:
    """An ordered list of pure Horn clauses over a fixed variable universe.

    Clause order is preserved exactly as given; it determines the
    deterministic tie-breaking of key enumeration.  Duplicate clauses are
    permitted (see :func:`lint`).
    """

    def __init__(self, universe: VariableUniverse, clauses: Iterable[HornClause]):
        self.universe = universe
        clauses = tuple(clauses)
        n = universe.n
        for i, c in enumerate(clauses):
            if not isinstance(c, HornClause):
                raise InputError(f"clause {i} is not a HornClause")
            if c.head < 0 or c.head >= n:
                raise InputError(f"clause {i}: head {c.head} out of range 0..{n - 1}")
            for v in c.body:
                if not isinstance(v, int) or v < 0 or v >= n:
                    raise InputError(f"clause {i}: body variable {v} out of range")
        self.clauses = clauses
        self._engine = None

    @property
    def n(self) -> int:
        return self.universe.n

    @property
    def m(self) -> int:
        return len(self.clauses)

    def engine(self) -> Engine:
        """Shared closure engine for this CNF (built lazily, then cached)."""
        if self._engine is None:
            self._engine = self.fresh_engine()
        return self._engine

    def fresh_engine(self) -> Engine:
        """A new engine with its own call counter (used by enumeration runs)."""
        bodies = [tuple(sorted(c.body)) for c in self.clauses]
        heads = [c.head for c in self.clauses]
        return Engine(self.universe.n, bodies, heads)

    def __eq__(self, other):
        if not isinstance(other, HornCNF):
            return NotImplemented
        return self.universe == other.universe and self.clauses == other.clauses

    def __hash__(self):
        return hash((self.universe, self.clauses))

    def __repr__(self):
        return f"HornCNF(n={self.n}, m={self.m})"


def horn_cnf(n, implications, labels=None) -> HornCNF:
    """Build a CNF from ``(body_iterable, head)`` pairs; convenience helper."""
    universe = VariableUniverse(n, labels)
    return HornCNF(
        universe, [HornClause(frozenset(body), head) for body, head in implications]
    )


def forward_closure(cnf: HornCNF, s: Iterable[int]) -> frozenset[int]:
    """Least superset of ``s`` closed under firing every clause it contains."""
    seed = _as_varset(s, cnf.n)
    return frozenset(cnf.engine().closure(sorted(seed)))


def is_implicate(cnf: HornCNF, body: Iterable[int], head: int) -> bool:
    """True iff ``body -> head`` follows from the CNF (heads in the body do)."""
    body = _as_varset(body, cnf.n)
    if not isinstance(head, int) or head < 0 or head >= cnf.n:
        raise InputError(f"head index {head} out of range 0..{cnf.n - 1}")
    return head in body or head in forward_closure(cnf, body)


def is_key(cnf: HornCNF, k: Iterable[int]) -> bool:
    """True iff the closure of ``k`` is the whole universe."""
    seed = _as_varset(k, cnf.n)
    return len(cnf.engine().closure(sorted(seed))) == cnf.n


def _minimize(engine: Engine, n: int, s: frozenset[int]) -> frozenset[int]:
    # Drops are attempted in ascending variable order; a drop is kept whenever
    # the remainder is still a key.  This is the single tie-breaking rule that
    # makes enumeration output reproducible.
    cur = set(s)
    for v in sorted(s):
        trial = cur - {v}
        if len(engine.closure(trial)) == n:
            cur = trial
    return frozenset(cur)


def minimize_key(cnf: HornCNF, s: Iterable[int]) -> frozenset[int]:
    """Shrink the key ``s`` to a minimal key by greedy ascending-order drops."""
    seed = _as_varset(s, cnf.n)
    closed = frozenset(cnf.engine().closure(sorted(seed)))
    if len(closed) != cnf.n:
        raise ContractError(
            f"set {sorted(seed)} is not a key; its closure misses "
            f"{sorted(cnf.universe.full_set() - closed)}",
            witness=closed,
        )
    return _minimize(cnf.engine(), cnf.n, seed)


def equivalent(cnf1: HornCNF, cnf2: HornCNF) -> bool:
    """True iff every clause of each CNF is an implicate of the other."""
    if cnf1.n != cnf2.n:
        raise InputError(
            f"universe mismatch: {cnf1.n} vs {cnf2.n} variables"
        )
    for a, b in ((cnf1, cnf2), (cnf2, cnf1)):
        for c in b.clauses:
            if not is_implicate(a, c.body, c.head):
                return False
    return True


def lint(cnf: HornCNF) -> list[str]:
    """Warnings for suspicious but legal input, currently duplicate clauses."""
    seen = {}
    warnings = []
    for i, c in enumerate(cnf.clauses):
        key = (c.body, c.head)
        if key in seen:
            warnings.append(f"clause {i + 1} duplicates clause {seen[key] + 1}")
        else:
            seen[key] = i
    return warnings
