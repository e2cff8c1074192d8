"""Finite posets with a materialized order table, plus ideal/filter/antichain queries.

Elements are dense integer identifiers 0..n-1; labels are cosmetic.  The full
reflexive-transitive relation is derived once from a cover list and stored as
per-element bitmasks, so every leq query is O(1).
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import CycleDetected, IdentifierOutOfRange


@dataclass(frozen=True)
class PSubset:
    """A subset of poset elements tagged with what it is (ideal/filter/antichain)."""

    members: frozenset
    kind: str = "plain"

    def __contains__(self, p) -> bool:
        return p in self.members

    def __iter__(self) -> Iterator[int]:
        return iter(sorted(self.members))

    def __len__(self) -> int:
        return len(self.members)


class Poset:
    """Immutable finite poset built from a cover list.

    `up[p]` is the bitmask of elements >= p and `down[p]` of elements <= p;
    both include p itself.  Construction rejects cycles and out-of-range
    identifiers; antisymmetry and transitivity then hold by construction.
    """

    __slots__ = ("n", "labels", "up", "down", "_opposite")

    def __init__(self, n: int, covers: Iterable[tuple] = (), labels=None, _masks=None):
        covers = [tuple(c) for c in covers]
        if labels is not None and len(labels) != n:
            raise IdentifierOutOfRange(f"expected {n} labels, got {len(labels)}")
        self.n = n
        self.labels = tuple(labels) if labels is not None else tuple(str(i) for i in range(n))
        if _masks is not None:
            up, down = _masks
        else:
            up, down = _close(n, covers)
        self.up = up
        self.down = down
        self._opposite = None

    # -- queries ------------------------------------------------------------

    def leq(self, p: int, q: int) -> bool:
        return bool(self.up[p] >> q & 1)

    def lt(self, p: int, q: int) -> bool:
        return p != q and self.leq(p, q)

    def comparable(self, p: int, q: int) -> bool:
        return self.leq(p, q) or self.leq(q, p)

    @property
    def elements(self) -> range:
        return range(self.n)

    def up_set(self, p: int) -> frozenset:
        return _mask_to_set(self.up[p])

    def down_set(self, p: int) -> frozenset:
        return _mask_to_set(self.down[p])

    def strict_down(self, p: int) -> frozenset:
        return _mask_to_set(self.down[p] & ~(1 << p))

    def covers(self) -> list:
        """Canonical cover list (the Hasse diagram), sorted."""
        out = []
        for p in range(self.n):
            for q in range(self.n):
                if p != q and self.leq(p, q):
                    between = self.up[p] & self.down[q] & ~(1 << p) & ~(1 << q)
                    if not between:
                        out.append((p, q))
        return sorted(out)

    @property
    def op(self) -> "Poset":
        """Opposite poset: same elements, reversed relation.  Cached view."""
        if self._opposite is None:
            twin = Poset(self.n, (), self.labels, _masks=(self.down, self.up))
            twin._opposite = self
            self._opposite = twin
        return self._opposite

    def topo_order(self) -> list:
        """Elements in some linear extension (smaller elements first)."""
        return sorted(range(self.n), key=lambda p: (bin(self.down[p]).count("1"), p))

    def is_chain(self) -> bool:
        return all(self.comparable(p, q) for p in range(self.n) for q in range(p))

    def is_antichain_poset(self) -> bool:
        return all(not self.comparable(p, q) for p in range(self.n) for q in range(p))

    # -- subsets ------------------------------------------------------------

    def _check_range(self, A) -> None:
        for p in A:
            if not 0 <= p < self.n:
                raise IdentifierOutOfRange(f"element {p} not in 0..{self.n - 1}")

    def closure(self, A: Iterable[int], direction: str) -> PSubset:
        """Smallest ideal ("down") or filter ("up") containing A."""
        self._check_range(A)
        masks = self.down if direction == "down" else self.up
        if direction not in ("down", "up"):
            raise ValueError(f"direction must be 'down' or 'up', got {direction!r}")
        m = 0
        for p in A:
            m |= masks[p]
        return PSubset(_mask_to_set(m), "ideal" if direction == "down" else "filter")

    def min_elements(self, S: Iterable[int]) -> PSubset:
        """Elements of S with no strictly smaller element of S; an antichain."""
        self._check_range(S)
        S = set(S)
        mins = {p for p in S if not any(self.lt(q, p) for q in S)}
        return PSubset(frozenset(mins), "antichain")

    def max_elements(self, S: Iterable[int]) -> PSubset:
        self._check_range(S)
        S = set(S)
        maxs = {p for p in S if not any(self.lt(p, q) for q in S)}
        return PSubset(frozenset(maxs), "antichain")

    def is_ideal(self, S: Iterable[int]) -> bool:
        S = set(S)
        return all(self.down_set(p) <= S for p in S)

    def is_filter(self, S: Iterable[int]) -> bool:
        S = set(S)
        return all(self.up_set(p) <= S for p in S)

    def is_antichain(self, S: Iterable[int]) -> bool:
        S = list(S)
        return all(not self.comparable(p, q) for i, p in enumerate(S) for q in S[:i])

    def ideals(self) -> list:
        """All order ideals, as frozensets.  Exponential; fine for small n."""
        out = []
        for mask in range(1 << self.n):
            ok = True
            for p in range(self.n):
                if mask >> p & 1 and self.down[p] & ~mask:
                    ok = False
                    break
            if ok:
                out.append(_mask_to_set(mask))
        return out

    # -- identity / serialization -------------------------------------------

    def __eq__(self, other) -> bool:
        return isinstance(other, Poset) and self.n == other.n and self.up == other.up

    def __hash__(self) -> int:
        return hash((self.n, self.up))

    def __repr__(self) -> str:
        return f"Poset({self.n}, {self.covers()})"

    def to_json(self) -> str:
        doc = {"n": self.n, "covers": [list(c) for c in self.covers()]}
        if self.labels != tuple(str(i) for i in range(self.n)):
            doc["labels"] = list(self.labels)
        return json.dumps(doc, sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> "Poset":
        doc = json.loads(text)
        return cls(doc["n"], [tuple(c) for c in doc["covers"]], doc.get("labels"))


def _mask_to_set(mask: int) -> frozenset:
    out = set()
    p = 0
    while mask:
        if mask & 1:
            out.add(p)
        mask >>= 1
        p += 1
    return frozenset(out)


def _close(n: int, covers) -> tuple:
    """Reflexive-transitive closure of the cover digraph; rejects cycles."""
    succ = [0] * n
    for lower, upper in covers:
        if not (0 <= lower < n and 0 <= upper < n):
            raise IdentifierOutOfRange(f"cover ({lower},{upper}) not in 0..{n - 1}")
        succ[lower] |= 1 << upper
    up = [1 << p for p in range(n)]
    state = [0] * n  # 0 new, 1 active, 2 done

    def visit(p):
        if state[p] == 2:
            return
        if state[p] == 1:
            raise CycleDetected(f"cycle through element {p}")
        state[p] = 1
        m = succ[p]
        q = 0
        while m:
            if m & 1:
                visit(q)
                up[p] |= up[q]
            m >>= 1
            q += 1
        state[p] = 2

    for p in range(n):
        visit(p)
    down = [0] * n
    for p in range(n):
        for q in range(n):
            if up[q] >> p & 1:
                down[p] |= 1 << q
    return tuple(up), tuple(down)


def poset_from_covers(n: int, covers: Iterable[tuple], labels=None) -> Poset:
    """Build a poset whose order is the transitive closure of the cover list."""
    return Poset(n, covers, labels)


def chain(m: int, one_based: bool = True) -> Poset:
    """The chain on m elements 0 < 1 < ... < m-1, labeled 1..m by default."""
    labels = [str(i + 1) for i in range(m)] if one_based else None
    return Poset(m, [(i, i + 1) for i in range(m - 1)], labels)


def antichain(m: int, one_based: bool = True) -> Poset:
    """The antichain on m elements."""
    labels = [str(i + 1) for i in range(m)] if one_based else None
    return Poset(m, [], labels)
