"""Isotone projections of doubly indexed variables and regularity checks.

A FiberMap sends each source pair (p, i) to a target variable; merging a
fiber corresponds to dividing the polynomial ring by the differences of its
variables.  Whether that basis of differences is a regular sequence for a
quotient by a monomial ideal is detected exactly through Hilbert-series
numerators: for graded linear forms the quotient is regular iff the numerator
is unchanged by the substitution.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable

from .errors import VariableOutsideSource
from .monomial import Monomial, MonomialIdeal, Var, elem_var, hilbert_numerator, nat_var, pair_var
from .poset import Poset


@dataclass(frozen=True)
class FiberMap:
    """Assignment of source pairs (p, i) to target variables, kept parallel."""

    source: tuple
    targets: tuple

    def __post_init__(self):
        if len(self.source) != len(self.targets):
            raise ValueError("source and targets must be parallel")

    @classmethod
    def make(cls, source: Iterable, targets: Iterable) -> "FiberMap":
        src = tuple(sorted(tuple(s) for s in source))
        lookup = dict(zip((tuple(s) for s in source), targets))
        return cls(src, tuple(lookup[s] for s in src))

    @classmethod
    def projection_first(cls, source: Iterable) -> "FiberMap":
        """(p, i) -> x_p.  Right strict chain fibers for any poset."""
        src = sorted(tuple(s) for s in source)
        return cls(tuple(src), tuple(elem_var(p) for p, _ in src))

    @classmethod
    def projection_second(cls, source: Iterable) -> "FiberMap":
        """(p, i) -> x_i.  Left strict chain fibers when the poset is a chain."""
        src = sorted(tuple(s) for s in source)
        return cls(tuple(src), tuple(nat_var(i) for _, i in src))

    @classmethod
    def identity(cls, source: Iterable) -> "FiberMap":
        src = sorted(tuple(s) for s in source)
        return cls(tuple(src), tuple(pair_var(p, i) for p, i in src))

    def target_of(self, pair) -> Var:
        return self.targets[self.source.index(tuple(pair))]

    def fibers(self) -> dict:
        out = {}
        for s, t in zip(self.source, self.targets):
            out.setdefault(t, []).append(s)
        return out

    def to_json(self) -> str:
        doc = {
            "source": [list(s) for s in self.source],
            "assignment": [list(t) for t in self.targets],
        }
        return json.dumps(doc, sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> "FiberMap":
        doc = json.loads(text)
        return cls.make(
            [tuple(s) for s in doc["source"]],
            [Var(t[0], int(t[1]), int(t[2]) if len(t) > 2 else 0) for t in doc["assignment"]],
        )


def fiber_kind(P: Poset, f: FiberMap) -> str:
    """Classify fibers: "right", "left", "both" or "neither".

    A fiber qualifies as a chain fiber when its pairs are pairwise comparable
    in (opposite of P) x N, i.e. smaller second coordinate goes with larger or
    equal first coordinate.  Right-strict additionally needs distinct second
    coordinates, left-strict distinct first coordinates.
    """
    right = left = True
    for fiber in f.fibers().values():
        for a in range(len(fiber)):
            for b in range(a):
                (p, i), (q, j) = fiber[a], fiber[b]
                if i > j:
                    (p, i), (q, j) = (q, j), (p, i)
                chain_ok = P.leq(q, p) if i < j else (P.comparable(p, q) and i == j)
                if i == j:
                    right = False
                if not chain_ok:
                    right = left = False
                if p == q:
                    left = False
    if right and left:
        return "both"
    if right:
        return "right"
    if left:
        return "left"
    return "neither"


def quotient_order_ok(P: Poset, f: FiberMap) -> bool:
    """True iff the product order on the source descends to a partial order on fibers.

    The induced relation (class A <= class B when some a in A is <= some b in B
    in the product order) must have an antisymmetric transitive closure for the
    fiber map to be isotone onto a genuine poset.
    """
    classes = list(f.fibers().values())
    k = len(classes)
    rel = [[False] * k for _ in range(k)]
    for i in range(k):
        for j in range(k):
            rel[i][j] = any(
                P.leq(p, q) and a <= b for (p, a) in classes[i] for (q, b) in classes[j]
            )
    for m in range(k):
        for i in range(k):
            if rel[i][m]:
                for j in range(k):
                    rel[i][j] = rel[i][j] or rel[m][j]
    return all(not (rel[i][j] and rel[j][i]) for i in range(k) for j in range(k) if i != j)


def project_ideal(I: MonomialIdeal, f: FiberMap) -> MonomialIdeal:
    """Substitute x[p,i] -> target variable; exponents accumulate; minimalize."""
    table = {pair_var(p, i): t for (p, i), t in zip(f.source, f.targets)}
    gens = []
    for g in I.gens:
        exps = []
        for v, e in g.exps:
            if v not in table:
                raise VariableOutsideSource(f"variable {v} not in the fiber map source")
            exps.append((table[v], e))
        gens.append(Monomial(exps))
    universe = sorted(set(f.targets))
    return MonomialIdeal(gens, universe)


def regular_quotient_check(I: MonomialIdeal, f: FiberMap) -> bool:
    """Exact Hilbert-series test for the variable-difference basis being regular.

    With K the numerator over v variables (series K/(1-t)^v), killing d
    independent linear forms multiplies the series by (1-t)^d exactly when the
    forms are regular; both sides then share the same numerator.  So the basis
    of fiber differences is regular iff the numerator of the projected ideal
    equals the numerator of the source ideal.
    """
    return hilbert_numerator(I) == hilbert_numerator(project_ideal(I, f))
