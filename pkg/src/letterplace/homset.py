"""The poset of isotone maps P -> N and its poset ideals.

Total isotone maps are plain value tuples indexed by poset element; the
pointwise order makes them a poset.  A HomIdeal is a downward-closed set of
such maps in one of three representations:

* principal(alpha): all maps <= alpha pointwise,
* finite(maps): an explicit finite downward-closed set,
* cofinite(gens): the complement of the filter generated upward by gens.

Every representation can produce the minimal generators of its complement
filter; marker computations and letterplace generation key off those.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable

from .errors import ExplosionGuard, MixedPosets, NotIsotone
from .poset import Poset


def is_isotone(P: Poset, values) -> bool:
    if len(values) != P.n:
        return False
    return all(
        values[p] <= values[q]
        for p in range(P.n)
        for q in range(P.n)
        if p != q and P.leq(p, q)
    )


def check_isotone(P: Poset, values) -> tuple:
    values = tuple(values)
    if any(v < 0 for v in values) or not is_isotone(P, values):
        raise NotIsotone(f"{values} is not an isotone map on {P!r}")
    return values


def dominates(u, v) -> bool:
    """u >= v pointwise."""
    return all(a >= b for a, b in zip(u, v))


def enumerate_isotone(P: Poset, bound: int, cap: int = 10**7) -> list:
    """All isotone maps P -> {0..bound}, in lexicographic value order."""
    if bound < 0:
        raise ValueError("bound must be >= 0")
    if (bound + 1) ** P.n > cap:
        raise ExplosionGuard(f"up to {(bound + 1) ** P.n} maps exceeds cap {cap}")
    n = P.n
    below = [[q for q in range(n) if P.lt(q, p)] for p in range(n)]
    above = [[q for q in range(n) if P.lt(p, q)] for p in range(n)]
    out = []
    vals = [0] * n

    def rec(k):
        if k == n:
            out.append(tuple(vals))
            return
        lo = max((vals[q] for q in below[k] if q < k), default=0)
        hi = min((vals[q] for q in above[k] if q < k), default=bound)
        for v in range(lo, hi + 1):
            vals[k] = v
            rec(k + 1)

    rec(0)
    return out


def minimal_of(maps: Iterable[tuple]) -> list:
    """Pointwise-minimal elements of a finite set of maps over one poset."""
    maps = sorted(set(tuple(m) for m in maps))
    if maps and any(len(m) != len(maps[0]) for m in maps):
        raise MixedPosets("maps have different lengths")
    out = []
    for m in maps:
        if not any(dominates(m, kept) for kept in out):
            out = [kept for kept in out if not dominates(kept, m)]
            out.append(m)
    return sorted(out)


@dataclass(frozen=True)
class Marker:
    """A poset ideal I of P together with an isotone map on I.

    A marker for a HomIdeal J certifies that every total isotone extension of
    its map lies in J.  values holds None outside the domain.
    """

    domain: frozenset
    values: tuple

    def graph(self) -> frozenset:
        return frozenset((p, self.values[p]) for p in self.domain)

    def restriction_of(self, other: "Marker") -> bool:
        return self.domain <= other.domain and all(
            self.values[p] == other.values[p] for p in self.domain
        )

    @classmethod
    def on(cls, domain: Iterable[int], values: dict, n: int) -> "Marker":
        dom = frozenset(domain)
        return cls(dom, tuple(values[p] if p in dom else None for p in range(n)))


def check_marker_shape(P: Poset, m: Marker) -> None:
    if not P.is_ideal(m.domain):
        raise ValueError(f"marker domain {sorted(m.domain)} is not a poset ideal")
    for p in m.domain:
        for q in m.domain:
            if P.lt(p, q) and m.values[p] > m.values[q]:
                raise NotIsotone(f"marker values not isotone at {p} <= {q}")


class HomIdeal:
    """A poset ideal of Hom(P, N) in one of three representations."""

    __slots__ = ("poset", "kind", "alpha", "maps", "gens", "_cgens")

    def __init__(self, poset, kind, alpha=None, maps=None, gens=None):
        self.poset = poset
        self.kind = kind
        self.alpha = alpha
        self.maps = maps
        self.gens = gens
        self._cgens = None

    # -- constructors ---------------------------------------------------------

    @classmethod
    def principal(cls, P: Poset, alpha) -> "HomIdeal":
        return cls(P, "principal", alpha=check_isotone(P, alpha))

    @classmethod
    def finite(cls, P: Poset, maps: Iterable) -> "HomIdeal":
        maps = frozenset(check_isotone(P, m) for m in maps)
        for m in maps:
            for p in range(P.n):
                lower = max((m[q] for q in range(P.n) if P.lt(q, p)), default=0)
                if m[p] > lower:
                    step = tuple(v - 1 if i == p else v for i, v in enumerate(m))
                    if step not in maps:
                        raise ValueError(
                            f"finite set not downward closed: {step} missing below {m}"
                        )
        return cls(P, "finite", maps=maps)

    @classmethod
    def cofinite(cls, P: Poset, gens: Iterable) -> "HomIdeal":
        gens = tuple(minimal_of([check_isotone(P, g) for g in gens]))
        return cls(P, "cofinite", gens=gens)

    # -- basic queries ---------------------------------------------------------

    @property
    def is_finite_repr(self) -> bool:
        return self.kind in ("principal", "finite")

    def member(self, phi) -> bool:
        phi = tuple(phi)
        if self.kind == "principal":
            return dominates(self.alpha, phi)
        if self.kind == "finite":
            return phi in self.maps
        return not any(dominates(phi, g) for g in self.gens)

    def members(self) -> list:
        """All maps of a finite-representation ideal, lexicographically."""
        if self.kind == "finite":
            return sorted(self.maps)
        if self.kind == "principal":
            P, alpha = self.poset, self.alpha
            n = P.n
            out = []
            vals = [0] * n

            def rec(k):
                if k == n:
                    out.append(tuple(vals))
                    return
                lo = max((vals[q] for q in range(k) if P.lt(q, k)), default=0)
                hi = min(
                    min((vals[q] for q in range(k) if P.lt(k, q)), default=alpha[k]),
                    alpha[k],
                )
                for v in range(lo, hi + 1):
                    vals[k] = v
                    rec(k + 1)

            rec(0)
            return out
        raise ValueError("cofinite ideals are not enumerable")

    # -- complement filter -------------------------------------------------------

    def complement_gens(self) -> tuple:
        """Pointwise-minimal elements of the complement filter."""
        if self._cgens is None:
            self._cgens = self._compute_cgens()
        return self._cgens

    def _compute_cgens(self):
        P = self.poset
        if self.kind == "cofinite":
            return self.gens
        if self.kind == "principal":
            cands = []
            for p in range(P.n):
                up = P.up_set(p)
                cands.append(tuple(self.alpha[p] + 1 if q in up else 0 for q in range(P.n)))
            return tuple(minimal_of(cands))
        # finite: minimal elements of the complement live within values <= N+1,
        # N the largest value occurring in the ideal.
        N = max((v for m in self.maps for v in m), default=0)
        pool = enumerate_isotone(P, N + 1)
        return tuple(minimal_of([m for m in pool if m not in self.maps]))

    def nmax(self) -> int:
        """Largest value among complement-filter generators; the enumeration bound."""
        return max((v for g in self.complement_gens() for v in g), default=0)

    # -- markers ------------------------------------------------------------------

    def is_marker(self, marker: Marker) -> bool:
        """True iff every total isotone extension of the marker lies in the ideal.

        Characterization: an extension escaping into the complement exists iff
        the marker dominates some complement generator on its domain (values
        off a poset ideal can be raised freely), so the marker is valid iff for
        every generator psi some domain point has value < psi there.
        """
        check_marker_shape(self.poset, marker)
        return all(
            any(marker.values[p] < g[p] for p in marker.domain)
            for g in self.complement_gens()
        )

    def minimal_markers(self, cap: int = 10**7) -> list:
        """Markers whose graphs are inclusion-minimal among all marker graphs.

        For a finite ideal every marker's domain is all of P (a proper ideal
        leaves room for unbounded extensions), so the minimal markers are
        exactly the member maps.  Cofinite ideals get the general search over
        (poset ideal, bounded isotone map) pairs.
        """
        P = self.poset
        if self.is_finite_repr:
            full = frozenset(range(P.n))
            return [Marker(full, m) for m in self.members()]
        gens = self.complement_gens()
        if not gens:
            return [Marker(frozenset(), (None,) * P.n)]
        nmax = self.nmax()
        ideals = P.ideals()
        if len(ideals) * (nmax + 1) ** P.n > cap:
            raise ExplosionGuard("marker search space exceeds cap")
        found = []
        for dom in ideals:
            order = sorted(dom)
            vals = {}

            def rec(k):
                if k == len(order):
                    cand = Marker.on(order, vals, P.n)
                    if all(any(cand.values[p] < g[p] for p in dom) for g in gens):
                        found.append(cand)
                    return
                p = order[k]
                lo = max((vals[q] for q in order[:k] if P.lt(q, p)), default=0)
                for v in range(lo, nmax + 1):
                    ok = all(v <= vals[q] for q in order[:k] if P.lt(p, q))
                    if ok:
                        vals[p] = v
                        rec(k + 1)
                vals.pop(p, None)

            rec(0)
        graphs = [m.graph() for m in found]
        keep = []
        for i, m in enumerate(found):
            if not any(j != i and graphs[j] < graphs[i] for j in range(len(found))):
                keep.append(m)
        keep.sort(key=lambda m: (len(m.domain), sorted(m.graph())))
        return keep

    # -- serialization ---------------------------------------------------------

    def to_json(self) -> str:
        doc = {"poset": json.loads(self.poset.to_json())}
        if self.kind == "principal":
            doc["repr"] = {"principal": list(self.alpha)}
        elif self.kind == "finite":
            doc["repr"] = {"finite": sorted(list(m) for m in self.maps)}
        else:
            doc["repr"] = {"cofinite": [list(g) for g in self.gens]}
        return json.dumps(doc, sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> "HomIdeal":
        doc = json.loads(text)
        P = Poset.from_json(json.dumps(doc["poset"]))
        body = doc["repr"]
        if "principal" in body:
            return cls.principal(P, body["principal"])
        if "finite" in body:
            return cls.finite(P, [tuple(m) for m in body["finite"]])
        if "cofinite" in body:
            return cls.cofinite(P, [tuple(g) for g in body["cofinite"]])
        raise ValueError("unknown HomIdeal representation")

    def __repr__(self):
        body = {"principal": self.alpha, "finite": self.maps, "cofinite": self.gens}[self.kind]
        return f"HomIdeal({self.kind}, {body})"
