"""Ascents, graphs, letterplace and co-letterplace ideals, supports, hulls.

The letterplace ideal of a HomIdeal J is generated by the ascent monomials of
the maps in the complement filter; the co-letterplace ideal by the graph
monomials of the minimal markers.  Both live in doubly indexed variables
x[p,i] and are Alexander dual to each other.
"""

from __future__ import annotations

from .errors import InfiniteIdeal
from .homset import HomIdeal, check_isotone, enumerate_isotone
from .monomial import Monomial, MonomialIdeal, pair_var
from .poset import Poset


def ascent(P: Poset, phi) -> frozenset:
    """Pairs (p, i) with max of phi below p <= i < phi(p).

    For minimal p the lower constraint is vacuous, so i runs from 0.
    """
    phi = check_isotone(P, phi)
    out = set()
    for p in range(P.n):
        lo = max((phi[q] for q in range(P.n) if P.lt(q, p)), default=0)
        for i in range(lo, phi[p]):
            out.add((p, i))
    return frozenset(out)


def ascent_via_filters(P: Poset, phi) -> frozenset:
    """Independent route: (p, i) is an ascent pair iff p is minimal in the
    filter of elements with value >= i+1."""
    phi = check_isotone(P, phi)
    out = set()
    top = max(phi, default=0)
    for i in range(top):
        level = {p for p in range(P.n) if phi[p] >= i + 1}
        for p in P.min_elements(level):
            out.add((p, i))
    return frozenset(out)


def graph_pairs(phi) -> frozenset:
    return frozenset((p, v) for p, v in enumerate(phi))


def _pairs_monomial(pairs) -> Monomial:
    return Monomial((pair_var(p, i), 1) for p, i in pairs)


def ascent_monomial(P: Poset, phi) -> Monomial:
    return _pairs_monomial(ascent(P, phi))


def letterplace_ideal(J: HomIdeal, cap: int = 10**7) -> MonomialIdeal:
    """Minimal ascent monomials of the complement filter.

    Maps with a value above the largest complement-generator value never give
    inclusion-minimal ascents, so the enumeration stops at that bound.  An
    empty ideal (complement = everything) yields the unit ideal, flagged by
    MonomialIdeal.is_unit; J = Hom yields the zero ideal.
    """
    P = J.poset
    if not J.complement_gens():
        return MonomialIdeal([])
    bound = J.nmax()
    gens = [
        _pairs_monomial(ascent(P, psi))
        for psi in enumerate_isotone(P, bound, cap)
        if not J.member(psi)
    ]
    return MonomialIdeal(gens)


def coletterplace_ideal(J: HomIdeal, cap: int = 10**7) -> MonomialIdeal:
    """Minimal graph monomials over the minimal markers of J."""
    gens = [_pairs_monomial(m.graph()) for m in J.minimal_markers(cap)]
    return MonomialIdeal(gens)


def support(J: HomIdeal, cap: int = 10**7) -> frozenset:
    """Pairs (p, i) whose variable appears in the minimal generators.

    For finite ideals this must equal {(p, i) | i <= hull(p)}, which is
    asserted here.
    """
    L = letterplace_ideal(J, cap)
    out = frozenset((v.a, v.b) for g in L.gens for v in g.support())
    if J.is_finite_repr:
        alpha = hull_map(J)
        formula = frozenset((p, i) for p in range(J.poset.n) for i in range(alpha[p] + 1))
        assert out == formula, "support disagrees with the hull formula"
    return out


def hull_map(J: HomIdeal) -> tuple:
    """Pointwise maximum over a finite ideal's members; isotone by downward closure."""
    if J.kind == "principal":
        return J.alpha
    if J.kind == "finite":
        members = J.members()
        if not members:
            raise InfiniteIdeal("empty ideal has no hull map")
        hull = tuple(max(m[p] for m in members) for p in range(J.poset.n))
        return check_isotone(J.poset, hull)
    raise InfiniteIdeal("hull map requires a principal or explicit-finite ideal")


def principal_letterplace_gens(P: Poset, alpha) -> MonomialIdeal:
    """Direct multichain description of the principal letterplace generators.

    Generators are monomials prod x[p_j, j] over multichains p_0 <= ... <= p_r
    with alpha(p_r) = r and alpha(p_j) > j for j < r.  Must coincide with
    letterplace_ideal of the principal ideal on alpha.
    """
    alpha = check_isotone(P, alpha)
    gens = []
    chain = []

    def rec(last, pos):
        for q in range(P.n):
            if last is not None and not P.leq(last, q):
                continue
            if alpha[q] < pos:
                continue
            chain.append(q)
            if alpha[q] == pos:
                gens.append(_pairs_monomial((p, j) for j, p in enumerate(chain)))
            else:
                rec(q, pos + 1)
            chain.pop()

    rec(None, 0)
    return MonomialIdeal(gens)
