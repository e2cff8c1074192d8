"""Strongly stable ideals and the chain-case duality.

Over a chain the projected letterplace ideal of any HomIdeal is strongly
stable, and conversely every strongly stable ideal in x_1..x_m arises that
way; the co-letterplace side projects to a strongly stable ideal in naturally
indexed variables generated in degrees <= m.  Composing the two gives the
duality implemented by dualize_ss.
"""

from __future__ import annotations

from typing import Iterable

from .errors import NotAChain, NotStronglyStable
from .homset import HomIdeal, minimal_of
from .ideals import coletterplace_ideal, letterplace_ideal
from .monomial import Monomial, MonomialIdeal, Var, elem_var, monomials_up_to
from .poset import Poset, chain
from .pstable import lambda_bar_inv
from .quotient import FiberMap, project_ideal


def is_strongly_stable(I: MonomialIdeal) -> bool:
    """Generator-level exchange test: replacing any variable of a generator by
    a smaller one stays in the ideal.  Checking generators suffices."""
    universe = list(I.universe)
    for g in I.gens:
        for v in g.support():
            smaller = [u for u in universe if u < v]
            base = g / Monomial.variable(v)
            for u in smaller:
                if not I.contains(base * Monomial.variable(u)):
                    return False
    return True


def borel_closure(gens: Iterable[Monomial], universe: Iterable[Var]) -> MonomialIdeal:
    """Smallest strongly stable ideal containing the given monomials."""
    universe = sorted(universe)
    seen = set()
    stack = list(gens)
    while stack:
        m = stack.pop()
        if m in seen:
            continue
        seen.add(m)
        for v in m.support():
            base = m / Monomial.variable(v)
            for u in universe:
                if u < v:
                    stack.append(base * Monomial.variable(u))
    return MonomialIdeal(seen, universe)


def _require_chain(P: Poset) -> None:
    if not P.is_chain():
        raise NotAChain("operation requires a chain poset")


def ss_from_homideal(J: HomIdeal) -> MonomialIdeal:
    """Project the letterplace ideal onto first coordinates; strongly stable."""
    _require_chain(J.poset)
    L = letterplace_ideal(J)
    pairs = sorted({(v.a, v.b) for g in L.gens for v in g.support()})
    if not pairs:
        return MonomialIdeal(L.gens, [elem_var(p) for p in range(J.poset.n)])
    out = project_ideal(L, FiberMap.projection_first(pairs))
    out = out.with_universe([elem_var(p) for p in range(J.poset.n)])
    assert is_strongly_stable(out), "projected letterplace ideal must be strongly stable"
    return out


def homideal_from_ss(I: MonomialIdeal) -> HomIdeal:
    """Inverse of ss_from_homideal: the complement filter is generated by the
    preimages of the ideal's monomials up to the generator degree bound."""
    if not is_strongly_stable(I):
        raise NotStronglyStable("input fails the exchange test")
    m = len(I.universe)
    P = chain(m)
    if I.is_zero:
        return HomIdeal.cofinite(P, [])
    monos = [mm for mm in monomials_up_to(I.universe, I.max_degree()) if I.contains(mm)]
    gens = minimal_of([lambda_bar_inv(P, mm) for mm in monos])
    return HomIdeal.cofinite(P, gens)


def dualize_ss(I: MonomialIdeal) -> MonomialIdeal:
    """Dual of a strongly stable ideal in x_1..x_m: project the co-letterplace
    ideal of its HomIdeal onto second coordinates.  Generators have degree <= m."""
    J = homideal_from_ss(I)
    C = coletterplace_ideal(J)
    pairs = sorted({(v.a, v.b) for g in C.gens for v in g.support()})
    if not pairs:
        return MonomialIdeal(C.gens, [])
    out = project_ideal(C, FiberMap.projection_second(pairs))
    m = len(I.universe)
    assert out.max_degree() <= m, "dual must be generated in degrees <= m"
    assert is_strongly_stable(out), "dual must be strongly stable"
    return out


def dualize_ss_bounded(I: MonomialIdeal, bound: int) -> MonomialIdeal:
    """Duality between stable ideals generated in degrees <= bound in x_1..x_m
    and ones generated in degrees <= m in x_1..x_bound; an involution.

    Computed as dualize_ss followed by reindexing natural variable index j to
    the chain element with identifier j (displayed 1-based as x_{j+1}).
    """
    if I.max_degree() > bound:
        raise ValueError(f"ideal is not generated in degrees <= {bound}")
    nat = dualize_ss(I)
    top = max((v.a for g in nat.gens for v in g.support()), default=-1)
    assert top < bound, "dual exceeded the regularity window"
    gens = [Monomial((elem_var(v.a), e) for v, e in g.exps) for g in nat.gens]
    return MonomialIdeal(gens, [elem_var(p) for p in range(bound)])
