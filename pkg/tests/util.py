"""Shared test infrastructure: poset catalogues, oracles, random instances."""

from __future__ import annotations

from itertools import combinations, permutations

from letterplace.homset import HomIdeal, dominates, enumerate_isotone
from letterplace.monomial import Monomial, MonomialIdeal, elem_var, monomials_up_to
from letterplace.poset import Poset


def all_labeled_posets(n: int):
    """Every partial order on elements 0..n-1, built incrementally.

    Element k is attached by choosing its strict down-set D (down-closed) and
    strict up-set U (up-closed, disjoint, with every d in D below every u in U).
    Counts 1, 1, 3, 19, 219, 4231 for n = 0..5.
    """
    if n == 0:
        yield Poset(0, [])
        return
    relations = [frozenset()]  # strict pairs (p, q) meaning p < q
    for k in range(1, n):
        grown = []
        for rel in relations:
            below = {p: {q for q in range(k) if (q, p) in rel} for p in range(k)}
            above = {p: {q for q in range(k) if (p, q) in rel} for p in range(k)}
            for d_mask in range(1 << k):
                D = {p for p in range(k) if d_mask >> p & 1}
                if any(not below[p] <= D for p in D):
                    continue
                rest = [p for p in range(k) if p not in D]
                for u_mask in range(1 << len(rest)):
                    U = {rest[i] for i in range(len(rest)) if u_mask >> i & 1}
                    if any(not above[p] <= U for p in U):
                        continue
                    if any((d, u) not in rel for d in D for u in U):
                        continue
                    new = set(rel)
                    new.update((d, k) for d in D)
                    new.update((k, u) for u in U)
                    grown.append(frozenset(new))
        relations = grown
    for rel in relations:
        yield Poset(n, sorted(rel))


def poset_classes(n: int):
    """One representative per isomorphism class of posets on n elements."""
    seen = {}
    for P in all_labeled_posets(n):
        rel = frozenset((p, q) for p in range(n) for q in range(n) if p != q and P.leq(p, q))
        canon = min(
            tuple(sorted((perm[p], perm[q]) for p, q in rel))
            for perm in (dict(enumerate(sig)) for sig in permutations(range(n)))
        )
        if canon not in seen:
            seen[canon] = P
    return list(seen.values())


def brute_minimal(maps):
    maps = sorted(set(maps))
    return sorted(
        m for m in maps if not any(o != m and dominates(m, o) for o in maps)
    )


def brute_complement_gens(J: HomIdeal, bound: int):
    """Oracle: minimal elements of the complement among maps valued <= bound."""
    pool = enumerate_isotone(J.poset, bound)
    return brute_minimal([m for m in pool if not J.member(m)])


def brute_is_marker(J: HomIdeal, marker, bound: int) -> bool:
    """Oracle: check every isotone extension with values <= bound."""
    P = J.poset
    for phi in enumerate_isotone(P, bound):
        if all(phi[p] == marker.values[p] for p in marker.domain):
            if not J.member(phi):
                return False
    return True


def brute_alexander_dual_gens(I: MonomialIdeal):
    """Oracle: enumerate all squarefree monomials over the generator support and
    keep the minimal ones meeting every generator."""
    vs = sorted(set().union(*(g.support() for g in I.gens)))
    hitting = []
    for r in range(len(vs) + 1):
        for sub in combinations(vs, r):
            s = set(sub)
            if all(s & g.support() for g in I.gens):
                hitting.append(frozenset(s))
    minimal = [
        h for h in hitting if not any(o != h and o <= h for o in hitting)
    ]
    return sorted(
        Monomial((v, 1) for v in h) for h in minimal
    )


def random_cofinite_ideal(P: Poset, rng, max_val=3, max_gens=3) -> HomIdeal:
    pool = enumerate_isotone(P, max_val)
    k = rng.randint(1, max_gens)
    return HomIdeal.cofinite(P, [rng.choice(pool) for _ in range(k)])


def random_principal_ideal(P: Poset, rng, max_val=2) -> HomIdeal:
    pool = enumerate_isotone(P, max_val)
    return HomIdeal.principal(P, rng.choice(pool))


def artinian_ideals(n: int, maxdeg: int):
    """All artinian monomial ideals in n variables with generators of degree
    <= maxdeg: a pure power per variable plus compatible mixed generators."""
    variables = [elem_var(p) for p in range(n)]
    mixed = [
        m
        for m in monomials_up_to(variables, maxdeg)
        if len(m.support()) >= 2
    ]
    for power_degs in _product_range(n, maxdeg):
        powers = [Monomial([(variables[p], power_degs[p])]) for p in range(n)]
        free = [
            m
            for m in mixed
            if not any(pw.divides(m) for pw in powers)
        ]
        for subset in _antichain_subsets(free):
            yield MonomialIdeal(powers + list(subset), variables)


def _product_range(n, top):
    if n == 0:
        yield ()
        return
    for rest in _product_range(n - 1, top):
        for d in range(1, top + 1):
            yield rest + (d,)


def _antichain_subsets(monos):
    """All subsets of monos that are divisibility antichains."""
    out = [()]
    for m in monos:
        extended = []
        for sub in out:
            if not any(x.divides(m) or m.divides(x) for x in sub):
                extended.append(sub + (m,))
        out.extend(extended)
    return out


def single_merge_maps(P, pairs, side: str):
    """All fiber maps collapsing exactly one pair of support positions, filtered
    to the requested strictness class and to merges whose quotient stays a poset."""
    from letterplace.monomial import pair_var
    from letterplace.quotient import FiberMap, fiber_kind, quotient_order_ok

    pairs = sorted(tuple(s) for s in pairs)
    out = []
    for a in range(len(pairs)):
        for b in range(a):
            targets = tuple(
                pair_var(*pairs[min(a, b)]) if k in (a, b) else pair_var(*pairs[k])
                for k in range(len(pairs))
            )
            fmap = FiberMap(tuple(pairs), targets)
            if fiber_kind(P, fmap) in (side, "both") and quotient_order_ok(P, fmap):
                out.append(fmap)
    return out


def nonstrict_merge_map(P, pairs):
    """A merge of two incomparable same-level positions; violates both
    strictness conditions.  Returns None when no such pair exists."""
    from letterplace.monomial import pair_var
    from letterplace.quotient import FiberMap, fiber_kind

    pairs = sorted(tuple(s) for s in pairs)
    for a in range(len(pairs)):
        for b in range(a):
            (p, i), (q, j) = pairs[a], pairs[b]
            if i == j and not P.comparable(p, q):
                targets = tuple(
                    pair_var(*pairs[min(a, b)]) if k in (a, b) else pair_var(*pairs[k])
                    for k in range(len(pairs))
                )
                fmap = FiberMap(tuple(pairs), targets)
                assert fiber_kind(P, fmap) == "neither"
                return fmap
    return None
