"""Exact multivariate polynomials, term orders, and Buchberger's algorithm.

Desk-scale engine: coefficients are arbitrary-precision rationals, monomials
are the shared sparse Monomial type, and the basis computation works on dense
exponent tuples over the order's variable ranking.  Budgets fail loudly via
BudgetExceeded; results are never truncated silently.
"""

from __future__ import annotations

import heapq
import re
from fractions import Fraction
from math import gcd
from typing import Iterable

from .errors import BudgetExceeded
from .monomial import Monomial, MonomialIdeal, Var, nat_var, pair_var


class TermOrder:
    """Total multiplicative monomial order over a fixed variable ranking.

    kind "lex": compare exponent vectors in ranking order.
    kind "grevlex": total degree first, ties by smallest exponent on the
    lowest-ranked variable winning.
    """

    __slots__ = ("kind", "vars", "_pos")

    def __init__(self, kind: str, variables: Iterable[Var]):
        if kind not in ("lex", "grevlex"):
            raise ValueError(f"unknown order kind {kind!r}")
        self.kind = kind
        self.vars = tuple(variables)
        if len(set(self.vars)) != len(self.vars):
            raise ValueError("duplicate variables in ranking")
        self._pos = {v: i for i, v in enumerate(self.vars)}

    def exponents(self, m: Monomial) -> tuple:
        e = [0] * len(self.vars)
        for v, k in m.exps:
            if v not in self._pos:
                raise ValueError(f"variable {v} not ranked by this order")
            e[self._pos[v]] = k
        return tuple(e)

    def key(self, m: Monomial):
        return self.tuple_key(self.exponents(m))

    def tuple_key(self, e: tuple):
        if self.kind == "lex":
            return e
        return (sum(e), tuple(-x for x in reversed(e)))

    def monomial(self, e: tuple) -> Monomial:
        return Monomial((self.vars[i], k) for i, k in enumerate(e) if k)


def lex_order(variables: Iterable[Var]) -> TermOrder:
    return TermOrder("lex", variables)


def grevlex_order(variables: Iterable[Var]) -> TermOrder:
    return TermOrder("grevlex", variables)


def diagonal_order(variables: Iterable[Var]) -> TermOrder:
    """Lex order ranking y[p,i] above y[q,j] iff i < j, or i = j and p < q.

    For the staircase matrices this makes every minor with nonzero main
    diagonal lead with its diagonal product; verified per instance rather than
    assumed.
    """
    ranked = sorted(variables, key=lambda v: (v.b, v.a))
    return TermOrder("lex", ranked)


class Polynomial:
    """Terms mapping Monomial -> nonzero Fraction."""

    __slots__ = ("terms",)

    def __init__(self, terms=()):
        acc = {}
        items = terms.items() if isinstance(terms, dict) else terms
        for m, c in items:
            c = Fraction(c)
            if c:
                acc[m] = acc.get(m, Fraction(0)) + c
        self.terms = {m: c for m, c in acc.items() if c}

    @classmethod
    def zero(cls) -> "Polynomial":
        return cls()

    @classmethod
    def from_monomial(cls, m: Monomial, c=1) -> "Polynomial":
        return cls([(m, Fraction(c))])

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return isinstance(other, Polynomial) and self.terms == other.terms

    def __hash__(self):
        return hash(tuple(sorted(self.terms.items(), key=lambda t: t[0].sort_key())))

    def __add__(self, other):
        acc = dict(self.terms)
        for m, c in other.terms.items():
            acc[m] = acc.get(m, Fraction(0)) + c
        return Polynomial(acc)

    def __sub__(self, other):
        acc = dict(self.terms)
        for m, c in other.terms.items():
            acc[m] = acc.get(m, Fraction(0)) - c
        return Polynomial(acc)

    def __neg__(self):
        return Polynomial({m: -c for m, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, Polynomial):
            acc = {}
            for m1, c1 in self.terms.items():
                for m2, c2 in other.terms.items():
                    m = m1 * m2
                    acc[m] = acc.get(m, Fraction(0)) + c1 * c2
            return Polynomial(acc)
        return Polynomial({m: c * Fraction(other) for m, c in self.terms.items()})

    __rmul__ = __mul__

    def scale_monomial(self, m: Monomial, c=1) -> "Polynomial":
        return Polynomial({t * m: k * Fraction(c) for t, k in self.terms.items()})

    def leading_monomial(self, order: TermOrder) -> Monomial:
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        return max(self.terms, key=order.key)

    def leading_coeff(self, order: TermOrder) -> Fraction:
        return self.terms[self.leading_monomial(order)]

    def monic(self, order: TermOrder) -> "Polynomial":
        lc = self.leading_coeff(order)
        return Polynomial({m: c / lc for m, c in self.terms.items()})

    def total_degree(self) -> int:
        return max((m.degree() for m in self.terms), default=0)

    def text(self, order: TermOrder = None, labels=None, letter: str = "y") -> str:
        if not self.terms:
            return "0"
        if order is not None:
            monos = sorted(self.terms, key=order.key, reverse=True)
        else:
            monos = sorted(self.terms, key=Monomial.sort_key, reverse=True)
        parts = []
        for m in monos:
            c = self.terms[m]
            sign = "+" if c > 0 else "-"
            mag = abs(c)
            coeff = str(mag.numerator) if mag.denominator == 1 else f"{mag.numerator}/{mag.denominator}"
            body = coeff if not m else f"{coeff}*{m.text(labels, letter)}"
            parts.append(sign + body)
        return "".join(parts)

    def __repr__(self):
        return self.text()


_TERM_SPLIT = re.compile(r"(?=[+-])")
_FACTOR_RE = re.compile(r"([A-Za-z]+)\[(\d+)(?:,(\d+))?\](?:\^(\d+))?")


def parse_polynomial(text: str, family: str = "pair") -> Polynomial:
    """Parse the sign-prefixed text form emitted by Polynomial.text."""
    text = text.replace(" ", "")
    if text in ("", "0"):
        return Polynomial.zero()
    if text[0] not in "+-":
        text = "+" + text
    terms = []
    for chunk in _TERM_SPLIT.split(text):
        if not chunk:
            continue
        sign = -1 if chunk[0] == "-" else 1
        body = chunk[1:]
        coeff = Fraction(1)
        exps = []
        for piece in body.split("*"):
            m = _FACTOR_RE.fullmatch(piece)
            if m:
                _, a, b, e = m.groups()
                e = int(e) if e else 1
                if b is not None:
                    exps.append((pair_var(int(a), int(b)), e))
                elif family == "nat":
                    exps.append((nat_var(int(a)), e))
                else:
                    exps.append((Var("elem", int(a)), e))
            else:
                coeff *= Fraction(piece)
        terms.append((Monomial(exps), sign * coeff))
    return Polynomial(terms)


# -- division and Buchberger ---------------------------------------------------


def reduce(f: Polynomial, basis: Iterable[Polynomial], order: TermOrder) -> Polynomial:
    """Full normal form of f modulo basis, deterministic in the listed order."""
    heads = [(g.leading_monomial(order), g.leading_coeff(order), g) for g in basis if g]
    work = dict(f.terms)
    remainder = {}
    while work:
        m = max(work, key=order.key)
        c = work.pop(m)
        for lt, lc, g in heads:
            if lt.divides(m):
                q = m / lt
                mult = c / lc
                for gm, gc in g.terms.items():
                    if gm == lt:
                        continue
                    key = gm * q
                    acc = work.get(key, Fraction(0)) - mult * gc
                    if acc:
                        work[key] = acc
                    else:
                        work.pop(key, None)
                break
        else:
            remainder[m] = c
    return Polynomial(remainder)


def s_polynomial(f: Polynomial, g: Polynomial, order: TermOrder) -> Polynomial:
    lf, lg = f.leading_monomial(order), g.leading_monomial(order)
    L = lf.lcm(lg)
    return f.scale_monomial(L / lf, 1 / f.leading_coeff(order)) - g.scale_monomial(
        L / lg, 1 / g.leading_coeff(order)
    )


def _primitive(f: Polynomial) -> Polynomial:
    """Clear denominators and strip integer content; sign left as is."""
    if not f:
        return f
    den = 1
    for c in f.terms.values():
        den = den * c.denominator // gcd(den, c.denominator)
    num = 0
    for c in f.terms.values():
        num = gcd(num, abs(c.numerator * (den // c.denominator)))
    return Polynomial({m: Fraction(c.numerator * (den // c.denominator), num) for m, c in f.terms.items()})


def buchberger(
    gens: Iterable[Polynomial],
    order: TermOrder,
    degree_cap: int = None,
    pair_cap: int = 200_000,
) -> list:
    """Reduced Groebner basis: auto-reduced, monic, sorted by leading term.

    Normal selection strategy (smallest lcm first), with the coprime
    leading-term criterion.  degree_cap defaults to 3 plus the largest
    generator degree; an S-pair whose lcm exceeds it raises BudgetExceeded.
    """
    basis = []
    for f in gens:
        if f:
            basis.append(_primitive(f))
    if not basis:
        return []
    if degree_cap is None:
        degree_cap = 3 + max(f.total_degree() for f in basis)

    heads = [(f.leading_monomial(order), f) for f in basis]
    heap = []
    counter = 0

    def push_pairs(j):
        nonlocal counter
        ltj = heads[j][0]
        for i in range(j):
            L = heads[i][0].lcm(ltj)
            heapq.heappush(heap, (order.key(L), counter, i, j, L))
            counter += 1

    for j in range(len(basis)):
        push_pairs(j)

    processed = 0
    while heap:
        _, _, i, j, L = heapq.heappop(heap)
        processed += 1
        if processed > pair_cap:
            raise BudgetExceeded(f"more than {pair_cap} S-pairs processed")
        lti, ltj = heads[i][0], heads[j][0]
        if (lti * ltj) == L:
            continue  # coprime leading terms: S-pair reduces to zero
        if L.degree() > degree_cap:
            raise BudgetExceeded(
                f"S-pair lcm degree {L.degree()} exceeds cap {degree_cap}"
            )
        s = s_polynomial(heads[i][1], heads[j][1], order)
        r = reduce(s, [g for _, g in heads], order)
        if r:
            r = _primitive(r)
            heads.append((r.leading_monomial(order), r))
            push_pairs(len(heads) - 1)

    return _interreduce([g for _, g in heads], order)


def _interreduce(basis, order) -> list:
    basis = [g for g in basis if g]
    changed, passes = True, 0
    while changed:
        passes += 1
        if passes > 1000:
            raise RuntimeError("interreduction did not stabilize")
        changed = False
        trimmed = []
        for idx, g in enumerate(basis):
            others = [h for k, h in enumerate(basis) if k != idx and h]
            r = reduce(g, others, order)
            if r.terms != g.terms:
                changed = True
            if r:
                trimmed.append(_primitive(r))
        basis = trimmed
    out = [g.monic(order) for g in basis]
    out.sort(key=lambda g: order.key(g.leading_monomial(order)))
    return out


def initial_ideal(basis: Iterable[Polynomial], order: TermOrder) -> MonomialIdeal:
    """Ideal of leading terms of a (reduced) Groebner basis."""
    return MonomialIdeal(
        [g.leading_monomial(order) for g in basis if g], order.vars
    )
